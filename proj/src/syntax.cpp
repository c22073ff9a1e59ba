#include "hoops/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

namespace hoops {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

// ---------------------------------------------------------------- Formula

struct Formula::Node {
  Kind kind;
  std::string name;
  std::optional<Formula> l, r;
  std::size_t hash;
  int depth;
};

Formula Formula::var(std::string name) {
  auto h = mix(1, std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(Node{Kind::Var, std::move(name), std::nullopt, std::nullopt, h, 0}));
}

Formula Formula::one() {
  static const Formula k(std::make_shared<const Node>(Node{Kind::One, {}, std::nullopt, std::nullopt, 2, 0}));
  return k;
}

Formula Formula::tensor(Formula a, Formula b) {
  auto h = mix(mix(3, a.hash()), b.hash());
  int d = 1 + std::max(a.depth(), b.depth());
  return Formula(std::make_shared<const Node>(Node{Kind::Tensor, {}, a, b, h, d}));
}

Formula Formula::limp(Formula a, Formula b) {
  auto h = mix(mix(4, a.hash()), b.hash());
  int d = 1 + std::max(a.depth(), b.depth());
  return Formula(std::make_shared<const Node>(Node{Kind::Limp, {}, a, b, h, d}));
}

Formula::Kind Formula::kind() const { return n_->kind; }
const std::string& Formula::name() const { return n_->name; }
const Formula& Formula::lhs() const { return *n_->l; }
const Formula& Formula::rhs() const { return *n_->r; }
std::size_t Formula::hash() const { return n_->hash; }
int Formula::depth() const { return n_->depth; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.n_ == b.n_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Var: return a.name() == b.name();
    case Formula::Kind::One: return true;
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---------------------------------------------------------------- AlgTerm

struct AlgTerm::Node {
  Kind kind;
  std::string name;
  std::optional<AlgTerm> l, r;
  std::size_t hash;
  int depth;
  std::size_t size;
  bool has_one;
};

AlgTerm AlgTerm::var(std::string name) {
  auto h = mix(11, std::hash<std::string>{}(name));
  return AlgTerm(std::make_shared<const Node>(Node{Kind::Var, std::move(name), std::nullopt, std::nullopt, h, 0, 1, false}));
}

AlgTerm AlgTerm::zero() {
  static const AlgTerm k(std::make_shared<const Node>(Node{Kind::Zero, {}, std::nullopt, std::nullopt, 12, 0, 1, false}));
  return k;
}

AlgTerm AlgTerm::one() {
  static const AlgTerm k(std::make_shared<const Node>(Node{Kind::One, {}, std::nullopt, std::nullopt, 13, 0, 1, true}));
  return k;
}

AlgTerm AlgTerm::plus(AlgTerm a, AlgTerm b) {
  auto h = mix(mix(14, a.hash()), b.hash());
  return AlgTerm(std::make_shared<const Node>(Node{Kind::Plus, {}, a, b, h,
                                                   1 + std::max(a.depth(), b.depth()),
                                                   1 + a.size() + b.size(), a.has_one() || b.has_one()}));
}

AlgTerm AlgTerm::imp(AlgTerm a, AlgTerm b) {
  auto h = mix(mix(15, a.hash()), b.hash());
  return AlgTerm(std::make_shared<const Node>(Node{Kind::Imp, {}, a, b, h,
                                                   1 + std::max(a.depth(), b.depth()),
                                                   1 + a.size() + b.size(), a.has_one() || b.has_one()}));
}

AlgTerm::Kind AlgTerm::kind() const { return n_->kind; }
const std::string& AlgTerm::name() const { return n_->name; }
const AlgTerm& AlgTerm::lhs() const { return *n_->l; }
const AlgTerm& AlgTerm::rhs() const { return *n_->r; }
std::size_t AlgTerm::hash() const { return n_->hash; }
int AlgTerm::depth() const { return n_->depth; }
std::size_t AlgTerm::size() const { return n_->size; }
bool AlgTerm::has_one() const { return n_->has_one; }

bool operator==(const AlgTerm& a, const AlgTerm& b) {
  if (a.n_ == b.n_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case AlgTerm::Kind::Var: return a.name() == b.name();
    case AlgTerm::Kind::Zero:
    case AlgTerm::Kind::One: return true;
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

void check_signature(const AlgTerm& t, bool bounded) {
  if (!bounded && t.has_one())
    throw SignatureError("constant 1 used in an unbounded-signature term: " + print_term(t));
}

Identity::Identity(AlgTerm lhs, AlgTerm rhs, bool bounded)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)), bounded_(bounded) {
  check_signature(lhs_, bounded_);
  check_signature(rhs_, bounded_);
  collect_vars(lhs_, vars_);
  collect_vars(rhs_, vars_);
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Ident, One, Zero, Arrow, Star, Plus, Caret, LParen, RParen, Eq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '0': k = Tok::Zero; break;
      case '1': k = Tok::One; break;
      case '*': k = Tok::Star; break;
      case '+': k = Tok::Plus; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '=': k = Tok::Eq; break;
      default: throw ParseError(std::string("unknown token '") + c + "'", start);
    }
    // digits other than a lone 0/1 are not constants
    if ((k == Tok::Zero || k == Tok::One) && i + 1 < s.size() &&
        (std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '_'))
      throw ParseError("malformed constant", start);
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// One recursive-descent parser serves both languages; the Builder decides
// which binary operator token is the monoid operation and how constants map.
template <class T, class B>
class Parser {
 public:
  Parser(std::vector<Token> toks, Tok sum_tok) : t_(std::move(toks)), sum_(sum_tok) {}

  T parse_all() {
    T r = imp();
    expect(Tok::End, "end of input");
    return r;
  }
  T imp() {
    T a = sum();
    if (peek().kind == Tok::Arrow) {
      ++p_;
      return B::imp(a, imp());
    }
    return a;
  }
  T sum() {
    T a = postfix();
    while (peek().kind == sum_) {
      ++p_;
      a = B::sum(a, postfix());
    }
    return a;
  }
  T postfix() {
    T a = atom();
    while (peek().kind == Tok::Caret) {
      ++p_;
      a = B::imp(a, B::one());
    }
    return a;
  }
  T atom() {
    const Token& k = peek();
    switch (k.kind) {
      case Tok::Ident: ++p_; return B::var(k.text);
      case Tok::One: ++p_; return B::one();
      case Tok::Zero: ++p_; return B::zero();
      case Tok::LParen: {
        ++p_;
        T a = imp();
        expect(Tok::RParen, "')'");
        return a;
      }
      default:
        throw ParseError(k.kind == Tok::End ? "unexpected end of input" : "unexpected '" + k.text + "'", k.pos);
    }
  }
  const Token& peek() const { return t_[p_]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    ++p_;
  }
  std::size_t pos() const { return p_; }
  void seek(std::size_t p) { p_ = p; }

 private:
  std::vector<Token> t_;
  Tok sum_;
  std::size_t p_ = 0;
};

struct FormulaBuilder {
  static Formula var(const std::string& n) { return Formula::var(n); }
  static Formula one() { return Formula::one(); }
  static Formula zero() { return Formula::zero(); }
  static Formula sum(Formula a, Formula b) { return Formula::tensor(std::move(a), std::move(b)); }
  static Formula imp(Formula a, Formula b) { return Formula::limp(std::move(a), std::move(b)); }
};

struct TermBuilder {
  static AlgTerm var(const std::string& n) { return AlgTerm::var(n); }
  static AlgTerm one() { return AlgTerm::one(); }
  static AlgTerm zero() { return AlgTerm::zero(); }
  static AlgTerm sum(AlgTerm a, AlgTerm b) { return AlgTerm::plus(std::move(a), std::move(b)); }
  static AlgTerm imp(AlgTerm a, AlgTerm b) { return AlgTerm::imp(std::move(a), std::move(b)); }
};

}  // namespace

Formula parse_formula(std::string_view text) {
  auto toks = tokenize(text);
  for (const auto& k : toks)
    if (k.kind == Tok::Plus || k.kind == Tok::Eq) throw ParseError("unexpected '" + k.text + "'", k.pos);
  return Parser<Formula, FormulaBuilder>(std::move(toks), Tok::Star).parse_all();
}

AlgTerm parse_term(std::string_view text) {
  auto toks = tokenize(text);
  for (const auto& k : toks)
    if (k.kind == Tok::Star || k.kind == Tok::Eq) throw ParseError("unexpected '" + k.text + "'", k.pos);
  return Parser<AlgTerm, TermBuilder>(std::move(toks), Tok::Plus).parse_all();
}

Identity parse_identity(std::string_view text, bool bounded) {
  auto toks = tokenize(text);
  std::size_t eq = toks.size();
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == Tok::Star) throw ParseError("unexpected '*'", toks[i].pos);
    if (toks[i].kind == Tok::Eq) {
      if (eq != toks.size()) throw ParseError("second '='", toks[i].pos);
      eq = i;
    }
  }
  if (eq == toks.size()) {
    AlgTerm t = Parser<AlgTerm, TermBuilder>(std::move(toks), Tok::Plus).parse_all();
    return Identity(t, AlgTerm::zero(), bounded);
  }
  std::vector<Token> left(toks.begin(), toks.begin() + static_cast<long>(eq));
  left.push_back({Tok::End, "", toks[eq].pos});
  std::vector<Token> right(toks.begin() + static_cast<long>(eq) + 1, toks.end());
  AlgTerm l = Parser<AlgTerm, TermBuilder>(std::move(left), Tok::Plus).parse_all();
  AlgTerm r = Parser<AlgTerm, TermBuilder>(std::move(right), Tok::Plus).parse_all();
  return Identity(l, r, bounded);
}

// ---------------------------------------------------------------- printing

namespace {

// precedence: 0 implication, 1 sum/tensor, 2 postfix, 3 atom
void print_f(const Formula& a, int ctx, std::string& out) {
  int prec = 0;
  switch (a.kind()) {
    case Formula::Kind::Var: out += a.name(); return;
    case Formula::Kind::One: out += "1"; return;
    case Formula::Kind::Tensor: prec = 1; break;
    case Formula::Kind::Limp:
      if (a.is_zero()) {
        out += "0";
        return;
      }
      prec = a.is_neg() ? 2 : 0;
      break;
  }
  bool paren = prec < ctx;
  if (paren) out += '(';
  if (a.kind() == Formula::Kind::Tensor) {
    print_f(a.lhs(), 1, out);
    out += " * ";
    print_f(a.rhs(), 2, out);
  } else if (a.is_neg()) {
    print_f(a.lhs(), 2, out);
    out += '^';
  } else {
    print_f(a.lhs(), 1, out);
    out += " -> ";
    print_f(a.rhs(), 0, out);
  }
  if (paren) out += ')';
}

bool term_is_not(const AlgTerm& t) {
  return t.kind() == AlgTerm::Kind::Imp && t.rhs().kind() == AlgTerm::Kind::One;
}

void print_t(const AlgTerm& t, int ctx, std::string& out) {
  int prec = 0;
  switch (t.kind()) {
    case AlgTerm::Kind::Var: out += t.name(); return;
    case AlgTerm::Kind::Zero: out += "0"; return;
    case AlgTerm::Kind::One: out += "1"; return;
    case AlgTerm::Kind::Plus: prec = 1; break;
    case AlgTerm::Kind::Imp: prec = term_is_not(t) ? 2 : 0; break;
  }
  bool paren = prec < ctx;
  if (paren) out += '(';
  if (t.kind() == AlgTerm::Kind::Plus) {
    print_t(t.lhs(), 1, out);
    out += " + ";
    print_t(t.rhs(), 2, out);
  } else if (prec == 2) {
    print_t(t.lhs(), 2, out);
    out += '^';
  } else {
    print_t(t.lhs(), 1, out);
    out += " -> ";
    print_t(t.rhs(), 0, out);
  }
  if (paren) out += ')';
}

}  // namespace

std::string print_formula(const Formula& a) {
  std::string s;
  print_f(a, 0, s);
  return s;
}

std::string print_term(const AlgTerm& t) {
  std::string s;
  print_t(t, 0, s);
  return s;
}

std::string print_identity(const Identity& id) { return print_term(id.lhs()) + " = " + print_term(id.rhs()); }

// ---------------------------------------------------------------- translation

AlgTerm formula_to_term(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::Var: return AlgTerm::var(a.name());
    case Formula::Kind::One: return AlgTerm::one();
    case Formula::Kind::Tensor: return AlgTerm::plus(formula_to_term(a.lhs()), formula_to_term(a.rhs()));
    case Formula::Kind::Limp: return AlgTerm::imp(formula_to_term(a.lhs()), formula_to_term(a.rhs()));
  }
  return AlgTerm::zero();
}

Formula substitute(const Formula& a, const std::map<std::string, Formula>& sigma) {
  switch (a.kind()) {
    case Formula::Kind::Var: {
      auto it = sigma.find(a.name());
      return it == sigma.end() ? a : it->second;
    }
    case Formula::Kind::One: return a;
    case Formula::Kind::Tensor: return Formula::tensor(substitute(a.lhs(), sigma), substitute(a.rhs(), sigma));
    case Formula::Kind::Limp: return Formula::limp(substitute(a.lhs(), sigma), substitute(a.rhs(), sigma));
  }
  return a;
}

AlgTerm substitute(const AlgTerm& t, const std::map<std::string, AlgTerm>& sigma) {
  switch (t.kind()) {
    case AlgTerm::Kind::Var: {
      auto it = sigma.find(t.name());
      return it == sigma.end() ? t : it->second;
    }
    case AlgTerm::Kind::Zero:
    case AlgTerm::Kind::One: return t;
    case AlgTerm::Kind::Plus: return AlgTerm::plus(substitute(t.lhs(), sigma), substitute(t.rhs(), sigma));
    case AlgTerm::Kind::Imp: return AlgTerm::imp(substitute(t.lhs(), sigma), substitute(t.rhs(), sigma));
  }
  return t;
}

namespace {
void collect_f(const Formula& a, std::vector<std::string>& out) {
  switch (a.kind()) {
    case Formula::Kind::Var:
      if (std::find(out.begin(), out.end(), a.name()) == out.end()) out.push_back(a.name());
      return;
    case Formula::Kind::One: return;
    default:
      collect_f(a.lhs(), out);
      collect_f(a.rhs(), out);
  }
}
}  // namespace

void collect_vars(const AlgTerm& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case AlgTerm::Kind::Var:
      if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
      return;
    case AlgTerm::Kind::Zero:
    case AlgTerm::Kind::One: return;
    default:
      collect_vars(t.lhs(), out);
      collect_vars(t.rhs(), out);
  }
}

std::vector<std::string> vars_of(const Formula& a) {
  std::vector<std::string> v;
  collect_f(a, v);
  return v;
}

std::vector<std::string> vars_of(const AlgTerm& t) {
  std::vector<std::string> v;
  collect_vars(t, v);
  return v;
}

}  // namespace hoops
