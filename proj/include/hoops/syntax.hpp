// Formulas of the affine language {1, *, ->} and terms over the hoop
// signature (0, 1, +, ->), with parsing, printing and translation.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hoops {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable formula. Neg and Zero are sugar for Limp shapes.
class Formula {
 public:
  enum class Kind : unsigned char { Var, One, Tensor, Limp };

  static Formula var(std::string name);
  static Formula one();
  static Formula tensor(Formula a, Formula b);
  static Formula limp(Formula a, Formula b);
  static Formula neg(Formula a) { return limp(std::move(a), one()); }
  static Formula zero() { return limp(one(), one()); }

  Kind kind() const;
  const std::string& name() const;  // Var only
  const Formula& lhs() const;       // Tensor / Limp
  const Formula& rhs() const;
  std::size_t hash() const;
  int depth() const;
  bool is_neg() const { return kind() == Kind::Limp && rhs().kind() == Kind::One; }
  bool is_zero() const { return is_neg() && lhs().kind() == Kind::One; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// Immutable algebraic term.
class AlgTerm {
 public:
  enum class Kind : unsigned char { Var, Zero, One, Plus, Imp };

  static AlgTerm var(std::string name);
  static AlgTerm zero();
  static AlgTerm one();
  static AlgTerm plus(AlgTerm a, AlgTerm b);
  static AlgTerm imp(AlgTerm a, AlgTerm b);
  static AlgTerm not_(AlgTerm a) { return imp(std::move(a), one()); }
  static AlgTerm delta(AlgTerm a) { return not_(not_(std::move(a))); }

  Kind kind() const;
  const std::string& name() const;
  const AlgTerm& lhs() const;
  const AlgTerm& rhs() const;
  std::size_t hash() const;
  int depth() const;
  std::size_t size() const;
  bool has_one() const;

  friend bool operator==(const AlgTerm& a, const AlgTerm& b);
  friend bool operator!=(const AlgTerm& a, const AlgTerm& b) { return !(a == b); }

 private:
  struct Node;
  explicit AlgTerm(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// An equation lhs = rhs; unbounded identities may not mention One.
class Identity {
 public:
  Identity(AlgTerm lhs, AlgTerm rhs, bool bounded);
  const AlgTerm& lhs() const { return lhs_; }
  const AlgTerm& rhs() const { return rhs_; }
  bool bounded() const { return bounded_; }
  const std::vector<std::string>& vars() const { return vars_; }

 private:
  AlgTerm lhs_, rhs_;
  bool bounded_;
  std::vector<std::string> vars_;
};

// Grammar: imp := tensor ("->" imp)? ; tensor := postfix ("*" postfix)* ;
// postfix := atom "^"* ; atom := ident | "1" | "0" | "(" formula ")".
Formula parse_formula(std::string_view text);
// Same shape with "+" for addition; "0" is the constant Zero.
AlgTerm parse_term(std::string_view text);
// "s = t" or a bare "t" meaning t = 0.
Identity parse_identity(std::string_view text, bool bounded);

std::string print_formula(const Formula& a);
std::string print_term(const AlgTerm& t);
std::string print_identity(const Identity& id);

AlgTerm formula_to_term(const Formula& a);
Formula substitute(const Formula& a, const std::map<std::string, Formula>& sigma);
AlgTerm substitute(const AlgTerm& t, const std::map<std::string, AlgTerm>& sigma);

// Variables in order of first appearance (left to right).
std::vector<std::string> vars_of(const Formula& a);
std::vector<std::string> vars_of(const AlgTerm& t);
void collect_vars(const AlgTerm& t, std::vector<std::string>& out);

void check_signature(const AlgTerm& t, bool bounded);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};
struct TermHash {
  std::size_t operator()(const AlgTerm& t) const { return t.hash(); }
};

}  // namespace hoops
