#include "hoops/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace hoops {

namespace {

Formula V(const char* n) { return Formula::var(n); }
Formula T(Formula a, Formula b) { return Formula::tensor(std::move(a), std::move(b)); }
Formula L(Formula a, Formula b) { return Formula::limp(std::move(a), std::move(b)); }

struct SchemaInfo {
  Schema s;
  const char* name;
  std::vector<std::string> vars;
};

const std::vector<SchemaInfo>& schema_table() {
  static const std::vector<SchemaInfo> t = {
      {Schema::Comp, "Comp", {"A", "B", "C"}}, {Schema::Comm, "Comm", {"A", "B"}},
      {Schema::Curry, "Curry", {"A", "B", "C"}}, {Schema::Uncurry, "Uncurry", {"A", "B", "C"}},
      {Schema::Wk, "Wk", {"A", "B"}},          {Schema::EFQ, "EFQ", {"A"}},
      {Schema::DNE, "DNE", {"A"}},             {Schema::CWC, "CWC", {"A", "B"}},
      {Schema::Con, "Con", {"A"}},
  };
  return t;
}

}  // namespace

const char* schema_name(Schema s) {
  for (const auto& i : schema_table())
    if (i.s == s) return i.name;
  return "?";
}

std::optional<Schema> schema_from_name(const std::string& s) {
  for (const auto& i : schema_table())
    if (s == i.name) return i.s;
  return std::nullopt;
}

std::vector<std::string> schema_metavars(Schema s) {
  for (const auto& i : schema_table())
    if (i.s == s) return i.vars;
  return {};
}

Formula schema_body(Schema s) {
  Formula a = V("A"), b = V("B"), c = V("C");
  switch (s) {
    case Schema::Comp: return L(L(a, b), L(L(b, c), L(a, c)));
    case Schema::Comm: return L(T(a, b), T(b, a));
    case Schema::Curry: return L(L(T(a, b), c), L(a, L(b, c)));
    case Schema::Uncurry: return L(L(a, L(b, c)), L(T(a, b), c));
    case Schema::Wk: return L(T(a, b), a);
    case Schema::EFQ: return L(Formula::one(), a);
    case Schema::DNE: return L(Formula::neg(Formula::neg(a)), a);
    case Schema::CWC: return L(T(a, L(a, b)), T(b, L(b, a)));
    case Schema::Con: return L(a, T(a, a));
  }
  return a;
}

Formula instantiate(Schema s, const std::map<std::string, Formula>& sigma) {
  auto vars = schema_metavars(s);
  for (const auto& v : vars)
    if (!sigma.count(v)) throw std::invalid_argument(std::string("schema ") + schema_name(s) + " needs " + v);
  for (const auto& [k, f] : sigma)
    if (std::find(vars.begin(), vars.end(), k) == vars.end())
      throw std::invalid_argument(std::string("schema ") + schema_name(s) + " has no metavariable " + k);
  return substitute(schema_body(s), sigma);
}

// ---------------------------------------------------------------- logics

const char* logic_name(LogicId l) {
  switch (l) {
    case LogicId::ALm: return "ALm";
    case LogicId::ALi: return "ALi";
    case LogicId::ALc: return "ALc";
    case LogicId::LLm: return "LLm";
    case LogicId::LLi: return "LLi";
    case LogicId::LLc: return "LLc";
    case LogicId::ML: return "ML";
    case LogicId::IL: return "IL";
    case LogicId::BL: return "BL";
  }
  return "?";
}

std::optional<LogicId> logic_from_name(const std::string& s) {
  for (auto l : {LogicId::ALm, LogicId::ALi, LogicId::ALc, LogicId::LLm, LogicId::LLi, LogicId::LLc, LogicId::ML,
                 LogicId::IL, LogicId::BL})
    if (s == logic_name(l)) return l;
  return std::nullopt;
}

std::vector<Schema> logic_schemas(LogicId l) {
  std::vector<Schema> s = {Schema::Comp, Schema::Comm, Schema::Curry, Schema::Uncurry, Schema::Wk};
  int column = 0, row = 0;  // column: affine / Lukasiewicz / contraction; row: minimal / intuitionistic / classical
  switch (l) {
    case LogicId::ALm: break;
    case LogicId::ALi: row = 1; break;
    case LogicId::ALc: row = 2; break;
    case LogicId::LLm: column = 1; break;
    case LogicId::LLi: column = 1; row = 1; break;
    case LogicId::LLc: column = 1; row = 2; break;
    case LogicId::ML: column = 2; break;
    case LogicId::IL: column = 2; row = 1; break;
    case LogicId::BL: column = 2; row = 2; break;
  }
  if (column == 1) s.push_back(Schema::CWC);
  if (column == 2) s.push_back(Schema::Con);
  if (row >= 1) s.push_back(Schema::EFQ);
  if (row >= 2) s.push_back(Schema::DNE);
  return s;
}

bool logic_has(LogicId l, Schema s) {
  auto v = logic_schemas(l);
  return std::find(v.begin(), v.end(), s) != v.end();
}

bool logic_extends(LogicId b, LogicId a) {
  for (Schema s : logic_schemas(a))
    if (!logic_has(b, s)) return false;
  return true;
}

bool logic_bounded(LogicId l) { return logic_has(l, Schema::EFQ); }

// ---------------------------------------------------------------- checking

HilbertStep HilbertStep::axiom(Schema s, std::map<std::string, Formula> sigma) {
  HilbertStep h;
  h.kind = Kind::Axiom;
  h.schema = s;
  h.sigma = std::move(sigma);
  return h;
}

HilbertStep HilbertStep::mp(int minor, int major) {
  HilbertStep h;
  h.kind = Kind::MP;
  h.minor = minor;
  h.major = major;
  return h;
}

HilbertStep HilbertStep::mp_ax(int minor, Schema s, std::map<std::string, Formula> sigma) {
  HilbertStep h;
  h.kind = Kind::MPAx;
  h.minor = minor;
  h.schema = s;
  h.sigma = std::move(sigma);
  return h;
}

namespace {

std::string line_ref(int i) { return "step " + std::to_string(i + 1); }

Formula modus_ponens(const Formula& minor, const Formula& major, int i) {
  if (major.kind() != Formula::Kind::Limp || !(major.lhs() == minor))
    throw ProofError(line_ref(i) + ": major premise is not " + print_formula(minor) + " -> ...", i);
  return major.rhs();
}

Formula axiom_instance(const HilbertStep& s, std::optional<LogicId> logic, int i) {
  if (logic && !logic_has(*logic, s.schema))
    throw ProofError(line_ref(i) + ": schema " + schema_name(s.schema) + " not in logic " + logic_name(*logic), i);
  try {
    return instantiate(s.schema, s.sigma);
  } catch (const std::invalid_argument& e) {
    throw ProofError(line_ref(i) + ": " + e.what(), i);
  }
}

// No logic: every schema is admitted.
std::vector<Formula> formulas_impl(const HilbertProof& p, std::optional<LogicId> logic) {
  std::vector<Formula> out;
  for (int i = 0; i < static_cast<int>(p.steps.size()); ++i) {
    const auto& s = p.steps[static_cast<std::size_t>(i)];
    auto earlier = [&](int k) {
      if (k < 0 || k >= i) throw ProofError(line_ref(i) + ": reference " + std::to_string(k + 1) + " is not earlier", i);
      return out[static_cast<std::size_t>(k)];
    };
    switch (s.kind) {
      case HilbertStep::Kind::Axiom: out.push_back(axiom_instance(s, logic, i)); break;
      case HilbertStep::Kind::MP: {
        Formula minor = earlier(s.minor);
        out.push_back(modus_ponens(minor, earlier(s.major), i));
        break;
      }
      case HilbertStep::Kind::MPAx: {
        Formula minor = earlier(s.minor);
        out.push_back(modus_ponens(minor, axiom_instance(s, logic, i), i));
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Formula> hilbert_formulas(const HilbertProof& p, LogicId logic) { return formulas_impl(p, logic); }

Formula check_hilbert(const HilbertProof& p, LogicId logic) {
  if (p.steps.empty()) throw ProofError("empty proof", -1);
  return hilbert_formulas(p, logic).back();
}

// ---------------------------------------------------------------- derived rules

namespace {

// Appends q, shifting its references; returns the index of q's last step.
int append(HilbertProof& p, const HilbertProof& q) {
  const int off = static_cast<int>(p.steps.size());
  for (auto s : q.steps) {
    if (s.minor >= 0) s.minor += off;
    if (s.major >= 0) s.major += off;
    p.steps.push_back(std::move(s));
  }
  return static_cast<int>(p.steps.size()) - 1;
}

int push(HilbertProof& p, HilbertStep s) {
  p.steps.push_back(std::move(s));
  return static_cast<int>(p.steps.size()) - 1;
}

Formula theorem(const HilbertProof& p) {
  if (p.steps.empty()) throw std::invalid_argument("empty proof");
  return formulas_impl(p, std::nullopt).back();
}

std::pair<Formula, Formula> imp_parts(const Formula& f, const char* who) {
  if (f.kind() != Formula::Kind::Limp) throw std::invalid_argument(std::string(who) + ": expected an implication");
  return {f.lhs(), f.rhs()};
}

}  // namespace

HilbertProof axiom_proof(Schema s, std::map<std::string, Formula> sigma) {
  HilbertProof p;
  p.steps.push_back(HilbertStep::axiom(s, std::move(sigma)));
  return p;
}

HilbertProof build_refl(const Formula& a) {
  Formula d = L(T(V("v1"), V("v2")), V("v1"));
  HilbertProof p;
  push(p, HilbertStep::axiom(Schema::Wk, {{"A", V("v1")}, {"B", V("v2")}}));
  push(p, HilbertStep::axiom(Schema::Wk, {{"A", a}, {"B", d}}));
  push(p, HilbertStep::axiom(Schema::Comm, {{"A", d}, {"B", a}}));
  push(p, HilbertStep::mp_ax(2, Schema::Comp, {{"A", T(d, a)}, {"B", T(a, d)}, {"C", a}}));
  push(p, HilbertStep::mp(1, 3));
  push(p, HilbertStep::mp_ax(4, Schema::Curry, {{"A", d}, {"B", a}, {"C", a}}));
  push(p, HilbertStep::mp(0, 5));
  return p;
}

HilbertProof build_trans(const HilbertProof& p, const HilbertProof& q) {
  auto [a, b] = imp_parts(theorem(p), "build_trans");
  auto [b2, c] = imp_parts(theorem(q), "build_trans");
  if (!(b == b2)) throw std::invalid_argument("build_trans: middle formulas differ");
  HilbertProof out;
  int ip = append(out, p);
  int iq = append(out, q);
  int k = push(out, HilbertStep::mp_ax(ip, Schema::Comp, {{"A", a}, {"B", b}, {"C", c}}));
  push(out, HilbertStep::mp(iq, k));
  return out;
}

HilbertProof build_exchange(const HilbertProof& p) {
  auto [x, yz] = imp_parts(theorem(p), "build_exchange");
  auto [y, z] = imp_parts(yz, "build_exchange");
  HilbertProof out;
  int ip = append(out, p);
  int unc = push(out, HilbertStep::mp_ax(ip, Schema::Uncurry, {{"A", x}, {"B", y}, {"C", z}}));
  int comm = push(out, HilbertStep::axiom(Schema::Comm, {{"A", y}, {"B", x}}));
  int k = push(out, HilbertStep::mp_ax(comm, Schema::Comp, {{"A", T(y, x)}, {"B", T(x, y)}, {"C", z}}));
  int swapped = push(out, HilbertStep::mp(unc, k));
  push(out, HilbertStep::mp_ax(swapped, Schema::Curry, {{"A", y}, {"B", x}, {"C", z}}));
  return out;
}

HilbertProof build_mono(MonoSide side, const HilbertProof& p, const Formula& c) {
  auto [a, b] = imp_parts(theorem(p), "build_mono");
  HilbertProof out;
  switch (side) {
    case MonoSide::ImpFirst: {
      int ip = append(out, p);
      push(out, HilbertStep::mp_ax(ip, Schema::Comp, {{"A", a}, {"B", b}, {"C", c}}));
      return out;
    }
    case MonoSide::ImpSecond: {
      // (C -o A) -o (A -o B) -o (C -o B), exchanged, then detach A -o B
      auto ex = build_exchange(axiom_proof(Schema::Comp, {{"A", c}, {"B", a}, {"C", b}}));
      int ip = append(out, p);
      int ie = append(out, ex);
      push(out, HilbertStep::mp(ip, ie));
      return out;
    }
    case MonoSide::TensorLeft: {
      Formula bc = T(b, c);
      int r = append(out, build_refl(bc));
      int cur = push(out, HilbertStep::mp_ax(r, Schema::Curry, {{"A", b}, {"B", c}, {"C", bc}}));
      int ip = append(out, p);
      int k = push(out, HilbertStep::mp_ax(ip, Schema::Comp, {{"A", a}, {"B", b}, {"C", L(c, bc)}}));
      int m = push(out, HilbertStep::mp(cur, k));
      push(out, HilbertStep::mp_ax(m, Schema::Uncurry, {{"A", a}, {"B", c}, {"C", bc}}));
      return out;
    }
    case MonoSide::TensorRight: {
      auto left = build_mono(MonoSide::TensorLeft, p, c);
      auto c1 = axiom_proof(Schema::Comm, {{"A", c}, {"B", a}});
      auto c2 = axiom_proof(Schema::Comm, {{"A", b}, {"B", c}});
      return build_trans(build_trans(c1, left), c2);
    }
  }
  return out;
}

HilbertProof build_assoc(const Formula& a, const Formula& b, const Formula& c) {
  Formula d = T(a, T(b, c));
  HilbertProof out;
  int r = append(out, build_refl(d));
  int k1 = push(out, HilbertStep::mp_ax(r, Schema::Curry, {{"A", a}, {"B", T(b, c)}, {"C", d}}));
  auto mono = build_mono(MonoSide::ImpSecond, axiom_proof(Schema::Curry, {{"A", b}, {"B", c}, {"C", d}}), a);
  int im = append(out, mono);
  int k2 = push(out, HilbertStep::mp(k1, im));
  int k3 = push(out, HilbertStep::mp_ax(k2, Schema::Uncurry, {{"A", a}, {"B", b}, {"C", L(c, d)}}));
  push(out, HilbertStep::mp_ax(k3, Schema::Uncurry, {{"A", T(a, b)}, {"B", c}, {"C", d}}));
  return out;
}

HilbertProof build_assoc_rev(const Formula& a, const Formula& b, const Formula& c) {
  Formula d = T(T(a, b), c);
  HilbertProof out;
  int r = append(out, build_refl(d));
  int k1 = push(out, HilbertStep::mp_ax(r, Schema::Curry, {{"A", T(a, b)}, {"B", c}, {"C", d}}));
  int k2 = push(out, HilbertStep::mp_ax(k1, Schema::Curry, {{"A", a}, {"B", b}, {"C", L(c, d)}}));
  auto mono = build_mono(MonoSide::ImpSecond, axiom_proof(Schema::Uncurry, {{"A", b}, {"B", c}, {"C", d}}), a);
  int im = append(out, mono);
  int k3 = push(out, HilbertStep::mp(k2, im));
  push(out, HilbertStep::mp_ax(k3, Schema::Uncurry, {{"A", a}, {"B", T(b, c)}, {"C", d}}));
  return out;
}

// ---------------------------------------------------------------- text format

namespace {

std::string sigma_text(Schema s, const std::map<std::string, Formula>& sigma) {
  std::string out = std::string(schema_name(s)) + " {";
  bool first = true;
  for (const auto& v : schema_metavars(s)) {
    auto it = sigma.find(v);
    if (it == sigma.end()) continue;
    out += (first ? " " : "; ") + v + " = " + print_formula(it->second);
    first = false;
  }
  return out + " }";
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::pair<Schema, std::map<std::string, Formula>> parse_ax(const std::string& text, int line) {
  auto err = [&](const std::string& m) { return ProofError("line " + std::to_string(line) + ": " + m, line - 1); };
  auto open = text.find('{'), close = text.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open) throw err("expected '{ ... }'");
  if (!trim(text.substr(close + 1)).empty()) throw err("trailing text after '}'");
  std::string name = trim(text.substr(0, open));
  auto s = schema_from_name(name);
  if (!s) throw err("unknown schema '" + name + "'");
  std::map<std::string, Formula> sigma;
  std::stringstream body(text.substr(open + 1, close - open - 1));
  std::string item;
  while (std::getline(body, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw err("expected 'X = formula'");
    std::string var = trim(item.substr(0, eq));
    try {
      sigma.insert_or_assign(var, parse_formula(item.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw err(std::string("bad formula for ") + var + ": " + e.what());
    }
  }
  try {
    instantiate(*s, sigma);
  } catch (const std::invalid_argument& e) {
    throw err(e.what());
  }
  return {*s, sigma};
}

int parse_index(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
    return v - 1;
  } catch (const std::exception&) {
    throw ProofError("line " + std::to_string(line) + ": bad step index '" + tok + "'", line - 1);
  }
}

}  // namespace

std::string print_hilbert(const HilbertProof& p) {
  std::string out;
  for (const auto& s : p.steps) {
    switch (s.kind) {
      case HilbertStep::Kind::Axiom: out += "ax " + sigma_text(s.schema, s.sigma); break;
      case HilbertStep::Kind::MP: out += "mp " + std::to_string(s.minor + 1) + " " + std::to_string(s.major + 1); break;
      case HilbertStep::Kind::MPAx:
        out += "mp " + std::to_string(s.minor + 1) + " ax " + sigma_text(s.schema, s.sigma);
        break;
    }
    out += "\n";
  }
  return out;
}

HilbertProof parse_hilbert(const std::string& text) {
  HilbertProof p;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string l = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (l.empty()) continue;
    std::istringstream ls(l);
    std::string kw;
    ls >> kw;
    if (kw == "ax") {
      auto [s, sigma] = parse_ax(l.substr(2), line);
      p.steps.push_back(HilbertStep::axiom(s, std::move(sigma)));
    } else if (kw == "mp") {
      std::string a, b;
      ls >> a >> b;
      if (a.empty() || b.empty()) throw ProofError("line " + std::to_string(line) + ": mp needs two operands", line - 1);
      int minor = parse_index(a, line);
      if (b == "ax") {
        auto pos = l.find(" ax ");
        auto [s, sigma] = parse_ax(l.substr(pos + 4), line);
        p.steps.push_back(HilbertStep::mp_ax(minor, s, std::move(sigma)));
      } else {
        std::string extra;
        if (ls >> extra) throw ProofError("line " + std::to_string(line) + ": trailing text", line - 1);
        p.steps.push_back(HilbertStep::mp(minor, parse_index(b, line)));
      }
    } else {
      throw ProofError("line " + std::to_string(line) + ": expected 'ax' or 'mp'", line - 1);
    }
  }
  return p;
}

// ---------------------------------------------------------------- random proofs

HilbertProof random_hilbert_proof(LogicId logic, std::uint64_t seed, int steps, int vars) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); };
  std::function<Formula(int)> rand_formula = [&](int depth) -> Formula {
    int r = pick(depth <= 0 ? 5 : 8);
    if (r < 4) return Formula::var("v" + std::to_string(1 + pick(std::max(1, vars))));
    if (r == 4) return Formula::one();
    Formula a = rand_formula(depth - 1), b = rand_formula(depth - 1);
    return r == 5 ? T(a, b) : L(a, b);
  };
  auto schemas = logic_schemas(logic);
  HilbertProof p;
  std::vector<Formula> f;
  auto add = [&](HilbertStep s) {
    p.steps.push_back(std::move(s));
    f = hilbert_formulas(p, logic);
  };
  auto random_axiom = [&] {
    Schema s = schemas[static_cast<std::size_t>(pick(static_cast<int>(schemas.size())))];
    std::map<std::string, Formula> sigma;
    for (const auto& v : schema_metavars(s)) sigma.insert_or_assign(v, rand_formula(2));
    add(HilbertStep::axiom(s, std::move(sigma)));
  };
  random_axiom();
  while (static_cast<int>(p.steps.size()) < steps) {
    const int n = static_cast<int>(f.size());
    // prefer detaching an existing implication
    std::vector<std::pair<int, int>> mps;
    for (int j = 0; j < n; ++j)
      if (f[static_cast<std::size_t>(j)].kind() == Formula::Kind::Limp)
        for (int i = 0; i < n; ++i)
          if (i != j && f[static_cast<std::size_t>(j)].lhs() == f[static_cast<std::size_t>(i)]) mps.emplace_back(i, j);
    int r = pick(6);
    if (r == 0 && !mps.empty()) {
      auto [i, j] = mps[static_cast<std::size_t>(pick(static_cast<int>(mps.size())))];
      add(HilbertStep::mp(i, j));
      continue;
    }
    int k = pick(n);
    const Formula& g = f[static_cast<std::size_t>(k)];
    if (r == 1 && g.kind() == Formula::Kind::Limp) {
      add(HilbertStep::mp_ax(k, Schema::Comp, {{"A", g.lhs()}, {"B", g.rhs()}, {"C", rand_formula(1)}}));
    } else if (r == 2 && g.kind() == Formula::Kind::Limp && g.lhs().kind() == Formula::Kind::Tensor) {
      add(HilbertStep::mp_ax(k, Schema::Curry, {{"A", g.lhs().lhs()}, {"B", g.lhs().rhs()}, {"C", g.rhs()}}));
    } else if (r == 3 && g.kind() == Formula::Kind::Limp && g.rhs().kind() == Formula::Kind::Limp) {
      add(HilbertStep::mp_ax(k, Schema::Uncurry, {{"A", g.lhs()}, {"B", g.rhs().lhs()}, {"C", g.rhs().rhs()}}));
    } else if (r == 4 && pick(3) == 0) {
      HilbertProof q = p;
      append(q, build_refl(rand_formula(1)));
      p = std::move(q);
      f = hilbert_formulas(p, logic);
    } else {
      random_axiom();
    }
  }
  // end on a modus ponens when one is available
  const int n = static_cast<int>(f.size());
  for (int j = n - 1; j >= 0; --j)
    if (f[static_cast<std::size_t>(j)].kind() == Formula::Kind::Limp)
      for (int i = 0; i < n; ++i)
        if (i != j && f[static_cast<std::size_t>(j)].lhs() == f[static_cast<std::size_t>(i)]) {
          add(HilbertStep::mp(i, j));
          return p;
        }
  return p;
}

}  // namespace hoops
