#include "hoops/prover.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace hoops {

const char* class_name(TermClass c) {
  switch (c) {
    case TermClass::Zero: return "0";
    case TermClass::S: return "S";
    case TermClass::F: return "F";
    case TermClass::F0: return "F0";
    case TermClass::Mixed: return "?";
  }
  return "?";
}

const char* discharge_name(Discharge d) {
  switch (d) {
    case Discharge::OracleValid: return "oracle-valid";
    case Discharge::Syntactic: return "syntactic";
    case Discharge::Ground: return "ground";
    case Discharge::Recursive: return "recursive";
    case Discharge::Dichotomy: return "dichotomy";
    case Discharge::Failed: return "failed";
  }
  return "failed";
}

// ---------------------------------------------------------------- classes

namespace {

bool lower(TermClass c) { return c == TermClass::S || c == TermClass::Zero; }
bool upper(TermClass c) { return c == TermClass::F || c == TermClass::F0 || c == TermClass::Zero; }

TermClass plus_class(TermClass a, TermClass b) {
  using C = TermClass;
  if (a == C::Zero) return b;
  if (b == C::Zero) return a;
  if (a == C::F || b == C::F) return C::F;
  if (a == C::S && b == C::S) return C::S;
  if (a == C::F0 && b == C::F0) return C::F0;
  return C::Mixed;
}

TermClass imp_class(TermClass a, TermClass b) {
  using C = TermClass;
  if (b == C::Zero) return C::Zero;
  if (a == C::Zero) return b;
  if (a == C::S) {
    if (b == C::S) return C::S;
    if (b == C::F) return C::F;
    if (b == C::F0) return C::F0;
    return C::Mixed;
  }
  if (a == C::F && b == C::S) return C::Zero;
  if (a == C::F0 && b == C::S) return C::S;
  if ((a == C::F || a == C::F0) && (b == C::F || b == C::F0)) return C::F0;
  return C::Mixed;
}

}  // namespace

TermClass infer_class(const AlgTerm& t, const ClassMap& cls) {
  switch (t.kind()) {
    case AlgTerm::Kind::Var: {
      auto it = cls.find(t.name());
      if (it == cls.end()) return TermClass::Mixed;
      return it->second == VarClass::S ? TermClass::S : TermClass::F;
    }
    case AlgTerm::Kind::Zero: return TermClass::Zero;
    case AlgTerm::Kind::One: return TermClass::F;
    case AlgTerm::Kind::Plus: return plus_class(infer_class(t.lhs(), cls), infer_class(t.rhs(), cls));
    case AlgTerm::Kind::Imp: return imp_class(infer_class(t.lhs(), cls), infer_class(t.rhs(), cls));
  }
  return TermClass::Mixed;
}

// ---------------------------------------------------------------- AC equality

namespace {

void flatten_plus(const AlgTerm& t, std::vector<std::string>& out) {
  if (t.kind() == AlgTerm::Kind::Plus) {
    flatten_plus(t.lhs(), out);
    flatten_plus(t.rhs(), out);
  } else {
    out.push_back(ac_key(t));
  }
}

}  // namespace

std::string ac_key(const AlgTerm& t) {
  switch (t.kind()) {
    case AlgTerm::Kind::Var: return t.name();
    case AlgTerm::Kind::Zero: return "0";
    case AlgTerm::Kind::One: return "1";
    case AlgTerm::Kind::Imp: return "(" + ac_key(t.lhs()) + "->" + ac_key(t.rhs()) + ")";
    case AlgTerm::Kind::Plus: {
      std::vector<std::string> parts;
      flatten_plus(t, parts);
      std::sort(parts.begin(), parts.end());
      std::string s = "[";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "+" : "") + parts[i];
      return s + "]";
    }
  }
  return "";
}

bool ac_equal(const AlgTerm& a, const AlgTerm& b) { return a == b || ac_key(a) == ac_key(b); }

// ---------------------------------------------------------------- rewriting

namespace {

const std::vector<std::string> kRules = {"imp-zero", "zero-imp",  "imp-self", "one-imp", "os-imp-fs",
                                         "os-imp-sf", "plus-zero", "plus-one", "os-plus"};

std::optional<AlgTerm> root_rule(const std::string& rule, const AlgTerm& t, const ClassMap& cls, bool bounded) {
  using K = AlgTerm::Kind;
  if (t.kind() == K::Imp) {
    const AlgTerm &a = t.lhs(), &b = t.rhs();
    if (rule == "imp-zero" && b.kind() == K::Zero) return AlgTerm::zero();
    if (rule == "zero-imp" && a.kind() == K::Zero) return b;
    if (rule == "imp-self" && ac_equal(a, b)) return AlgTerm::zero();
    if (rule == "one-imp" && bounded && a.kind() == K::One) return AlgTerm::zero();
    if (rule == "os-imp-fs" && infer_class(a, cls) == TermClass::F && lower(infer_class(b, cls))) return AlgTerm::zero();
    if (rule == "os-imp-sf" && lower(infer_class(a, cls)) && upper(infer_class(b, cls))) return b;
    return std::nullopt;
  }
  if (t.kind() == K::Plus) {
    const AlgTerm &a = t.lhs(), &b = t.rhs();
    if (rule == "plus-zero") {
      if (b.kind() == K::Zero) return a;
      if (a.kind() == K::Zero) return b;
    }
    if (rule == "plus-one" && bounded && (a.kind() == K::One || b.kind() == K::One)) return AlgTerm::one();
    if (rule == "os-plus") {
      TermClass ca = infer_class(a, cls), cb = infer_class(b, cls);
      if (lower(ca) && cb == TermClass::F) return b;
      if (lower(cb) && ca == TermClass::F) return a;
    }
  }
  return std::nullopt;
}

AlgTerm rebuild(const AlgTerm& t, AlgTerm a, AlgTerm b) {
  return t.kind() == AlgTerm::Kind::Plus ? AlgTerm::plus(std::move(a), std::move(b))
                                         : AlgTerm::imp(std::move(a), std::move(b));
}

struct Simplifier {
  const ClassMap& cls;
  bool bounded;
  std::vector<RewriteStep> steps;
  std::vector<int> path;

  AlgTerm run(const AlgTerm& t) {
    if (t.kind() != AlgTerm::Kind::Plus && t.kind() != AlgTerm::Kind::Imp) return t;
    path.push_back(0);
    AlgTerm a = run(t.lhs());
    path.back() = 1;
    AlgTerm b = run(t.rhs());
    path.pop_back();
    AlgTerm cur = (a == t.lhs() && b == t.rhs()) ? t : rebuild(t, a, b);
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& r : kRules) {
        auto next = root_rule(r, cur, cls, bounded);
        if (!next) continue;
        steps.push_back({'l', path, r});
        cur = *next;
        changed = cur.kind() == AlgTerm::Kind::Plus || cur.kind() == AlgTerm::Kind::Imp;
        break;
      }
    }
    return cur;
  }
};

std::optional<AlgTerm> rewrite_at(const AlgTerm& t, const std::vector<int>& path, std::size_t k,
                                  const std::function<std::optional<AlgTerm>(const AlgTerm&)>& f) {
  if (k == path.size()) return f(t);
  if (t.kind() != AlgTerm::Kind::Plus && t.kind() != AlgTerm::Kind::Imp) return std::nullopt;
  if (path[k] == 0) {
    auto a = rewrite_at(t.lhs(), path, k + 1, f);
    if (!a) return std::nullopt;
    return rebuild(t, *a, t.rhs());
  }
  if (path[k] == 1) {
    auto b = rewrite_at(t.rhs(), path, k + 1, f);
    if (!b) return std::nullopt;
    return rebuild(t, t.lhs(), *b);
  }
  return std::nullopt;
}

}  // namespace

Simplified simplify_ordinal(const AlgTerm& t, const ClassMap& cls, bool bounded) {
  Simplifier s{cls, bounded, {}, {}};
  AlgTerm out = s.run(t);
  return {out, std::move(s.steps)};
}

std::optional<AlgTerm> apply_ordinal_rule(const AlgTerm& t, const std::vector<int>& path, const std::string& rule,
                                          const ClassMap& cls, bool bounded) {
  return rewrite_at(t, path, 0, [&](const AlgTerm& u) { return root_rule(rule, u, cls, bounded); });
}

// ---------------------------------------------------------------- symmetry

namespace {

bool same_identity(const Identity& a, const Identity& b) {
  return (ac_equal(a.lhs(), b.lhs()) && ac_equal(a.rhs(), b.rhs())) ||
         (ac_equal(a.lhs(), b.rhs()) && ac_equal(a.rhs(), b.lhs()));
}

using VarSet = std::set<std::string>;

std::set<VarSet> orbit_of(const VarSet& s, const std::vector<std::pair<std::string, std::string>>& syms) {
  std::set<VarSet> seen{s};
  std::vector<VarSet> todo{s};
  while (!todo.empty()) {
    VarSet cur = todo.back();
    todo.pop_back();
    for (const auto& [u, v] : syms) {
      VarSet next;
      for (const auto& x : cur) next.insert(x == u ? v : x == v ? u : x);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

std::vector<VarSet> all_proper_subsets(const std::vector<std::string>& vars) {
  std::vector<VarSet> out;
  const std::size_t n = vars.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    VarSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.insert(vars[i]);
    out.push_back(s);
  }
  return out;
}

// Orbit representative: variables grouped with the first one come first,
// then the first variable in the lower part.
std::vector<bool> rep_key(const VarSet& s, const std::vector<std::string>& vars) {
  bool first_in = s.count(vars[0]) > 0;
  std::vector<bool> key;
  for (std::size_t i = 1; i < vars.size(); ++i) key.push_back((s.count(vars[i]) > 0) == first_in);
  key.push_back(first_in);
  return key;
}

std::string letters(std::size_t i) {
  std::string s;
  for (++i; i > 0; i = (i - 1) / 26) s.insert(s.begin(), static_cast<char>('a' + (i - 1) % 26));
  return s;
}

std::string set_str(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "}";
}

}  // namespace

std::vector<std::pair<std::string, std::string>> variable_symmetries(const Identity& id) {
  std::vector<std::pair<std::string, std::string>> out;
  const auto& vars = id.vars();
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      std::map<std::string, AlgTerm> sigma{{vars[i], AlgTerm::var(vars[j])}, {vars[j], AlgTerm::var(vars[i])}};
      Identity swapped(substitute(id.lhs(), sigma), substitute(id.rhs(), sigma), id.bounded());
      if (same_identity(id, swapped)) out.emplace_back(vars[i], vars[j]);
    }
  return out;
}

// ---------------------------------------------------------------- Wajsberg case

namespace {

std::vector<std::string> trigger_vars(const Identity& id) {
  std::set<std::string> found;
  std::function<void(const AlgTerm&)> walk = [&](const AlgTerm& t) {
    if (t.kind() == AlgTerm::Kind::Imp && t.lhs().kind() == AlgTerm::Kind::Var &&
        t.rhs().kind() == AlgTerm::Kind::Plus && t.rhs().lhs() == t.lhs() && t.rhs().rhs() == t.lhs())
      found.insert(t.lhs().name());
    if (t.kind() == AlgTerm::Kind::Plus || t.kind() == AlgTerm::Kind::Imp) {
      walk(t.lhs());
      walk(t.rhs());
    }
  };
  walk(id.lhs());
  walk(id.rhs());
  std::vector<std::string> out;
  for (const auto& v : id.vars())
    if (found.count(v)) out.push_back(v);
  return out;
}

AlgTerm replace_triggers(const AlgTerm& t, const std::map<std::string, char>& choice) {
  if (t.kind() == AlgTerm::Kind::Imp && t.lhs().kind() == AlgTerm::Kind::Var &&
      t.rhs().kind() == AlgTerm::Kind::Plus && t.rhs().lhs() == t.lhs() && t.rhs().rhs() == t.lhs()) {
    auto it = choice.find(t.lhs().name());
    if (it != choice.end()) return it->second == 'a' ? t.lhs() : AlgTerm::not_(t.lhs());
  }
  if (t.kind() == AlgTerm::Kind::Plus || t.kind() == AlgTerm::Kind::Imp)
    return rebuild(t, replace_triggers(t.lhs(), choice), replace_triggers(t.rhs(), choice));
  return t;
}

struct Subcase {
  Identity residual;
  std::vector<Identity> assumptions;
  std::vector<Domain> domains;
};

Subcase dichotomy_subcase(const Identity& id, const std::vector<std::string>& triggers, const std::string& combo) {
  std::map<std::string, char> choice;
  std::vector<Identity> assumptions;
  bool bounded = false;
  for (std::size_t i = 0; i < triggers.size(); ++i) {
    AlgTerm v = AlgTerm::var(triggers[i]);
    choice[triggers[i]] = combo[i];
    if (combo[i] == 'a') {
      assumptions.emplace_back(AlgTerm::imp(v, AlgTerm::plus(v, v)), v, false);
    } else {
      assumptions.emplace_back(AlgTerm::plus(v, v), AlgTerm::one(), true);
      bounded = true;
    }
  }
  Identity residual(replace_triggers(id.lhs(), choice), replace_triggers(id.rhs(), choice), bounded);
  std::vector<Domain> domains;
  if (!bounded) domains.push_back(Domain::NonNegReals);
  domains.push_back(Domain::UnitInterval);
  return {residual, assumptions, domains};
}

std::string witness_str(const Verdict& v) {
  std::string s = "counterexample over " + std::string(domain_name(v.domain)) + ":";
  for (const auto& [k, q] : v.witness) s += " " + k + "=" + q.str();
  return s;
}

// Runs the oracle on each domain; fills note with the first witness.
bool run_oracle(const Identity& id, const std::vector<Domain>& domains, const std::vector<Identity>& assumptions,
                std::string* note, std::optional<Verdict>* witness) {
  for (Domain d : domains) {
    Verdict v = decide(id, d, assumptions);
    if (!v.valid) {
      if (note) *note = witness_str(v);
      if (witness) *witness = v;
      return false;
    }
  }
  return true;
}

void fill_wajsberg(CaseNode& node, std::optional<Verdict>* witness) {
  const Identity& id = node.residual;
  auto triggers = trigger_vars(id);
  if (triggers.empty()) {
    node.domains = {Domain::NonNegReals, Domain::UnitInterval};
    node.discharge = run_oracle(id, node.domains, {}, &node.note, witness) ? Discharge::OracleValid : Discharge::Failed;
    return;
  }
  node.discharge = Discharge::Dichotomy;
  const std::size_t k = triggers.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::string combo;
    for (std::size_t i = 0; i < k; ++i) combo += (mask & (std::size_t{1} << (k - 1 - i))) ? 'b' : 'a';
    auto sc = dichotomy_subcase(id, triggers, combo);
    CaseNode child{.label = node.label + "(" + combo + ")",
                   .s_vars = node.s_vars,
                   .combo = combo,
                   .goal = id,
                   .residual = sc.residual,
                   .domains = sc.domains,
                   .assumptions = sc.assumptions};
    child.discharge = run_oracle(sc.residual, sc.domains, sc.assumptions, &child.note, witness)
                          ? Discharge::OracleValid
                          : Discharge::Failed;
    if (child.discharge == Discharge::Failed) node.discharge = Discharge::Failed;
    node.children.push_back(std::move(child));
  }
}

}  // namespace

CaseNode wajsberg_case(const Identity& id, const std::string& label) {
  CaseNode node{.label = label, .s_vars = id.vars(), .goal = id, .residual = id};
  fill_wajsberg(node, nullptr);
  return node;
}

// ---------------------------------------------------------------- certificates

namespace {

bool discharged(const CaseNode& n) {
  if (n.discharge == Discharge::Failed) return false;
  for (const auto& c : n.children)
    if (!discharged(c)) return false;
  for (const auto& s : n.sub)
    for (const auto& c : s.cases)
      if (!discharged(c)) return false;
  return true;
}

bool discharged(const CaseCertificate& c) {
  return std::all_of(c.cases.begin(), c.cases.end(), [](const CaseNode& n) { return discharged(n); });
}

const CaseNode* first_failure(const CaseCertificate& c);

const CaseNode* first_failure(const CaseNode& n) {
  for (const auto& c : n.children)
    if (auto f = first_failure(c)) return f;
  for (const auto& s : n.sub)
    if (auto f = first_failure(s)) return f;
  if (n.discharge == Discharge::Failed) return &n;
  return nullptr;
}

const CaseNode* first_failure(const CaseCertificate& c) {
  for (const auto& n : c.cases)
    if (auto f = first_failure(n)) return f;
  return nullptr;
}

bool ground_equal(const Identity& id) {
  FiniteAlgebra b = catalog("B");
  return eval_term(b, id.lhs(), {}) == eval_term(b, id.rhs(), {});
}

CaseCertificate build(const Identity& id, int depth, std::optional<Verdict>* witness);

void discharge_residual(CaseNode& node, bool bounded, int depth) {
  const AlgTerm &l = node.residual.lhs(), &r = node.residual.rhs();
  if (ac_equal(l, r)) {
    node.discharge = Discharge::Syntactic;
    return;
  }
  const auto& rv = node.residual.vars();
  if (rv.empty()) {
    node.discharge = ground_equal(node.residual) ? Discharge::Ground : Discharge::Failed;
    if (node.discharge == Discharge::Failed) node.note = "ground terms differ";
    return;
  }
  auto in = [](const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  bool all_s = std::all_of(rv.begin(), rv.end(), [&](const std::string& x) { return in(node.s_vars, x); });
  bool all_f = std::all_of(rv.begin(), rv.end(), [&](const std::string& x) { return in(node.f_vars, x); });
  if (all_s && !l.has_one() && !r.has_one()) {
    // the lower part is a subdirectly irreducible Wajsberg hoop
    node.residual = Identity(l, r, false);
    fill_wajsberg(node, nullptr);
    return;
  }
  if (all_f) {
    if (depth <= 0) {
      node.note = "depth budget exhausted";
      return;
    }
    node.sub.push_back(build(Identity(l, r, bounded), depth - 1, nullptr));
    node.discharge = discharged(node.sub.back()) ? Discharge::Recursive : Discharge::Failed;
    if (node.discharge == Discharge::Failed) node.note = "upper-part subgoal not proved";
    return;
  }
  node.note = "residual mixes both parts";
}

CaseNode ordinal_case(const Identity& id, const std::string& label, const std::vector<std::string>& s_vars,
                      const std::vector<std::string>& f_vars, int depth) {
  ClassMap cls;
  for (const auto& v : s_vars) cls[v] = VarClass::S;
  for (const auto& v : f_vars) cls[v] = VarClass::F;
  auto sl = simplify_ordinal(id.lhs(), cls, id.bounded());
  auto sr = simplify_ordinal(id.rhs(), cls, id.bounded());
  for (auto& s : sr.steps) s.side = 'r';
  CaseNode node{.label = label, .s_vars = s_vars, .f_vars = f_vars, .goal = id,
                .residual = Identity(sl.term, sr.term, id.bounded())};
  node.steps = std::move(sl.steps);
  node.steps.insert(node.steps.end(), sr.steps.begin(), sr.steps.end());
  discharge_residual(node, id.bounded(), depth);
  return node;
}

struct Partition {
  VarSet s;
  std::set<VarSet> orbit;
};

std::vector<Partition> case_ii_partitions(const Identity& id) {
  const auto& vars = id.vars();
  std::vector<Partition> reps;
  if (vars.size() < 2) return reps;
  auto syms = variable_symmetries(id);
  std::set<VarSet> covered;
  for (const auto& s : all_proper_subsets(vars)) {
    if (covered.count(s)) continue;
    auto orb = orbit_of(s, syms);
    covered.insert(orb.begin(), orb.end());
    VarSet best = s;
    for (const auto& o : orb)
      if (rep_key(o, vars) > rep_key(best, vars)) best = o;
    reps.push_back({best, orb});
  }
  std::sort(reps.begin(), reps.end(), [&](const Partition& a, const Partition& b) {
    bool fa = a.s.count(vars[0]) > 0, fb = b.s.count(vars[0]) > 0;
    if (fa != fb) return fa;
    if (a.s.size() != b.s.size()) return a.s.size() < b.s.size();
    std::vector<bool> ma, mb;
    for (const auto& v : vars) {
      ma.push_back(a.s.count(v) > 0);
      mb.push_back(b.s.count(v) > 0);
    }
    return ma > mb;
  });
  return reps;
}

std::vector<std::string> ordered(const VarSet& s, const std::vector<std::string>& vars, bool member) {
  std::vector<std::string> out;
  for (const auto& v : vars)
    if ((s.count(v) > 0) == member) out.push_back(v);
  return out;
}

CaseCertificate build(const Identity& id, int depth, std::optional<Verdict>* witness) {
  CaseCertificate cert{id, {}};
  const auto& vars = id.vars();
  // case (i): the hoop is its own Wajsberg part
  CaseNode ci{.label = "(i)", .s_vars = vars, .goal = id, .residual = id};
  if (id.bounded()) {
    ci.domains = {Domain::UnitInterval};
    ci.discharge =
        run_oracle(id, ci.domains, {}, &ci.note, witness) ? Discharge::OracleValid : Discharge::Failed;
  } else {
    fill_wajsberg(ci, witness);
  }
  cert.cases.push_back(std::move(ci));
  auto parts = case_ii_partitions(id);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    CaseNode n = ordinal_case(id, "(ii)(" + letters(k) + ")", ordered(p.s, vars, true), ordered(p.s, vars, false),
                              depth);
    for (const auto& o : p.orbit) n.orbit.push_back(ordered(o, vars, true));
    cert.cases.push_back(std::move(n));
  }
  if (id.bounded() && !vars.empty()) cert.cases.push_back(ordinal_case(id, "(iii)", vars, {}, depth));
  return cert;
}

void node_text(const CaseNode& n, int indent, std::ostringstream& os) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  os << pad << n.label;
  if (!n.combo.empty()) {
    os << " assume";
    for (std::size_t i = 0; i < n.assumptions.size(); ++i)
      os << (i ? "," : "") << " " << print_identity(n.assumptions[i]);
  } else {
    os << " S=" << set_str(n.s_vars) << " F=" << set_str(n.f_vars);
    if (n.orbit.size() > 1) {
      os << " covers";
      for (const auto& o : n.orbit) os << " " << set_str(o);
    }
  }
  os << " : " << print_identity(n.goal);
  if (!(n.residual.lhs() == n.goal.lhs() && n.residual.rhs() == n.goal.rhs()))
    os << " ~> " << print_identity(n.residual);
  os << " -- " << discharge_name(n.discharge);
  if (!n.domains.empty()) {
    os << " over";
    for (std::size_t i = 0; i < n.domains.size(); ++i) os << (i ? "," : "") << " " << domain_name(n.domains[i]);
  }
  if (!n.note.empty()) os << " (" << n.note << ")";
  os << "\n";
  for (const auto& s : n.steps) {
    os << pad << "    " << (s.side == 'l' ? "lhs" : "rhs") << " [";
    for (std::size_t i = 0; i < s.path.size(); ++i) os << (i ? "," : "") << s.path[i];
    os << "] " << s.rule << "\n";
  }
  for (const auto& c : n.children) node_text(c, indent + 1, os);
  for (const auto& s : n.sub) {
    os << pad << "  subproof: " << print_identity(s.goal) << "\n";
    for (const auto& c : s.cases) node_text(c, indent + 2, os);
  }
}

}  // namespace

std::string certificate_text(const CaseCertificate& c) {
  std::ostringstream os;
  os << "goal: " << print_identity(c.goal) << (c.goal.bounded() ? " [bounded hoops]" : " [hoops]") << "\n";
  for (const auto& n : c.cases) node_text(n, 0, os);
  return os.str();
}

// ---------------------------------------------------------------- search

std::optional<Counterexample> search_counterexample(const Identity& id, int max_order, const EnumFilter& filter,
                                                    int min_order) {
  const auto& vars = id.vars();
  TermEvaluator lhs(id.lhs(), vars), rhs(id.rhs(), vars);
  for (int n = std::max(1, min_order); n <= max_order; ++n)
    for (const auto& a : pocrims_of_order(n)) {
      if (!filter.accepts(a)) continue;
      std::vector<int> values(vars.size(), 0);
      do {
        if (lhs(a, values) != rhs(a, values)) {
          Counterexample c{a, {}};
          for (std::size_t i = 0; i < vars.size(); ++i) c.assignment[vars[i]] = values[i];
          return c;
        }
      } while (next_assignment(values, n));
    }
  return std::nullopt;
}

namespace {

// A rational point of [0,1] lives in the Lukasiewicz chain with the common denominator.
std::optional<Counterexample> lift_unit_witness(const Identity& id, const Verdict& v) {
  if (v.domain != Domain::UnitInterval) return std::nullopt;
  boost::multiprecision::cpp_int m = 1;
  for (const auto& [k, q] : v.witness) m = boost::multiprecision::lcm(m, denominator(q));
  if (m > 63) return std::nullopt;
  int mm = static_cast<int>(m);
  FiniteAlgebra a = catalog("L" + std::to_string(mm + 1));
  Counterexample c{a, {}};
  for (const auto& [k, q] : v.witness) c.assignment[k] = static_cast<int>(numerator(q) * (m / denominator(q)));
  for (const auto& x : id.vars()) c.assignment.emplace(x, 0);
  if (eval_term(a, id.lhs(), c.assignment) == eval_term(a, id.rhs(), c.assignment)) return std::nullopt;
  return c;
}

}  // namespace

ProverResult prove(const Identity& id, const ProverOptions& opts) {
  ProverResult res;
  EnumFilter filter;
  if (opts.target == TargetClass::Hoops) filter.hoop = true;
  if (opts.target == TargetClass::Pocrims) {
    if (auto c = search_counterexample(id, opts.cex_order, filter)) {
      res.status = ProofStatus::Refuted;
      res.counterexample = std::move(c);
    } else {
      res.reason = "no case template for pocrims; no counterexample up to order " + std::to_string(opts.cex_order);
    }
    return res;
  }
  std::optional<Verdict> witness;
  CaseCertificate cert = build(id, opts.depth, &witness);
  if (discharged(cert)) {
    res.status = ProofStatus::Proved;
    res.certificate = std::move(cert);
    return res;
  }
  const CaseNode* f = first_failure(cert);
  res.reason = "case " + f->label + " blocked at " + print_identity(f->residual) + (f->note.empty() ? "" : ": " + f->note);
  std::optional<Counterexample> c;
  if (witness) c = lift_unit_witness(id, *witness);
  if (!c) c = search_counterexample(id, opts.cex_order, filter);
  if (c) {
    res.status = ProofStatus::Refuted;
    res.counterexample = std::move(c);
  }
  res.certificate = std::move(cert);
  return res;
}

// ---------------------------------------------------------------- checking

namespace {

struct Checker {
  std::string error;

  bool fail(const std::string& msg) {
    if (error.empty()) error = msg;
    return false;
  }

  static bool same_sides(const Identity& a, const Identity& b) { return a.lhs() == b.lhs() && a.rhs() == b.rhs(); }

  bool oracle(const CaseNode& n) {
    bool has_unit = std::find(n.domains.begin(), n.domains.end(), Domain::UnitInterval) != n.domains.end();
    bool has_nonneg = std::find(n.domains.begin(), n.domains.end(), Domain::NonNegReals) != n.domains.end();
    if (!has_unit || (!n.residual.bounded() && !has_nonneg))
      return fail("case " + n.label + ": oracle domains insufficient");
    if (!run_oracle(n.residual, n.domains, n.assumptions, nullptr, nullptr))
      return fail("case " + n.label + ": oracle rejects " + print_identity(n.residual));
    return true;
  }

  bool dichotomy(const CaseNode& n) {
    auto triggers = trigger_vars(n.residual);
    const std::size_t k = triggers.size();
    if (k == 0 || n.children.size() != (std::size_t{1} << k)) return fail("case " + n.label + ": incomplete dichotomy");
    std::set<std::string> seen;
    for (const auto& c : n.children) {
      if (c.combo.size() != k || !seen.insert(c.combo).second)
        return fail("case " + n.label + ": bad dichotomy subcase " + c.combo);
      auto sc = dichotomy_subcase(n.residual, triggers, c.combo);
      if (!same_sides(c.goal, n.residual) || !same_sides(c.residual, sc.residual) ||
          c.residual.bounded() != sc.residual.bounded() || c.assumptions.size() != sc.assumptions.size())
        return fail("case " + c.label + ": subgoal does not match the dichotomy");
      for (std::size_t i = 0; i < sc.assumptions.size(); ++i)
        if (!same_sides(c.assumptions[i], sc.assumptions[i]))
          return fail("case " + c.label + ": assumption does not match the dichotomy");
      if (c.discharge != Discharge::OracleValid) return fail("case " + c.label + ": not discharged");
      if (!oracle(c)) return false;
    }
    return true;
  }

  bool discharge(const CaseNode& n, bool bounded) {
    switch (n.discharge) {
      case Discharge::Syntactic:
        return ac_equal(n.residual.lhs(), n.residual.rhs()) || fail("case " + n.label + ": sides differ");
      case Discharge::Ground:
        return (n.residual.vars().empty() && ground_equal(n.residual)) ||
               fail("case " + n.label + ": ground sides differ");
      case Discharge::OracleValid: return oracle(n);
      case Discharge::Dichotomy: return dichotomy(n);
      case Discharge::Recursive: {
        if (n.sub.size() != 1) return fail("case " + n.label + ": missing subproof");
        for (const auto& v : n.residual.vars())
          if (std::find(n.f_vars.begin(), n.f_vars.end(), v) == n.f_vars.end())
            return fail("case " + n.label + ": subproof mentions lower-part variable " + v);
        Identity sub(n.residual.lhs(), n.residual.rhs(), bounded);
        return certificate(n.sub[0], sub);
      }
      case Discharge::Failed: return fail("case " + n.label + ": not discharged");
    }
    return false;
  }

  bool ordinal_node(const CaseNode& n, const Identity& id) {
    if (!same_sides(n.goal, id)) return fail("case " + n.label + ": goal differs from the identity");
    ClassMap cls;
    for (const auto& v : n.s_vars) cls[v] = VarClass::S;
    for (const auto& v : n.f_vars) cls[v] = VarClass::F;
    if (cls.size() != id.vars().size() || n.s_vars.size() + n.f_vars.size() != id.vars().size())
      return fail("case " + n.label + ": partition does not cover the variables");
    for (const auto& v : id.vars())
      if (!cls.count(v)) return fail("case " + n.label + ": partition does not cover " + v);
    AlgTerm l = id.lhs(), r = id.rhs();
    for (const auto& s : n.steps) {
      AlgTerm& side = s.side == 'l' ? l : r;
      auto next = apply_ordinal_rule(side, s.path, s.rule, cls, id.bounded());
      if (!next) return fail("case " + n.label + ": rewrite " + s.rule + " does not apply");
      side = *next;
    }
    if (!(l == n.residual.lhs() && r == n.residual.rhs()))
      return fail("case " + n.label + ": rewrites do not reach the recorded residual");
    return discharge(n, id.bounded());
  }

  bool certificate(const CaseCertificate& cert, const Identity& id) {
    if (!same_sides(cert.goal, id) || cert.goal.bounded() != id.bounded())
      return fail("certificate goal differs from " + print_identity(id));
    const auto& vars = id.vars();
    std::map<std::string, const CaseNode*> by_label;
    for (const auto& n : cert.cases)
      if (!by_label.emplace(n.label, &n).second) return fail("duplicate case " + n.label);

    auto it = by_label.find("(i)");
    if (it == by_label.end()) return fail("missing case (i)");
    const CaseNode& ci = *it->second;
    if (!same_sides(ci.goal, id) || !same_sides(ci.residual, id) || !ci.steps.empty())
      return fail("case (i): goal differs from the identity");
    if (id.bounded() && ci.discharge != Discharge::OracleValid) return fail("case (i): not discharged by the oracle");
    if (!discharge(ci, id.bounded())) return false;

    // case (ii): every bipartition, up to checked symmetries
    auto syms = variable_symmetries(id);
    std::set<VarSet> covered;
    for (const auto& n : cert.cases) {
      if (n.label.rfind("(ii)", 0) != 0) continue;
      VarSet s(n.s_vars.begin(), n.s_vars.end());
      if (s.empty() || n.f_vars.empty()) return fail("case " + n.label + ": both parts must be nonempty");
      auto orb = orbit_of(s, syms);
      std::vector<VarSet> claimed;
      for (const auto& o : n.orbit) claimed.emplace_back(o.begin(), o.end());
      if (claimed.empty()) claimed.push_back(s);
      for (const auto& c : claimed) {
        if (!orb.count(c)) return fail("case " + n.label + ": " + set_str(ordered(c, vars, true)) + " is not symmetric");
        if (!covered.insert(c).second) return fail("case " + n.label + ": partition covered twice");
      }
      if (!ordinal_node(n, id)) return false;
    }
    if (vars.size() >= 2)
      for (const auto& s : all_proper_subsets(vars))
        if (!covered.count(s))
          return fail("missing case (ii) with S=" + set_str(ordered(s, vars, true)) +
                      " F=" + set_str(ordered(s, vars, false)));

    auto iii = by_label.find("(iii)");
    bool need_iii = id.bounded() && !vars.empty();
    if (need_iii && iii == by_label.end()) return fail("missing case (iii)");
    if (!need_iii && iii != by_label.end()) return fail("unexpected case (iii)");
    if (need_iii) {
      const CaseNode& n = *iii->second;
      if (n.s_vars.size() != vars.size() || !n.f_vars.empty())
        return fail("case (iii): all variables must lie in the lower part");
      if (!ordinal_node(n, id)) return false;
    }
    for (const auto& [label, n] : by_label)
      if (label != "(i)" && label != "(iii)" && label.rfind("(ii)", 0) != 0) return fail("unknown case " + label);
    return true;
  }
};

}  // namespace

CertificateCheck check_certificate(const CaseCertificate& cert, const Identity& id) {
  Checker c;
  bool ok = c.certificate(cert, id);
  return {ok, ok ? "certificate accepted" : c.error};
}

}  // namespace hoops
