#include "hoops/semantics.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace hoops {

const char* semantics_name(SemanticsKind k) {
  switch (k) {
    case SemanticsKind::Standard: return "standard";
    case SemanticsKind::Kolmogorov: return "kolmogorov";
    case SemanticsKind::Gentzen: return "gentzen";
    case SemanticsKind::Glivenko: return "glivenko";
  }
  return "?";
}

std::optional<SemanticsKind> semantics_from_name(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto k : {SemanticsKind::Standard, SemanticsKind::Kolmogorov, SemanticsKind::Gentzen, SemanticsKind::Glivenko})
    if (l == semantics_name(k)) return k;
  return std::nullopt;
}

FormulaEvaluator::FormulaEvaluator(SemanticsKind kind, const Formula& a, std::vector<std::string> var_order)
    : kind_(kind), vars_(std::move(var_order)) {
  auto rec = [&](auto&& self, const Formula& f) -> void {
    switch (f.kind()) {
      case Formula::Kind::Var: {
        auto it = std::find(vars_.begin(), vars_.end(), f.name());
        if (it == vars_.end()) throw AlgebraError("unbound variable " + f.name());
        code_.push_back({f.kind(), static_cast<int>(it - vars_.begin())});
        return;
      }
      case Formula::Kind::One: code_.push_back({f.kind(), 0}); return;
      default:
        self(self, f.lhs());
        self(self, f.rhs());
        code_.push_back({f.kind(), 0});
    }
  };
  rec(rec, a);
}

int FormulaEvaluator::operator()(const FiniteAlgebra& alg, const std::vector<int>& values) const {
  const int one = alg.one_or_throw();
  const bool dvar = kind_ == SemanticsKind::Kolmogorov || kind_ == SemanticsKind::Gentzen;
  const bool dop = kind_ == SemanticsKind::Kolmogorov;
  std::vector<int> st;
  st.reserve(code_.size());
  for (const auto& op : code_) {
    switch (op.kind) {
      case Formula::Kind::Var: {
        int v = values[static_cast<std::size_t>(op.arg)];
        st.push_back(dvar ? alg.delta(v) : v);
        break;
      }
      case Formula::Kind::One: st.push_back(one); break;
      case Formula::Kind::Tensor:
      case Formula::Kind::Limp: {
        int b = st.back();
        st.pop_back();
        int& a = st.back();
        a = op.kind == Formula::Kind::Tensor ? alg.add(a, b) : alg.imp(a, b);
        if (dop) a = alg.delta(a);
        break;
      }
    }
  }
  return kind_ == SemanticsKind::Glivenko ? alg.delta(st.back()) : st.back();
}

namespace {

std::vector<int> values_for(const std::vector<std::string>& vars, const Assignment& alpha, int n) {
  std::vector<int> v;
  for (const auto& x : vars) {
    auto it = alpha.find(x);
    if (it == alpha.end()) throw AlgebraError("unbound variable " + x);
    if (it->second < 0 || it->second >= n) throw AlgebraError("value out of range for " + x);
    v.push_back(it->second);
  }
  return v;
}

Assignment to_assignment(const std::vector<std::string>& vars, const std::vector<int>& v) {
  Assignment a;
  for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = v[i];
  return a;
}

bool involutive(const FiniteAlgebra& a) {
  for (int x = 0; x < a.size(); ++x)
    if (a.delta(x) != x) return false;
  return true;
}

}  // namespace

int evaluate(SemanticsKind kind, const FiniteAlgebra& alg, const Assignment& alpha, const Formula& a) {
  FormulaEvaluator ev(kind, a, vars_of(a));
  return ev(alg, values_for(ev.vars(), alpha, alg.size()));
}

int evaluate_unbounded(const FiniteAlgebra& alg, const Assignment& alpha, int one_value, const Formula& a) {
  if (one_value < 0 || one_value >= alg.size()) throw AlgebraError("value of 1 out of range");
  switch (a.kind()) {
    case Formula::Kind::Var: {
      auto it = alpha.find(a.name());
      if (it == alpha.end()) throw AlgebraError("unbound variable " + a.name());
      return it->second;
    }
    case Formula::Kind::One: return one_value;
    case Formula::Kind::Tensor:
      return alg.add(evaluate_unbounded(alg, alpha, one_value, a.lhs()), evaluate_unbounded(alg, alpha, one_value, a.rhs()));
    case Formula::Kind::Limp:
      return alg.imp(evaluate_unbounded(alg, alpha, one_value, a.lhs()), evaluate_unbounded(alg, alpha, one_value, a.rhs()));
  }
  return 0;
}

Validity is_valid(SemanticsKind kind, const FiniteAlgebra& alg, const Formula& a, int max_vars) {
  auto vars = vars_of(a);
  if (static_cast<int>(vars.size()) > max_vars)
    throw std::invalid_argument("formula has " + std::to_string(vars.size()) + " variables, limit " + std::to_string(max_vars));
  FormulaEvaluator ev(kind, a, vars);
  std::vector<int> v(vars.size(), 0);
  do {
    int r = ev(alg, v);
    if (r != 0) return {false, to_assignment(vars, v), r};
  } while (next_assignment(v, alg.size()));
  return {};
}

std::optional<NaturalityFailure> check_naturality(SemanticsKind kind, const FiniteAlgebra& src, const FiniteAlgebra& dst,
                                                  const std::vector<int>& h, const std::vector<Formula>& formulas) {
  for (const auto& f : formulas) {
    FormulaEvaluator ev(kind, f, vars_of(f));
    std::vector<int> v(ev.vars().size(), 0), hv(v.size());
    do {
      for (std::size_t i = 0; i < v.size(); ++i) hv[i] = h[static_cast<std::size_t>(v[i])];
      int l = h[static_cast<std::size_t>(ev(src, v))];
      int r = ev(dst, hv);
      if (l != r) return NaturalityFailure{f, to_assignment(ev.vars(), v), l, r};
    } while (next_assignment(v, src.size()));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- DNS

namespace {

struct FormulaOutcome {
  std::optional<DnsWitness> dns1, dns2, dns3;
};

DnsWitness make_witness(const Formula& f, const NamedAlgebra& m, const std::vector<std::string>& vars,
                        const std::vector<int>& v, int value) {
  auto alpha = to_assignment(vars, v);
  return {f, m.name, alpha, value, m.algebra.name(value), assignment_text(m.algebra, alpha)};
}

FormulaOutcome examine(SemanticsKind kind, const std::vector<NamedAlgebra>& cls, const std::vector<char>& inv,
                       const Formula& f) {
  FormulaOutcome out;
  auto vars = vars_of(f);
  FormulaEvaluator mu(kind, f, vars), std_(SemanticsKind::Standard, f, vars);
  bool premise = true;
  for (std::size_t m = 0; m < cls.size(); ++m) {
    if (!inv[m]) continue;
    const auto& a = cls[m].algebra;
    std::vector<int> v(vars.size(), 0);
    do {
      int s = std_(a, v);
      if (s != 0) premise = false;
      if (!out.dns1) {
        int k = mu(a, v);
        if (k != s) out.dns1 = make_witness(f, cls[m], vars, v, k);
      }
    } while (next_assignment(v, a.size()));
  }
  for (std::size_t m = 0; m < cls.size(); ++m) {
    const auto& a = cls[m].algebra;
    std::vector<int> v(vars.size(), 0);
    do {
      int k = mu(a, v);
      if (premise && !out.dns2 && k != 0) out.dns2 = make_witness(f, cls[m], vars, v, k);
      if (!out.dns3 && a.delta(k) != k) out.dns3 = make_witness(f, cls[m], vars, v, k);
    } while (next_assignment(v, a.size()));
  }
  return out;
}

}  // namespace

DnsReport check_dns(SemanticsKind kind, const std::vector<NamedAlgebra>& cls, const std::vector<Formula>& formulas,
                    int jobs) {
  std::vector<char> inv;
  for (const auto& m : cls) {
    m.algebra.one_or_throw();
    inv.push_back(involutive(m.algebra));
  }
  std::vector<FormulaOutcome> outcomes(formulas.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < formulas.size(); i += stride) outcomes[i] = examine(kind, cls, inv, formulas[i]);
  };
  std::size_t nj = static_cast<std::size_t>(std::max(1, jobs));
  if (nj == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> ts;
    for (std::size_t j = 0; j < nj; ++j) ts.emplace_back(work, j, nj);
    for (auto& t : ts) t.join();
  }
  DnsReport r;
  r.kind = kind;
  r.formulas = formulas.size();
  for (const auto& f : formulas) r.max_depth = std::max(r.max_depth, f.depth());
  for (const auto& o : outcomes) {
    if (o.dns1 && r.dns1.pass) r.dns1 = {false, o.dns1};
    if (o.dns2 && r.dns2.pass) r.dns2 = {false, o.dns2};
    if (o.dns3 && r.dns3.pass) r.dns3 = {false, o.dns3};
  }
  return r;
}

std::string dns_report_text(const DnsReport& r) {
  std::ostringstream o;
  auto line = [&](const char* name, const DnsProperty& p) {
    o << name << ": ";
    if (p.pass) {
      o << "no counterexample found at depth " << r.max_depth << " (" << r.formulas << " formulas)\n";
      return;
    }
    const auto& w = *p.witness;
    o << "counterexample: " << print_formula(w.formula) << " in " << w.algebra << " at " << w.assignment_names
      << " has value " << w.value_name << "\n";
  };
  o << "semantics " << semantics_name(r.kind) << "\n";
  line("DNS1", r.dns1);
  line("DNS2", r.dns2);
  line("DNS3", r.dns3);
  return o.str();
}

// ---------------------------------------------------------------- corpus

std::vector<Formula> random_formulas(int depth, int n_vars, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t n) { return rng() % n; };
  auto leaf = [&]() {
    auto k = pick(static_cast<std::uint64_t>(n_vars) + 1);
    return k == static_cast<std::uint64_t>(n_vars) ? Formula::one() : Formula::var("v" + std::to_string(k + 1));
  };
  auto gen = [&](auto&& self, int d) -> Formula {
    if (d == 0) return leaf();
    auto r = pick(20);
    if (r < 4) return leaf();
    if (r < 15) {
      Formula a = self(self, d - 1);
      return Formula::limp(a, self(self, d - 1));
    }
    Formula a = self(self, d - 1);
    return Formula::tensor(a, self(self, d - 1));
  };
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::size_t misses = 0;
  while (out.size() < count && misses < 1000 + 50 * count) {
    Formula f = gen(gen, depth);
    if (seen.insert(f).second) {
      out.push_back(f);
    } else {
      ++misses;
    }
  }
  return out;
}

Formula dne_premise(const Formula& a) {
  std::optional<Formula> b;
  for (const auto& w : vars_of(a)) {
    Formula v = Formula::var(w);
    Formula d = Formula::limp(Formula::neg(Formula::neg(v)), v);
    b = b ? Formula::tensor(*b, d) : d;
  }
  return b ? *b : Formula::zero();
}

Formula final_lemma_formula(const Formula& a) {
  Formula b = dne_premise(a);
  return Formula::limp(Formula::tensor(b, b), a);
}

std::optional<PairWitness> delta_homomorphism_failure(const FiniteAlgebra& alg) {
  for (int x = 0; x < alg.size(); ++x)
    for (int y = 0; y < alg.size(); ++y) {
      if (alg.delta(alg.add(x, y)) != alg.add(alg.delta(x), alg.delta(y))) return PairWitness{x, y};
      if (alg.delta(alg.imp(x, y)) != alg.imp(alg.delta(x), alg.delta(y))) return PairWitness{x, y};
    }
  return std::nullopt;
}

std::optional<PairWitness> dn_imp_inequality_failure(const FiniteAlgebra& alg) {
  for (int x = 0; x < alg.size(); ++x)
    for (int y = 0; y < alg.size(); ++y)
      if (!alg.geq(alg.delta(alg.imp(x, y)), alg.imp(alg.delta(x), alg.delta(y)))) return PairWitness{x, y};
  return std::nullopt;
}

std::string assignment_text(const FiniteAlgebra& alg, const Assignment& alpha) {
  std::string s;
  for (const auto& [k, v] : alpha) s += (s.empty() ? "" : ",") + k + "=" + alg.name(v);
  return s.empty() ? "(no variables)" : s;
}

}  // namespace hoops
