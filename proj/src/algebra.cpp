#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hoops/algebra.hpp"

namespace hoops {

// ---------------------------------------------------------------- FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(int n, std::vector<int> add, std::vector<int> imp, std::vector<std::string> names)
    : n_(n), add_(std::move(add)), imp_(std::move(imp)), names_(std::move(names)) {
  if (n < 1) throw AlgebraError("carrier must be nonempty");
  auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (add_.size() != cells || imp_.size() != cells) throw AlgebraError("table size does not match carrier");
  for (std::size_t i = 0; i < cells; ++i)
    if (add_[i] < 0 || add_[i] >= n || imp_[i] < 0 || imp_[i] >= n) throw AlgebraError("table entry out of range");
  if (names_.empty())
    for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  if (names_.size() != static_cast<std::size_t>(n)) throw AlgebraError("wrong number of element names");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw AlgebraError("duplicate element names");
  for (int a = 0; a < n && !one_; ++a) {
    bool ann = true;
    for (int x = 0; x < n && ann; ++x) ann = this->add(x, a) == a;
    if (ann) one_ = a;
  }
}

int FiniteAlgebra::one_or_throw() const {
  if (!one_) throw AlgebraError("algebra has no annihilator");
  return *one_;
}

bool FiniteAlgebra::has_default_names() const {
  for (int i = 0; i < n_; ++i)
    if (names_[static_cast<std::size_t>(i)] != std::to_string(i)) return false;
  return true;
}

std::optional<int> FiniteAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

FiniteAlgebra FiniteAlgebra::with_names(std::vector<std::string> names) const {
  return FiniteAlgebra(n_, add_, imp_, std::move(names));
}

// ---------------------------------------------------------------- laws

bool AxiomReport::ok() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.holds; });
}

const LawResult& AxiomReport::law(const std::string& name) const {
  for (const auto& l : laws)
    if (l.law == name) return l;
  throw std::out_of_range("no law " + name);
}

namespace {

// Records the first failure for a law.
struct LawRecorder {
  LawResult r;
  explicit LawRecorder(std::string name) { r.law = std::move(name); }
  void fail(std::vector<int> w) {
    if (r.holds) {
      r.holds = false;
      r.witness = std::move(w);
    }
  }
};

}  // namespace

AxiomReport check_pocrim(const FiniteAlgebra& a) {
  const int n = a.size();
  LawRecorder m1("m1"), m2("m2"), m3("m3"), o1("o1"), o2("o2"), o3("o3"), o4("o4"), b("b"), r("r");
  for (int x = 0; x < n; ++x) {
    if (a.add(x, 0) != x) m3.fail({x});
    if (!a.geq(x, x)) o1.fail({x});
    if (!a.geq(x, 0)) b.fail({x});
    for (int y = 0; y < n; ++y) {
      if (a.add(x, y) != a.add(y, x)) m2.fail({x, y});
      if (x != y && a.geq(x, y) && a.geq(y, x)) o3.fail({x, y});
      for (int z = 0; z < n; ++z) {
        if (a.add(a.add(x, y), z) != a.add(x, a.add(y, z))) m1.fail({x, y, z});
        if (a.geq(x, y) && a.geq(y, z) && !a.geq(x, z)) o2.fail({x, y, z});
        if (a.geq(x, y) && !a.geq(a.add(x, z), a.add(y, z))) o4.fail({x, y, z});
        if (a.geq(a.add(x, y), z) != a.geq(x, a.imp(y, z))) r.fail({x, y, z});
      }
    }
  }
  return AxiomReport{{m1.r, m2.r, m3.r, o1.r, o2.r, o3.r, o4.r, b.r, r.r}};
}

// ---------------------------------------------------------------- classify

bool satisfies_cwc(const FiniteAlgebra& a) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.add(x, a.imp(x, y)) != a.add(y, a.imp(y, x))) return false;
  return true;
}

bool is_archimedean(const FiniteAlgebra& a) {
  const int n = a.size();
  for (int x = 1; x < n; ++x) {
    // multiples of x stabilise after at most n steps
    int m = x;
    for (int k = 0; k < n; ++k) m = a.add(m, x);
    for (int y = 1; y < n; ++y)
      if (!a.geq(m, y)) return false;
  }
  return true;
}

namespace {

std::vector<int> intersect(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> out;
  std::set_intersection(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ClassificationReport classify(const FiniteAlgebra& a) {
  const int n = a.size();
  ClassificationReport rep;

  int total = 0;
  for (int x = 0; x < n; ++x) total = a.add(total, x);
  if (!a.one()) {
    rep.bounded.value = false;
    for (int x = 0; x < n; ++x)
      if (a.add(x, total) != total) {
        rep.bounded.witness = {total, x};
        break;
      }
  }

  if (!rep.bounded.value) {
    rep.involutive = {false, rep.bounded.witness};
  } else {
    for (int x = 0; x < n; ++x)
      if (a.delta(x) != x) {
        rep.involutive = {false, {x}};
        break;
      }
  }

  for (int x = 0; x < n && rep.naturally_ordered.value; ++x)
    for (int y = 0; y < n && rep.naturally_ordered.value; ++y) {
      if (!a.geq(x, y)) continue;
      bool found = false;
      for (int z = 0; z < n && !found; ++z) found = a.add(y, z) == x;
      if (!found) rep.naturally_ordered = {false, {x, y}};
    }
  rep.hoop = rep.naturally_ordered;

  Flag waj;
  for (int x = 0; x < n && waj.value; ++x)
    for (int y = 0; y < n && waj.value; ++y)
      if (a.imp(a.imp(x, y), y) != a.imp(a.imp(y, x), x)) waj = {false, {x, y}};
  if (waj.value && !rep.hoop.value) waj = rep.hoop;
  rep.wajsberg = waj;

  for (int x = 0; x < n; ++x)
    if (a.add(x, x) != x) {
      rep.idempotent = {false, {x}};
      break;
    }

  if (n == 1) {
    rep.simple = {false, {}};
    rep.subdirectly_irreducible = {false, {}};
    return rep;
  }
  std::vector<Ideal> principal(static_cast<std::size_t>(n));
  for (int x = 1; x < n; ++x) {
    principal[static_cast<std::size_t>(x)] = ideal_generated(a, {x});
    if (rep.simple.value && principal[static_cast<std::size_t>(x)].size() != static_cast<std::size_t>(n)) {
      const auto& id = principal[static_cast<std::size_t>(x)];
      for (int y = 0; y < n; ++y)
        if (!std::binary_search(id.begin(), id.end(), y)) {
          rep.simple = {false, {x, y}};
          break;
        }
    }
  }
  // The least nonzero ideal, if any, is the meet of the principal ones.
  std::vector<int> meet(static_cast<std::size_t>(n));
  std::iota(meet.begin(), meet.end(), 0);
  std::vector<int> used;
  for (int x = 1; x < n; ++x) {
    auto next = intersect(meet, principal[static_cast<std::size_t>(x)]);
    if (next.size() < meet.size()) {
      used.push_back(x);
      meet = std::move(next);
    }
  }
  if (meet.size() == 1) rep.subdirectly_irreducible = {false, used};
  return rep;
}

// ---------------------------------------------------------------- constructions

FiniteAlgebra ordinal_sum(const FiniteAlgebra& c, const FiniteAlgebra& d) {
  const int nc = c.size(), nd = d.size();
  const int n = nc + nd - 1;
  auto map_d = [&](int e) { return e == 0 ? 0 : nc + e - 1; };
  std::vector<int> add(static_cast<std::size_t>(n * n)), imp(static_cast<std::size_t>(n * n));
  auto at = [n](int x, int y) { return static_cast<std::size_t>(x * n + y); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool xc = x < nc, yc = y < nc;
      int dx = xc ? 0 : x - nc + 1, dy = yc ? 0 : y - nc + 1;
      if (xc && yc) {
        add[at(x, y)] = c.add(x, y);
        imp[at(x, y)] = c.imp(x, y);
      } else if (!xc && !yc) {
        add[at(x, y)] = map_d(d.add(dx, dy));
        imp[at(x, y)] = map_d(d.imp(dx, dy));
      } else if (xc) {  // c, d
        add[at(x, y)] = y;
        imp[at(x, y)] = y;
      } else {  // d, c
        add[at(x, y)] = x;
        imp[at(x, y)] = 0;
      }
    }
  std::vector<std::string> names(c.names());
  std::set<std::string> taken(names.begin(), names.end());
  for (int e = 1; e < nd; ++e) {
    std::string nm = d.name(e);
    while (taken.count(nm)) nm += "'";
    taken.insert(nm);
    names.push_back(nm);
  }
  return FiniteAlgebra(n, std::move(add), std::move(imp), std::move(names));
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<int> add(static_cast<std::size_t>(n * n)), imp(static_cast<std::size_t>(n * n));
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    names.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
    for (int y = 0; y < n; ++y) {
      auto k = static_cast<std::size_t>(x * n + y);
      add[k] = a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb);
      imp[k] = a.imp(x / nb, y / nb) * nb + b.imp(x % nb, y % nb);
    }
  }
  return FiniteAlgebra(n, std::move(add), std::move(imp), std::move(names));
}

Ideal ideal_generated(const FiniteAlgebra& h, const std::vector<int>& x) {
  const int n = h.size();
  std::vector<char> sums(static_cast<std::size_t>(n), 0);
  sums[0] = 1;
  for (int e : x) {
    if (e < 0 || e >= n) throw AlgebraError("element out of range");
    sums[static_cast<std::size_t>(e)] = 1;
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (sums[static_cast<std::size_t>(p)] && sums[static_cast<std::size_t>(q)] &&
            !sums[static_cast<std::size_t>(h.add(p, q))]) {
          sums[static_cast<std::size_t>(h.add(p, q))] = 1;
          grew = true;
        }
  }
  Ideal out;
  for (int y = 0; y < n; ++y)
    for (int s = 0; s < n; ++s)
      if (sums[static_cast<std::size_t>(s)] && h.geq(s, y)) {
        out.push_back(y);
        break;
      }
  return out;
}

bool is_ideal(const FiniteAlgebra& h, const std::vector<int>& subset) {
  std::vector<char> in(static_cast<std::size_t>(h.size()), 0);
  for (int e : subset) {
    if (e < 0 || e >= h.size()) return false;
    in[static_cast<std::size_t>(e)] = 1;
  }
  if (!in[0]) return false;
  for (int x = 0; x < h.size(); ++x) {
    if (!in[static_cast<std::size_t>(x)]) continue;
    for (int y = 0; y < h.size(); ++y) {
      if (h.geq(x, y) && !in[static_cast<std::size_t>(y)]) return false;
      if (in[static_cast<std::size_t>(y)] && !in[static_cast<std::size_t>(h.add(x, y))]) return false;
    }
  }
  return true;
}

std::vector<Ideal> all_ideals(const FiniteAlgebra& h) {
  std::set<Ideal> found;
  const int n = h.size();
  // every ideal of a finite algebra is generated by any generating subset; use all subsets when small
  if (n <= 16) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
      if (is_ideal(h, s)) found.insert(s);
    }
  } else {
    throw AlgebraError("ideal enumeration limited to 16 elements");
  }
  return {found.begin(), found.end()};
}

Quotient quotient_by_partition(const FiniteAlgebra& a, const std::vector<int>& labels) {
  const int n = a.size();
  if (labels.size() != static_cast<std::size_t>(n)) throw AlgebraError("partition size mismatch");
  // renumber classes by least member
  std::map<int, int> renum;
  std::vector<int> proj(static_cast<std::size_t>(n));
  std::vector<int> rep;
  for (int x = 0; x < n; ++x) {
    auto it = renum.find(labels[static_cast<std::size_t>(x)]);
    if (it == renum.end()) {
      it = renum.emplace(labels[static_cast<std::size_t>(x)], static_cast<int>(rep.size())).first;
      rep.push_back(x);
    }
    proj[static_cast<std::size_t>(x)] = it->second;
  }
  const int m = static_cast<int>(rep.size());
  std::vector<int> add(static_cast<std::size_t>(m * m)), imp(static_cast<std::size_t>(m * m));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto k = static_cast<std::size_t>(proj[static_cast<std::size_t>(x)] * m + proj[static_cast<std::size_t>(y)]);
      int s = proj[static_cast<std::size_t>(a.add(x, y))], i = proj[static_cast<std::size_t>(a.imp(x, y))];
      bool first = x == rep[static_cast<std::size_t>(proj[static_cast<std::size_t>(x)])] &&
                   y == rep[static_cast<std::size_t>(proj[static_cast<std::size_t>(y)])];
      if (first) {
        add[k] = s;
        imp[k] = i;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto k = static_cast<std::size_t>(proj[static_cast<std::size_t>(x)] * m + proj[static_cast<std::size_t>(y)]);
      if (add[k] != proj[static_cast<std::size_t>(a.add(x, y))] || imp[k] != proj[static_cast<std::size_t>(a.imp(x, y))])
        throw AlgebraError("partition is not a congruence");
    }
  std::vector<std::string> names;
  for (int c = 0; c < m; ++c) {
    std::string nm = "{";
    for (int x = 0; x < n; ++x)
      if (proj[static_cast<std::size_t>(x)] == c) nm += (nm.size() > 1 ? "," : "") + a.name(x);
    names.push_back(nm + "}");
  }
  return Quotient{FiniteAlgebra(m, std::move(add), std::move(imp), std::move(names)), std::move(proj)};
}

Quotient quotient(const FiniteAlgebra& h, const Ideal& i) {
  if (!classify(h).hoop.value) throw AlgebraError("quotient by an ideal requires a hoop");
  if (!is_ideal(h, i)) throw AlgebraError("subset is not an ideal");
  const int n = h.size();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int e : i) in[static_cast<std::size_t>(e)] = 1;
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (labels[static_cast<std::size_t>(x)] >= 0) continue;
    for (int y = x; y < n; ++y)
      if (in[static_cast<std::size_t>(h.add(h.imp(x, y), h.imp(y, x)))]) labels[static_cast<std::size_t>(y)] = x;
  }
  return quotient_by_partition(h, labels);
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<int>& f, bool preserve_one) {
  if (f.size() != static_cast<std::size_t>(a.size()) || f[0] != 0) return false;
  if (preserve_one) {
    if (!a.one() || !b.one()) return false;
    if (f[static_cast<std::size_t>(*a.one())] != *b.one()) return false;
  }
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      auto fx = f[static_cast<std::size_t>(x)], fy = f[static_cast<std::size_t>(y)];
      if (f[static_cast<std::size_t>(a.add(x, y))] != b.add(fx, fy)) return false;
      if (f[static_cast<std::size_t>(a.imp(x, y))] != b.imp(fx, fy)) return false;
    }
  return true;
}

std::vector<std::vector<int>> homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b, bool preserve_one) {
  std::vector<std::vector<int>> out;
  const int na = a.size(), nb = b.size();
  if (preserve_one && (!a.one() || !b.one())) return out;
  std::vector<int> f(static_cast<std::size_t>(na), -1);
  f[0] = 0;
  if (preserve_one) {
    if (*a.one() == 0 && *b.one() != 0) return out;
    f[static_cast<std::size_t>(*a.one())] = *b.one();
  }
  // consistency of all fully-assigned pairs touching x
  auto consistent = [&](int x) {
    for (int y = 0; y < na; ++y) {
      int fx = f[static_cast<std::size_t>(x)], fy = f[static_cast<std::size_t>(y)];
      if (fy < 0) continue;
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        int fp = f[static_cast<std::size_t>(p)], fq = f[static_cast<std::size_t>(q)];
        int s = f[static_cast<std::size_t>(a.add(p, q))], i = f[static_cast<std::size_t>(a.imp(p, q))];
        if (s >= 0 && s != b.add(fp, fq)) return false;
        if (i >= 0 && i != b.imp(fp, fq)) return false;
      }
      (void)fx;
    }
    return true;
  };
  for (int x = 0; x < na; ++x)
    if (f[static_cast<std::size_t>(x)] >= 0 && !consistent(x)) return out;
  auto rec = [&](auto&& self, int x) -> void {
    if (x == na) {
      if (is_homomorphism(a, b, f, preserve_one)) out.push_back(f);
      return;
    }
    if (f[static_cast<std::size_t>(x)] >= 0) {
      self(self, x + 1);
      return;
    }
    for (int v = 0; v < nb; ++v) {
      f[static_cast<std::size_t>(x)] = v;
      bool ok = true;
      for (int y = 0; y <= x && ok; ++y)
        if (f[static_cast<std::size_t>(y)] >= 0) ok = consistent(y);
      if (ok) self(self, x + 1);
    }
    f[static_cast<std::size_t>(x)] = -1;
  };
  rec(rec, 0);
  return out;
}

DoubleNegation double_negation(const FiniteAlgebra& a) {
  DoubleNegation d;
  const int n = a.size();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    d.delta.push_back(a.delta(x));
    in[static_cast<std::size_t>(d.delta.back())] = 1;
  }
  for (int x = 0; x < n; ++x)
    if (in[static_cast<std::size_t>(x)]) d.image.push_back(x);
  for (int x : d.image)
    for (int y : d.image)
      if (!in[static_cast<std::size_t>(a.add(x, y))]) d.image_closed_under_add = false;
  return d;
}

// ---------------------------------------------------------------- evaluation

int eval_term(const FiniteAlgebra& a, const AlgTerm& t, const std::map<std::string, int>& alpha) {
  switch (t.kind()) {
    case AlgTerm::Kind::Var: {
      auto it = alpha.find(t.name());
      if (it == alpha.end()) throw AlgebraError("unbound variable " + t.name());
      if (it->second < 0 || it->second >= a.size()) throw AlgebraError("value out of range for " + t.name());
      return it->second;
    }
    case AlgTerm::Kind::Zero: return 0;
    case AlgTerm::Kind::One: return a.one_or_throw();
    case AlgTerm::Kind::Plus: return a.add(eval_term(a, t.lhs(), alpha), eval_term(a, t.rhs(), alpha));
    case AlgTerm::Kind::Imp: return a.imp(eval_term(a, t.lhs(), alpha), eval_term(a, t.rhs(), alpha));
  }
  return 0;
}

TermEvaluator::TermEvaluator(const AlgTerm& t, const std::vector<std::string>& var_order) {
  auto rec = [&](auto&& self, const AlgTerm& u) -> void {
    switch (u.kind()) {
      case AlgTerm::Kind::Var: {
        auto it = std::find(var_order.begin(), var_order.end(), u.name());
        if (it == var_order.end()) throw AlgebraError("unbound variable " + u.name());
        code_.push_back({u.kind(), static_cast<int>(it - var_order.begin())});
        return;
      }
      case AlgTerm::Kind::Zero:
      case AlgTerm::Kind::One: code_.push_back({u.kind(), 0}); return;
      default:
        self(self, u.lhs());
        self(self, u.rhs());
        code_.push_back({u.kind(), 0});
    }
  };
  rec(rec, t);
}

int TermEvaluator::operator()(const FiniteAlgebra& a, const std::vector<int>& values) const {
  int stack[64] = {};
  std::vector<int> big;
  int* st = stack;
  if (code_.size() > 64) {
    big.resize(code_.size());
    st = big.data();
  }
  int sp = 0;
  for (const auto& op : code_) {
    switch (op.kind) {
      case AlgTerm::Kind::Var: st[sp++] = values[static_cast<std::size_t>(op.arg)]; break;
      case AlgTerm::Kind::Zero: st[sp++] = 0; break;
      case AlgTerm::Kind::One: st[sp++] = a.one_or_throw(); break;
      case AlgTerm::Kind::Plus:
        --sp;
        st[sp - 1] = a.add(st[sp - 1], st[sp]);
        break;
      case AlgTerm::Kind::Imp:
        --sp;
        st[sp - 1] = a.imp(st[sp - 1], st[sp]);
        break;
    }
  }
  return st[0];
}

bool next_assignment(std::vector<int>& values, int n) {
  for (std::size_t i = values.size(); i-- > 0;) {
    if (++values[i] < n) return true;
    values[i] = 0;
  }
  return false;
}

// ---------------------------------------------------------------- catalog

namespace {

FiniteAlgebra from_rows(const std::vector<std::string>& names, const std::vector<std::vector<int>>& add,
                        const std::vector<std::vector<int>>& imp) {
  const int n = static_cast<int>(names.size());
  std::vector<int> a, i;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.push_back(add[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
      i.push_back(imp[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
    }
  return FiniteAlgebra(n, std::move(a), std::move(i), names);
}

FiniteAlgebra lukasiewicz(int n) {
  const int m = n - 1;
  std::vector<int> a, i;
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    int g = std::gcd(x, m);
    names.push_back(x == 0 ? "0" : x == m ? "1" : std::to_string(x / g) + "/" + std::to_string(m / g));
    for (int y = 0; y < n; ++y) {
      a.push_back(std::min(x + y, m));
      i.push_back(std::max(y - x, 0));
    }
  }
  return FiniteAlgebra(n, std::move(a), std::move(i), std::move(names));
}

FiniteAlgebra goedel(int n) {
  std::vector<int> a, i;
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    names.push_back(x == 0 ? "0" : x == n - 1 ? "1" : "x" + std::to_string(x));
    for (int y = 0; y < n; ++y) {
      a.push_back(std::max(x, y));
      i.push_back(y > x ? y : 0);
    }
  }
  return FiniteAlgebra(n, std::move(a), std::move(i), std::move(names));
}

int parse_order(const std::string& name) {
  if (name.size() < 2) throw AlgebraError("unknown catalog algebra " + name);
  int n = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) throw AlgebraError("unknown catalog algebra " + name);
    n = n * 10 + (name[k] - '0');
    if (n > 64) throw AlgebraError("catalog order too large");
  }
  if (n < 2) throw AlgebraError("catalog order must be at least 2");
  return n;
}

}  // namespace

FiniteAlgebra catalog(const std::string& name) {
  if (name == "trivial") return FiniteAlgebra(1, {0}, {0}, {"0"});
  if (name == "B") return lukasiewicz(2);
  if (name == "P4")
    return from_rows({"0", "p", "q", "1"}, {{0, 1, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}},
                     {{0, 1, 2, 3}, {0, 0, 1, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  if (name == "Q4")
    return from_rows({"0", "u", "v", "1"}, {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3}},
                     {{0, 1, 2, 3}, {0, 0, 2, 2}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  if (name == "U")
    return from_rows({"0", "a", "b", "c", "1"},
                     {{0, 1, 2, 3, 4}, {1, 2, 2, 4, 4}, {2, 2, 2, 4, 4}, {3, 4, 4, 4, 4}, {4, 4, 4, 4, 4}},
                     {{0, 1, 2, 3, 4}, {0, 0, 1, 3, 3}, {0, 0, 0, 3, 3}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}});
  if (name == "Q6")
    return from_rows({"0", "p", "q", "r", "s", "1"},
                     {{0, 1, 2, 3, 4, 5},
                      {1, 1, 3, 3, 4, 5},
                      {2, 3, 3, 3, 5, 5},
                      {3, 3, 3, 3, 5, 5},
                      {4, 4, 5, 5, 5, 5},
                      {5, 5, 5, 5, 5, 5}},
                     {{0, 1, 2, 3, 4, 5},
                      {0, 0, 2, 2, 4, 5},
                      {0, 0, 0, 1, 4, 4},
                      {0, 0, 0, 0, 4, 4},
                      {0, 0, 0, 0, 0, 2},
                      {0, 0, 0, 0, 0, 0}});
  if (name[0] == 'L') return lukasiewicz(parse_order(name));
  if (name[0] == 'G') return goedel(parse_order(name));
  throw AlgebraError("unknown catalog algebra " + name);
}

std::vector<std::string> catalog_names() { return {"trivial", "B", "L<n>", "G<n>", "P4", "Q4", "Q6", "U"}; }

// ---------------------------------------------------------------- io

std::string write_algebra(const FiniteAlgebra& a) {
  std::ostringstream os;
  const int n = a.size();
  os << "pocrim " << n << "\n";
  if (a.one()) os << "one " << *a.one() << "\n";
  if (!a.has_default_names()) {
    os << "names";
    for (const auto& nm : a.names()) os << ' ' << nm;
    os << "\n";
  }
  for (const char* which : {"add", "imp"}) {
    os << which << "\n";
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) os << (y ? " " : "") << (which[0] == 'a' ? a.add(x, y) : a.imp(x, y));
      os << "\n";
    }
  }
  return os.str();
}

FiniteAlgebra read_algebra(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> AlgebraError {
    return AlgebraError("line " + std::to_string(lineno) + ": " + msg);
  };
  // Non-empty, non-comment lines.
  auto next = [&](std::string& out) {
    while (std::getline(is, out)) {
      ++lineno;
      auto h = out.find('#');
      if (h != std::string::npos) out.erase(h);
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto words = [](const std::string& s) {
    std::istringstream w(s);
    std::vector<std::string> out;
    for (std::string t; w >> t;) out.push_back(t);
    return out;
  };
  if (!next(line)) throw fail("empty algebra file");
  auto head = words(line);
  int n = 0;
  try {
    if (head.size() != 2 || head[0] != "pocrim") throw fail("expected 'pocrim <n>'");
    n = std::stoi(head[1]);
  } catch (const std::logic_error&) {
    throw fail("bad carrier size");
  }
  if (n < 1 || n > 255) throw fail("carrier size out of range");
  std::optional<int> declared_one;
  std::vector<std::string> names;
  if (!next(line)) throw fail("missing tables");
  auto w = words(line);
  if (w[0] == "one") {
    if (w.size() != 2) throw fail("expected 'one <idx>'");
    try {
      declared_one = std::stoi(w[1]);
    } catch (const std::logic_error&) {
      throw fail("bad index");
    }
    if (!next(line)) throw fail("missing tables");
    w = words(line);
  }
  if (w[0] == "names") {
    names.assign(w.begin() + 1, w.end());
    if (names.size() != static_cast<std::size_t>(n)) throw fail("expected " + std::to_string(n) + " names");
    if (!next(line)) throw fail("missing tables");
    w = words(line);
  }
  std::vector<int> tables[2];
  for (int t = 0; t < 2; ++t) {
    const char* kw = t == 0 ? "add" : "imp";
    if (t == 1) {
      if (!next(line)) throw fail("missing 'imp'");
      w = words(line);
    }
    if (w.size() != 1 || w[0] != kw) throw fail(std::string("expected '") + kw + "'");
    for (int r = 0; r < n; ++r) {
      if (!next(line)) throw fail("missing table row");
      auto cells = words(line);
      if (cells.size() != static_cast<std::size_t>(n)) throw fail("expected " + std::to_string(n) + " entries");
      for (const auto& c : cells) {
        std::size_t used = 0;
        int v = -1;
        try {
          v = std::stoi(c, &used);
        } catch (const std::logic_error&) {
          used = 0;
        }
        if (used != c.size() || v < 0 || v >= n) throw fail("bad table entry '" + c + "'");
        tables[t].push_back(v);
      }
    }
  }
  if (next(line)) throw fail("trailing content");
  FiniteAlgebra a(n, std::move(tables[0]), std::move(tables[1]), std::move(names));
  if (declared_one && (!a.one() || *a.one() != *declared_one))
    throw AlgebraError("declared 'one' is not the annihilator");
  return a;
}

}  // namespace hoops
