#include "hoops/lra.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace hoops {

const char* domain_name(Domain d) { return d == Domain::UnitInterval ? "[0,1]" : "R>=0"; }

std::string rational_str(const Rational& q) { return q.str(); }

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
}

// ---------------------------------------------------------------- LinExpr

LinExpr LinExpr::constant_expr(std::size_t nvars, const Rational& c) { return LinExpr{std::vector<Rational>(nvars), c}; }

LinExpr LinExpr::variable(std::size_t nvars, std::size_t i) {
  LinExpr e{std::vector<Rational>(nvars), 0};
  e.coef[i] = 1;
  return e;
}

LinExpr LinExpr::operator+(const LinExpr& o) const {
  LinExpr r = *this;
  for (std::size_t i = 0; i < coef.size(); ++i) r.coef[i] += o.coef[i];
  r.constant += o.constant;
  return r;
}

LinExpr LinExpr::operator-(const LinExpr& o) const { return *this + o.scaled(-1); }

LinExpr LinExpr::scaled(const Rational& k) const {
  LinExpr r = *this;
  for (auto& c : r.coef) c *= k;
  r.constant *= k;
  return r;
}

Rational LinExpr::eval(const std::vector<Rational>& point) const {
  Rational v = constant;
  for (std::size_t i = 0; i < coef.size(); ++i)
    if (coef[i] != 0) v += coef[i] * point[i];
  return v;
}

bool LinExpr::is_constant() const {
  return std::all_of(coef.begin(), coef.end(), [](const Rational& c) { return c == 0; });
}

std::string LinExpr::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& v) {
    if (c == 0) return;
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (v.empty())
      os << a.str();
    else if (a == 1)
      os << v;
    else
      os << a.str() << "*" << v;
    first = false;
  };
  for (std::size_t i = 0; i < coef.size(); ++i) term(coef[i], names[i]);
  term(constant, "");
  if (first) os << "0";
  return os.str();
}

bool operator<(const LinExpr& a, const LinExpr& b) {
  if (a.coef != b.coef) return a.coef < b.coef;
  return a.constant < b.constant;
}

bool Constraint::holds(const std::vector<Rational>& point) const {
  Rational v = e.eval(point);
  return strict ? v > 0 : v >= 0;
}

std::string Constraint::str(const std::vector<std::string>& names) const {
  return e.str(names) + (strict ? " > 0" : " >= 0");
}

bool operator<(const Constraint& a, const Constraint& b) {
  if (!(a.e == b.e)) return a.e < b.e;
  return a.strict < b.strict;
}

// ---------------------------------------------------------------- Fourier-Motzkin

namespace {

enum class Status { True, Keep, False };

// Scale so the leading coefficient has magnitude 1; classify constants.
Status normalize(Constraint& c) {
  for (const auto& k : c.e.coef)
    if (k != 0) {
      Rational s = 1 / abs(k);
      c.e = c.e.scaled(s);
      return Status::Keep;
    }
  if (c.strict) return c.e.constant > 0 ? Status::True : Status::False;
  return c.e.constant >= 0 ? Status::True : Status::False;
}

// Normalizes, drops tautologies and keeps only the tightest constraint per direction.
// Returns false if some constraint is a contradiction.
bool reduce(std::vector<Constraint>& sys) {
  std::map<std::vector<Rational>, Constraint> best;
  for (auto c : sys) {
    auto st = normalize(c);
    if (st == Status::False) return false;
    if (st == Status::True) continue;
    auto it = best.find(c.e.coef);
    if (it == best.end()) {
      best.emplace(c.e.coef, c);
      continue;
    }
    // a.x + k >= 0: smaller k is tighter; strict wins ties
    Constraint& cur = it->second;
    if (c.e.constant < cur.e.constant || (c.e.constant == cur.e.constant && c.strict)) cur = c;
  }
  sys.clear();
  for (auto& [k, c] : best) sys.push_back(std::move(c));
  // opposite directions: a.x + k1 >= 0 and -a.x + k2 >= 0 need k1 + k2 >= 0
  for (const auto& c : sys) {
    std::vector<Rational> neg(c.e.coef);
    for (auto& q : neg) q = -q;
    auto it = best.find(neg);
    if (it == best.end()) continue;
    Rational s = c.e.constant + it->second.e.constant;
    if (s < 0 || (s == 0 && (c.strict || it->second.strict))) return false;
  }
  return true;
}

std::optional<std::vector<Constraint>> eliminate(const std::vector<Constraint>& sys, std::size_t j) {
  std::vector<Constraint> out, pos, neg;
  for (const auto& c : sys) {
    if (c.e.coef[j] > 0)
      pos.push_back(c);
    else if (c.e.coef[j] < 0)
      neg.push_back(c);
    else
      out.push_back(c);
  }
  for (const auto& p : pos)
    for (const auto& q : neg) {
      Constraint r{p.e.scaled(-q.e.coef[j]) + q.e.scaled(p.e.coef[j]), p.strict || q.strict};
      r.e.coef[j] = 0;
      out.push_back(std::move(r));
    }
  if (!reduce(out)) return std::nullopt;
  return out;
}

}  // namespace

FmResult fm_feasible(const std::vector<Constraint>& constraints, std::size_t nvars) {
  std::vector<std::vector<Constraint>> stage(nvars + 1);
  stage[nvars] = constraints;
  for (auto& c : stage[nvars])
    if (c.e.coef.size() != nvars) throw std::invalid_argument("constraint dimension mismatch");
  if (!reduce(stage[nvars])) return {};
  for (std::size_t j = nvars; j-- > 0;) {
    auto next = eliminate(stage[j + 1], j);
    if (!next) return {};
    stage[j] = std::move(*next);
  }
  FmResult res;
  res.feasible = true;
  res.point.assign(nvars, Rational(0));
  for (std::size_t j = 0; j < nvars; ++j) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& c : stage[j + 1]) {
      const Rational& a = c.e.coef[j];
      if (a == 0) continue;
      Rational rest = c.e.eval(res.point) - a * res.point[j];
      Rational bound = -rest / a;
      if (a > 0) {
        if (!lo || bound > *lo || (bound == *lo && c.strict)) {
          lo_strict = (lo && bound == *lo) ? (lo_strict || c.strict) : c.strict;
          lo = bound;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && c.strict)) {
          hi_strict = (hi && bound == *hi) ? (hi_strict || c.strict) : c.strict;
          hi = bound;
        }
      }
    }
    (void)lo_strict;
    (void)hi_strict;
    if (lo && hi)
      res.point[j] = (*lo + *hi) / 2;
    else if (lo)
      res.point[j] = *lo + 1;
    else if (hi)
      res.point[j] = *hi - 1;
    else
      res.point[j] = 0;
  }
  return res;
}

// ---------------------------------------------------------------- case split

std::vector<Constraint> domain_constraints(std::size_t nvars, Domain d) {
  std::vector<Constraint> out;
  for (std::size_t i = 0; i < nvars; ++i) {
    out.push_back({LinExpr::variable(nvars, i), false});
    if (d == Domain::UnitInterval)
      out.push_back({LinExpr::constant_expr(nvars, 1) - LinExpr::variable(nvars, i), false});
  }
  return out;
}

namespace {

class Splitter {
 public:
  Splitter(const std::vector<std::string>& vars, Domain d)
      : vars_(vars), n_(vars.size()), d_(d), dom_(domain_constraints(vars.size(), d)) {}

  const std::vector<Piece>& split(const AlgTerm& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    std::vector<Piece> out;
    switch (t.kind()) {
      case AlgTerm::Kind::Var: {
        auto v = std::find(vars_.begin(), vars_.end(), t.name());
        if (v == vars_.end()) throw std::invalid_argument("variable not in order: " + t.name());
        out.push_back({{}, LinExpr::variable(n_, static_cast<std::size_t>(v - vars_.begin()))});
        break;
      }
      case AlgTerm::Kind::Zero: out.push_back({{}, LinExpr::constant_expr(n_, 0)}); break;
      case AlgTerm::Kind::One:
        if (d_ == Domain::NonNegReals) throw SignatureError("constant 1 has no value over R>=0");
        out.push_back({{}, LinExpr::constant_expr(n_, 1)});
        break;
      case AlgTerm::Kind::Plus:
      case AlgTerm::Kind::Imp: {
        const auto& pa = split(t.lhs());
        const auto& pb = split(t.rhs());
        for (const auto& a : pa)
          for (const auto& b : pb) {
            auto base = merge(a.constraints, b.constraints);
            if (!base || !feasible(*base)) continue;
            if (t.kind() == AlgTerm::Kind::Plus) {
              LinExpr s = a.value + b.value;
              if (d_ == Domain::NonNegReals) {
                out.push_back({*base, s});
              } else {
                emit(out, *base, {LinExpr::constant_expr(n_, 1) - s, false}, s);
                emit(out, *base, {s - LinExpr::constant_expr(n_, 1), true}, LinExpr::constant_expr(n_, 1));
              }
            } else {
              LinExpr diff = b.value - a.value;
              emit(out, *base, {diff, false}, diff);
              emit(out, *base, {diff.scaled(-1), true}, LinExpr::constant_expr(n_, 0));
            }
          }
        break;
      }
    }
    return memo_.emplace(t, std::move(out)).first->second;
  }

  bool feasible(const std::vector<Constraint>& cs) {
    std::vector<Constraint> all(dom_);
    all.insert(all.end(), cs.begin(), cs.end());
    return fm_feasible(all, n_).feasible;
  }

  // Sorted union with constants resolved; nullopt when trivially contradictory.
  std::optional<std::vector<Constraint>> merge(const std::vector<Constraint>& a, const std::vector<Constraint>& b) {
    std::vector<Constraint> out;
    for (const auto* src : {&a, &b})
      for (auto c : *src) {
        auto st = normalize(c);
        if (st == Status::False) return std::nullopt;
        if (st == Status::Keep) out.push_back(std::move(c));
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  void emit(std::vector<Piece>& out, const std::vector<Constraint>& base, Constraint extra, LinExpr value) {
    auto cs = merge(base, {std::move(extra)});
    if (!cs || !feasible(*cs)) return;
    out.push_back({std::move(*cs), std::move(value)});
  }

  std::vector<std::string> vars_;
  std::size_t n_;
  Domain d_;
  std::vector<Constraint> dom_;
  std::unordered_map<AlgTerm, std::vector<Piece>, TermHash> memo_;
};

std::vector<std::string> all_vars(const Identity& id, const std::vector<Identity>& assumptions) {
  std::vector<std::string> vars = id.vars();
  for (const auto& a : assumptions) {
    collect_vars(a.lhs(), vars);
    collect_vars(a.rhs(), vars);
  }
  return vars;
}

}  // namespace

std::vector<Piece> case_split(const AlgTerm& t, const std::vector<std::string>& vars, Domain d) {
  Splitter s(vars, d);
  return s.split(t);
}

Verdict decide(const Identity& id, Domain d, const std::vector<Identity>& assumptions) {
  if (d == Domain::NonNegReals) {
    check_signature(id.lhs(), false);
    check_signature(id.rhs(), false);
  }
  auto vars = all_vars(id, assumptions);
  const std::size_t n = vars.size();
  Splitter sp(vars, d);

  // Regions where every assumption holds, as conjunctions of constraints.
  std::vector<std::vector<Constraint>> regions{{}};
  for (const auto& as : assumptions) {
    std::vector<std::vector<Constraint>> next;
    const auto ls = sp.split(as.lhs());
    const auto rs = sp.split(as.rhs());
    for (const auto& reg : regions)
      for (const auto& a : ls)
        for (const auto& b : rs) {
          LinExpr diff = a.value - b.value;
          auto cs = sp.merge(reg, a.constraints);
          if (!cs) continue;
          cs = sp.merge(*cs, b.constraints);
          if (!cs) continue;
          cs = sp.merge(*cs, {{diff, false}, {diff.scaled(-1), false}});
          if (cs && sp.feasible(*cs)) next.push_back(std::move(*cs));
        }
    regions = std::move(next);
  }

  const auto L = sp.split(id.lhs());
  const auto R = sp.split(id.rhs());
  auto dom = domain_constraints(n, d);
  for (const auto& reg : regions)
    for (const auto& pl : L)
      for (const auto& pr : R) {
        auto base = sp.merge(reg, pl.constraints);
        if (!base) continue;
        base = sp.merge(*base, pr.constraints);
        if (!base || !sp.feasible(*base)) continue;
        LinExpr diff = pl.value - pr.value;
        for (const LinExpr& gap : {diff, diff.scaled(-1)}) {
          std::vector<Constraint> all(dom);
          all.insert(all.end(), base->begin(), base->end());
          all.push_back({gap, true});
          auto r = fm_feasible(all, n);
          if (r.feasible) {
            Verdict v;
            v.valid = false;
            v.domain = d;
            for (std::size_t i = 0; i < n; ++i) v.witness[vars[i]] = r.point[i];
            return v;
          }
        }
      }
  Verdict v;
  v.domain = d;
  return v;
}

Verdict decide_involutive(const Identity& id) { return decide(id, Domain::UnitInterval); }

Verdict decide_wajsberg(const Identity& id) {
  if (id.lhs().has_one() || id.rhs().has_one()) throw SignatureError("Wajsberg decision needs an unbounded identity");
  Verdict v = decide(id, Domain::NonNegReals);
  if (!v.valid) return v;
  return decide(id, Domain::UnitInterval);
}

Rational interval_eval(const AlgTerm& t, const std::map<std::string, Rational>& alpha, Domain d) {
  switch (t.kind()) {
    case AlgTerm::Kind::Var: {
      auto it = alpha.find(t.name());
      if (it == alpha.end()) throw std::invalid_argument("unbound variable " + t.name());
      if (it->second < 0 || (d == Domain::UnitInterval && it->second > 1))
        throw std::out_of_range("value of " + t.name() + " outside " + domain_name(d));
      return it->second;
    }
    case AlgTerm::Kind::Zero: return 0;
    case AlgTerm::Kind::One:
      if (d == Domain::NonNegReals) throw SignatureError("constant 1 has no value over R>=0");
      return 1;
    case AlgTerm::Kind::Plus: {
      Rational s = interval_eval(t.lhs(), alpha, d) + interval_eval(t.rhs(), alpha, d);
      return (d == Domain::UnitInterval && s > 1) ? Rational(1) : s;
    }
    case AlgTerm::Kind::Imp: {
      Rational diff = interval_eval(t.rhs(), alpha, d) - interval_eval(t.lhs(), alpha, d);
      return diff > 0 ? diff : Rational(0);
    }
  }
  return 0;
}

bool witness_refutes(const Identity& id, const Verdict& v) {
  if (v.valid) return false;
  return interval_eval(id.lhs(), v.witness, v.domain) != interval_eval(id.rhs(), v.witness, v.domain);
}

}  // namespace hoops
