// Exact piecewise-linear decision procedure for identities over [0,1]
// and the non-negative reals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "hoops/syntax.hpp"

namespace hoops {

using Rational = boost::multiprecision::cpp_rational;

enum class Domain { UnitInterval, NonNegReals };
const char* domain_name(Domain d);

// sum coef[i] * x_i + constant
struct LinExpr {
  std::vector<Rational> coef;
  Rational constant;

  static LinExpr constant_expr(std::size_t nvars, const Rational& c);
  static LinExpr variable(std::size_t nvars, std::size_t i);
  LinExpr operator+(const LinExpr& o) const;
  LinExpr operator-(const LinExpr& o) const;
  LinExpr scaled(const Rational& k) const;
  Rational eval(const std::vector<Rational>& point) const;
  bool is_constant() const;
  std::string str(const std::vector<std::string>& names) const;
  friend bool operator==(const LinExpr& a, const LinExpr& b) { return a.coef == b.coef && a.constant == b.constant; }
  friend bool operator<(const LinExpr& a, const LinExpr& b);
};

// e > 0 when strict, else e >= 0.
struct Constraint {
  LinExpr e;
  bool strict = false;
  bool holds(const std::vector<Rational>& point) const;
  std::string str(const std::vector<std::string>& names) const;
  friend bool operator==(const Constraint& a, const Constraint& b) { return a.strict == b.strict && a.e == b.e; }
  friend bool operator<(const Constraint& a, const Constraint& b);
};

struct Piece {
  std::vector<Constraint> constraints;
  LinExpr value;
};

struct FmResult {
  bool feasible = false;
  std::vector<Rational> point;
};

struct Verdict {
  bool valid = true;
  Domain domain = Domain::UnitInterval;        // where the witness lives
  std::map<std::string, Rational> witness;     // Invalid only
};

// Pieces are pairwise disjoint and cover the domain; vars fixes the coordinate order.
std::vector<Piece> case_split(const AlgTerm& t, const std::vector<std::string>& vars, Domain d);
std::vector<Constraint> domain_constraints(std::size_t nvars, Domain d);

FmResult fm_feasible(const std::vector<Constraint>& constraints, std::size_t nvars);

// Validity over one domain, restricted to points satisfying the assumptions.
Verdict decide(const Identity& id, Domain d, const std::vector<Identity>& assumptions = {});
// Involutive hoops: the unit interval.
Verdict decide_involutive(const Identity& id);
// Wajsberg hoops: subdirectly irreducible ones are cancellative (checked over
// the non-negative reals) or bounded (checked over the unit interval).
Verdict decide_wajsberg(const Identity& id);

Rational interval_eval(const AlgTerm& t, const std::map<std::string, Rational>& alpha, Domain d);
// Re-evaluates a witness independently of case_split.
bool witness_refutes(const Identity& id, const Verdict& v);

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace hoops
