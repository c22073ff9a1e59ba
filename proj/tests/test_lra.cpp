#include <doctest.h>

#include <random>

#include "hoops/algebra.hpp"
#include "hoops/lra.hpp"

using namespace hoops;

namespace {

Rational q(int a, int b = 1) { return Rational(a) / b; }

// Failure in some finite Lukasiewicz chain L_n (a subalgebra of [0,1]).
bool fails_in_small_chain(const Identity& id, int max_n = 7) {
  for (int n = 2; n <= max_n; ++n) {
    auto L = catalog("L" + std::to_string(n));
    TermEvaluator l(id.lhs(), id.vars()), r(id.rhs(), id.vars());
    std::vector<int> v(id.vars().size(), 0);
    do {
      if (l(L, v) != r(L, v)) return true;
    } while (next_assignment(v, n));
  }
  return false;
}

AlgTerm random_term(std::mt19937_64& rng, int depth, bool bounded) {
  auto k = rng() % 10;
  if (depth == 0 || k < 3) {
    auto c = rng() % (bounded ? 4 : 3);
    if (c == 3) return AlgTerm::one();
    return AlgTerm::var(std::string(1, static_cast<char>('x' + c)));
  }
  AlgTerm a = random_term(rng, depth - 1, bounded), b = random_term(rng, depth - 1, bounded);
  return k < 6 ? AlgTerm::imp(a, b) : AlgTerm::plus(a, b);
}

}  // namespace

TEST_CASE("interval semantics") {
  auto x = parse_term("x + y"), y = parse_term("x -> y");
  CHECK(interval_eval(x, {{"x", q(1, 2)}, {"y", q(2, 3)}}, Domain::UnitInterval) == 1);
  CHECK(interval_eval(x, {{"x", q(1, 4)}, {"y", q(1, 3)}}, Domain::UnitInterval) == q(7, 12));
  CHECK(interval_eval(y, {{"x", q(1, 4)}, {"y", q(1, 3)}}, Domain::UnitInterval) == q(1, 12));
  CHECK(interval_eval(y, {{"x", q(3, 4)}, {"y", q(1, 3)}}, Domain::UnitInterval) == 0);
  CHECK(interval_eval(x, {{"x", q(5)}, {"y", q(7, 2)}}, Domain::NonNegReals) == q(17, 2));
  CHECK(interval_eval(parse_term("x -> 1"), {{"x", q(1, 3)}}, Domain::UnitInterval) == q(2, 3));
  CHECK_THROWS_AS(interval_eval(parse_term("x -> 1"), {{"x", q(1)}}, Domain::NonNegReals), SignatureError);
}

TEST_CASE("case split covers the domain with disjoint pieces") {
  auto t = parse_term("(x -> y) + (y -> x)");
  std::vector<std::string> vars{"x", "y"};
  auto pieces = case_split(t, vars, Domain::UnitInterval);
  CHECK(pieces.size() >= 2);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      std::vector<Rational> pt{q(a, 6), q(b, 6)};
      int hits = 0;
      for (const auto& p : pieces) {
        bool in = true;
        for (const auto& c : p.constraints) in = in && c.holds(pt);
        if (in) {
          ++hits;
          CHECK(p.value.eval(pt) == interval_eval(t, {{"x", pt[0]}, {"y", pt[1]}}, Domain::UnitInterval));
        }
      }
      CHECK(hits == 1);
    }
}

TEST_CASE("Fourier-Motzkin feasibility") {
  // x > 0, y > 0, x + y < 1/2... expressed as 1/2 - x - y > 0
  LinExpr x = LinExpr::variable(2, 0), y = LinExpr::variable(2, 1);
  std::vector<Constraint> cs{{x, true}, {y, true}, {LinExpr::constant_expr(2, q(1, 2)) - x - y, true}};
  auto r = fm_feasible(cs, 2);
  REQUIRE(r.feasible);
  for (const auto& c : cs) CHECK(c.holds(r.point));
  cs.push_back({x - LinExpr::constant_expr(2, q(1, 2)), false});
  CHECK_FALSE(fm_feasible(cs, 2).feasible);
  // x >= 1 and x <= 1 is the single point 1
  std::vector<Constraint> pt{{x - LinExpr::constant_expr(2, 1), false}, {LinExpr::constant_expr(2, 1) - x, false}};
  auto p = fm_feasible(pt, 2);
  REQUIRE(p.feasible);
  CHECK(p.point[0] == 1);
}

TEST_CASE("involutive oracle verdicts") {
  for (const char* s : {"(x + y)^ = x -> y^", "(x -> y)^ = x^^ + y^", "x^ -> x^^ -> x",
                        "(x + x)^ -> x^^ -> x", "(x + x + x)^ -> x^^ -> x", "x + (x -> y) = y + (y -> x)"}) {
    CAPTURE(s);
    auto id = parse_identity(s, true);
    CHECK(decide_involutive(id).valid);
    CHECK_FALSE(fails_in_small_chain(id));
  }
  // with 0 as truth, x^^ -> x is 0 in involutive algebras, so its negation is 1
  auto lit = parse_identity("(x^^ -> x)^", true);
  auto lv = decide_involutive(lit);
  CHECK_FALSE(lv.valid);
  CHECK(witness_refutes(lit, lv));
  CHECK(decide_involutive(parse_identity("(x^^ -> x)^ = 1", true)).valid);
  auto id = parse_identity("x + x = x", true);
  auto v = decide_involutive(id);
  REQUIRE_FALSE(v.valid);
  CHECK(witness_refutes(id, v));
  CHECK(v.witness.at("x") > 0);
  CHECK(v.witness.at("x") < 1);
}

TEST_CASE("Wajsberg oracle verdicts") {
  CHECK(decide_wajsberg(parse_identity("(x -> y) -> y = (y -> x) -> x", false)).valid);
  CHECK(decide_wajsberg(parse_identity("x + (x -> y) = y + (y -> x)", false)).valid);
  // holds over the non-negative reals but not in [0,1]
  auto id = parse_identity("x -> x + x = x", false);
  CHECK(decide(id, Domain::NonNegReals).valid);
  auto v = decide_wajsberg(id);
  REQUIRE_FALSE(v.valid);
  CHECK(v.domain == Domain::UnitInterval);
  CHECK(witness_refutes(id, v));
  auto w = decide_wajsberg(parse_identity("x + x = x", false));
  REQUIRE_FALSE(w.valid);
  CHECK(witness_refutes(parse_identity("x + x = x", false), w));
  CHECK_THROWS_AS(decide_wajsberg(parse_identity("x -> 1", true)), SignatureError);
}

TEST_CASE("decisions agree with finite chains on random identities") {
  std::mt19937_64 rng(7);
  int invalid = 0;
  for (int i = 0; i < 150; ++i) {
    Identity id(random_term(rng, 3, true), random_term(rng, 3, true), true);
    auto v = decide_involutive(id);
    bool finite_fail = fails_in_small_chain(id);
    if (finite_fail) CHECK_FALSE(v.valid);
    if (!v.valid) {
      ++invalid;
      CHECK(witness_refutes(id, v));
    }
  }
  CHECK(invalid > 0);
}

TEST_CASE("assumptions restrict the domain") {
  // under x + x = 1 with x in [0,1], x -> x + x equals x^
  auto id = parse_identity("x -> x + x = x^", true);
  CHECK_FALSE(decide(id, Domain::UnitInterval).valid);
  CHECK(decide(id, Domain::UnitInterval, {parse_identity("x + x = 1", true)}).valid);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(rational_str(q(2, 4)) == "1/2");
  CHECK(rational_str(q(3)) == "3");
}
