#include <doctest.h>

#include "hoops/algebra.hpp"
#include "hoops/hilbert.hpp"
#include "hoops/semantics.hpp"

using namespace hoops;

namespace {

Formula F(const char* s) { return parse_formula(s); }

// Value 0 under every assignment, with 1 free when unbounded.
bool valid_in(const FiniteAlgebra& a, const Formula& f, bool bounded) {
  auto vars = vars_of(f);
  std::vector<int> v(vars.size(), 0);
  do {
    Assignment alpha;
    for (std::size_t i = 0; i < vars.size(); ++i) alpha[vars[i]] = v[i];
    if (bounded) {
      if (evaluate(SemanticsKind::Standard, a, alpha, f) != 0) return false;
    } else {
      for (int one = 0; one < a.size(); ++one)
        if (evaluate_unbounded(a, alpha, one, f) != 0) return false;
    }
  } while (next_assignment(v, a.size()));
  return true;
}

}  // namespace

TEST_CASE("schemas") {
  CHECK(instantiate(Schema::Wk, {{"A", F("P")}, {"B", F("Q")}}) == F("P * Q -> P"));
  CHECK(instantiate(Schema::Comp, {{"A", F("P")}, {"B", F("Q")}, {"C", F("R")}}) ==
        F("(P -> Q) -> (Q -> R) -> P -> R"));
  CHECK(instantiate(Schema::CWC, {{"A", F("P")}, {"B", F("Q")}}) == F("P * (P -> Q) -> Q * (Q -> P)"));
  CHECK(instantiate(Schema::EFQ, {{"A", F("P")}}) == F("1 -> P"));
  CHECK(instantiate(Schema::DNE, {{"A", F("P")}}) == F("P^^ -> P"));
  CHECK(instantiate(Schema::Con, {{"A", F("P")}}) == F("P -> P * P"));
  CHECK(schema_from_name("Curry") == Schema::Curry);
  CHECK_FALSE(schema_from_name("Nope"));
}

TEST_CASE("logic grid") {
  CHECK(logic_extends(LogicId::LLc, LogicId::ALm));
  CHECK(logic_extends(LogicId::BL, LogicId::IL));
  CHECK_FALSE(logic_extends(LogicId::ALc, LogicId::LLm));
  CHECK(logic_has(LogicId::LLm, Schema::CWC));
  CHECK_FALSE(logic_has(LogicId::LLm, Schema::EFQ));
  CHECK(logic_bounded(LogicId::ALi));
  CHECK_FALSE(logic_bounded(LogicId::ML));
  CHECK(logic_from_name("LLi") == LogicId::LLi);
}

TEST_CASE("reflexivity in seven steps") {
  auto p = build_refl(F("A"));
  CHECK(p.steps.size() == 7);
  CHECK(check_hilbert(p, LogicId::ALm) == F("A -> A"));
  auto q = build_refl(F("A * B -> C"));
  CHECK(check_hilbert(q, LogicId::ALm) == F("(A * B -> C) -> A * B -> C"));
}

TEST_CASE("bad steps are reported with their index") {
  auto p = build_refl(F("A"));
  p.steps[4] = HilbertStep::mp(0, 3);
  try {
    hilbert_formulas(p, LogicId::ALm);
    FAIL("expected ProofError");
  } catch (const ProofError& e) {
    CHECK(e.step() == 4);
  }
  HilbertProof q{{HilbertStep::axiom(Schema::CWC, {{"A", F("P")}, {"B", F("Q")}})}};
  CHECK_THROWS_AS(check_hilbert(q, LogicId::ALm), ProofError);
  CHECK(check_hilbert(q, LogicId::LLm) == F("P * (P -> Q) -> Q * (Q -> P)"));
  HilbertProof r{{HilbertStep::mp(1, 0)}};
  CHECK_THROWS_AS(check_hilbert(r, LogicId::ALm), ProofError);
}

TEST_CASE("derived rules") {
  auto ab = axiom_proof(Schema::Wk, {{"A", F("P")}, {"B", F("Q")}});  // P * Q -> P
  auto bc = build_refl(F("P"));
  CHECK(check_hilbert(build_trans(ab, bc), LogicId::ALm) == F("P * Q -> P"));
  CHECK(check_hilbert(build_mono(MonoSide::ImpFirst, ab, F("R")), LogicId::ALm) == F("(P -> R) -> P * Q -> R"));
  CHECK(check_hilbert(build_mono(MonoSide::ImpSecond, ab, F("R")), LogicId::ALm) == F("(R -> P * Q) -> R -> P"));
  CHECK(check_hilbert(build_mono(MonoSide::TensorLeft, ab, F("R")), LogicId::ALm) == F("P * Q * R -> P * R"));
  CHECK(check_hilbert(build_mono(MonoSide::TensorRight, ab, F("R")), LogicId::ALm) == F("R * (P * Q) -> R * P"));
  CHECK(check_hilbert(build_assoc(F("P"), F("Q"), F("R")), LogicId::ALm) == F("P * Q * R -> P * (Q * R)"));
  CHECK(check_hilbert(build_assoc_rev(F("P"), F("Q"), F("R")), LogicId::ALm) == F("P * (Q * R) -> P * Q * R"));
  CHECK_THROWS_AS(build_trans(ab, ab), std::invalid_argument);
}

TEST_CASE("exchange") {
  auto base = axiom_proof(Schema::Comp, {{"A", F("P")}, {"B", F("Q")}, {"C", F("R")}});
  CHECK(check_hilbert(build_exchange(base), LogicId::ALm) == F("(Q -> R) -> (P -> Q) -> P -> R"));
}

TEST_CASE("text format round trip") {
  auto p = build_assoc(F("P"), F("Q -> 1"), F("R"));
  auto txt = print_hilbert(p);
  auto q = parse_hilbert(txt);
  CHECK(print_hilbert(q) == txt);
  CHECK(check_hilbert(q, LogicId::ALm) == check_hilbert(p, LogicId::ALm));
  auto r = parse_hilbert("# comment\nax Wk { A = P; B = Q }\n\nax Comm { A = P; B = Q }\n");
  CHECK(r.steps.size() == 2);
  CHECK_THROWS(parse_hilbert("ax Wk { A = P; B = }\n"));
  CHECK_THROWS(parse_hilbert("mp 1\n"));
  CHECK_THROWS(parse_hilbert("frobnicate\n"));
}

TEST_CASE("random proofs are sound in finite models") {
  struct Case {
    LogicId logic;
    bool bounded;
    EnumFilter filter;
  };
  for (const auto& c : {Case{LogicId::ALm, false, {}}, Case{LogicId::ALi, true, {}},
                        Case{LogicId::LLm, false, EnumFilter{.hoop = true}},
                        Case{LogicId::LLi, true, EnumFilter{.hoop = true}}}) {
    std::vector<FiniteAlgebra> models;
    for (int n = 2; n <= 4; ++n)
      for (const auto& a : enumerate_pocrims(n, c.filter).algebras)
        if (!c.bounded || a.one()) models.push_back(a);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      auto p = random_hilbert_proof(c.logic, seed, 10);
      Formula th = check_hilbert(p, c.logic);
      CAPTURE(print_formula(th));
      for (const auto& a : models) CHECK(valid_in(a, th, c.bounded));
    }
  }
}

TEST_CASE("random proofs are reproducible") {
  CHECK(print_hilbert(random_hilbert_proof(LogicId::LLm, 3, 12)) ==
        print_hilbert(random_hilbert_proof(LogicId::LLm, 3, 12)));
}
