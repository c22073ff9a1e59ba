#include <doctest.h>

#include <algorithm>

#include "hoops/algebra.hpp"
#include "hoops/equational.hpp"

using namespace hoops;

namespace {

Formula F(const char* s) { return parse_formula(s); }
AlgTerm T(const char* s) { return parse_term(s); }

bool no_eq2(const EquationalProof& e) {
  for (const auto& c : e.chains)
    for (const auto& s : c.steps)
      if (s.rule == "eq2") return false;
  return true;
}

// Every term of every chain has one value under each assignment.
bool chains_sound_in(const FiniteAlgebra& a, const EquationalProof& e) {
  for (const auto& c : e.chains) {
    std::vector<std::string> vars;
    for (const auto& t : c.terms) collect_vars(t, vars);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::vector<TermEvaluator> evs;
    for (const auto& t : c.terms) evs.emplace_back(t, vars);
    std::vector<int> v(vars.size(), 0);
    do {
      int first = evs.front()(a, v);
      for (const auto& ev : evs)
        if (ev(a, v) != first) return false;
    } while (next_assignment(v, a.size()));
  }
  return true;
}

}  // namespace

TEST_CASE("single rule applications") {
  CHECK(apply_eq_rule(T("(x + y) + z"), "assoc", {}, true) == T("x + (y + z)"));
  CHECK(apply_eq_rule(T("x + (y + z)"), "assoc", {}, false) == T("(x + y) + z"));
  CHECK(apply_eq_rule(T("a -> b + c"), "comm", {1}, true) == T("a -> c + b"));
  CHECK(apply_eq_rule(T("x + y -> z"), "eq3", {}, true) == T("x -> y -> z"));
  CHECK(apply_eq_rule(T("x + (x -> y)"), "eq4", {}, true) == T("y + (y -> x)"));
  CHECK(apply_eq_rule(T("0"), "eq1", {}, false, {{"x", T("q")}}) == T("q -> q"));
  CHECK_FALSE(apply_eq_rule(T("x -> y"), "eq1", {}, true));
  CHECK_FALSE(apply_eq_rule(T("x + y"), "comm", {0}, true));
}

TEST_CASE("reflexivity translates to a checked chain proof") {
  auto h = build_refl(F("A"));
  auto e = translate_to_equational(h, LogicId::ALm);
  CHECK(equational_size(e) == 54);
  auto r = check_equational(e);
  CHECK(r.ok);
  CHECK(e.chains.back().terms.back() == AlgTerm::zero());
  CHECK(e.chains.back().terms.front() == T("A -> A"));
  auto in = inline_hypotheses(e);
  CHECK(in.chains.size() == 1);
  CHECK(equational_size(in) == 46);
  CHECK(check_equational(in).ok);
}

TEST_CASE("bounded translation keeps the constant") {
  HilbertProof p{{HilbertStep::axiom(Schema::EFQ, {{"A", F("P")}})}};
  auto e = translate_to_equational(p, LogicId::LLi);
  CHECK(e.bounded);
  CHECK(check_equational(e).ok);
  CHECK(translation_term(F("1 -> P"), true) == T("1 -> P"));
  CHECK(translation_term(F("1 -> P"), false) == T("_1 -> P"));
  HilbertProof d{{HilbertStep::axiom(Schema::DNE, {{"A", F("P")}})}};
  CHECK_THROWS_AS(translate_to_equational(d, LogicId::LLc), std::invalid_argument);
}

TEST_CASE("tampered equational proofs are rejected") {
  auto e = translate_to_equational(build_refl(F("A")), LogicId::ALm);
  auto a = e;
  a.chains[0].steps[0].path = {1, 1, 1};
  auto ra = check_equational(a);
  CHECK_FALSE(ra.ok);
  CHECK(ra.chain == 0);
  CHECK(ra.step == 0);
  auto b = e;
  b.chains.back().terms.back() = T("A");
  CHECK_FALSE(check_equational(b).ok);
  auto c = e;
  for (auto& ch : c.chains)
    for (auto& s : ch.steps)
      if (s.rule == "hyp") s.hyp = 999;
  CHECK_FALSE(check_equational(c).ok);
  auto d = e;
  d.chains.back().steps[1].rule = "eq5";
  CHECK_FALSE(check_equational(d).ok);
}

TEST_CASE("text form round trip") {
  auto e = translate_to_equational(build_refl(F("A -> B")), LogicId::ALm);
  auto txt = print_equational(e);
  auto back = parse_equational(txt);
  CHECK(print_equational(back) == txt);
  CHECK(check_equational(back).ok);
  CHECK_THROWS(parse_equational("equational sideways\n"));
  CHECK_THROWS(parse_equational("equational bounded\nchain\n x\n comm at [] sideways\n x\nend\n"));
  CHECK_FALSE(check_equational(parse_equational("equational bounded\nchain\n x\n frob at [] fwd\n x\nend\n")).ok);
}

TEST_CASE("eq2 expansion") {
  auto e = inline_hypotheses(translate_to_equational(build_refl(F("A")), LogicId::ALm));
  auto x = expand_eq2(e);
  CHECK(no_eq2(x));
  CHECK(check_equational(x).ok);
  CHECK(equational_size(x) > equational_size(e));
  EquationalProof one;
  one.chains.push_back({{T("(p + q) -> 0"), T("0")}, {EqStep{"eq2", -1, {}, true}}});
  REQUIRE(check_equational(one).ok);
  auto y = expand_eq2(one);
  CHECK(no_eq2(y));
  CHECK(check_equational(y).ok);
  CHECK(y.chains[0].terms.front() == T("(p + q) -> 0"));
}

TEST_CASE("random proofs translate and are sound in small hoops") {
  std::vector<FiniteAlgebra> hoops_;
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : enumerate_pocrims(n, EnumFilter{.hoop = true}).algebras) hoops_.push_back(a);
  for (auto logic : {LogicId::LLm, LogicId::LLi, LogicId::ALm}) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      auto p = random_hilbert_proof(logic, seed, 10);
      Formula th = check_hilbert(p, logic);
      CAPTURE(print_formula(th));
      auto e = translate_to_equational(p, logic);
      REQUIRE(check_equational(e).ok);
      CHECK(e.chains.back().terms.front() == translation_term(th, logic_bounded(logic)));
      CHECK(e.chains.back().terms.back() == AlgTerm::zero());
      auto in = inline_hypotheses(e);
      CHECK(check_equational(in).ok);
      auto x = expand_eq2(in);
      CHECK(no_eq2(x));
      CHECK(check_equational(x).ok);
      for (const auto& a : hoops_) {
        if (e.bounded && !a.one()) continue;
        CHECK(chains_sound_in(a, e));
      }
    }
  }
}
