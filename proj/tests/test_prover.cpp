#include <doctest.h>

#include <set>

#include "hoops/algebra.hpp"
#include "hoops/prover.hpp"

using namespace hoops;

namespace {

std::vector<std::string> labels(const CaseCertificate& c) {
  std::vector<std::string> out;
  for (const auto& n : c.cases) {
    out.push_back(n.label);
    for (const auto& ch : n.children) out.push_back(ch.label);
  }
  return out;
}

const CaseNode& node(const CaseCertificate& c, const std::string& label) {
  for (const auto& n : c.cases)
    if (n.label == label) return n;
  throw std::runtime_error("no case " + label);
}

ProverResult proved(const char* s, bool bounded) {
  auto id = parse_identity(s, bounded);
  auto r = prove(id);
  REQUIRE(r.status == ProofStatus::Proved);
  REQUIRE(r.certificate);
  CHECK(check_certificate(*r.certificate, id).ok);
  return r;
}

// Identity holds in every hoop of order <= n found by enumeration.
bool holds_in_small_hoops(const Identity& id, int n) {
  return !search_counterexample(id, n, EnumFilter{.hoop = true}).has_value();
}

}  // namespace

TEST_CASE("class inference") {
  ClassMap m{{"s", VarClass::S}, {"f", VarClass::F}};
  CHECK(infer_class(parse_term("s + s"), m) == TermClass::S);
  CHECK(infer_class(parse_term("s + f"), m) == TermClass::F);
  CHECK(infer_class(parse_term("f -> s"), m) == TermClass::Zero);
  CHECK(infer_class(parse_term("s -> f"), m) == TermClass::F);
  CHECK(infer_class(parse_term("f -> f"), m) == TermClass::F0);
  CHECK(infer_class(parse_term("s -> s"), m) == TermClass::S);
  CHECK(infer_class(parse_term("0 -> s"), m) == TermClass::S);
  CHECK(infer_class(parse_term("1"), m) == TermClass::F);
  CHECK(infer_class(parse_term("(f -> f) + s"), m) == TermClass::Mixed);
}

TEST_CASE("ordinal sum rewriting") {
  ClassMap m{{"s", VarClass::S}, {"f", VarClass::F}};
  auto r = simplify_ordinal(parse_term("(s -> f) + (f -> s)"), m, false);
  CHECK(r.term == parse_term("f"));
  CHECK(apply_ordinal_rule(parse_term("f -> s"), {}, "os-imp-fs", m, false) == AlgTerm::zero());
  CHECK_FALSE(apply_ordinal_rule(parse_term("s -> f"), {}, "os-imp-fs", m, false).has_value());
  CHECK(apply_ordinal_rule(parse_term("s + f"), {}, "os-plus", m, false) == parse_term("f"));
  CHECK(ac_equal(parse_term("(x + y) + z"), parse_term("z + (y + x)")));
  CHECK_FALSE(ac_equal(parse_term("x -> y"), parse_term("y -> x")));
}

TEST_CASE("de Morgan dual: cases and certificate") {
  auto r = proved("(x -> y)^ = x^^ + y^", true);
  CHECK(labels(*r.certificate) == std::vector<std::string>{"(i)", "(ii)(a)", "(ii)(b)", "(iii)"});
  CHECK(node(*r.certificate, "(ii)(a)").s_vars == std::vector<std::string>{"x"});
  CHECK(node(*r.certificate, "(ii)(b)").s_vars == std::vector<std::string>{"y"});
}

TEST_CASE("idempotent element map is additive") {
  auto r = proved("(e -> e+e) -> (e -> x+y) -> ((e->x)+(e->y))", false);
  CHECK(labels(*r.certificate) ==
        std::vector<std::string>{"(i)", "(i)(a)", "(i)(b)", "(ii)(a)", "(ii)(b)", "(ii)(c)", "(ii)(d)"});
  const auto& b = node(*r.certificate, "(ii)(b)");
  CHECK(b.s_vars == std::vector<std::string>{"e", "x"});
  CHECK(b.orbit.size() == 2);
  CHECK(node(*r.certificate, "(ii)(c)").s_vars == std::vector<std::string>{"y"});
  CHECK(node(*r.certificate, "(ii)(d)").s_vars == std::vector<std::string>{"x", "y"});
}

TEST_CASE("idempotents form a subhoop") {
  auto r = proved("(x -> x+x) -> (y -> y+y) -> ((x->y) -> (x->y)+(x->y))", false);
  CHECK(labels(*r.certificate) ==
        std::vector<std::string>{"(i)", "(i)(aa)", "(i)(ab)", "(i)(ba)", "(i)(bb)", "(ii)(a)", "(ii)(b)"});
}

TEST_CASE("negated multiples") {
  for (const char* s : {"x^ -> x^^ -> x", "(x+x)^ -> x^^ -> x", "(x+x+x)^ -> x^^ -> x"}) {
    auto r = proved(s, true);
    CHECK(labels(*r.certificate) == std::vector<std::string>{"(i)", "(iii)"});
  }
}

TEST_CASE("tampered certificates are rejected") {
  auto id = parse_identity("(x -> y)^ = x^^ + y^", true);
  auto r = prove(id);
  REQUIRE(r.certificate);
  auto c = *r.certificate;
  c.cases.erase(c.cases.begin() + 1);
  auto chk = check_certificate(c, id);
  CHECK_FALSE(chk.ok);
  CHECK(chk.message.find("missing case (ii)") != std::string::npos);
  auto d = *r.certificate;
  d.cases.pop_back();
  CHECK_FALSE(check_certificate(d, id).ok);
  auto e = *r.certificate;
  for (auto& n : e.cases)
    if (n.label == "(ii)(a)") n.residual = Identity(parse_term("y^"), parse_term("y^ + y^"), true);
  CHECK_FALSE(check_certificate(e, id).ok);
}

TEST_CASE("refutations") {
  auto a = prove(parse_identity("x + x = x", false));
  CHECK(a.status == ProofStatus::Refuted);
  REQUIRE(a.counterexample);
  auto id = parse_identity("x + x = x", false);
  CHECK(eval_term(a.counterexample->algebra, id.lhs(), a.counterexample->assignment) !=
        eval_term(a.counterexample->algebra, id.rhs(), a.counterexample->assignment));
  auto b = prove(parse_identity("x^^ = x", true));
  CHECK(b.status == ProofStatus::Refuted);
}

TEST_CASE("counterexample search") {
  auto id = parse_identity("(x -> x+x) -> (y -> y+y) -> ((x->y) -> (x->y)+(x->y))", false);
  auto c = search_counterexample(id, 4, {});
  REQUIRE(c);
  CHECK(isomorphic(c->algebra, catalog("Q4")));
  auto d = search_counterexample(parse_identity("(x + y)^^ = x^^ + y^^", true), 5, {});
  REQUIRE(d);
  CHECK(isomorphic(d->algebra, catalog("U")));
  CHECK_FALSE(search_counterexample(parse_identity("x + (x -> y) = y + (y -> x)", false), 5, EnumFilter{.hoop = true}));
}

TEST_CASE("proved identities hold in small hoops") {
  for (auto [s, b] : {std::pair{"(x -> y)^ = x^^ + y^", true}, {"(e -> e+e) -> (e -> x+y) -> ((e->x)+(e->y))", false},
                      {"(x+x)^ -> x^^ -> x", true}}) {
    auto id = parse_identity(s, b);
    CHECK(prove(id).status == ProofStatus::Proved);
    CHECK(holds_in_small_hoops(id, 5));
  }
}

TEST_CASE("certificate text lists every case") {
  auto r = proved("(x -> y)^ = x^^ + y^", true);
  auto t = certificate_text(*r.certificate);
  for (const char* l : {"(i)", "(ii)(a)", "(ii)(b)", "(iii)"}) CHECK(t.find(l) != std::string::npos);
}
