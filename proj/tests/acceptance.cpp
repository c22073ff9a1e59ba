// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hoops/algebra.hpp"
#include "hoops/equational.hpp"
#include "hoops/hilbert.hpp"
#include "hoops/lra.hpp"
#include "hoops/prover.hpp"
#include "hoops/semantics.hpp"
#include "tables.hpp"

using namespace hoops;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

int idx(const FiniteAlgebra& a, const char* name) { return *a.index_of(name); }

Formula F(const char* s) { return parse_formula(s); }

std::vector<std::string> labels(const CaseCertificate& c) {
  std::vector<std::string> out;
  for (const auto& n : c.cases) {
    out.push_back(n.label);
    for (const auto& ch : n.children) out.push_back(ch.label);
  }
  return out;
}

std::vector<FiniteAlgebra> bounded_of_order(int hi, const EnumFilter& f = {}) {
  std::vector<FiniteAlgebra> out;
  for (int n = 2; n <= hi; ++n)
    for (const auto& a : enumerate_pocrims(n, f).algebras)
      if (a.one()) out.push_back(a);
  return out;
}

void c1(Outcome& o) {
  auto n2 = enumerate_pocrims(2).algebras, n3 = enumerate_pocrims(3).algebras, n4 = enumerate_pocrims(4).algebras;
  o.require(n2.size() == 1 && n3.size() == 2 && n4.size() == 7,
            "counts " + std::to_string(n2.size()) + "/" + std::to_string(n3.size()) + "/" + std::to_string(n4.size()));
  std::vector<FiniteAlgebra> non;
  for (const auto& a : n4)
    if (!classify(a).hoop.value) non.push_back(a);
  o.require(non.size() == 2, "two non-hoops at order 4");
  if (non.size() == 2) {
    auto P4 = catalog("P4"), Q4 = catalog("Q4");
    bool ok = (isomorphic(non[0], P4) && isomorphic(non[1], Q4)) || (isomorphic(non[0], Q4) && isomorphic(non[1], P4));
    o.require(ok, "non-hoops are P4 and Q4");
  }
}

void c2(Outcome& o) {
  for (const auto& t : paper_tables()) {
    FiniteAlgebra a = catalog(t.name);
    FiniteAlgebra rows(static_cast<int>(t.names.size()), t.add, t.imp, t.names);
    o.require(a.same_tables(rows), t.name + " tables");
    o.require(check_pocrim(a).ok(), t.name + " pocrim laws");
    for (int x = 0; x < a.size(); ++x)
      o.require(a.name(a.delta(x)) == t.delta[static_cast<std::size_t>(x)], t.name + " double negation of " + a.name(x));
    std::string lower = t.name;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + lower + ".poc");
    std::stringstream s;
    s << in.rdbuf();
    o.require(s.str() == write_algebra(a), "golden file " + lower + ".poc matches");
  }
  auto P4 = classify(catalog("P4")), Q4 = classify(catalog("Q4"));
  o.require(!P4.involutive.value && !P4.hoop.value, "P4 non-involutive non-hoop");
  o.require(Q4.involutive.value && !Q4.hoop.value, "Q4 involutive non-hoop");
  for (int n = 3; n <= 6; ++n)
    o.require(!classify(catalog("G" + std::to_string(n))).involutive.value, "G" + std::to_string(n) + " non-involutive");
  o.require(!double_negation(catalog("U")).image_closed_under_add, "U negation image not closed under +");
}

void c3(Outcome& o) {
  for (const char* s : {"(x^^ -> x)^", "(x + y)^ = x -> y^", "(x -> y)^ = x^^ + y^", "x^ -> x^^ -> x",
                        "(x + x)^ -> x^^ -> x", "(x + x + x)^ -> x^^ -> x"})
    o.require(decide_involutive(parse_identity(s, true)).valid, std::string("involutive valid: ") + s);
  if (!decide_involutive(parse_identity("(x^^ -> x)^", true)).valid &&
      decide_involutive(parse_identity("(x^^ -> x)^ = 1", true)).valid)
    o.notes.push_back("(x^^ -> x)^ evaluates to 1 identically; valid only read with 1 as truth");
  for (const char* s : {"(x -> y) -> y = (y -> x) -> x", "x + (x -> y) = y + (y -> x)"})
    o.require(decide_wajsberg(parse_identity(s, false)).valid, std::string("wajsberg valid: ") + s);
  auto id = parse_identity("x + x = x", true);
  auto v = decide_involutive(id);
  o.require(!v.valid, "x + x = x invalid");
  if (!v.valid) {
    o.require(witness_refutes(id, v), "rational witness refutes");
    o.notes.push_back("witness x = " + rational_str(v.witness.at("x")));
  }
}

void c4(Outcome& o) {
  struct Want {
    const char* id;
    bool bounded;
    std::vector<std::string> cases;
  };
  const std::vector<Want> wants = {
      {"(x -> y)^ = x^^ + y^", true, {"(i)", "(ii)(a)", "(ii)(b)", "(iii)"}},
      {"(e -> e+e) -> (e -> x+y) -> ((e->x)+(e->y))",
       false,
       {"(i)", "(i)(a)", "(i)(b)", "(ii)(a)", "(ii)(b)", "(ii)(c)", "(ii)(d)"}},
      {"(x -> x+x) -> (y -> y+y) -> ((x->y) -> (x->y)+(x->y))",
       false,
       {"(i)", "(i)(aa)", "(i)(ab)", "(i)(ba)", "(i)(bb)", "(ii)(a)", "(ii)(b)"}},
      {"x^ -> x^^ -> x", true, {"(i)", "(iii)"}},
      {"(x+x)^ -> x^^ -> x", true, {"(i)", "(iii)"}},
      {"(x+x+x)^ -> x^^ -> x", true, {"(i)", "(iii)"}},
  };
  for (const auto& w : wants) {
    auto id = parse_identity(w.id, w.bounded);
    auto r = prove(id);
    o.require(r.status == ProofStatus::Proved && r.certificate.has_value(), std::string("proved: ") + w.id);
    if (!r.certificate) continue;
    o.require(check_certificate(*r.certificate, id).ok, std::string("certificate checks: ") + w.id);
    o.require(labels(*r.certificate) == w.cases, std::string("case set: ") + w.id);
  }
}

void c5(Outcome& o) {
  auto id = parse_identity("(x -> x+x) -> (y -> y+y) -> ((x->y) -> (x->y)+(x->y))", false);
  auto c = search_counterexample(id, 4, {});
  o.require(c.has_value(), "idempotent closure refuted at order 4");
  if (c) {
    auto Q4 = catalog("Q4");
    auto iso = find_isomorphism(c->algebra, Q4);
    o.require(iso.has_value(), "witness algebra is Q4");
    if (iso) {
      auto x = Q4.name((*iso)[static_cast<std::size_t>(c->assignment.at("x"))]);
      auto y = Q4.name((*iso)[static_cast<std::size_t>(c->assignment.at("y"))]);
      o.require(x == "u" && y == "1", "witness (x,y) = (u,1), got (" + x + "," + y + ")");
    }
  }
  auto d = search_counterexample(parse_identity("(x + y)^^ = x^^ + y^^", true), 5, {});
  o.require(d.has_value(), "double negation additivity refuted at order <= 5");
  if (d) {
    const auto& A = d->algebra;
    int x = d->assignment.at("x"), y = d->assignment.at("y");
    o.require(x == y, "witness uses a single element");
    o.require(A.delta(A.add(x, x)) != A.add(A.delta(x), A.delta(x)), "delta(a+a) != delta a + delta a");
    auto U = catalog("U");
    auto iso = find_isomorphism(A, U);
    o.require(iso.has_value(), "witness algebra is U");
    if (iso) o.notes.push_back("witness in U: x = y = " + U.name((*iso)[static_cast<std::size_t>(x)]));
  }
}

void c6(Outcome& o) {
  auto refl = build_refl(F("A"));
  o.require(refl.steps.size() == 7, "seven-line derivation");
  o.require(check_hilbert(refl, LogicId::ALm) == F("A -> A"), "derivation checks under ALm");
  auto e = translate_to_equational(refl, LogicId::LLm);
  o.require(check_equational(e).ok, "translation of A -> A checks");

  std::vector<FiniteAlgebra> pool;
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : enumerate_pocrims(n, EnumFilter{.hoop = true}).algebras) pool.push_back(a);
  std::mt19937_64 rng(2024);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.erase(pool.begin() + 5, pool.end());

  int bad_check = 0, bad_eval = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto p = random_hilbert_proof(LogicId::LLm, seed, 12);
    check_hilbert(p, LogicId::LLm);
    auto t = translate_to_equational(p, LogicId::LLm);
    if (!check_equational(t).ok) ++bad_check;
    for (const auto& a : pool)
      for (const auto& c : t.chains) {
        std::vector<std::string> vars;
        for (const auto& term : c.terms) collect_vars(term, vars);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        std::vector<TermEvaluator> evs;
        for (const auto& term : c.terms) evs.emplace_back(term, vars);
        std::vector<int> v(vars.size(), 0);
        bool ok = true;
        do {
          int first = evs.front()(a, v);
          for (const auto& ev : evs) ok = ok && ev(a, v) == first;
        } while (ok && next_assignment(v, a.size()));
        bad_eval += !ok;
      }
  }
  o.require(bad_check == 0, std::to_string(bad_check) + " translations rejected");
  o.require(bad_eval == 0, std::to_string(bad_eval) + " chains with unequal terms");
}

void c7(Outcome& o) {
  auto hoops_ = bounded_of_order(5, EnumFilter{.hoop = true});
  auto all = bounded_of_order(5);
  int h = 0, i = 0;
  for (const auto& a : hoops_) h += delta_homomorphism_failure(a).has_value();
  for (const auto& a : all) i += dn_imp_inequality_failure(a).has_value();
  o.require(h == 0, std::to_string(h) + " hoops where double negation is not a homomorphism");
  o.require(i == 0, std::to_string(i) + " pocrims violating delta(x -> y) >= delta x -> delta y");
  o.notes.push_back(std::to_string(hoops_.size()) + " hoops, " + std::to_string(all.size()) + " pocrims");
}

void c8(Outcome& o) {
  auto Q6 = catalog("Q6"), P4 = catalog("P4");
  int g = evaluate(SemanticsKind::Gentzen, Q6, {{"V", idx(Q6, "r")}, {"W", idx(Q6, "r")}}, F("(V*W)^^ -> V*W"));
  o.require(Q6.name(g) == "s", "Gentzen on Q6 at V=W=r: expected s, got " + Q6.name(g));
  int l = evaluate(SemanticsKind::Glivenko, P4, {{"V", idx(P4, "q")}}, F("V^^ -> V"));
  o.require(P4.name(l) == "p", "Glivenko on P4 at V=q: expected p, got " + P4.name(l));

  std::vector<NamedAlgebra> c1{{"P4", P4}, {"L3", catalog("L3")}};
  std::vector<NamedAlgebra> c2{{"Q6", Q6}, {"Q4", catalog("Q4")}};
  auto corpus = random_formulas(6, 3, 1000, 0);
  o.require(corpus.size() == 1000, "corpus of 1000 formulas");
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto gen1 = check_dns(SemanticsKind::Gentzen, c1, corpus, static_cast<int>(jobs));
  auto gli1 = check_dns(SemanticsKind::Glivenko, c1, corpus, static_cast<int>(jobs));
  auto gli2 = check_dns(SemanticsKind::Glivenko, c2, corpus, static_cast<int>(jobs));
  auto gen2 = check_dns(SemanticsKind::Gentzen, c2, corpus, static_cast<int>(jobs));
  o.require(gen1.pass(), "Gentzen on {P4, L3} passes: " + dns_report_text(gen1));
  o.require(!gli1.pass(), "Glivenko on {P4, L3} fails");
  o.require(gli2.pass(), "Glivenko on {Q6, Q4} passes: " + dns_report_text(gli2));
  o.require(!gen2.pass(), "Gentzen on {Q6, Q4} fails");

  auto w1 = check_dns(SemanticsKind::Glivenko, c1, {F("V^^ -> V")});
  o.require(!w1.dns2.pass && w1.dns2.witness && w1.dns2.witness->algebra == "P4" &&
                w1.dns2.witness->assignment_names == "V=q" && w1.dns2.witness->value_name == "p",
            "Glivenko DNS2 witness (V^^ -> V, P4, V=q)");
  auto w2 = check_dns(SemanticsKind::Gentzen, c2, {F("(V*W)^^ -> V*W")});
  o.require(!w2.dns2.pass && w2.dns2.witness && w2.dns2.witness->algebra == "Q6",
            "Gentzen DNS2 witness ((V*W)^^ -> V*W, Q6)");
  if (w2.dns2.witness)
    o.notes.push_back("Gentzen DNS2 witness: " + w2.dns2.witness->assignment_names + " value " +
                      w2.dns2.witness->value_name);
  if (gli1.dns2.witness) o.notes.push_back("Glivenko {P4, L3} corpus: " + dns_report_text(gli1));
  if (!gen2.pass()) o.notes.push_back("Gentzen {Q6, Q4} corpus: " + dns_report_text(gen2));
}

void c9(Outcome& o) {
  auto L3 = catalog("L3"), P4 = catalog("P4"), Q4 = catalog("Q4"), Q6 = catalog("Q6");
  int p = idx(Q6, "p");
  int l3 = 0, q4 = 0, v1 = 0, v2 = 0;
  for (const auto& a : random_formulas(6, 3, 1000, 0)) {
    if (is_valid(SemanticsKind::Standard, L3, a).valid) {
      ++l3;
      v1 += !is_valid(SemanticsKind::Standard, P4, final_lemma_formula(a)).valid;
    }
    if (is_valid(SemanticsKind::Standard, Q4, a).valid) {
      ++q4;
      auto vars = vars_of(a);
      FormulaEvaluator e(SemanticsKind::Standard, a, vars);
      std::vector<int> v(vars.size(), 0);
      bool ok = true;
      do {
        int x = e(Q6, v);
        ok = ok && (x == 0 || x == p);
      } while (next_assignment(v, Q6.size()));
      v2 += !ok;
    }
  }
  o.require(l3 > 0 && q4 > 0, "corpus has valid formulas");
  o.require(v1 == 0, std::to_string(v1) + " violations of the P4 property");
  o.require(v2 == 0, std::to_string(v2) + " violations of the Q6 property");
  o.notes.push_back(std::to_string(l3) + " L3-valid, " + std::to_string(q4) + " Q4-valid");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> all = {
      {1, "enumeration counts", 10, c1},
      {2, "catalog fidelity", 1, c2},
      {3, "oracle verdicts", 5, c3},
      {4, "prover certificates", 30, c4},
      {5, "counterexample search", 60, c5},
      {6, "proof kernel and translation", 30, c6},
      {7, "double negation theorems", 120, c7},
      {8, "double negation semantics", 300, c8},
      {9, "final lemma", 120, c9},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget) o.require(false, "time budget " + std::to_string(c.budget) + " s");
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ") "
              << std::to_string(secs).substr(0, 5) << " s\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  }
  std::cout << (all.size() - static_cast<std::size_t>(failed)) << "/" << all.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
