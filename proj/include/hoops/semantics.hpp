// Standard and double negation semantics of formulas in finite bounded pocrims.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hoops/algebra.hpp"
#include "hoops/syntax.hpp"

namespace hoops {

enum class SemanticsKind { Standard, Kolmogorov, Gentzen, Glivenko };
const char* semantics_name(SemanticsKind k);  // lower case
std::optional<SemanticsKind> semantics_from_name(const std::string& s);

// Variable -> element index. The constant 1 is the annihilator.
using Assignment = std::map<std::string, int>;

// Throws AlgebraError for an unbounded algebra or an unbound variable.
int evaluate(SemanticsKind kind, const FiniteAlgebra& alg, const Assignment& alpha, const Formula& a);
// Standard semantics with the constant 1 sent to one_value (any element).
int evaluate_unbounded(const FiniteAlgebra& alg, const Assignment& alpha, int one_value, const Formula& a);

// Formula compiled against a variable order.
class FormulaEvaluator {
 public:
  FormulaEvaluator(SemanticsKind kind, const Formula& a, std::vector<std::string> var_order);
  int operator()(const FiniteAlgebra& alg, const std::vector<int>& values) const;
  const std::vector<std::string>& vars() const { return vars_; }

 private:
  struct Op {
    Formula::Kind kind;
    int arg;
  };
  SemanticsKind kind_;
  std::vector<std::string> vars_;
  std::vector<Op> code_;
};

struct Validity {
  bool valid = true;
  Assignment counterexample;  // first failing assignment, lexicographic
  int value = 0;              // its value
};

// Exhaustive; throws std::invalid_argument beyond max_vars variables.
Validity is_valid(SemanticsKind kind, const FiniteAlgebra& alg, const Formula& a, int max_vars = 8);

struct NaturalityFailure {
  Formula formula;
  Assignment assignment;  // in the source algebra
  int image_of_value;     // h(mu_A(alpha)(F))
  int value_of_image;     // mu_B(h . alpha)(F)
};

// h(evaluate(A, alpha, F)) = evaluate(B, h . alpha, F) for every formula and
// every assignment of its variables in A.
std::optional<NaturalityFailure> check_naturality(SemanticsKind kind, const FiniteAlgebra& src, const FiniteAlgebra& dst,
                                                  const std::vector<int>& h, const std::vector<Formula>& formulas);

struct NamedAlgebra {
  std::string name;
  FiniteAlgebra algebra;
};

struct DnsWitness {
  Formula formula;
  std::string algebra;
  Assignment assignment;
  int value;  // element index in that algebra
  std::string value_name;
  std::string assignment_names;  // V=name,...
};

struct DnsProperty {
  bool pass = true;
  std::optional<DnsWitness> witness;
};

struct DnsReport {
  SemanticsKind kind = SemanticsKind::Standard;
  DnsProperty dns1, dns2, dns3;
  std::size_t formulas = 0;
  int max_depth = 0;
  bool pass() const { return dns1.pass && dns2.pass && dns3.pass; }
};

// DNS1 over involutive members, DNS2 premise over involutive members then
// conclusion over all members, DNS3 over all members. Witnesses are the
// first failure in formula order, then member order, then assignment order.
DnsReport check_dns(SemanticsKind kind, const std::vector<NamedAlgebra>& cls, const std::vector<Formula>& formulas,
                    int jobs = 1);
std::string dns_report_text(const DnsReport& r);

// Seeded corpus over variables v1..vN and the constant 1; distinct formulas
// of depth <= depth, implication-heavy. May return fewer than count when the
// universe is small.
std::vector<Formula> random_formulas(int depth, int n_vars, std::size_t count, std::uint64_t seed);

// (W1^^ -> W1) * ... * (Wk^^ -> Wk) over the variables of a; 0 when a has none.
Formula dne_premise(const Formula& a);
// B * B -> a with B = dne_premise(a).
Formula final_lemma_formula(const Formula& a);

// Bounded pocrim identities for double negation.
struct PairWitness {
  int x, y;
};
// delta(x + y) = delta x + delta y and delta(x -> y) = delta x -> delta y.
std::optional<PairWitness> delta_homomorphism_failure(const FiniteAlgebra& alg);
// delta(x -> y) >= delta x -> delta y.
std::optional<PairWitness> dn_imp_inequality_failure(const FiniteAlgebra& alg);

std::string assignment_text(const FiniteAlgebra& alg, const Assignment& alpha);

}  // namespace hoops
