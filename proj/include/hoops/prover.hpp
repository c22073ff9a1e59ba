// Indirect prover: case analysis over ordinal sums S ⌢ F with S a
// subdirectly irreducible Wajsberg hoop.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hoops/algebra.hpp"
#include "hoops/lra.hpp"
#include "hoops/syntax.hpp"

namespace hoops {

enum class VarClass { S, F };
// Zero: the element 0. S: in the lower part. F: nonzero, in the upper part.
// F0: in the upper part or 0. Mixed: unknown.
enum class TermClass { Zero, S, F, F0, Mixed };
const char* class_name(TermClass c);

using ClassMap = std::map<std::string, VarClass>;

// Class of a term when One (if present) lies in the upper part.
TermClass infer_class(const AlgTerm& t, const ClassMap& cls);

struct RewriteStep {
  char side = 'l';        // 'l' or 'r'
  std::vector<int> path;  // child indices from the root
  std::string rule;
};

struct Simplified {
  AlgTerm term;
  std::vector<RewriteStep> steps;  // side left as 'l'
};

// Normalizes t under the ordinal-sum rewrite rules.
Simplified simplify_ordinal(const AlgTerm& t, const ClassMap& cls, bool bounded);
// Applies one named rule at path; nullopt if its side condition fails.
std::optional<AlgTerm> apply_ordinal_rule(const AlgTerm& t, const std::vector<int>& path, const std::string& rule,
                                          const ClassMap& cls, bool bounded);

// Equality modulo associativity and commutativity of +.
bool ac_equal(const AlgTerm& a, const AlgTerm& b);
std::string ac_key(const AlgTerm& t);

// Transpositions of variables under which the identity is AC-invariant.
std::vector<std::pair<std::string, std::string>> variable_symmetries(const Identity& id);

enum class Discharge { OracleValid, Syntactic, Ground, Recursive, Dichotomy, Failed };
const char* discharge_name(Discharge d);

struct CaseCertificate;

struct CaseNode {
  std::string label;                // "(i)", "(i)(a)", "(ii)(b)", "(iii)"
  std::vector<std::string> s_vars;  // variables in the lower part
  std::vector<std::string> f_vars;  // variables in the upper part
  std::vector<std::vector<std::string>> orbit;  // lower-part sets covered by symmetry
  std::string combo;                // dichotomy choice per trigger variable, e.g. "ab"
  Identity goal;
  std::vector<RewriteStep> steps;
  Identity residual;
  Discharge discharge = Discharge::Failed;
  std::vector<Domain> domains;      // oracle domains used
  std::vector<Identity> assumptions;
  std::vector<CaseNode> children;
  std::vector<CaseCertificate> sub;  // recursive certificate
  std::string note;
};

struct CaseCertificate {
  Identity goal;
  std::vector<CaseNode> cases;
};

std::string certificate_text(const CaseCertificate& c);

struct Counterexample {
  FiniteAlgebra algebra;
  std::map<std::string, int> assignment;
};

enum class ProofStatus { Proved, Refuted, Unknown };

struct ProverResult {
  ProofStatus status = ProofStatus::Unknown;
  std::optional<CaseCertificate> certificate;
  std::optional<Counterexample> counterexample;
  std::string reason;  // Unknown: blocking subgoal
};

enum class TargetClass { Hoops, Pocrims };

struct ProverOptions {
  int depth = 6;      // recursion budget on upper-part subgoals
  int cex_order = 5;  // finite search bound before reporting Unknown
  TargetClass target = TargetClass::Hoops;
};

// The identity's bounded flag selects bounded or unbounded hoops.
ProverResult prove(const Identity& id, const ProverOptions& opts = {});

// First witness over algebras of order min_order..max_order in enumeration
// order; assignments run with the first variable slowest.
std::optional<Counterexample> search_counterexample(const Identity& id, int max_order, const EnumFilter& filter,
                                                    int min_order = 1);

struct CertificateCheck {
  bool ok = true;
  std::string message;
};
CertificateCheck check_certificate(const CaseCertificate& cert, const Identity& id);

// Wajsberg case with the idempotent dichotomy on subterms v -> v + v.
CaseNode wajsberg_case(const Identity& id, const std::string& label);

}  // namespace hoops
