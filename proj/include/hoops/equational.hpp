// Equational proofs in the theory of (bounded) hoops and the translation
// from Lukasiewicz Hilbert proofs.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoops/hilbert.hpp"
#include "hoops/syntax.hpp"

namespace hoops {

// Rules: assoc (x+y)+z = x+(y+z), comm x+y = y+x, unit x+0 = x,
// eq1 x->x = 0, eq2 x->0 = 0, eq3 x+y->z = x->y->z,
// eq4 x+(x->y) = y+(y->x), eq5 1->x = 0, and hypotheses.
struct EqStep {
  std::string rule;  // rule name, or "hyp"
  int hyp = -1;      // hypothesis index for "hyp"
  std::vector<int> path;
  bool forward = true;  // rewrite an instance of the left side into the right side
};

// terms.front() = terms.back(), one step between consecutive terms.
struct EqChain {
  std::vector<AlgTerm> terms;
  std::vector<EqStep> steps;
};

struct Equation {
  AlgTerm lhs, rhs;
};

// Hypothesis k < hypotheses.size() is external; hypothesis
// hypotheses.size() + j is the equation proved by chain j (j earlier than the user).
struct EquationalProof {
  bool bounded = false;
  std::vector<Equation> hypotheses;
  std::vector<EqChain> chains;
  std::optional<Equation> goal;  // default: last chain ends in 0
};

struct EqCheck {
  bool ok = true;
  int chain = -1;
  int step = -1;  // 0-based step within the chain
  std::string message;
};

EqCheck check_equational(const EquationalProof& e);
std::size_t equational_size(const EquationalProof& e);  // total steps

// Rewrites t at path by the rule; extra binds pattern variables that only
// occur on the target side (e.g. x for eq1 backward).
std::optional<AlgTerm> apply_eq_rule(const AlgTerm& t, const std::string& rule, const std::vector<int>& path,
                                     bool forward, const std::map<std::string, AlgTerm>& extra = {});

// Term of a formula for the logic: One becomes the variable "_1" when unbounded.
AlgTerm translation_term(const Formula& a, bool bounded);
// One chain per derived formula (plus one per inline axiom); hypotheses refer to earlier chains.
EquationalProof translate_to_equational(const HilbertProof& p, LogicId logic);
// Replaces references to earlier chains by the chains themselves; keeps only the last chain.
EquationalProof inline_hypotheses(const EquationalProof& e);
// Replaces every eq2 step by a derivation from the monoid laws, eq1, eq3 and eq4.
EquationalProof expand_eq2(const EquationalProof& e);

// Text form:
//   equational bounded|unbounded
//   hyp <term> = <term>
//   goal <term> = <term>
//   chain
//     <term>
//     <rule> at [<path>] fwd|bwd        (rule "hyp<k>" for hypotheses)
//     <term>
//   end
std::string print_equational(const EquationalProof& e);
EquationalProof parse_equational(const std::string& text);

}  // namespace hoops
