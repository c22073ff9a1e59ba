// Hilbert-style proofs over the nine affine and Lukasiewicz logics.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hoops/syntax.hpp"

namespace hoops {

enum class Schema { Comp, Comm, Curry, Uncurry, Wk, EFQ, DNE, CWC, Con };
const char* schema_name(Schema s);
std::optional<Schema> schema_from_name(const std::string& s);
// Metavariables used by the schema, in order (A, B, C).
std::vector<std::string> schema_metavars(Schema s);
Formula schema_body(Schema s);  // metavariables as Var("A"), ...
Formula instantiate(Schema s, const std::map<std::string, Formula>& sigma);

enum class LogicId { ALm, ALi, ALc, LLm, LLi, LLc, ML, IL, BL };
const char* logic_name(LogicId l);
std::optional<LogicId> logic_from_name(const std::string& s);
std::vector<Schema> logic_schemas(LogicId l);
bool logic_has(LogicId l, Schema s);
// Every schema of a is available in b.
bool logic_extends(LogicId b, LogicId a);
bool logic_bounded(LogicId l);  // has EFQ

struct HilbertStep {
  enum class Kind { Axiom, MP, MPAx } kind = Kind::Axiom;
  Schema schema = Schema::Wk;            // Axiom, MPAx
  std::map<std::string, Formula> sigma;  // Axiom, MPAx
  int minor = -1;                        // MP, MPAx: 0-based index of B
  int major = -1;                        // MP: 0-based index of B -o A

  static HilbertStep axiom(Schema s, std::map<std::string, Formula> sigma);
  static HilbertStep mp(int minor, int major);
  // Modus ponens whose major premise is an inline axiom instance.
  static HilbertStep mp_ax(int minor, Schema s, std::map<std::string, Formula> sigma);
};

struct HilbertProof {
  std::vector<HilbertStep> steps;
};

class ProofError : public std::runtime_error {
 public:
  ProofError(const std::string& msg, int step) : std::runtime_error(msg), step_(step) {}
  int step() const { return step_; }  // 0-based, -1 for whole-proof errors

 private:
  int step_;
};

// Formulas of every step; throws ProofError on the first bad step.
std::vector<Formula> hilbert_formulas(const HilbertProof& p, LogicId logic);
// The theorem (last step).
Formula check_hilbert(const HilbertProof& p, LogicId logic);

// ---- derived rules (all valid in ALm)
enum class MonoSide { ImpFirst, ImpSecond, TensorLeft, TensorRight };

HilbertProof build_refl(const Formula& a);
// p proves A -o B, q proves B -o C; result proves A -o C.
HilbertProof build_trans(const HilbertProof& p, const HilbertProof& q);
// p proves A -o B. ImpFirst: (B -o C) -o (A -o C); ImpSecond: (C -o A) -o (C -o B);
// TensorLeft: A * C -o B * C; TensorRight: C * A -o C * B.
HilbertProof build_mono(MonoSide side, const HilbertProof& p, const Formula& c);
// p proves X -o Y -o Z; result proves Y -o X -o Z.
HilbertProof build_exchange(const HilbertProof& p);
HilbertProof build_assoc(const Formula& a, const Formula& b, const Formula& c);      // (A*B)*C -o A*(B*C)
HilbertProof build_assoc_rev(const Formula& a, const Formula& b, const Formula& c);  // A*(B*C) -o (A*B)*C
HilbertProof axiom_proof(Schema s, std::map<std::string, Formula> sigma);

// Text: one step per line, 1-based indices.
//   ax <Schema> { A = <formula>; B = <formula> }
//   mp <i> <j>
//   mp <i> ax <Schema> { ... }
std::string print_hilbert(const HilbertProof& p);
HilbertProof parse_hilbert(const std::string& text);

// Random checked proof built from axioms, modus ponens and derived rules.
HilbertProof random_hilbert_proof(LogicId logic, std::uint64_t seed, int steps, int vars = 3);

}  // namespace hoops
