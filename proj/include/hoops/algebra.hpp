// Finite pocrims as operation tables.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hoops/syntax.hpp"

namespace hoops {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Carrier {0..n-1}; element 0 is the monoid identity. x >= y iff imp(x,y) == 0.
class FiniteAlgebra {
 public:
  FiniteAlgebra(int n, std::vector<int> add, std::vector<int> imp, std::vector<std::string> names = {});

  int size() const { return n_; }
  int add(int x, int y) const { return add_[static_cast<std::size_t>(x * n_ + y)]; }
  int imp(int x, int y) const { return imp_[static_cast<std::size_t>(x * n_ + y)]; }
  bool geq(int x, int y) const { return imp(x, y) == 0; }
  const std::vector<int>& add_table() const { return add_; }
  const std::vector<int>& imp_table() const { return imp_; }

  // Annihilator (x + one = one for all x), if any.
  std::optional<int> one() const { return one_; }
  int one_or_throw() const;
  int neg(int x) const { return imp(x, one_or_throw()); }
  int delta(int x) const { return neg(neg(x)); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int x) const { return names_[static_cast<std::size_t>(x)]; }
  bool has_default_names() const;
  std::optional<int> index_of(const std::string& name) const;
  FiniteAlgebra with_names(std::vector<std::string> names) const;

  // Table equality only; names are presentation.
  bool same_tables(const FiniteAlgebra& o) const { return n_ == o.n_ && add_ == o.add_ && imp_ == o.imp_; }

 private:
  int n_;
  std::vector<int> add_, imp_;
  std::vector<std::string> names_;
  std::optional<int> one_;
};

// ---------------------------------------------------------------- laws

struct LawResult {
  std::string law;  // m1 m2 m3 o1 o2 o3 o4 b r
  bool holds = true;
  std::vector<int> witness;  // first violating tuple in lexicographic order
};

struct AxiomReport {
  std::vector<LawResult> laws;
  bool ok() const;
  const LawResult& law(const std::string& name) const;
};

AxiomReport check_pocrim(const FiniteAlgebra& a);
inline bool is_pocrim(const FiniteAlgebra& a) { return check_pocrim(a).ok(); }

struct Flag {
  bool value = true;
  std::vector<int> witness;  // meaning fixed per flag, see classify()
};

// Witness conventions for false flags:
//   bounded: (s, x) with s the sum of all elements and x + s != s
//   involutive: (x) with delta(x) != x, or the bounded witness
//   hoop, naturally_ordered: (x, y) with x >= y and no z with y + z = x
//   wajsberg: (x, y) with (x->y)->y != (y->x)->x, or the hoop witness
//   idempotent: (x) with x + x != x
//   simple: (x, y) with x != 0 and y outside the ideal generated by x; () if trivial
//   subdirectly_irreducible: nonzero elements whose principal ideals meet in {0}
struct ClassificationReport {
  Flag bounded, involutive, hoop, wajsberg, idempotent, naturally_ordered, simple, subdirectly_irreducible;
};

ClassificationReport classify(const FiniteAlgebra& a);
bool satisfies_cwc(const FiniteAlgebra& a);
bool is_archimedean(const FiniteAlgebra& a);

// ---------------------------------------------------------------- constructions

FiniteAlgebra ordinal_sum(const FiniteAlgebra& c, const FiniteAlgebra& d);
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

using Ideal = std::vector<int>;  // sorted element indices
Ideal ideal_generated(const FiniteAlgebra& h, const std::vector<int>& x);
bool is_ideal(const FiniteAlgebra& h, const std::vector<int>& subset);
std::vector<Ideal> all_ideals(const FiniteAlgebra& h);

struct Quotient {
  FiniteAlgebra algebra;
  std::vector<int> projection;  // element -> class index
};
// Hoops only; the congruence is x ~ y iff (x->y)+(y->x) in I.
Quotient quotient(const FiniteAlgebra& h, const Ideal& i);
// Quotient by a partition given as class labels; rejects non-congruences.
Quotient quotient_by_partition(const FiniteAlgebra& a, const std::vector<int>& labels);

// Maps f: A -> B preserving 0, +, -> (and 1 when preserve_one).
std::vector<std::vector<int>> homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b, bool preserve_one = true);
bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<int>& f, bool preserve_one = true);

struct DoubleNegation {
  std::vector<int> delta;
  std::vector<int> image;
  bool image_closed_under_add = true;
};
DoubleNegation double_negation(const FiniteAlgebra& a);

// ---------------------------------------------------------------- evaluation

int eval_term(const FiniteAlgebra& a, const AlgTerm& t, const std::map<std::string, int>& alpha);

// Term compiled against a fixed variable order for repeated evaluation.
class TermEvaluator {
 public:
  TermEvaluator(const AlgTerm& t, const std::vector<std::string>& var_order);
  int operator()(const FiniteAlgebra& a, const std::vector<int>& values) const;

 private:
  struct Op {
    AlgTerm::Kind kind;
    int arg;  // variable slot for Var
  };
  std::vector<Op> code_;  // postfix
};

// Odometer over all assignments; the first variable varies slowest.
// Returns false when exhausted.
bool next_assignment(std::vector<int>& values, int n);

// ---------------------------------------------------------------- isomorphism

// Canonical form: lexicographically least (add, imp) tables over all
// relabelings that are linear extensions of >= (so 0 stays first).
std::vector<std::uint8_t> canonical_form(const FiniteAlgebra& a);
FiniteAlgebra canonical(const FiniteAlgebra& a);
std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);
inline bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) { return find_isomorphism(a, b).has_value(); }

// ---------------------------------------------------------------- enumeration

struct EnumFilter {
  bool hoop = false;
  bool involutive = false;
  bool wajsberg = false;
  bool idempotent = false;
  bool accepts(const FiniteAlgebra& a) const;
};

struct EnumOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited
  int jobs = 1;
};

struct EnumResult {
  std::vector<FiniteAlgebra> algebras;  // sorted by canonical form
  bool complete = true;
  std::uint64_t nodes = 0;
};

EnumResult enumerate_pocrims(int n, const EnumFilter& filter = {}, const EnumOptions& opts = {});
// Memoized unfiltered enumeration (complete, unlimited budget).
const std::vector<FiniteAlgebra>& pocrims_of_order(int n);

// ---------------------------------------------------------------- catalog & io

// B, L<n>, G<n>, P4, Q4, Q6, U, trivial
FiniteAlgebra catalog(const std::string& name);
std::vector<std::string> catalog_names();

std::string write_algebra(const FiniteAlgebra& a);
FiniteAlgebra read_algebra(const std::string& text);

}  // namespace hoops
