#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acalg/catalog.hpp"
#include "acalg/invariants.hpp"
#include "acalg/polynomial.hpp"

namespace acalg {

struct ClassLabel {
  Family family = Family::Trivial;
  std::optional<FieldElement> parameter;
  LieAlias lie_alias = LieAlias::None;

  std::string to_string() const;
  friend bool operator==(const ClassLabel& a, const ClassLabel& b);
};

// Type of a two-dimensional subalgebra, ordered by preference. For a
// nontrivial subalgebra spanned by f1, f2 with f1 f2 = f2 and any f3:
//   f1 f3 = a3 f1 + b3 f2 + c3 f3,  f2 f3 = a6 f1 + b6 f2 + c6 f3.
enum class Branch {
  C6 = 1,        // c6 != 0
  A6 = 2,        // c6 = 0, a6 != 0, c3 != 1
  A6C3One = 3,   // c6 = 0, a6 != 0, c3 = 1
  C3 = 4,        // c6 = a6 = 0, c3 != 1
  C3One = 5,     // c6 = a6 = 0, c3 = 1
  Trivial = 6,   // the subalgebra has zero product
};

struct SubalgebraWitness {
  Matrix u1;
  Matrix u2;
  // Pluecker vector u1 x u2; the plane is its orthogonal complement.
  Matrix plucker;
  bool nontrivial = false;
  Branch branch = Branch::Trivial;
};

// Symmetric form S = (M + M^T)/2 with x y = M (x cross y). The plane with
// Pluecker vector w is a subalgebra iff w^T S w = 0.
Matrix subalgebra_form(const Msc& a);
Branch subalgebra_branch(const Msc& a, const Matrix& plucker);

// All candidate subalgebras in deterministic scan order. Over infinite
// fields each line or conic component is sampled at 18 parameter values,
// enough to hit every nonempty open condition; over GF(p) with p < 17
// every point is listed.
std::vector<SubalgebraWitness> subalgebra_candidates(const Msc& a);
// Exact test through polynomial identities on each component.
bool has_nontrivial_subalgebra(const Msc& a);

std::optional<SubalgebraWitness> find_2dim_subalgebra(const Msc& a);
// Basis f1, f2, f3 with span{f1, f2} the subalgebra, f1 f2 = f2 when nontrivial.
BasisChange adapt_basis(const Msc& a, const SubalgebraWitness& w);

struct Classification {
  ClassLabel label;
  BasisChange witness;  // act(witness, input) = canonical(label)
  Field field;
  Branch branch = Branch::Trivial;
};

Classification classify(const Msc& a);
Msc canonical(const ClassLabel& label, Field field);

struct IsoResult {
  std::optional<BasisChange> witness;  // B = act_iso(witness, A)
  ClassLabel label_a;
  ClassLabel label_b;
  std::string evidence;
};

IsoResult isomorphic(const Msc& a, const Msc& b);

struct KEntry {
  std::string name;                     // "ZA1" ... "ZA5"
  std::optional<mpq_class> lambda;      // ZA3 only
  Msc input;
  bool is_lie = false;
  Matrix jacobiator_e123;
  std::optional<Classification> result;
  std::string failure;
};

struct KComparison {
  std::vector<KEntry> entries;
  std::vector<std::string> attained;    // among A1, A2, A3, A4, A5, A7
  std::vector<std::string> missing;
  bool complete = false;
};

// ZA3 is sampled at lambda in {-2, -1, 1/2, 1, 2}; ZA5 lives over Q(sqrt(-1)).
KComparison compare_with_k();

}  // namespace acalg
