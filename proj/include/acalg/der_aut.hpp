#pragma once

#include <cstdint>
#include <vector>

#include "acalg/msc.hpp"

namespace acalg {

// Linear system for D A = A (D kron I + I kron D) in the n^2 unknowns D_ab,
// unknown index a*n + b. Row k*n^2 + c is coordinate k of column c.
Matrix derivation_system(const Msc& a);

// D A - A (D kron I + I kron D).
Matrix derivation_residual(const Matrix& d, const Msc& a);
bool is_derivation(const Matrix& d, const Msc& a);

// D(e_i e_j) = (D e_i) e_j + e_i (D e_j) over all ordered basis pairs,
// evaluated through the product rather than the Kronecker form.
bool leibniz_holds(const Matrix& d, const Msc& a);

// Canonical basis of Der(A) from the kernel of the derivation system. Every
// element is re-checked with leibniz_holds.
std::vector<Matrix> derivations(const Msc& a);

// g A - A (g kron g).
Matrix automorphism_residual(const Matrix& g, const Msc& a);
bool is_automorphism(const Matrix& g, const Msc& a);

struct FpAutomorphisms {
  std::uint64_t count = 0;
  std::uint64_t group_order = 0;   // |GL_n(GF(p))|
  std::vector<Matrix> members;     // first `keep` automorphisms in search order
};

// Exhaustive search over GL_3(GF(p)) in lexicographic order of the row-major
// entries. Raises FieldTooLarge when p > 11.
FpAutomorphisms automorphism_search_fp(const Msc& a, std::size_t keep = 0);
std::uint64_t gl_order(std::size_t n, std::uint64_t p);

}  // namespace acalg
