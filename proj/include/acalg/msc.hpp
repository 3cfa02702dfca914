#pragma once

#include <optional>
#include <string>

#include "acalg/matrix.hpp"

namespace acalg {

// Matrix of structure constants: an n x n^2 matrix whose column (i, j),
// stored at index i*n + j (0-based), holds the coordinates of e_i e_j.
// The product is x y = A (x kron y).
class Msc {
 public:
  Msc(std::size_t dim, Matrix m);
  static Msc zero(std::size_t dim, Field field);
  // Anticommutative algebra of dimension 3 from e1e2, e1e3, e2e3.
  static Msc from_products3(const Matrix& e12, const Matrix& e13, const Matrix& e23);

  std::size_t dim() const { return dim_; }
  const Matrix& matrix() const { return m_; }
  Field field() const { return m_.field(); }
  Msc embed(Field target) const { return Msc(dim_, m_.embed(target)); }

  // Coefficient of e_k in e_i e_j.
  const FieldElement& at(std::size_t k, std::size_t i, std::size_t j) const {
    return m_(k, i * dim_ + j);
  }
  Matrix product_column(std::size_t i, std::size_t j) const { return m_.column(i * dim_ + j); }

  friend bool operator==(const Msc& a, const Msc& b) { return a.dim_ == b.dim_ && a.m_ == b.m_; }

  std::string to_string() const { return m_.to_string(); }

 private:
  std::size_t dim_;
  Matrix m_;
};

// Invertible change of basis, columns are the new basis vectors.
class BasisChange {
 public:
  explicit BasisChange(Matrix g);
  const Matrix& matrix() const { return g_; }
  const Matrix& inverse() const { return inv_; }
  BasisChange then(const BasisChange& h) const { return BasisChange(g_ * h.g_); }

 private:
  Matrix g_;
  Matrix inv_;
};

Matrix product(const Msc& a, const Matrix& x, const Matrix& y);

// Structure constants in the basis given by the columns of g:
// g^{-1} A (g kron g). A right action: act(h, act(g, A)) = act(g h, A).
Msc act(const BasisChange& g, const Msc& a);
// Isomorphic image of A under the map g: g A (g^{-1} kron g^{-1}).
Msc act_iso(const BasisChange& g, const Msc& a);

struct AnticommutativityViolation {
  std::size_t i;  // 0-based basis indices with e_i e_j + e_j e_i != 0,
  std::size_t j;  // or e_i e_i != 0 when i == j
};
std::optional<AnticommutativityViolation> find_anticommutativity_violation(const Msc& a);
bool is_anticommutative(const Msc& a);
// Throws NotAnticommutative naming the first offending column pair.
void require_anticommutative(const Msc& a);

Matrix jacobiator(const Msc& a, const Matrix& x, const Matrix& y, const Matrix& z);
bool is_lie(const Msc& a);

// For dim 3 anticommutative A: the 3x3 matrix M with x y = M (x cross y),
// columns e2e3, e3e1, e1e2.
Matrix structure_form(const Msc& a);
Msc from_structure_form(const Matrix& m);

Matrix basis_vector(std::size_t n, std::size_t i, Field field);

}  // namespace acalg
