#include "acalg/msc.hpp"

namespace acalg {

Msc::Msc(std::size_t dim, Matrix m) : dim_(dim), m_(std::move(m)) {
  if (m_.rows() != dim || m_.cols() != dim * dim)
    throw DimensionMismatch("structure matrix must be " + std::to_string(dim) + " x " +
                            std::to_string(dim * dim));
}

Msc Msc::zero(std::size_t dim, Field field) { return Msc(dim, Matrix(dim, dim * dim, field)); }

Msc Msc::from_products3(const Matrix& e12, const Matrix& e13, const Matrix& e23) {
  Field f = join(join(e12.field(), e13.field()), e23.field());
  Matrix m(3, 9, f);
  auto put = [&](std::size_t i, std::size_t j, const Matrix& v) {
    for (std::size_t k = 0; k < 3; ++k) {
      m.set(k, i * 3 + j, v(k, 0));
      m.set(k, j * 3 + i, -v(k, 0));
    }
  };
  put(0, 1, e12);
  put(0, 2, e13);
  put(1, 2, e23);
  return Msc(3, m);
}

BasisChange::BasisChange(Matrix g) : g_(std::move(g)), inv_(invert(g_)) {}

Matrix product(const Msc& a, const Matrix& x, const Matrix& y) {
  const std::size_t n = a.dim();
  if (x.rows() != n || y.rows() != n || x.cols() != 1 || y.cols() != 1)
    throw DimensionMismatch("product operands must be vectors of length " + std::to_string(n));
  Field f = join(join(a.field(), x.field()), y.field());
  Matrix out(n, 1, f);
  for (std::size_t i = 0; i < n; ++i) {
    if (x(i, 0).is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y(j, 0).is_zero()) continue;
      FieldElement s = x(i, 0) * y(j, 0);
      for (std::size_t k = 0; k < n; ++k)
        if (!a.at(k, i, j).is_zero()) out.set(k, 0, out(k, 0) + s * a.at(k, i, j));
    }
  }
  return out;
}

Msc act(const BasisChange& g, const Msc& a) {
  if (g.matrix().rows() != a.dim()) throw DimensionMismatch("basis change size");
  return Msc(a.dim(), g.inverse() * a.matrix() * kron(g.matrix(), g.matrix()));
}

Msc act_iso(const BasisChange& g, const Msc& a) {
  if (g.matrix().rows() != a.dim()) throw DimensionMismatch("basis change size");
  return Msc(a.dim(), g.matrix() * a.matrix() * kron(g.inverse(), g.inverse()));
}

std::optional<AnticommutativityViolation> find_anticommutativity_violation(const Msc& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        bool bad = i == j ? !a.at(k, i, i).is_zero()
                          : !(a.at(k, i, j) + a.at(k, j, i)).is_zero();
        if (bad) return AnticommutativityViolation{i, j};
      }
  return std::nullopt;
}

bool is_anticommutative(const Msc& a) { return !find_anticommutativity_violation(a); }

void require_anticommutative(const Msc& a) {
  if (auto v = find_anticommutativity_violation(a)) {
    std::string where = v->i == v->j
        ? "a^2 = 0 fails: e" + std::to_string(v->i + 1) + "e" + std::to_string(v->i + 1) + " != 0"
        : "a^2 = 0 fails: e" + std::to_string(v->i + 1) + "e" + std::to_string(v->j + 1) + " + e" +
              std::to_string(v->j + 1) + "e" + std::to_string(v->i + 1) + " != 0";
    const std::string ij = "(" + std::to_string(v->i + 1) + "," + std::to_string(v->j + 1) + ")";
    const std::string ji = "(" + std::to_string(v->j + 1) + "," + std::to_string(v->i + 1) + ")";
    where += v->i == v->j ? " in column " + ij : " in columns " + ij + " and " + ji;
    throw NotAnticommutative(where);
  }
}

Matrix jacobiator(const Msc& a, const Matrix& x, const Matrix& y, const Matrix& z) {
  return product(a, product(a, x, y), z) + product(a, product(a, y, z), x) +
         product(a, product(a, z, x), y);
}

bool is_lie(const Msc& a) {
  require_anticommutative(a);
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!jacobiator(a, basis_vector(n, i, a.field()), basis_vector(n, j, a.field()),
                        basis_vector(n, k, a.field()))
                 .is_zero())
          return false;
  return true;
}

Matrix structure_form(const Msc& a) {
  if (a.dim() != 3) throw DimensionMismatch("structure form needs dimension 3");
  require_anticommutative(a);
  return Matrix::from_columns({a.product_column(1, 2), a.product_column(2, 0), a.product_column(0, 1)});
}

Msc from_structure_form(const Matrix& m) {
  return Msc::from_products3(m.column(2), -m.column(1), m.column(0));
}

Matrix basis_vector(std::size_t n, std::size_t i, Field field) {
  Matrix v(n, 1, field);
  v.set(i, 0, FieldElement::one(field));
  return v;
}

}  // namespace acalg
