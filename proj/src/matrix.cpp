#include "acalg/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace acalg {

namespace {

void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string("shape mismatch in ") + op);
}

std::size_t bareiss_rank_rational(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).coords()[0].get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      mpq_class v = m(r, c).coords()[0] * l;
      a[r][c] = v.get_num();
    }
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        mpz_class v = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, FieldElement::zero(field)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("entry count does not match shape");
  if (data_.empty()) throw DimensionMismatch("empty matrix needs an explicit field");
  field_ = data_[0].field();
  for (const auto& e : data_) field_ = join(field_, e.field());
  for (auto& e : data_) e = e.embed(field_);
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = FieldElement::one(field);
  return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols,
                         std::initializer_list<long> values) {
  std::vector<FieldElement> e;
  for (long v : values) e.emplace_back(field, v);
  return Matrix(rows, cols, std::move(e));
}

Matrix Matrix::column_vector(std::vector<FieldElement> values) {
  std::size_t n = values.size();
  return Matrix(n, 1, std::move(values));
}

Matrix Matrix::from_columns(const std::vector<Matrix>& columns) {
  if (columns.empty()) throw DimensionMismatch("no columns");
  std::size_t n = columns[0].rows();
  std::vector<FieldElement> e;
  e.reserve(n * columns.size());
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& c : columns) {
      if (c.rows() != n || c.cols() != 1) throw DimensionMismatch("column shape");
      e.push_back(c(r, 0));
    }
  return Matrix(n, columns.size(), std::move(e));
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
  if (v.field() != field_) {
    Field f = join(field_, v.field());
    if (f != field_) *this = embed(f);
    data_[r * cols_ + c] = v.embed(f);
    return;
  }
  data_[r * cols_ + c] = v;
}

Matrix Matrix::embed(Field target) const {
  if (target == field_) return *this;
  Matrix m = *this;
  m.field_ = target;
  for (auto& e : m.data_) e = e.embed(target);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix m(rows_, 1, field_);
  for (std::size_t r = 0; r < rows_; ++r) m.data_[r] = (*this)(r, c);
  return m;
}

Matrix Matrix::row(std::size_t r) const {
  Matrix m(1, cols_, field_);
  for (std::size_t c = 0; c < cols_; ++c) m.data_[c] = (*this)(r, c);
  return m;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw DimensionMismatch("hstack row mismatch");
  Field f = join(field_, right.field_);
  Matrix m(rows_, cols_ + right.cols_, f);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.data_[r * m.cols_ + c] = (*this)(r, c).embed(f);
    for (std::size_t c = 0; c < right.cols_; ++c) m.data_[r * m.cols_ + cols_ + c] = right(r, c).embed(f);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw DimensionMismatch("vstack column mismatch");
  Field f = join(field_, below.field_);
  Matrix m(rows_ + below.rows_, cols_, f);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].embed(f);
  for (std::size_t i = 0; i < below.data_.size(); ++i) m.data_[data_.size() + i] = below.data_[i].embed(f);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& e : m.data_) e = -e;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "addition");
  Field f = join(a.field_, b.field_);
  Matrix m = a.embed(f);
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "subtraction");
  Field f = join(a.field_, b.field_);
  Matrix m = a.embed(f);
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("product shape mismatch");
  Field f = join(a.field_, b.field_);
  Matrix m(a.rows_, b.cols_, f);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const FieldElement& y = b(k, c);
        if (!y.is_zero()) m.data_[r * m.cols_ + c] += x * y;
      }
    }
  return m;
}

Matrix operator*(const FieldElement& s, const Matrix& a) {
  Field f = join(s.field(), a.field_);
  Matrix m = a.embed(f);
  for (auto& e : m.data_) e *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i])) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix a = m;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        FieldElement t = a(p, k);
        a.set(p, k, a(row, k));
        a.set(row, k, t);
      }
    FieldElement inv = a(row, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) a.set(row, k, a(row, k) * inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c).is_zero()) continue;
      FieldElement factor = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!a(row, k).is_zero()) a.set(r, k, a(r, k) - factor * a(row, k));
    }
    piv.push_back(c);
    ++row;
  }
  if (pivots) *pivots = piv;
  return a;
}

std::size_t rank(const Matrix& m) {
  if (m.field()->kind() == FieldDescriptor::Kind::Rationals) return bareiss_rank_rational(m);
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

FieldElement determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  FieldElement det = FieldElement::one(a.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return FieldElement::zero(a.field());
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) {
        FieldElement t = a(p, k);
        a.set(p, k, a(c, k));
        a.set(c, k, t);
      }
      det = -det;
    }
    det *= a(c, c);
    FieldElement inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      FieldElement factor = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) a.set(r, k, a(r, k) - factor * a(c, k));
    }
  }
  return det;
}

std::vector<Matrix> nullspace(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix v(m.cols(), 1, r.field());
    v.set(f, 0, FieldElement::one(r.field()));
    for (std::size_t i = 0; i < piv.size(); ++i) v.set(piv[i], 0, -r(i, f));
    basis.push_back(v);
  }
  return basis;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> piv;
  Matrix r = rref(m.hstack(Matrix::identity(n, m.field())), &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Singular();
  Matrix inv(n, n, r.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r(i, n + j));
  return inv;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  std::vector<std::size_t> piv;
  Matrix r = rref(a.hstack(b), &piv);
  if (!piv.empty() && piv.back() >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols(), r.field());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(piv[i], j, r(i, a.cols() + j));
  return x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Field f = join(a.field(), b.field());
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), f);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m.set(i * b.rows() + k, j * b.cols() + l, a(i, j) * b(k, l));
    }
  return m;
}

Matrix column_space(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  if (piv.empty()) return Matrix(m.rows(), 0, m.field());
  std::vector<Matrix> cols;
  for (auto p : piv) cols.push_back(m.column(p));
  return Matrix::from_columns(cols);
}

std::size_t intersection_dim(const Matrix& a, const Matrix& b) {
  std::size_t ra = a.cols() ? rank(a) : 0;
  std::size_t rb = b.cols() ? rank(b) : 0;
  if (!a.cols() || !b.cols()) return 0;
  return ra + rb - rank(a.hstack(b));
}

Matrix cross(const Matrix& u, const Matrix& v) {
  if (u.rows() != 3 || v.rows() != 3 || u.cols() != 1 || v.cols() != 1)
    throw DimensionMismatch("cross product needs 3-vectors");
  return Matrix::column_vector({u(1, 0) * v(2, 0) - u(2, 0) * v(1, 0),
                                u(2, 0) * v(0, 0) - u(0, 0) * v(2, 0),
                                u(0, 0) * v(1, 0) - u(1, 0) * v(0, 0)});
}

FieldElement dot(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != 1 || v.cols() != 1) throw DimensionMismatch("dot");
  FieldElement s = FieldElement::zero(join(u.field(), v.field()));
  for (std::size_t i = 0; i < u.rows(); ++i) s += u(i, 0) * v(i, 0);
  return s;
}

}  // namespace acalg
