#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "acalg/field.hpp"

namespace acalg {

// Dense row-major matrix over one field. Mixed-field inputs are embedded into
// the largest tower on construction.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field field);
  Matrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  static Matrix identity(std::size_t n, Field field);
  static Matrix from_ints(Field field, std::size_t rows, std::size_t cols,
                          std::initializer_list<long> values);
  static Matrix column_vector(std::vector<FieldElement> values);
  // Columns given as n x 1 matrices.
  static Matrix from_columns(const std::vector<Matrix>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const FieldElement& v);
  const std::vector<FieldElement>& entries() const { return data_; }

  Matrix embed(Field target) const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix row(std::size_t r) const;
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;
  bool is_zero() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElement& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<FieldElement> data_;
};

// Fraction-free (Bareiss) elimination over Q after scaling rows to integers;
// plain elimination over GF(p) and towers.
std::size_t rank(const Matrix& m);
FieldElement determinant(const Matrix& m);

// Reduced row echelon form and its pivot columns.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

// Canonical kernel basis read off the RREF: one vector per free column in
// increasing order, with a 1 in that column and 0 in the other free columns.
std::vector<Matrix> nullspace(const Matrix& m);

Matrix invert(const Matrix& m);
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

// Dimension of the intersection of two column spans.
std::size_t intersection_dim(const Matrix& a, const Matrix& b);
// Basis of the column span, as columns of the result (possibly 0 columns).
Matrix column_space(const Matrix& m);

// 3-vector helpers for column vectors.
Matrix cross(const Matrix& u, const Matrix& v);
FieldElement dot(const Matrix& u, const Matrix& v);

}  // namespace acalg
