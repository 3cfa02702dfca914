#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acalg/matrix.hpp"

using namespace acalg;

namespace {

Field Q() { return FieldDescriptor::rationals(); }

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937& rng, int zero_bias = 0) {
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      long v = static_cast<long>(rng() % 7) - 3;
      if (zero_bias && rng() % zero_bias != 0) v = 0;
      m.set(i, j, FieldElement(f, mpq_class(v, static_cast<long>(rng() % 2) + 1)));
    }
  return m;
}

// Independent rank oracle: count of nonzero rows after naive elimination.
std::size_t naive_rank(Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == p || m(r, c).is_zero()) continue;
      FieldElement f = m(r, c) / m(p, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m.set(r, k, m(r, k) - f * m(p, k));
    }
    for (std::size_t k = 0; k < m.cols(); ++k) {
      FieldElement t = m(p, k);
      m.set(p, k, m(rank, k));
      m.set(rank, k, t);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("nullspace of [[1,1,0]] is {(-1,1,0), (0,0,1)}") {
  auto basis = nullspace(Matrix::from_ints(Q(), 1, 3, {1, 1, 0}));
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == Matrix::from_ints(Q(), 3, 1, {-1, 1, 0}));
  CHECK(basis[1] == Matrix::from_ints(Q(), 3, 1, {0, 0, 1}));
}

TEST_CASE("rank-nullity and kernel property on random matrices") {
  std::mt19937 rng(3);
  for (Field f : {Q(), FieldDescriptor::prime(5), FieldDescriptor::prime(3)}) {
    for (int k = 0; k < 40; ++k) {
      Matrix m = random_matrix(f, 1 + rng() % 6, 1 + rng() % 7, rng, 2);
      auto ker = nullspace(m);
      CHECK(rank(m) + ker.size() == m.cols());
      CHECK(rank(m) == naive_rank(m));
      for (const auto& v : ker) CHECK((m * v).is_zero());
    }
  }
}

TEST_CASE("Bareiss rank agrees with elimination on large integer entries") {
  Matrix m = Matrix::from_ints(Q(), 3, 3, {123456789, 987654321, 555555555,
                                           246913578, 1975308642, 1111111110,
                                           1, 2, 3});
  CHECK(rank(m) == 2);
  CHECK(naive_rank(m) == 2);
}

TEST_CASE("invert and determinant") {
  std::mt19937 rng(5);
  int found = 0;
  for (int k = 0; k < 50 && found < 20; ++k) {
    Matrix m = random_matrix(Q(), 4, 4, rng);
    if (determinant(m).is_zero()) {
      CHECK_THROWS_AS(invert(m), Singular);
      continue;
    }
    ++found;
    Matrix inv = invert(m);
    CHECK(m * inv == Matrix::identity(4, Q()));
    CHECK(determinant(m) * determinant(inv) == FieldElement::one(Q()));
  }
  CHECK(found > 0);
  CHECK_THROWS_AS(invert(Matrix::from_ints(Q(), 2, 2, {1, 2, 2, 4})), Singular);
}

TEST_CASE("solve") {
  Matrix a = Matrix::from_ints(Q(), 2, 2, {1, 2, 3, 4});
  Matrix b = Matrix::from_ints(Q(), 2, 1, {5, 6});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK_FALSE(solve(Matrix::from_ints(Q(), 2, 1, {1, 1}), Matrix::from_ints(Q(), 2, 1, {1, 2})));
}

TEST_CASE("kron mixed product") {
  std::mt19937 rng(9);
  Matrix a = random_matrix(Q(), 2, 3, rng), b = random_matrix(Q(), 3, 2, rng);
  Matrix c = random_matrix(Q(), 3, 2, rng), d = random_matrix(Q(), 2, 3, rng);
  CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
}

TEST_CASE("matrices over a tower") {
  FieldElement s = sqrt(FieldElement(Q(), 2L));
  Field f = s.field();
  Matrix m(2, 2, std::vector<FieldElement>{s, FieldElement(f, 1L), FieldElement(f, 1L), s});
  CHECK(determinant(m) == FieldElement(f, 1L));
  CHECK(m * invert(m) == Matrix::identity(2, f));
  Matrix mixed = Matrix::from_ints(Q(), 2, 2, {1, 0, 0, 1}) + m;
  CHECK(mixed.field() == f);
}

TEST_CASE("intersection and column space") {
  Matrix a = Matrix::from_ints(Q(), 3, 2, {1, 0, 0, 1, 0, 0});
  Matrix b = Matrix::from_ints(Q(), 3, 2, {1, 0, 1, 0, 0, 1});
  CHECK(intersection_dim(a, b) == 1);
  CHECK(column_space(Matrix::from_ints(Q(), 2, 3, {1, 2, 3, 2, 4, 6})).cols() == 1);
  CHECK(column_space(Matrix(2, 2, Q())).cols() == 0);
}

TEST_CASE("cross product") {
  Matrix e1 = Matrix::from_ints(Q(), 3, 1, {1, 0, 0});
  Matrix e2 = Matrix::from_ints(Q(), 3, 1, {0, 1, 0});
  CHECK(cross(e1, e2) == Matrix::from_ints(Q(), 3, 1, {0, 0, 1}));
}
