#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acalg/catalog.hpp"
#include "acalg/der_aut.hpp"
#include "acalg/invariants.hpp"

using namespace acalg;

namespace {

Field Q() { return FieldDescriptor::rationals(); }
FieldElement q(long n, long d = 1) { return FieldElement(Q(), mpq_class(n, d)); }

Matrix unit(std::size_t a, std::size_t b, Field f) {
  Matrix m(3, 3, f);
  m.set(a, b, FieldElement::one(f));
  return m;
}

// dim Ann from the stacked right multiplications, built entry by entry.
std::size_t oracle_ann(const Msc& a) {
  Matrix sys(9, 3, a.field());
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < 3; ++i) sys.set(j * 3 + k, i, a.at(k, i, j));
  return 3 - rank(sys);
}

std::size_t oracle_sq(const Msc& a) {
  return rank(Matrix::from_columns({a.product_column(0, 1), a.product_column(0, 2), a.product_column(1, 2)}));
}

// dim Der from the Leibniz defect of each elementary matrix.
std::size_t oracle_der(const Msc& a) {
  Field f = a.field();
  std::vector<Matrix> cols;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      Matrix d = unit(r, c, f);
      Matrix col(27, 1, f);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          Matrix ei = basis_vector(3, i, f), ej = basis_vector(3, j, f);
          Matrix defect = d * product(a, ei, ej) - product(a, d * ei, ej) - product(a, ei, d * ej);
          for (std::size_t k = 0; k < 3; ++k) col.set((i * 3 + j) * 3 + k, 0, defect(k, 0));
        }
      cols.push_back(col);
    }
  return 9 - rank(Matrix::from_columns(cols));
}

std::vector<Msc> listed(Field f) {
  FieldElement l(f, 2L);
  return {catalog::a1(f), catalog::a2(l), catalog::a2(FieldElement::zero(f)), catalog::a3(f), catalog::a4(l),
          catalog::a4(FieldElement::one(f)), catalog::a5(f), catalog::a6(l), catalog::a7(l), catalog::a8(f),
          catalog::a9(f), catalog::sl2(f), Msc::zero(3, f)};
}

BasisChange random_basis_change(Field f, std::mt19937& rng) {
  while (true) {
    Matrix g(3, 3, f);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) g.set(i, j, FieldElement(f, static_cast<long>(rng() % 7) - 3));
    if (!determinant(g).is_zero()) return BasisChange(g);
  }
}

}  // namespace

TEST_CASE("profile matches the independent oracles") {
  for (const auto& a : listed(Q())) {
    InvariantProfile p = profile(a);
    CHECK(p.dim_ann == oracle_ann(a));
    CHECK(p.dim_sq == oracle_sq(a));
    CHECK(p.dim_der == oracle_der(a));
    CHECK(p.dim_ann_cap_sq <= std::min(p.dim_ann, p.dim_sq));
    CHECK(p.dim_center == p.dim_ann);
  }
}

TEST_CASE("trivial algebra profile") {
  InvariantProfile p = profile(Msc::zero(3, Q()));
  CHECK(p == InvariantProfile{3, 0, 0, 9, 0, true, 3});
}

TEST_CASE("table rows computed with the fixed definitions") {
  auto row = [](const Msc& a) {
    InvariantProfile p = profile(a);
    return std::array<std::size_t, 3>{p.dim_ann, p.dim_sq, p.dim_ann_cap_sq};
  };
  CHECK(row(catalog::a2(q(2))) == std::array<std::size_t, 3>{0, 3, 0});
  CHECK(row(catalog::a3(Q())) == std::array<std::size_t, 3>{0, 2, 0});
  CHECK(row(catalog::a4(q(2))) == std::array<std::size_t, 3>{0, 3, 0});
  CHECK(row(catalog::a4(q(0))) == std::array<std::size_t, 3>{0, 2, 0});
  CHECK(row(catalog::a5(Q())) == std::array<std::size_t, 3>{0, 3, 0});
  CHECK(profile(catalog::a7(q(2))).dim_ann == 0);
  CHECK(profile(catalog::a9(Q())).dim_ann == 1);
}

TEST_CASE("A3 products span e2, e3") {
  Matrix sq = derived_subalgebra(catalog::a3(Q()));
  CHECK(sq.cols() == 2);
  CHECK(rank(sq.hstack(basis_vector(3, 1, Q())).hstack(basis_vector(3, 2, Q()))) == 2);
}

TEST_CASE("profiles are invariant under change of basis") {
  std::mt19937 rng(21);
  for (const auto& a : listed(Q())) {
    InvariantProfile p = profile(a);
    for (int k = 0; k < 10; ++k) CHECK(profile(act(random_basis_change(Q(), rng), a)) == p);
  }
}

TEST_CASE("profiles are unchanged by a field extension") {
  Field t = sqrt(q(2)).field();
  for (const auto& a : listed(Q())) CHECK(profile(a.embed(t)) == profile(a));
}

TEST_CASE("left multiplication derivations") {
  // For Lie algebras every L_x is a derivation: dim = 3 - dim Ann.
  CHECK(profile(catalog::sl2(Q())).dim_leftmult_der == 3);
  CHECK(profile(catalog::a9(Q())).dim_leftmult_der == 2);
  Msc a = catalog::a1(Q());
  for (std::size_t i = 0; i < 3; ++i) {
    Matrix l = left_multiplication(a, i);
    CHECK(l.column(0) == a.product_column(i, 0));
  }
}

TEST_CASE("profile json") {
  auto j = profile_to_json(profile(catalog::a9(Q())));
  CHECK(j["is_lie"] == true);
  CHECK(j["dim_ann"] == 1);
}
