#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "acalg/catalog.hpp"
#include "acalg/der_aut.hpp"

using namespace acalg;

namespace {

Field Q() { return FieldDescriptor::rationals(); }
FieldElement q(long n, long d = 1) { return FieldElement(Q(), mpq_class(n, d)); }

Msc random_msc(Field f, std::mt19937& rng) {
  Matrix m(3, 3, f);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.set(i, j, FieldElement(f, static_cast<long>(rng() % 5) - 2));
  return from_structure_form(m);
}

Matrix random_matrix(Field f, std::mt19937& rng) {
  Matrix m(3, 3, f);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.set(i, j, FieldElement(f, static_cast<long>(rng() % 5) - 2));
  return m;
}

Matrix diag(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  Matrix m(3, 3, a.field());
  m.set(0, 0, a);
  m.set(1, 1, b);
  m.set(2, 2, c);
  return m;
}

}  // namespace

TEST_CASE("derivations of the zero algebra and of h3") {
  CHECK(derivations(Msc::zero(3, Q())).size() == 9);
  // Heisenberg: Der has dimension 6.
  CHECK(derivations(catalog::a9(Q())).size() == 6);
  CHECK(derivations(catalog::sl2(Q())).size() == 3);
}

TEST_CASE("identity and scalar maps") {
  Msc a1 = catalog::a1(Q());
  CHECK(is_derivation(Matrix(3, 3, Q()), a1));
  CHECK_FALSE(is_derivation(Matrix::identity(3, Q()), a1));
  CHECK(is_automorphism(Matrix::identity(3, Q()), a1));
  CHECK_FALSE(is_automorphism(q(2) * Matrix::identity(3, Q()), a1));
}

TEST_CASE("Der(A1) has the form [[0,0,0],[0,0,0],[-x,x,y]]") {
  Msc a1 = catalog::a1(Q());
  auto der = derivations(a1);
  CHECK(der.size() == 2);
  for (auto [x, y] : {std::pair{1L, 0L}, std::pair{0L, 1L}, std::pair{3L, -2L}}) {
    Matrix d(3, 3, Q());
    d.set(2, 0, q(-x));
    d.set(2, 1, q(x));
    d.set(2, 2, q(y));
    CHECK(is_derivation(d, a1));
  }
  CHECK_FALSE(is_derivation(diag(q(0), q(1), q(1)), a1));
  // Residual of diag(0,1,1) sits in the e3 row of column (2,3).
  Matrix r = derivation_residual(diag(q(0), q(1), q(1)), a1);
  CHECK(r(2, 5) == q(-1));
}

TEST_CASE("Aut(A4(3)) contains Diag(1, t, 1/t)") {
  Msc a = catalog::a4(q(3));
  CHECK(is_automorphism(diag(q(1), q(2), q(1, 2)), a));
  CHECK(is_automorphism(diag(q(1), q(-5), q(-1, 5)), a));
}

TEST_CASE("Kronecker system and Leibniz rule agree on random algebras") {
  std::mt19937 rng(17);
  for (int k = 0; k < 40; ++k) {
    Msc a = random_msc(Q(), rng);
    for (const auto& d : derivations(a)) CHECK(leibniz_holds(d, a));
    for (int t = 0; t < 5; ++t) {
      Matrix d = random_matrix(Q(), rng);
      CHECK(is_derivation(d, a) == leibniz_holds(d, a));
    }
  }
}

TEST_CASE("Der is closed under commutators") {
  std::mt19937 rng(2);
  std::vector<Msc> algebras{catalog::a1(Q()), catalog::a9(Q()), catalog::a4(q(1)), catalog::a7(q(0))};
  for (int k = 0; k < 10; ++k) algebras.push_back(random_msc(Q(), rng));
  for (const auto& a : algebras) {
    auto der = derivations(a);
    for (const auto& d : der)
      for (const auto& e : der) CHECK(is_derivation(d * e - e * d, a));
  }
}

TEST_CASE("conjugation covariance") {
  std::mt19937 rng(4);
  Msc a = catalog::a7(q(2));
  for (int k = 0; k < 5; ++k) {
    Matrix g = random_matrix(Q(), rng);
    if (determinant(g).is_zero()) continue;
    BasisChange bg(g);
    for (const auto& d : derivations(a)) CHECK(is_derivation(bg.inverse() * d * g, act(bg, a)));
  }
}

TEST_CASE("exhaustive automorphism search") {
  Field f3 = FieldDescriptor::prime(3);
  CHECK(gl_order(3, 3) == 11232);
  auto all = automorphism_search_fp(Msc::zero(3, f3));
  CHECK(all.count == 11232);

  auto h3 = automorphism_search_fp(catalog::a9(f3), 100000);
  REQUIRE(h3.members.size() == h3.count);
  std::set<std::vector<std::uint64_t>> keys;
  auto key = [](const Matrix& m) {
    std::vector<std::uint64_t> k;
    for (const auto& e : m.entries()) k.push_back(e.residue());
    return k;
  };
  for (const auto& g : h3.members) keys.insert(key(g));
  CHECK(keys.count(key(Matrix::identity(3, f3))) == 1);
  for (std::size_t i = 0; i < h3.members.size(); i += 37)
    for (std::size_t j = 0; j < h3.members.size(); j += 41) {
      CHECK(keys.count(key(h3.members[i] * h3.members[j])) == 1);
      CHECK(keys.count(key(invert(h3.members[i]))) == 1);
    }

  // Members agree with the exact predicate and come out in lexicographic order.
  Field f5 = FieldDescriptor::prime(5);
  auto a2 = automorphism_search_fp(catalog::a2(FieldElement(f5, 1L)), 1000);
  CHECK(a2.count > 1);
  for (const auto& g : a2.members) CHECK(is_automorphism(g, catalog::a2(FieldElement(f5, 1L))));
  for (std::size_t i = 1; i < a2.members.size(); ++i) CHECK(key(a2.members[i - 1]) < key(a2.members[i]));

  CHECK_THROWS_AS(automorphism_search_fp(catalog::a1(FieldDescriptor::prime(13))), FieldTooLarge);
}

TEST_CASE("search agrees with brute force over GF(3)") {
  Field f = FieldDescriptor::prime(3);
  std::mt19937 rng(9);
  for (int k = 0; k < 4; ++k) {
    Msc a = random_msc(f, rng);
    std::uint64_t brute = 0;
    for (std::uint64_t code = 0; code < 19683; ++code) {
      Matrix g(3, 3, f);
      std::uint64_t c = code;
      for (int i = 8; i >= 0; --i) {
        g.set(static_cast<std::size_t>(i) / 3, static_cast<std::size_t>(i) % 3, FieldElement::from_residue(f, c % 3));
        c /= 3;
      }
      if (is_automorphism(g, a)) ++brute;
    }
    CHECK(automorphism_search_fp(a).count == brute);
  }
}
