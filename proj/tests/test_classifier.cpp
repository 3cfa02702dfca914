#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acalg/classifier.hpp"

using namespace acalg;

namespace {

Field Q() { return FieldDescriptor::rationals(); }
FieldElement q(long n, long d = 1) { return FieldElement(Q(), mpq_class(n, d)); }

BasisChange random_basis_change(Field f, std::mt19937& rng) {
  while (true) {
    Matrix g(3, 3, f);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) g.set(i, j, FieldElement(f, static_cast<long>(rng() % 7) - 3));
    if (!determinant(g).is_zero()) return BasisChange(g);
  }
}

Msc random_msc(Field f, std::mt19937& rng) {
  Matrix m(3, 3, f);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.set(i, j, FieldElement(f, static_cast<long>(rng() % 5) - 2));
  return from_structure_form(m);
}

bool witness_ok(const Msc& a, const Classification& c) {
  return act(c.witness, a.embed(c.field)) == canonical(c.label, c.field);
}

// Independent check: u1 u2 lies in span{u1, u2}.
bool closed_plane(const Msc& a, const Matrix& u1, const Matrix& u2) {
  Msc b = a.embed(join(a.field(), u1.field()));
  Matrix w = product(b, u1, u2);
  return rank(Matrix::from_columns({u1, u2, w})) == 2 && rank(Matrix::from_columns({u1, u2})) == 2;
}

struct Expected {
  Msc algebra;
  std::string label;
};

std::vector<Expected> pinned() {
  return {
      {catalog::a1(Q()), "A1"},
      {catalog::a2(q(2)), "A2(2)"},
      {catalog::a2(q(0)), "A2(0)"},
      {catalog::a3(Q()), "A3"},
      {catalog::a4(q(2)), "A2(3/2)"},
      {catalog::a4(q(1)), "A4(1)"},
      {catalog::a4(q(-1)), "A4(-1) = sl2"},
      {catalog::a4(q(0)), "A3"},
      {catalog::a5(Q()), "A2(1)"},
      {catalog::a6(q(2)), "A6(1/2) = r3(1/2)"},
      {catalog::a6(q(1)), "A6(1) = r3(1)"},
      {catalog::a7(q(2)), "A1"},
      {catalog::a7(q(1)), "A1"},
      {catalog::a7(q(0)), "A1"},
      {catalog::a8(Q()), "A8 = r3'1"},
      {catalog::a9(Q()), "A9 = h3"},
      {catalog::za1(Q()), "A3"},
      {catalog::za2(Q()), "A1"},
      {catalog::za3(q(2)), "A2(1)"},
      {catalog::za4(Q()), "A3"},
  };
}

}  // namespace

TEST_CASE("catalog and ZA forms classify to pinned labels") {
  for (const auto& e : pinned()) {
    Classification c = classify(e.algebra);
    CHECK_MESSAGE(c.label.to_string() == e.label, e.label);
    CHECK(witness_ok(e.algebra, c));
  }
}

TEST_CASE("ZA5 needs sqrt(-1) and lands in A2(-3)") {
  Msc za5 = catalog::za5(Q());
  CHECK(za5.field()->depth() == 1);
  Classification c = classify(za5);
  CHECK(c.label.to_string() == "A2(-3)");
  CHECK(witness_ok(za5, c));
}

TEST_CASE("the canonical form classifies to itself with identity witness") {
  for (const auto& e : pinned()) {
    Classification c = classify(e.algebra);
    Msc canon = canonical(c.label, c.field);
    Classification again = classify(canon);
    CHECK(again.label == c.label);
    CHECK(again.witness.matrix() == Matrix::identity(3, c.field));
  }
}

TEST_CASE("labels are invariant under random changes of basis") {
  std::mt19937 rng(11);
  for (const auto& e : pinned()) {
    ClassLabel base = classify(e.algebra).label;
    for (int k = 0; k < 8; ++k) {
      Msc b = act(random_basis_change(Q(), rng), e.algebra);
      Classification c = classify(b);
      CHECK_MESSAGE(c.label == base, e.label);
      CHECK(witness_ok(b, c));
    }
  }
}

TEST_CASE("classification over GF(7)") {
  Field f = FieldDescriptor::prime(7);
  std::mt19937 rng(5);
  std::vector<Msc> forms{catalog::a1(f), catalog::a3(f), catalog::a8(f), catalog::a9(f),
                         catalog::a2(FieldElement(f, 3L)), catalog::a6(FieldElement(f, 3L))};
  for (const auto& a : forms) {
    ClassLabel base = classify(a).label;
    for (int k = 0; k < 5; ++k) {
      Msc b = act(random_basis_change(f, rng), a);
      Classification c = classify(b);
      CHECK(c.label == base);
      CHECK(witness_ok(b, c));
    }
  }
}

TEST_CASE("find_2dim_subalgebra on random algebras") {
  std::mt19937 rng(3);
  for (int k = 0; k < 60; ++k) {
    Msc a = random_msc(Q(), rng);
    auto w = find_2dim_subalgebra(a);
    REQUIRE(w.has_value());
    CHECK(closed_plane(a, w->u1, w->u2));
    CHECK(w->nontrivial == !product(a.embed(w->u1.field()), w->u1, w->u2).is_zero());
  }
}

TEST_CASE("coordinate planes come first") {
  auto plane12 = [](const SubalgebraWitness& w) {
    return w.u1 == basis_vector(3, 0, Q()) && w.u2 == basis_vector(3, 1, Q());
  };
  auto zero = find_2dim_subalgebra(Msc::zero(3, Q()));
  REQUIRE(zero.has_value());
  CHECK(plane12(*zero));
  CHECK_FALSE(zero->nontrivial);
  auto a1 = find_2dim_subalgebra(catalog::a1(Q()));
  REQUIRE(a1.has_value());
  CHECK(plane12(*a1));
  CHECK(a1->nontrivial);
  auto a9 = find_2dim_subalgebra(catalog::a9(Q()));
  REQUIRE(a9.has_value());
  CHECK_FALSE(a9->nontrivial);
  CHECK(closed_plane(catalog::a9(Q()), a9->u1, a9->u2));
}

TEST_CASE("nontrivial subalgebra test agrees with the candidate scan") {
  std::mt19937 rng(8);
  Field f = FieldDescriptor::prime(5);
  for (int k = 0; k < 80; ++k) {
    Msc a = random_msc(k % 2 ? f : Q(), rng);
    bool any = false;
    for (const auto& w : subalgebra_candidates(a)) any = any || w.nontrivial;
    CHECK(has_nontrivial_subalgebra(a) == any);
  }
  CHECK_FALSE(has_nontrivial_subalgebra(catalog::a9(Q())));
  CHECK(has_nontrivial_subalgebra(catalog::a1(Q())));
}

TEST_CASE("subalgebra form detects closed planes") {
  Msc a = catalog::a1(Q());
  Matrix s = subalgebra_form(a);
  // span{e1, e2} has Pluecker vector e3.
  Matrix n = Matrix::column_vector({q(0), q(0), q(1)});
  CHECK(dot(n, s * n).is_zero());
  CHECK(closed_plane(a, basis_vector(3, 0, Q()), basis_vector(3, 1, Q())));
}

TEST_CASE("A6(lambda) and A6(1/lambda) are isomorphic") {
  for (auto l : {q(2), q(1, 2), q(-3)}) {
    Msc a = catalog::a6(l);
    Msc b = catalog::a6(l.inverse());
    IsoResult r = isomorphic(a, b);
    REQUIRE(r.witness.has_value());
    CHECK(act_iso(*r.witness, a.embed(r.witness->matrix().field())) == b.embed(r.witness->matrix().field()));
  }
}

TEST_CASE("non-isomorphic pair carries evidence") {
  IsoResult r = isomorphic(catalog::a1(Q()), catalog::a3(Q()));
  CHECK_FALSE(r.witness.has_value());
  CHECK_FALSE(r.evidence.empty());
  IsoResult s = isomorphic(catalog::a2(q(2)), catalog::a2(q(3)));
  CHECK_FALSE(s.witness.has_value());
  CHECK_FALSE(s.evidence.empty());
}

TEST_CASE("A7(lambda) is isomorphic to A1") {
  for (auto l : {q(-2), q(0), q(1, 2), q(2)}) {
    IsoResult r = isomorphic(catalog::a7(l), catalog::a1(Q()));
    REQUIRE(r.witness.has_value());
    CHECK(act_iso(*r.witness, catalog::a7(l)) == catalog::a1(Q()));
  }
}

TEST_CASE("A5(a) rescaling and A5(0) = A4(1)") {
  CHECK(catalog::a5_family(q(0)) == catalog::a4(q(1)));
  for (auto [a, b] : {std::pair{q(2), q(3)}, std::pair{q(1), q(-1)}, std::pair{q(1, 2), q(5)}}) {
    Matrix g = Matrix::identity(3, Q());
    g.set(1, 1, b / a);
    g.set(2, 2, a / b);
    CHECK(act(BasisChange(g), catalog::a5_family(b)) == catalog::a5_family(a));
  }
}
