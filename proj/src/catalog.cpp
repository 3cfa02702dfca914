#include "acalg/catalog.hpp"

namespace acalg {

namespace {

using T = ProductTemplate;

// {const, lambda} pairs for the coordinates of e1e2, e1e3, e2e3.
constexpr T kA1{{{{{{0, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {1, 0}}}}}};
constexpr T kA2{{{{{{0, 0}, {1, 0}, {0, 0}}}, {{{1, 0}, {0, 1}, {0, 0}}}, {{{0, 0}, {0, 0}, {1, 0}}}}}};
constexpr T kA3{{{{{{0, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {1, 0}}}}}};
constexpr T kA4{{{{{{0, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 1}}}, {{{1, 0}, {0, 0}, {0, 0}}}}}};
constexpr T kA5a{{{{{{0, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {1, 0}}}, {{{1, 0}, {0, 1}, {0, 0}}}}}};
constexpr T kA6{{{{{{0, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 1}}}, {{{0, 0}, {0, 0}, {0, 0}}}}}};
constexpr T kA7{{{{{{0, 0}, {1, 0}, {0, 0}}}, {{{1, 0}, {0, 0}, {0, 1}}}, {{{0, 0}, {0, 0}, {0, 0}}}}}};
constexpr T kA8{{{{{{0, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {1, 0}, {1, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}}}};
constexpr T kA9{{{{{{0, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {0, 0}}}, {{{1, 0}, {0, 0}, {0, 0}}}}}};
constexpr T kZero{};

Msc products(Field f, std::array<std::array<long, 3>, 3> p) {
  auto vec = [&](const std::array<long, 3>& v) {
    return Matrix::column_vector({FieldElement(f, v[0]), FieldElement(f, v[1]), FieldElement(f, v[2])});
  };
  return Msc::from_products3(vec(p[0]), vec(p[1]), vec(p[2]));
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Trivial: return "trivial";
    case Family::A1: return "A1";
    case Family::A2: return "A2";
    case Family::A3: return "A3";
    case Family::A4: return "A4";
    case Family::A5: return "A5";
    case Family::A6: return "A6";
    case Family::A7: return "A7";
    case Family::A8: return "A8";
    case Family::A9: return "A9";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::Trivial, Family::A1, Family::A2, Family::A3, Family::A4, Family::A5,
                   Family::A6, Family::A7, Family::A8, Family::A9})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

bool family_has_parameter(Family f) {
  return f == Family::A2 || f == Family::A4 || f == Family::A6 || f == Family::A7;
}

std::string lie_alias_name(LieAlias a) {
  switch (a) {
    case LieAlias::None: return "";
    case LieAlias::Sl2: return "sl2";
    case LieAlias::R3: return "r3";
    case LieAlias::R3Prime1: return "r3'1";
    case LieAlias::H3: return "h3";
  }
  return "?";
}

ProductTemplate product_template(Family f) {
  switch (f) {
    case Family::Trivial: return kZero;
    case Family::A1: return kA1;
    case Family::A2: return kA2;
    case Family::A3: return kA3;
    case Family::A4: return kA4;
    case Family::A5: {
      T t = kA5a;
      t.products[2][1] = {1, 0};
      return t;
    }
    case Family::A6: return kA6;
    case Family::A7: return kA7;
    case Family::A8: return kA8;
    case Family::A9: return kA9;
  }
  return kZero;
}

ProductTemplate a5_template() { return kA5a; }

Msc instantiate(const ProductTemplate& t, const FieldElement& lambda) {
  Field f = lambda.field();
  std::array<Matrix, 3> v{Matrix(3, 1, f), Matrix(3, 1, f), Matrix(3, 1, f)};
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t k = 0; k < 3; ++k)
      v[p].set(k, 0, FieldElement(f, long{t.products[p][k][0]}) + FieldElement(f, long{t.products[p][k][1]}) * lambda);
  return Msc::from_products3(v[0], v[1], v[2]);
}

Msc canonical(Family f, Field field, const std::optional<FieldElement>& lambda) {
  if (family_has_parameter(f) != lambda.has_value())
    throw std::invalid_argument("parameter presence does not match family " + family_name(f));
  return instantiate(product_template(f), lambda ? lambda->embed(join(field, lambda->field()))
                                                 : FieldElement::zero(field));
}

namespace catalog {

Msc a1(Field f) { return canonical(Family::A1, f); }
Msc a2(const FieldElement& l) { return canonical(Family::A2, l.field(), l); }
Msc a3(Field f) { return canonical(Family::A3, f); }
Msc a4(const FieldElement& l) { return canonical(Family::A4, l.field(), l); }
Msc a5(Field f) { return canonical(Family::A5, f); }
Msc a5_family(const FieldElement& a) { return instantiate(kA5a, a); }
Msc a6(const FieldElement& l) { return canonical(Family::A6, l.field(), l); }
Msc a7(const FieldElement& l) { return canonical(Family::A7, l.field(), l); }
Msc a8(Field f) { return canonical(Family::A8, f); }
Msc a9(Field f) { return canonical(Family::A9, f); }

Msc sl2(Field f) { return products(f, {{{0, 0, 1}, {-2, 0, 0}, {0, 2, 0}}}); }
Msc r3(const FieldElement& l) { return a6(l); }
Msc r3_prime(Field f) { return a8(f); }
Msc h3(Field f) { return a9(f); }

Msc za1(Field f) { return products(f, {{{0, 0, 1}, {0, 0, 0}, {0, 1, 0}}}); }
Msc za2(Field f) { return products(f, {{{0, 0, 1}, {0, 0, -1}, {0, 1, 1}}}); }

Msc za3(const FieldElement& l) {
  Field f = l.field();
  auto c = [&](long v) { return FieldElement(f, v); };
  return Msc::from_products3(Matrix::column_vector({c(0), c(0), c(1)}),
                             Matrix::column_vector({c(0), c(-1), c(0)}),
                             Matrix::column_vector({c(1), l, c(0)}));
}

Msc za4(Field f) { return products(f, {{{0, 0, 1}, {-1, -2, 0}, {1, 2, 2}}}); }

Msc za5(Field f) {
  FieldElement i = sqrt(FieldElement(f, -1L));
  Field g = i.field();
  auto c = [&](long v) { return FieldElement(g, v); };
  return Msc::from_products3(Matrix::column_vector({c(0), c(0), c(1)}),
                             Matrix::column_vector({c(0), c(-1), c(0)}),
                             Matrix::column_vector({c(1), c(1), i}));
}

}  // namespace catalog

}  // namespace acalg
