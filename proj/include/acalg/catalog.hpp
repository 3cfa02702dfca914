#pragma once

#include <array>
#include <optional>
#include <string>

#include "acalg/msc.hpp"

namespace acalg {

enum class Family { Trivial, A1, A2, A3, A4, A5, A6, A7, A8, A9 };
enum class LieAlias { None, Sl2, R3, R3Prime1, H3 };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
bool family_has_parameter(Family f);
std::string lie_alias_name(LieAlias a);

// Products e1e2, e1e3, e2e3 of a one-parameter family, each coordinate
// affine in the parameter: value = c[0] + c[1] * lambda.
struct ProductTemplate {
  std::array<std::array<std::array<int, 2>, 3>, 3> products;
};

ProductTemplate product_template(Family f);
// A5(a) with e2e3 = e1 + a e2; A5 itself is a = 1.
ProductTemplate a5_template();
Msc instantiate(const ProductTemplate& t, const FieldElement& lambda);

// Canonical representative. `lambda` is required exactly for A2, A4, A6, A7.
Msc canonical(Family f, Field field, const std::optional<FieldElement>& lambda = std::nullopt);

namespace catalog {

Msc a1(Field f);
Msc a2(const FieldElement& lambda);
Msc a3(Field f);
Msc a4(const FieldElement& lambda);
Msc a5(Field f);
Msc a5_family(const FieldElement& a);
Msc a6(const FieldElement& lambda);
Msc a7(const FieldElement& lambda);
Msc a8(Field f);
Msc a9(Field f);

Msc sl2(Field f);
Msc r3(const FieldElement& lambda);
Msc r3_prime(Field f);
Msc h3(Field f);

Msc za1(Field f);
Msc za2(Field f);
Msc za3(const FieldElement& lambda);
Msc za4(Field f);
// Needs a square root of -1; over Q this extends to Q(sqrt(-1)).
Msc za5(Field f);

}  // namespace catalog

}  // namespace acalg
