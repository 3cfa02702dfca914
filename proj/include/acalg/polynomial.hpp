#pragma once

#include <span>
#include <string>
#include <vector>

#include "acalg/field.hpp"

namespace acalg {

// Dense univariate polynomial over a field, lowest degree first.
class Polynomial {
 public:
  explicit Polynomial(Field field);
  Polynomial(Field field, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  // The polynomial `s`.
  static Polynomial variable(Field field);

  Field field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(std::size_t k) const;
  FieldElement eval(const FieldElement& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

// Exact zero test for a polynomial identity. Each entry of `nonvanishing`
// is a denominator or factor assumed nonzero; clearing it cannot turn a
// nonzero polynomial into zero, so the test reduces to the coefficients.
bool poly_identity_zero(const Polynomial& p, std::span<const Polynomial> nonvanishing = {});

}  // namespace acalg
