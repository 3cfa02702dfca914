#include "acalg/polynomial.hpp"

#include <algorithm>

namespace acalg {

Polynomial::Polynomial(Field field) : field_(field) {}

Polynomial::Polynomial(Field field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) field_ = join(field_, c.field());
  for (auto& c : coeffs_) c = c.embed(field_);
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::variable(Field field) {
  return Polynomial(field, {FieldElement::zero(field), FieldElement::one(field)});
}

FieldElement Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : FieldElement::zero(field_);
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(join(field_, x.field()));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Field f = join(a.field_, b.field_);
  std::vector<FieldElement> c;
  for (std::size_t k = 0; k < std::max(a.coeffs_.size(), b.coeffs_.size()); ++k)
    c.push_back(a.coeff(k).embed(f) + b.coeff(k).embed(f));
  return Polynomial(f, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Field f = join(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Polynomial(f);
  std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(f));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(f, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) { return (a - b).is_zero(); }

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    std::string term = "(" + coeffs_[k].to_string() + ")";
    if (k >= 1) term += "*" + var;
    if (k >= 2) term += "^" + std::to_string(k);
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

bool poly_identity_zero(const Polynomial& p, std::span<const Polynomial> nonvanishing) {
  for (const auto& q : nonvanishing)
    if (q.is_zero()) throw MathError("a denominator assumed nonzero is identically zero");
  return p.is_zero();
}

}  // namespace acalg
