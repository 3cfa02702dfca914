#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "acalg/field.hpp"

namespace acalg {

// Polynomial over Q in named variables.
class MultiPoly {
 public:
  using Monomial = std::map<std::string, unsigned>;

  MultiPoly() = default;
  static MultiPoly constant(const mpq_class& c);
  static MultiPoly variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  std::set<std::string> variables() const;
  unsigned degree_in(const std::string& var) const;
  unsigned total_degree() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  // Missing variables raise std::out_of_range.
  FieldElement eval(const std::map<std::string, FieldElement>& values, Field field) const;
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpq_class& c);
  std::map<Monomial, mpq_class> terms_;
};

struct RationalFunction {
  MultiPoly num = MultiPoly::constant(0);
  MultiPoly den = MultiPoly::constant(1);

  static RationalFunction constant(const mpq_class& c) { return {MultiPoly::constant(c), MultiPoly::constant(1)}; }
  bool is_zero() const { return num.is_zero(); }
  std::set<std::string> variables() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return {-num, den}; }

  // DivisionByZero when the denominator vanishes at the point.
  FieldElement eval(const std::map<std::string, FieldElement>& values, Field field) const;
  std::string to_string() const;
};

// Arithmetic expressions over integers and identifiers with + - * / ^ and
// parentheses, e.g. "b*(1-l)" or "1/t - 1".
RationalFunction parse_expression(std::string_view text);

}  // namespace acalg
