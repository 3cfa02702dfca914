#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acalg/errors.hpp"

namespace acalg {

class FieldDescriptor;
using Field = const FieldDescriptor*;

inline constexpr int kDefaultTowerDepth = 6;

// Element of Q, GF(p) or a nested quadratic tower Q(r1)(r2)...(rk).
//
// Tower elements hold 2^k rational coordinates over the product basis
// r1^b1 * ... * rk^bk, indexed by the bitmask b. The square of generator
// r_{j+1} is an arbitrary element of the tower of depth j.
class FieldElement {
 public:
  FieldElement();
  FieldElement(Field field, long value);
  FieldElement(Field field, const mpq_class& value);

  static FieldElement zero(Field field) { return FieldElement(field, 0L); }
  static FieldElement one(Field field) { return FieldElement(field, 1L); }
  static FieldElement from_coords(Field field, std::vector<mpq_class> coords);
  static FieldElement from_residue(Field field, std::uint64_t residue);
  // The top generator of a tower.
  static FieldElement generator(Field field);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  // True when the value lies in the prime subfield (Q or GF(p)).
  bool is_rational() const;
  std::optional<mpq_class> as_rational() const;
  std::uint64_t residue() const { return residue_; }
  const std::vector<mpq_class>& coords() const { return coords_; }

  // Embedding into a tower that has this element's field as a prefix.
  FieldElement embed(Field target) const;

  FieldElement inverse() const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  // Deterministic total order: lexicographic over coordinates, each compared
  // as a (numerator, denominator) pair. Residues compare as integers.
  friend std::strong_ordering canonical_compare(const FieldElement& a,
                                                 const FieldElement& b);

  std::string to_string() const;
  static FieldElement parse(std::string_view text, Field field);

 private:
  Field field_;
  std::uint64_t residue_ = 0;
  std::vector<mpq_class> coords_;
};

inline bool canonical_less(const FieldElement& a, const FieldElement& b) {
  return canonical_compare(a, b) < 0;
}

class FieldDescriptor {
 public:
  enum class Kind { Rationals, PrimeField, Tower };

  static Field rationals();
  static Field prime(std::uint64_t p);

  // Adjoin a square root of `radicand`, which must lie in this field and must
  // not already be a square. Descriptors are interned, so equal towers are
  // the same pointer.
  Field adjoin(const FieldElement& radicand,
               int max_depth = kDefaultTowerDepth) const;

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::PrimeField; }
  std::uint64_t characteristic() const { return p_; }
  int depth() const { return depth_; }
  std::size_t coord_count() const { return std::size_t{1} << depth_; }
  Field parent() const { return parent_; }
  const FieldElement& radicand() const { return radicand_; }
  Field prefix(int depth) const;
  bool is_prefix_of(Field other) const;
  // Squares of the generators, innermost first.
  std::vector<FieldElement> radicands() const;

  std::string name() const;
  // Product-basis label for the bitmask, e.g. "sqrt(2*3)".
  std::string basis_label(std::size_t mask) const;

 private:
  FieldDescriptor() = default;
  friend class FieldRegistry;

  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
  int depth_ = 0;
  Field parent_ = nullptr;
  FieldElement radicand_;
};

// Smallest field containing both, when one is a prefix of the other.
Field join(Field a, Field b);

// Square root with deterministic sign. Looks for a representation in the
// current tower first and adjoins a new generator only when none exists.
// Prime fields never extend; a non-residue raises NoSquareRoot.
FieldElement sqrt(const FieldElement& a, int max_depth = kDefaultTowerDepth);
std::optional<FieldElement> try_sqrt(const FieldElement& a);

// Roots of x^2 - c x + a, sorted by the canonical order, repeated root once.
std::vector<FieldElement> solve_quadratic(const FieldElement& c,
                                          const FieldElement& a,
                                          int max_depth = kDefaultTowerDepth);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::optional<std::uint64_t> mod_sqrt(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);

}  // namespace acalg
