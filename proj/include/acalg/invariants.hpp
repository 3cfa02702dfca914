#pragma once

#include <json.hpp>

#include "acalg/msc.hpp"

namespace acalg {

struct InvariantProfile {
  std::size_t dim_ann = 0;
  std::size_t dim_sq = 0;
  std::size_t dim_ann_cap_sq = 0;
  std::size_t dim_der = 0;
  // Dimension of the space of operators L_x that are derivations.
  std::size_t dim_leftmult_der = 0;
  bool is_lie = false;
  // {x : x y = y x for all y}; reported separately from the profile tuple.
  std::size_t dim_center = 0;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

// Bases as matrix columns (possibly zero columns).
Matrix annihilator(const Msc& a);
Matrix center(const Msc& a);
// Span of all products, A^2.
Matrix derived_subalgebra(const Msc& a);
// Left multiplication operator of the basis vector e_i.
Matrix left_multiplication(const Msc& a, std::size_t i);
Matrix left_multiplication(const Msc& a, const Matrix& x);

InvariantProfile profile(const Msc& a);
nlohmann::json profile_to_json(const InvariantProfile& p);
std::string profile_to_string(const InvariantProfile& p);

}  // namespace acalg
