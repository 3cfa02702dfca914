#include "acalg/invariants.hpp"

#include "acalg/der_aut.hpp"

namespace acalg {

namespace {

Matrix kernel_columns(const Matrix& system, std::size_t n, Field f) {
  auto ker = nullspace(system);
  if (ker.empty()) return Matrix(n, 0, f);
  return Matrix::from_columns(ker);
}

// Right multiplication by e_j: x -> x e_j.
Matrix right_multiplication(const Msc& a, std::size_t j) {
  const std::size_t n = a.dim();
  Matrix r(n, n, a.field());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) r.set(k, i, a.at(k, i, j));
  return r;
}

}  // namespace

Matrix left_multiplication(const Msc& a, std::size_t i) {
  const std::size_t n = a.dim();
  Matrix l(n, n, a.field());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) l.set(k, j, a.at(k, i, j));
  return l;
}

Matrix left_multiplication(const Msc& a, const Matrix& x) {
  Matrix l(a.dim(), a.dim(), join(a.field(), x.field()));
  for (std::size_t i = 0; i < a.dim(); ++i) l = l + x(i, 0) * left_multiplication(a, i);
  return l;
}

Matrix annihilator(const Msc& a) {
  const std::size_t n = a.dim();
  Matrix system = right_multiplication(a, 0).vstack(left_multiplication(a, 0));
  for (std::size_t j = 1; j < n; ++j)
    system = system.vstack(right_multiplication(a, j)).vstack(left_multiplication(a, j));
  return kernel_columns(system, n, a.field());
}

Matrix center(const Msc& a) {
  const std::size_t n = a.dim();
  Matrix system = right_multiplication(a, 0) - left_multiplication(a, 0);
  for (std::size_t j = 1; j < n; ++j)
    system = system.vstack(right_multiplication(a, j) - left_multiplication(a, j));
  return kernel_columns(system, n, a.field());
}

Matrix derived_subalgebra(const Msc& a) { return column_space(a.matrix()); }

InvariantProfile profile(const Msc& a) {
  const std::size_t n = a.dim();
  InvariantProfile p;
  Matrix ann = annihilator(a);
  Matrix sq = derived_subalgebra(a);
  p.dim_ann = ann.cols();
  p.dim_sq = sq.cols();
  p.dim_ann_cap_sq = intersection_dim(ann, sq);
  Matrix system = derivation_system(a);
  p.dim_der = n * n - rank(system);
  // Columns vec(L_{e_i}); x with L_x a derivation is the kernel of S * [vec L_e].
  Matrix lvec(n * n, n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l = left_multiplication(a, i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) lvec.set(r * n + c, i, l(r, c));
  }
  p.dim_leftmult_der = n - rank(system * lvec) - p.dim_ann;
  p.is_lie = is_lie(a);
  p.dim_center = center(a).cols();
  return p;
}

nlohmann::json profile_to_json(const InvariantProfile& p) {
  return {{"dim_ann", p.dim_ann},
          {"dim_sq", p.dim_sq},
          {"dim_ann_cap_sq", p.dim_ann_cap_sq},
          {"dim_der", p.dim_der},
          {"dim_leftmult_der", p.dim_leftmult_der},
          {"is_lie", p.is_lie},
          {"dim_center", p.dim_center}};
}

std::string profile_to_string(const InvariantProfile& p) {
  return "(" + std::to_string(p.dim_ann) + "," + std::to_string(p.dim_sq) + "," +
         std::to_string(p.dim_ann_cap_sq) + "," + std::to_string(p.dim_der) + "," +
         std::to_string(p.dim_leftmult_der) + "," + (p.is_lie ? "lie" : "non-lie") + ")";
}

}  // namespace acalg
