#include "acalg/der_aut.hpp"

#include <array>
#include <vector>

namespace acalg {

Matrix derivation_system(const Msc& a) {
  const std::size_t n = a.dim();
  const std::size_t n2 = n * n;
  Matrix s(n * n2, n2, a.field());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = k * n2 + i * n + j;
        // (D A)_{k,(i,j)} = sum_b D_kb A_{b,(i,j)}
        for (std::size_t b = 0; b < n; ++b) s.set(row, k * n + b, s(row, k * n + b) + a.at(b, i, j));
        // (A (D kron I))_{k,(i,j)} = sum_a A_{k,(a,j)} D_ai
        for (std::size_t x = 0; x < n; ++x) s.set(row, x * n + i, s(row, x * n + i) - a.at(k, x, j));
        // (A (I kron D))_{k,(i,j)} = sum_a A_{k,(i,a)} D_aj
        for (std::size_t x = 0; x < n; ++x) s.set(row, x * n + j, s(row, x * n + j) - a.at(k, i, x));
      }
  return s;
}

Matrix derivation_residual(const Matrix& d, const Msc& a) {
  Matrix id = Matrix::identity(a.dim(), a.field());
  return d * a.matrix() - a.matrix() * (kron(d, id) + kron(id, d));
}

bool is_derivation(const Matrix& d, const Msc& a) { return derivation_residual(d, a).is_zero(); }

bool leibniz_holds(const Matrix& d, const Msc& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix ei = basis_vector(n, i, a.field()), ej = basis_vector(n, j, a.field());
      Matrix lhs = d * product(a, ei, ej);
      Matrix rhs = product(a, d * ei, ej) + product(a, ei, d * ej);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

std::vector<Matrix> derivations(const Msc& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> out;
  for (const Matrix& v : nullspace(derivation_system(a))) {
    Matrix d(n, n, v.field());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d.set(r, c, v(r * n + c, 0));
    if (!leibniz_holds(d, a)) throw std::logic_error("derivation kernel element fails the Leibniz rule");
    out.push_back(d);
  }
  return out;
}

Matrix automorphism_residual(const Matrix& g, const Msc& a) {
  return g * a.matrix() - a.matrix() * kron(g, g);
}

bool is_automorphism(const Matrix& g, const Msc& a) {
  if (g.rows() != a.dim() || g.cols() != a.dim()) throw DimensionMismatch("automorphism size");
  if (determinant(g).is_zero()) return false;
  return automorphism_residual(g, a).is_zero();
}

std::uint64_t gl_order(std::size_t n, std::uint64_t p) {
  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= p;
  std::uint64_t order = 1, pk = 1;
  for (std::size_t k = 0; k < n; ++k) {
    order *= pn - pk;
    pk *= p;
  }
  return order;
}

FpAutomorphisms automorphism_search_fp(const Msc& a, std::size_t keep) {
  Field f = a.field();
  if (f->kind() != FieldDescriptor::Kind::PrimeField) throw InputError("automorphism search needs GF(p)");
  const std::uint64_t p64 = f->characteristic();
  if (p64 > 11) throw FieldTooLarge("exhaustive automorphism search is limited to p <= 11");
  if (a.dim() != 3) throw DimensionMismatch("automorphism search is implemented for dimension 3");
  const int p = static_cast<int>(p64);
  require_anticommutative(a);

  // m[k][c]: coefficient of e_k in the cross-product form, x y = M (x cross y).
  std::array<std::array<int, 3>, 3> m{};
  Matrix sf = structure_form(a);
  for (int k = 0; k < 3; ++k)
    for (int c = 0; c < 3; ++c) m[k][c] = static_cast<int>(sf(k, c).residue());

  auto mod = [p](int v) { return ((v % p) + p) % p; };
  // g is an automorphism iff g M g^T = det(g) M, entry (i, j) being r_i M r_j^T
  // for rows r_i. The 2x2 block of rows 0, 1 pins det(g) before row 2 is chosen.
  auto form = [&](const std::array<int, 3>& u, const std::array<int, 3>& v) {
    int s = 0;
    for (int k = 0; k < 3; ++k)
      for (int c = 0; c < 3; ++c) s += u[k] * m[k][c] * v[c];
    return mod(s);
  };
  std::vector<int> inverse(p, 0);
  for (int x = 1; x < p; ++x)
    for (int y = 1; y < p; ++y)
      if (x * y % p == 1) inverse[x] = y;

  FpAutomorphisms result;
  result.group_order = gl_order(3, p64);
  const int total = p * p * p;
  std::vector<std::array<int, 3>> vecs(total);
  for (int c = 0; c < total; ++c) vecs[c] = {c / (p * p), (c / p) % p, c % p};

  // Scale d with block entries equal to d * M_ij, or -1 when none; 0 means any d.
  auto block_scale = [&](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    const std::array<std::array<int, 3>, 2> r{a, b};
    int d = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        int v = form(r[i], r[j]);
        int mij = m[i][j];
        if (mij == 0) {
          if (v != 0) return -1;
          continue;
        }
        int cand = v * inverse[mij] % p;
        if (cand == 0 || (d != 0 && d != cand)) return -1;
        d = cand;
      }
    return d;
  };

  std::array<std::array<int, 3>, 3> rows{};
  // Rows r0, r1, r2 in lexicographic order of the row-major entries.
  for (int c0 = 0; c0 < total; ++c0)
    for (int c1 = 0; c1 < total; ++c1) {
      rows[0] = vecs[c0];
      rows[1] = vecs[c1];
      const int d_block = block_scale(rows[0], rows[1]);
      if (d_block < 0) continue;
      const auto& r0 = rows[0];
      const auto& r1 = rows[1];
      const std::array<int, 3> x01{mod(r0[1] * r1[2] - r0[2] * r1[1]), mod(r0[2] * r1[0] - r0[0] * r1[2]),
                                   mod(r0[0] * r1[1] - r0[1] * r1[0])};
      for (int c2 = 0; c2 < total; ++c2) {
        rows[2] = vecs[c2];
        const int det = mod(rows[2][0] * x01[0] + rows[2][1] * x01[1] + rows[2][2] * x01[2]);
        if (det == 0 || (d_block != 0 && det != d_block)) continue;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
          for (int j = 0; j < 3 && ok; ++j) {
            if (i < 2 && j < 2) {
              if (d_block == 0) ok = form(rows[i], rows[j]) == mod(det * m[i][j]);
              continue;
            }
            ok = form(rows[i], rows[j]) == mod(det * m[i][j]);
          }
        if (!ok) continue;
        ++result.count;
        if (result.members.size() < keep) {
          Matrix gm(3, 3, f);
          for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) gm.set(r, c, FieldElement::from_residue(f, rows[r][c]));
          result.members.push_back(gm);
        }
      }
    }
  return result;
}

}  // namespace acalg
