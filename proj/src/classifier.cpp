#include "acalg/classifier.hpp"

#include <algorithm>

namespace acalg {

namespace {

// Samples per curve over infinite fields and over GF(p) with p >= 17.
// Every condition tested below is a nonzero polynomial of degree <= 4 in the
// curve parameter or identically zero, and a conjunction of at most three of
// them excludes at most 10 parameter values.
constexpr long kCurveSamples = 17;

struct Piece {
  bool is_curve = false;
  Matrix point;
  std::vector<Polynomial> curve;  // three coordinates in the parameter s
};

Matrix cross_matrix(const Matrix& p) {
  Field f = p.field();
  FieldElement z = FieldElement::zero(f);
  return Matrix(3, 3, std::vector<FieldElement>{z, -p(2, 0), p(1, 0), p(2, 0), z, -p(0, 0), -p(1, 0), p(0, 0), z});
}

Branch branch_from_form(const Matrix& m, const Matrix& n) {
  Matrix p = m * n;
  if (p.is_zero()) return Branch::Trivial;
  Matrix q = m.transpose() * n;
  if (!cross(p, q).is_zero()) return Branch::C6;
  std::size_t i = 0;
  while (p(i, 0).is_zero()) ++i;
  bool c3_one = (q(i, 0) / p(i, 0)) == FieldElement(p.field(), -1L);
  bool a6 = rank(m * cross_matrix(p)) == 2;
  if (a6) return c3_one ? Branch::A6C3One : Branch::A6;
  return c3_one ? Branch::C3One : Branch::C3;
}

// Congruence diagonalization: W^T S W = diag(d), nonzero entries first.
void diagonalize(const Matrix& s, Matrix& w, std::vector<FieldElement>& d) {
  Field f = s.field();
  w = Matrix::identity(3, f);
  auto form = [&] { return w.transpose() * s * w; };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < 3; ++r) {
      FieldElement t = w(r, i);
      w.set(r, i, w(r, j));
      w.set(r, j, t);
    }
  };
  for (std::size_t k = 0; k < 3; ++k) {
    Matrix b = form();
    std::size_t piv = 3;
    for (std::size_t i = k; i < 3 && piv == 3; ++i)
      if (!b(i, i).is_zero()) piv = i;
    if (piv == 3) {
      for (std::size_t i = k; i < 3 && piv == 3; ++i)
        for (std::size_t j = i + 1; j < 3 && piv == 3; ++j)
          if (!b(i, j).is_zero()) {
            for (std::size_t r = 0; r < 3; ++r) w.set(r, i, w(r, i) + w(r, j));
            piv = i;
          }
    }
    if (piv == 3) break;
    swap_cols(k, piv);
    b = form();
    for (std::size_t j = k + 1; j < 3; ++j) {
      FieldElement c = b(k, j) / b(k, k);
      for (std::size_t r = 0; r < 3; ++r) w.set(r, j, w(r, j) - c * w(r, k));
    }
  }
  Matrix b = form();
  d.clear();
  for (std::size_t i = 0; i < 3; ++i) d.push_back(b(i, i));
}

Polynomial cst(const FieldElement& c) { return Polynomial::constant(c); }

std::vector<Polynomial> transform(const Matrix& w, const std::vector<Polynomial>& t) {
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < 3; ++r) {
    Polynomial acc(join(w.field(), t[0].field()));
    for (std::size_t c = 0; c < 3; ++c) acc = acc + cst(w(r, c)) * t[c];
    out.push_back(acc);
  }
  return out;
}

Matrix vec3(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  return Matrix::column_vector({a, b, c});
}

// Pieces of the isotropic cone of S in Pluecker coordinates.
std::vector<Piece> isotropic_pieces(const Matrix& m) {
  Field f = m.field();
  const FieldElement half = FieldElement(f, 1L) / FieldElement(f, 2L);
  Matrix s = half * (m + m.transpose());
  std::vector<Piece> pieces;
  auto point = [&](const Matrix& p) { pieces.push_back({false, p, {}}); };
  auto curve = [&](std::vector<Polynomial> c) {
    Piece pc{true, Matrix(3, 1, c[0].field()), std::move(c)};
    pieces.push_back(std::move(pc));
  };

  if (s.is_zero()) {
    // Every plane is a subalgebra; for a skew nonzero M all nontrivial ones
    // share one type, so a few coordinate planes suffice.
    const long pts[7][3] = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    for (const auto& p : pts) point(Matrix::from_ints(f, 3, 1, {p[0], p[1], p[2]}));
    return pieces;
  }

  Matrix w(3, 3, f);
  std::vector<FieldElement> d;
  diagonalize(s, w, d);
  std::size_t r = 0;
  while (r < 3 && !d[r].is_zero()) ++r;
  const FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
  Polynomial sv = Polynomial::variable(f);

  if (r == 1) {
    curve(transform(w, {cst(zero), cst(one), sv}));
    point(w * vec3(zero, zero, one));
    return pieces;
  }
  if (r == 2) {
    FieldElement ratio = -d[1] / d[0];
    std::optional<FieldElement> root;
    if (f->is_finite()) {
      root = try_sqrt(ratio);
    } else {
      root = sqrt(ratio);
    }
    if (root) {
      curve(transform(w, {cst(*root), cst(one), sv}));
      curve(transform(w, {cst(-*root), cst(one), sv}));
    }
    point(w * vec3(zero, zero, one));
    return pieces;
  }

  // Smooth conic: find one point, then parametrize by lines through it.
  std::optional<Matrix> t0;
  const std::size_t tries[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (const auto& tr : tries) {
    auto root = try_sqrt(-d[tr[1]] / d[tr[0]]);
    if (!root) continue;
    Matrix t(3, 1, root->field());
    t.set(tr[0], 0, *root);
    t.set(tr[1], 0, one);
    t0 = t;
    break;
  }
  if (!t0 && f->is_finite()) {
    const std::uint64_t p = f->characteristic();
    for (std::uint64_t a = 0; a < p && !t0; ++a) {
      FieldElement fa = FieldElement::from_residue(f, a);
      auto root = try_sqrt(-(d[1] * fa * fa + d[2]) / d[0]);
      if (root) t0 = vec3(*root, fa, one);
    }
  }
  if (!t0) t0 = vec3(sqrt(-d[1] / d[0]), one, zero);
  Field g = t0->field();
  std::vector<Matrix> comp;
  for (std::size_t i = 0; i < 3 && comp.size() < 2; ++i) {
    Matrix e = basis_vector(3, i, g);
    std::vector<Matrix> cols{*t0};
    for (const auto& c : comp) cols.push_back(c);
    cols.push_back(e);
    if (rank(Matrix::from_columns(cols)) == cols.size()) comp.push_back(e);
  }
  Polynomial s_g = Polynomial::variable(g);
  std::vector<Polynomial> wv;
  for (std::size_t i = 0; i < 3; ++i) wv.push_back(cst(comp[0](i, 0)) + cst(comp[1](i, 0)) * s_g);
  Polynomial qw(g), bw(g);
  for (std::size_t i = 0; i < 3; ++i) {
    qw = qw + cst(d[i]) * wv[i] * wv[i];
    bw = bw + cst(d[i] * (*t0)(i, 0)) * wv[i];
  }
  std::vector<Polynomial> pcurve;
  const FieldElement two(g, 2L);
  for (std::size_t i = 0; i < 3; ++i) pcurve.push_back(qw * cst((*t0)(i, 0)) - cst(two) * bw * wv[i]);
  point(w * *t0);
  curve(transform(w, pcurve));
  // s = infinity: w = comp[1].
  FieldElement qinf = FieldElement::zero(g), binf = FieldElement::zero(g);
  for (std::size_t i = 0; i < 3; ++i) {
    qinf += d[i] * comp[1](i, 0) * comp[1](i, 0);
    binf += d[i] * (*t0)(i, 0) * comp[1](i, 0);
  }
  Matrix pinf = qinf * *t0 - (two * binf) * comp[1];
  if (!pinf.is_zero()) point(w * pinf);
  return pieces;
}

std::vector<FieldElement> sample_values(Field f) {
  std::vector<FieldElement> out;
  if (f->is_finite() && f->characteristic() < static_cast<std::uint64_t>(kCurveSamples)) {
    for (std::uint64_t a = 0; a < f->characteristic(); ++a) out.push_back(FieldElement::from_residue(f, a));
  } else {
    for (long a = 0; a < kCurveSamples; ++a) out.emplace_back(f, a);
  }
  return out;
}

Matrix eval_curve(const std::vector<Polynomial>& c, const FieldElement& s) {
  return Matrix::column_vector({c[0].eval(s), c[1].eval(s), c[2].eval(s)});
}

SubalgebraWitness witness_for(const Matrix& m, const Matrix& n) {
  auto ker = nullspace(n.transpose());
  SubalgebraWitness w{ker[0], ker[1], n, false, branch_from_form(m, n)};
  w.nontrivial = w.branch != Branch::Trivial;
  return w;
}

Matrix g1(Field f, const FieldElement& c, const FieldElement& d, const FieldElement& x,
          const FieldElement& y, const FieldElement& z) {
  FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
  return Matrix(3, 3, std::vector<FieldElement>{one, zero, x, c, d, y, zero, zero, z});
}

struct Template {
  FieldElement a3, b3, c3, a6, b6, c6;
};

Template read_template(const Msc& t) {
  return {t.at(0, 0, 2), t.at(1, 0, 2), t.at(2, 0, 2), t.at(0, 1, 2), t.at(1, 1, 2), t.at(2, 1, 2)};
}

class Normalizer {
 public:
  Normalizer(const Msc& a, const Matrix& g0) : g_(g0), t_(act(BasisChange(g0), a)) {}

  void apply(const Matrix& step) {
    t_ = act(BasisChange(step), t_);
    g_ = g_ * step;
  }
  Template tmpl() const { return read_template(t_); }
  Field field() const { return join(g_.field(), t_.field()); }
  const Matrix& g() const { return g_; }

 private:
  Matrix g_;
  Msc t_;
};

ClassLabel label(Family f, std::optional<FieldElement> param = std::nullopt) {
  ClassLabel l;
  l.family = f;
  l.parameter = std::move(param);
  return l;
}

// Representative of {lambda, 1/lambda} and the basis change between them.
std::optional<Matrix> canonicalize_reciprocal(ClassLabel& l, Field f) {
  if (!l.parameter || l.parameter->is_zero()) return std::nullopt;
  if (l.family != Family::A6 && l.family != Family::A4) return std::nullopt;
  FieldElement lam = *l.parameter;
  FieldElement inv = lam.inverse();
  if (!canonical_less(inv, lam)) return std::nullopt;
  FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
  Matrix swap = l.family == Family::A6
      ? Matrix(3, 3, std::vector<FieldElement>{inv, zero, zero, zero, zero, one, zero, one, zero})
      : Matrix(3, 3, std::vector<FieldElement>{inv, zero, zero, zero, zero, -inv, zero, one, zero});
  l.parameter = inv;
  return swap;
}

void assign_alias(ClassLabel& l) {
  switch (l.family) {
    case Family::A4:
      if (l.parameter && *l.parameter == FieldElement(l.parameter->field(), -1L)) l.lie_alias = LieAlias::Sl2;
      break;
    case Family::A6: l.lie_alias = LieAlias::R3; break;
    case Family::A8: l.lie_alias = LieAlias::R3Prime1; break;
    case Family::A9: l.lie_alias = LieAlias::H3; break;
    default: break;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::string ClassLabel::to_string() const {
  std::string s = family_name(family);
  if (parameter) s += "(" + parameter->to_string() + ")";
  if (lie_alias != LieAlias::None) {
    s += " = " + lie_alias_name(lie_alias);
    if (lie_alias == LieAlias::R3 && parameter) s += "(" + parameter->to_string() + ")";
  }
  return s;
}

bool operator==(const ClassLabel& a, const ClassLabel& b) {
  if (a.family != b.family || a.parameter.has_value() != b.parameter.has_value()) return false;
  if (!a.parameter) return true;
  return *a.parameter == *b.parameter;
}

Msc canonical(const ClassLabel& label, Field field) {
  return canonical(label.family, field, label.parameter);
}

Matrix subalgebra_form(const Msc& a) {
  Matrix m = structure_form(a);
  Field f = m.field();
  return (FieldElement(f, 1L) / FieldElement(f, 2L)) * (m + m.transpose());
}

Branch subalgebra_branch(const Msc& a, const Matrix& plucker) {
  return branch_from_form(structure_form(a), plucker);
}

std::vector<SubalgebraWitness> subalgebra_candidates(const Msc& a) {
  Matrix m = structure_form(a);
  std::vector<SubalgebraWitness> out;
  for (const Piece& p : isotropic_pieces(m)) {
    if (!p.is_curve) {
      out.push_back(witness_for(m, p.point));
      continue;
    }
    for (const FieldElement& s : sample_values(p.curve[0].field())) {
      Matrix n = eval_curve(p.curve, s);
      if (!n.is_zero()) out.push_back(witness_for(m, n));
    }
  }
  return out;
}

bool has_nontrivial_subalgebra(const Msc& a) {
  Matrix m = structure_form(a);
  for (const Piece& p : isotropic_pieces(m)) {
    if (!p.is_curve) {
      if (!(m * p.point).is_zero()) return true;
      continue;
    }
    for (std::size_t r = 0; r < 3; ++r) {
      Polynomial mn(join(m.field(), p.curve[0].field()));
      for (std::size_t c = 0; c < 3; ++c) mn = mn + cst(m(r, c)) * p.curve[c];
      if (!poly_identity_zero(mn)) return true;
    }
  }
  return false;
}

std::optional<SubalgebraWitness> find_2dim_subalgebra(const Msc& a) {
  // Coordinate planes <e1,e2>, <e1,e3>, <e2,e3> take precedence.
  Matrix m = structure_form(a);
  std::vector<SubalgebraWitness> coord;
  for (std::size_t i : {2, 1, 0}) {
    Matrix n = basis_vector(3, i, m.field());
    if (dot(n, m * n).is_zero()) coord.push_back(witness_for(m, n));
  }
  for (const auto& c : coord)
    if (c.nontrivial) return c;
  auto cands = subalgebra_candidates(a);
  for (const auto& c : cands)
    if (c.nontrivial) return c;
  if (!coord.empty()) return coord.front();
  if (cands.empty()) return std::nullopt;
  return cands.front();
}

BasisChange adapt_basis(const Msc& a, const SubalgebraWitness& w) {
  Field f = join(a.field(), w.u1.field());
  f = join(f, w.u2.field());
  Matrix f1 = w.u1, f2 = w.u2;
  Matrix prod = product(a, w.u1, w.u2);
  if (!prod.is_zero()) {
    auto coeffs = solve(Matrix::from_columns({w.u1, w.u2}), prod);
    if (!coeffs) throw std::logic_error("witness plane is not closed under the product");
    FieldElement alpha = (*coeffs)(0, 0), beta = (*coeffs)(1, 0);
    if (!beta.is_zero()) {
      f2 = prod;
      f1 = beta.inverse() * w.u1;
    } else {
      f1 = (-alpha).inverse() * w.u2;
      f2 = -alpha * w.u1;
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    Matrix g = Matrix::from_columns({f1, f2, basis_vector(3, k, f)});
    if (!determinant(g).is_zero()) return BasisChange(g);
  }
  throw std::logic_error("witness vectors are dependent");
}

Classification classify(const Msc& a) {
  if (a.dim() != 3) throw DimensionMismatch("classification is implemented for dimension 3");
  require_anticommutative(a);
  Field f = a.field();
  auto finish = [&](ClassLabel l, Matrix g, Branch branch) {
    Field ff = join(f, g.field());
    if (l.parameter) ff = join(ff, l.parameter->field());
    if (auto swap = canonicalize_reciprocal(l, ff)) g = g * *swap;
    assign_alias(l);
    BasisChange bc(g);
    Msc target = canonical(l, ff);
    if (!(act(bc, a) == target)) throw std::logic_error("classification witness failed verification for " + l.to_string());
    if (a == target) bc = BasisChange(Matrix::identity(3, ff));
    return Classification{l, bc, join(ff, bc.matrix().field()), branch};
  };

  if (a.matrix().is_zero()) return finish(label(Family::Trivial), Matrix::identity(3, f), Branch::Trivial);

  auto cands = subalgebra_candidates(a);
  const SubalgebraWitness* best = nullptr;
  for (const auto& c : cands)
    if (c.nontrivial && (!best || c.branch < best->branch)) best = &c;

  if (!best) {
    // No nontrivial two-dimensional subalgebra: M is symmetric of rank 1,
    // unless the nontrivial ones live over a quadratic extension of GF(p).
    Matrix m = structure_form(a);
    if (!(m == m.transpose()) || rank(m) != 1)
      throw NoSquareRoot("nontrivial two-dimensional subalgebras exist only over a quadratic extension of " +
                         f->name());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        Matrix ei = basis_vector(3, i, f), ej = basis_vector(3, j, f);
        Matrix p = product(a, ei, ej);
        if (p.is_zero()) continue;
        return finish(label(Family::A9), Matrix::from_columns({p, ei, ej}), Branch::Trivial);
      }
    throw ClassificationGap("no nontrivial subalgebra and no nonzero product");
  }

  Normalizer nz(a, adapt_basis(a, *best).matrix());
  Field g = nz.field();
  const FieldElement zero = FieldElement::zero(g), one = FieldElement::one(g);
  Template t = nz.tmpl();
  Branch branch = best->branch;

  switch (branch) {
    case Branch::C6: {
      if (t.c6.is_zero()) throw std::logic_error("branch prediction mismatch (c6)");
      FieldElement d = t.c6.inverse();
      FieldElement c = -t.c3 / t.c6;
      FieldElement x = t.a6 / t.c6;
      FieldElement y = (t.b6 - c * t.a6 - x * (one - c * t.c6)) / t.c6;
      nz.apply(g1(g, c, d, x, y, one));
      t = nz.tmpl();
      if (t.a3.is_zero() && t.b3.is_zero()) return finish(label(Family::A1), nz.g(), branch);
      if (!t.a3.is_zero()) {
        FieldElement lam = t.b3 / t.a3;
        nz.apply(g1(g, zero, one, zero, zero, t.a3.inverse()));
        return finish(label(Family::A2, lam), nz.g(), branch);
      }
      nz.apply(g1(g, zero, one, zero, zero, t.b3.inverse()));
      return finish(label(Family::A3), nz.g(), branch);
    }
    case Branch::A6: {
      if (!t.c6.is_zero() || t.a6.is_zero()) throw std::logic_error("branch prediction mismatch (a6)");
      FieldElement lam = t.c3;
      FieldElement c = zero;
      if (!(lam == -one)) {
        c = (t.c3 * t.b6 - t.a3) / (t.a6 * (one + t.c3));
      } else if (!(t.a3 + t.b6).is_zero()) {
        throw ClassificationGap("c3 = -1 with a3 + b6 != 0");
      }
      FieldElement x = t.b6 - c * t.a6;
      FieldElement y = c * x - (t.b3 + c * t.b6 - c * t.a3 - c * c * t.a6) / (one - t.c3);
      nz.apply(g1(g, c, t.a6.inverse(), x, y, one));
      return finish(label(Family::A4, lam), nz.g(), branch);
    }
    case Branch::A6C3One: {
      auto roots = solve_quadratic((t.b6 - t.a3) / t.a6, -t.b3 / t.a6);
      FieldElement c = roots.front();
      FieldElement delta = (t.a3 - t.b6) * (t.a3 - t.b6) + FieldElement(g, 4L) * t.a6 * t.b3;
      if (delta.is_zero()) {
        FieldElement x = t.a3 + c * t.a6;
        nz.apply(g1(c.field(), c, t.a6.inverse(), x, zero, one));
        return finish(label(Family::A4, one), nz.g(), branch);
      }
      FieldElement s = t.b6 - t.a3 - FieldElement(g, 2L) * c * t.a6;
      FieldElement z = s.inverse();
      FieldElement x = z * (t.a3 + c * t.a6);
      nz.apply(g1(c.field(), c, s / t.a6, x, zero, z));
      return finish(label(Family::A5), nz.g(), branch);
    }
    case Branch::C3: {
      FieldElement k = t.a3 - t.b6 * t.c3;
      FieldElement z = k.is_zero() ? one : k.inverse();
      FieldElement y = -z * t.b3 / (one - t.c3);
      nz.apply(g1(g, zero, one, z * t.b6, y, z));
      return finish(label(k.is_zero() ? Family::A6 : Family::A7, t.c3), nz.g(), branch);
    }
    case Branch::C3One: {
      if (!(t.a3 == t.b6)) {
        FieldElement z = (t.a3 - t.b6).inverse();
        FieldElement c = t.b3 / (t.a3 - t.b6);
        nz.apply(g1(g, c, one, z * t.b6, zero, z));
        return finish(label(Family::A7, one), nz.g(), branch);
      }
      if (!t.b3.is_zero()) {
        nz.apply(g1(g, zero, t.b3, t.b6, zero, one));
        return finish(label(Family::A8), nz.g(), branch);
      }
      nz.apply(g1(g, zero, one, t.b6, zero, one));
      return finish(label(Family::A6, one), nz.g(), branch);
    }
    case Branch::Trivial:
      break;
  }
  throw std::logic_error("unreachable classification branch");
}

IsoResult isomorphic(const Msc& a, const Msc& b) {
  IsoResult r;
  Field f = join(a.field(), b.field());
  Classification ca = classify(a.embed(f));
  Field fa = join(f, ca.field);
  Classification cb = classify(b.embed(fa));
  r.label_a = ca.label;
  r.label_b = cb.label;
  if (ca.label == cb.label) {
    Matrix g = cb.witness.matrix() * invert(ca.witness.matrix());
    BasisChange bc(g);
    if (!(act_iso(bc, a) == b.embed(bc.matrix().field())))
      throw std::logic_error("composed isomorphism witness failed verification");
    r.witness = bc;
    r.evidence = "same label " + ca.label.to_string();
    return r;
  }
  r.evidence = "labels differ: " + ca.label.to_string() + " vs " + cb.label.to_string();
  InvariantProfile pa = profile(a), pb = profile(b);
  const std::pair<const char*, std::pair<std::size_t, std::size_t>> cells[] = {
      {"dim_ann", {pa.dim_ann, pb.dim_ann}},
      {"dim_sq", {pa.dim_sq, pb.dim_sq}},
      {"dim_ann_cap_sq", {pa.dim_ann_cap_sq, pb.dim_ann_cap_sq}},
      {"dim_der", {pa.dim_der, pb.dim_der}},
      {"dim_leftmult_der", {pa.dim_leftmult_der, pb.dim_leftmult_der}},
      {"is_lie", {pa.is_lie, pb.is_lie}}};
  for (const auto& [name, v] : cells)
    if (v.first != v.second) {
      r.evidence += "; " + std::string(name) + " " + std::to_string(v.first) + " vs " + std::to_string(v.second);
      break;
    }
  return r;
}

KComparison compare_with_k() {
  Field q = FieldDescriptor::rationals();
  std::vector<KEntry> entries;
  auto add = [&](std::string name, std::optional<mpq_class> l, Msc a) {
    Field f = a.field();
    entries.push_back({std::move(name), l, a, is_lie(a),
                       jacobiator(a, basis_vector(3, 0, f), basis_vector(3, 1, f), basis_vector(3, 2, f)),
                       std::nullopt, ""});
  };
  add("ZA1", std::nullopt, catalog::za1(q));
  add("ZA2", std::nullopt, catalog::za2(q));
  for (const mpq_class& l : {mpq_class(-2), mpq_class(-1), mpq_class(1, 2), mpq_class(1), mpq_class(2)})
    add("ZA3", l, catalog::za3(FieldElement(q, l)));
  add("ZA4", std::nullopt, catalog::za4(q));
  add("ZA5", std::nullopt, catalog::za5(q));

  const std::vector<Family> families{Family::A1, Family::A2, Family::A3, Family::A4, Family::A5, Family::A7};
  std::vector<bool> hit(families.size(), false);
  for (auto& e : entries) {
    try {
      e.result = classify(e.input);
      for (std::size_t i = 0; i < families.size(); ++i)
        if (families[i] == e.result->label.family) hit[i] = true;
    } catch (const MathError& err) {
      e.failure = err.what();
    }
  }
  KComparison out;
  out.entries = std::move(entries);
  for (std::size_t i = 0; i < families.size(); ++i)
    (hit[i] ? out.attained : out.missing).push_back(family_name(families[i]));
  out.complete = out.missing.empty();
  return out;
}

}  // namespace acalg
