#include "acalg/orbit.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <map>
#include <numeric>

#include "acalg/catalog.hpp"
#include "acalg/classifier.hpp"
#include "acalg/der_aut.hpp"

namespace acalg {

namespace {

constexpr char kMagic[8] = {'A', 'C', 'A', 'L', 'G', 'O', 'R', 'B'};
constexpr std::uint32_t kCacheVersion = 1;

using Digits = std::array<int, 9>;  // e1e2, e1e3, e2e3 coordinates

void require_small_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw InputError("orbit census needs an odd prime, got " + std::to_string(p));
  if (p > 5) throw FieldTooLarge("orbit census is limited to p <= 5");
}

Digits decode(std::uint64_t p, std::uint32_t index) {
  Digits d{};
  for (int k = 8; k >= 0; --k) {
    d[k] = static_cast<int>(index % p);
    index /= static_cast<std::uint32_t>(p);
  }
  return d;
}

std::uint32_t encode(std::uint64_t p, const Digits& d) {
  std::uint32_t index = 0;
  for (int k = 0; k < 9; ++k) index = index * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(d[k]);
  return index;
}

int modp(long v, int p) { return static_cast<int>(((v % p) + p) % p); }

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw DivisionByZero();
}

int primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    int x = 1, order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  return 1;
}

std::array<std::array<int, 9>, 4> generators(int p) {
  const int w = primitive_root(p);
  return {{
      {w, 0, 0, 0, 1, 0, 0, 0, 1},  // diag(w, 1, 1)
      {1, 1, 0, 0, 1, 0, 0, 0, 1},  // I + E12
      {0, 0, 1, 1, 0, 0, 0, 1, 0},  // e1 -> e2 -> e3 -> e1
      {0, 1, 0, 1, 0, 0, 0, 0, 1},  // swap e1, e2
  }};
}

// Row-major 3x9 MSC of the algebra with the given product digits.
std::array<int, 27> msc_key(const Digits& d, int p) {
  std::array<int, 27> key{};
  auto put = [&](int i, int j, int base, int sign) {
    for (int k = 0; k < 3; ++k) {
      key[k * 9 + i * 3 + j] = modp(sign * d[base + k], p);
    }
  };
  put(0, 1, 0, 1);
  put(1, 0, 0, -1);
  put(0, 2, 3, 1);
  put(2, 0, 3, -1);
  put(1, 2, 6, 1);
  put(2, 1, 6, -1);
  return key;
}

std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Product of x and y from the multiplication table, as a 3-vector.
std::array<int, 3> table_product(const Digits& d, const std::array<int, 3>& x, const std::array<int, 3>& y, int p) {
  std::array<int, 3> out{};
  const int c12 = x[0] * y[1] - x[1] * y[0];
  const int c13 = x[0] * y[2] - x[2] * y[0];
  const int c23 = x[1] * y[2] - x[2] * y[1];
  for (int k = 0; k < 3; ++k) out[k] = modp(c12 * d[k] + c13 * d[3 + k] + c23 * d[6 + k], p);
  return out;
}

}  // namespace

std::uint32_t algebra_count(std::uint64_t p) {
  std::uint64_t n = 1;
  for (int k = 0; k < 9; ++k) n *= p;
  return static_cast<std::uint32_t>(n);
}

std::uint32_t algebra_index(const Msc& a) {
  if (a.dim() != 3 || a.field()->kind() != FieldDescriptor::Kind::PrimeField)
    throw InputError("algebra index needs a 3-dimensional algebra over GF(p)");
  require_anticommutative(a);
  Digits d{};
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (int q = 0; q < 3; ++q)
    for (int k = 0; k < 3; ++k) d[q * 3 + k] = static_cast<int>(a.at(k, pairs[q].first, pairs[q].second).residue());
  return encode(a.field()->characteristic(), d);
}

Msc algebra_from_index(std::uint64_t p, std::uint32_t index) {
  Field f = FieldDescriptor::prime(p);
  Digits d = decode(p, index);
  std::array<Matrix, 3> v{Matrix(3, 1, f), Matrix(3, 1, f), Matrix(3, 1, f)};
  for (int q = 0; q < 3; ++q)
    for (int k = 0; k < 3; ++k) v[q].set(k, 0, FieldElement::from_residue(f, d[q * 3 + k]));
  return Msc::from_products3(v[0], v[1], v[2]);
}

std::uint32_t transform_index(std::uint64_t p64, std::uint32_t index, const std::array<int, 9>& g) {
  const int p = static_cast<int>(p64);
  Digits d = decode(p64, index);
  // M columns: e2e3, e3e1, e1e2.
  int m[3][3];
  for (int k = 0; k < 3; ++k) {
    m[k][0] = d[6 + k];
    m[k][1] = modp(-d[3 + k], p);
    m[k][2] = d[k];
  }
  long det = static_cast<long>(g[0]) * (g[4] * g[8] - g[5] * g[7]) - static_cast<long>(g[1]) * (g[3] * g[8] - g[5] * g[6]) +
             static_cast<long>(g[2]) * (g[3] * g[7] - g[4] * g[6]);
  const int dinv = inverse_mod(modp(det, p), p);
  int gm[3][3];
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      long s = 0;
      for (int k = 0; k < 3; ++k) s += static_cast<long>(g[r * 3 + k]) * m[k][c];
      gm[r][c] = modp(s, p);
    }
  int mp[3][3];
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      long s = 0;
      for (int k = 0; k < 3; ++k) s += static_cast<long>(gm[r][k]) * g[c * 3 + k];
      mp[r][c] = modp(modp(s, p) * static_cast<long>(dinv), p);
    }
  Digits out{};
  for (int k = 0; k < 3; ++k) {
    out[k] = mp[k][2];
    out[3 + k] = modp(-mp[k][1], p);
    out[6 + k] = mp[k][0];
  }
  return encode(p64, out);
}

std::vector<std::uint32_t> orbit_partition(std::uint64_t p) {
  require_small_prime(p);
  const std::uint32_t n = algebra_count(p);
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  const auto gens = generators(static_cast<int>(p));
  for (std::uint32_t x = 0; x < n; ++x)
    for (const auto& g : gens) {
      std::uint32_t a = find(parent, x);
      std::uint32_t b = find(parent, transform_index(p, x, g));
      if (a == b) continue;
      if (a < b) parent[b] = a;
      else parent[a] = b;
    }
  for (std::uint32_t x = 0; x < n; ++x) parent[x] = find(parent, x);
  return parent;
}

void write_orbit_cache(const std::string& path, std::uint64_t p, const std::vector<std::uint32_t>& roots) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write cache " + path);
  auto put32 = [&](std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
  };
  out.write(kMagic, 8);
  put32(kCacheVersion);
  put32(static_cast<std::uint32_t>(p));
  const std::uint64_t count = roots.size();
  put32(static_cast<std::uint32_t>(count));
  put32(static_cast<std::uint32_t>(count >> 32));
  for (auto r : roots) put32(r);
  if (!out) throw InputError("failed writing cache " + path);
}

std::optional<std::vector<std::uint32_t>> read_orbit_cache(const std::string& path, std::uint64_t p) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  auto get32 = [&](std::uint32_t& v) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
    v = b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    return true;
  };
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) return std::nullopt;
  std::uint32_t version, prime, lo, hi;
  if (!get32(version) || !get32(prime) || !get32(lo) || !get32(hi)) return std::nullopt;
  if (version != kCacheVersion || prime != p || hi != 0 || lo != algebra_count(p)) return std::nullopt;
  std::vector<std::uint32_t> roots(lo);
  for (auto& r : roots) {
    if (!get32(r) || r >= lo) return std::nullopt;
  }
  for (std::uint32_t x = 0; x < lo; ++x)
    if (roots[roots[x]] != roots[x] || roots[x] > x) return std::nullopt;
  return roots;
}

std::vector<std::pair<std::string, Msc>> catalog_over(std::uint64_t p) {
  Field f = FieldDescriptor::prime(p);
  std::vector<std::pair<std::string, Msc>> out;
  out.emplace_back("A1", catalog::a1(f));
  for (std::uint64_t l = 0; l < p; ++l) out.emplace_back("A2(" + std::to_string(l) + ")", catalog::a2(FieldElement::from_residue(f, l)));
  out.emplace_back("A3", catalog::a3(f));
  for (std::uint64_t l = 0; l < p; ++l) out.emplace_back("A4(" + std::to_string(l) + ")", catalog::a4(FieldElement::from_residue(f, l)));
  out.emplace_back("A5", catalog::a5(f));
  for (std::uint64_t l = 0; l < p; ++l) out.emplace_back("A6(" + std::to_string(l) + ")", catalog::a6(FieldElement::from_residue(f, l)));
  for (std::uint64_t l = 0; l < p; ++l) out.emplace_back("A7(" + std::to_string(l) + ")", catalog::a7(FieldElement::from_residue(f, l)));
  out.emplace_back("A8", catalog::a8(f));
  out.emplace_back("A9", catalog::a9(f));
  out.emplace_back("sl2", catalog::sl2(f));
  out.emplace_back("h3", catalog::h3(f));
  out.emplace_back("r3'1", catalog::r3_prime(f));
  for (std::uint64_t a = 0; a < p; ++a) out.emplace_back("A5(a=" + std::to_string(a) + ")", catalog::a5_family(FieldElement::from_residue(f, a)));
  return out;
}

OrbitCensus census(std::uint64_t p, const CensusOptions& options) {
  require_small_prime(p);
  if (p == 5 && !options.long_mode) throw InputError("the GF(5) census needs --long");
  std::vector<std::uint32_t> roots;
  if (options.cache_path) {
    if (auto cached = read_orbit_cache(*options.cache_path, p)) roots = std::move(*cached);
  }
  if (roots.empty()) {
    roots = orbit_partition(p);
    if (options.cache_path) write_orbit_cache(*options.cache_path, p, roots);
  }

  OrbitCensus c;
  c.p = p;
  c.total = roots.size();
  c.group_order = gl_order(3, p);
  std::map<std::uint32_t, std::size_t> position;
  for (std::uint32_t x = 0; x < roots.size(); ++x) {
    if (roots[x] != x) continue;
    position[x] = c.orbits.size();
    OrbitInfo o;
    o.id = x;
    o.representative = x;
    c.orbits.push_back(o);
  }
  const int pi = static_cast<int>(p);
  std::vector<std::array<int, 27>> best(c.orbits.size());
  for (std::size_t i = 0; i < c.orbits.size(); ++i) best[i] = msc_key(decode(p, c.orbits[i].id), pi);
  for (std::uint32_t x = 0; x < roots.size(); ++x) {
    std::size_t i = position[roots[x]];
    ++c.orbits[i].size;
    auto key = msc_key(decode(p, x), pi);
    if (key < best[i]) {
      best[i] = key;
      c.orbits[i].representative = x;
    }
  }

  std::uint64_t sum = 0;
  c.sizes_divide = true;
  for (const auto& o : c.orbits) {
    sum += o.size;
    c.sizes_divide = c.sizes_divide && c.group_order % o.size == 0;
  }
  c.sizes_sum = sum == c.total;

  for (auto& o : c.orbits) {
    Msc rep = algebra_from_index(p, o.representative);
    o.profile = profile(rep);
    try {
      o.classification = classify(rep).label.to_string();
    } catch (const Error& e) {
      o.classification = std::string("unclassified: ") + e.what();
    }
  }

  // Exhaustive profile constancy for p = 3; representatives only otherwise.
  c.profiles_exhaustive = p == 3;
  c.profiles_constant = true;
  if (c.profiles_exhaustive) {
    for (std::uint32_t x = 0; x < roots.size(); ++x) {
      auto& o = c.orbits[position[roots[x]]];
      if (!(profile(algebra_from_index(p, x)) == o.profile)) {
        o.profile_constant = false;
        c.profiles_constant = false;
      }
    }
  }

  // Classification consistency on a few members of each orbit.
  {
    std::vector<int> seen(c.orbits.size(), 0);
    for (std::uint32_t x = 0; x < roots.size(); ++x) {
      std::size_t i = position[roots[x]];
      if (seen[i] >= 3) continue;
      ++seen[i];
      if (c.orbits[i].classification.rfind("unclassified", 0) == 0) continue;
      try {
        if (classify(algebra_from_index(p, x)).label.to_string() != c.orbits[i].classification)
          c.classification_consistent = false;
      } catch (const Error&) {
      }
    }
  }

  const std::size_t samples = std::min(options.stabilizer_samples, c.orbits.size());
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& o = c.orbits[s * c.orbits.size() / samples];
    StabilizerCheck chk;
    chk.orbit = o.id;
    chk.size = o.size;
    chk.automorphisms = automorphism_search_fp(algebra_from_index(p, o.representative)).count;
    chk.ok = chk.size * chk.automorphisms == c.group_order;
    c.stabilizer.push_back(chk);
  }

  std::map<std::uint32_t, std::vector<std::string>> by_orbit;
  for (const auto& [name, a] : catalog_over(p)) {
    std::uint32_t root = roots[algebra_index(a)];
    c.catalog.push_back({name, root});
    c.orbits[position[root]].catalog.push_back(name);
    by_orbit[root].push_back(name);
  }
  for (const auto& [root, names] : by_orbit)
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j) c.collisions.emplace_back(names[i], names[j]);
  return c;
}

nlohmann::json census_to_json(const OrbitCensus& c) {
  using nlohmann::json;
  json orbits = json::array();
  for (const auto& o : c.orbits) {
    Msc rep = algebra_from_index(c.p, o.representative);
    json m = json::array();
    for (std::size_t r = 0; r < 3; ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < 9; ++k) row.push_back(rep.matrix()(r, k).to_string());
      m.push_back(row);
    }
    orbits.push_back({{"id", o.id},
                      {"size", o.size},
                      {"representative_index", o.representative},
                      {"representative", m},
                      {"profile", profile_to_json(o.profile)},
                      {"profile_constant", o.profile_constant},
                      {"classification", o.classification},
                      {"catalog", o.catalog}});
  }
  json stab = json::array();
  for (const auto& s : c.stabilizer)
    stab.push_back({{"orbit", s.orbit}, {"size", s.size}, {"automorphisms", s.automorphisms}, {"ok", s.ok}});
  json cat = json::array();
  for (const auto& e : c.catalog) cat.push_back({{"name", e.name}, {"orbit", e.orbit}});
  json col = json::array();
  for (const auto& [a, b] : c.collisions) col.push_back({a, b});
  return {{"p", c.p},
          {"total", c.total},
          {"group_order", c.group_order},
          {"orbit_count", c.orbits.size()},
          {"sizes_sum_to_total", c.sizes_sum},
          {"sizes_divide_group_order", c.sizes_divide},
          {"profiles_checked", c.profiles_exhaustive ? "all members" : "representatives"},
          {"profiles_constant", c.profiles_constant},
          {"classification_consistent", c.classification_consistent},
          {"orbits", orbits},
          {"stabilizer_checks", stab},
          {"catalog", cat},
          {"collisions", col},
          {"caveat",
           "the classification assumes a field where the needed square roots exist and char != 2; "
           "over GF(p) orbit data is evidence for invariant constancy and collisions, not a refutation"}};
}

PlaneSearchAgreement plane_search_agreement(std::uint64_t p64) {
  require_small_prime(p64);
  const int p = static_cast<int>(p64);
  // Normals of all planes: projective points with leading coordinate 1.
  std::vector<std::array<int, 3>> normals;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) normals.push_back({1, a, b});
  for (int b = 0; b < p; ++b) normals.push_back({0, 1, b});
  normals.push_back({0, 0, 1});

  auto basis_of = [p](const std::array<int, 3>& n) {
    // Two independent vectors orthogonal to n.
    std::vector<std::array<int, 3>> out;
    const std::array<std::array<int, 3>, 3> cands{{{modp(-n[1], p), modp(n[0], p), 0},
                                                   {modp(-n[2], p), 0, modp(n[0], p)},
                                                   {0, modp(-n[2], p), modp(n[1], p)}}};
    for (const auto& v : cands) {
      if (v == std::array<int, 3>{0, 0, 0}) continue;
      if (out.empty()) {
        out.push_back(v);
        continue;
      }
      const auto& u = out[0];
      bool dependent = modp(u[0] * v[1] - u[1] * v[0], p) == 0 && modp(u[0] * v[2] - u[2] * v[0], p) == 0 &&
                       modp(u[1] * v[2] - u[2] * v[1], p) == 0;
      if (!dependent) {
        out.push_back(v);
        break;
      }
    }
    return out;
  };
  std::vector<std::array<std::array<int, 3>, 2>> planes;
  for (const auto& n : normals) {
    auto b = basis_of(n);
    planes.push_back({b[0], b[1]});
  }

  PlaneSearchAgreement r;
  const std::uint32_t n = algebra_count(p64);
  for (std::uint32_t x = 0; x < n; ++x) {
    Digits d = decode(p64, x);
    bool found = false;
    for (const auto& pl : planes) {
      auto w = table_product(d, pl[0], pl[1], p);
      if (w == std::array<int, 3>{0, 0, 0}) continue;
      const auto& u = pl[0];
      const auto& v = pl[1];
      long det = static_cast<long>(u[0]) * (v[1] * w[2] - v[2] * w[1]) - static_cast<long>(u[1]) * (v[0] * w[2] - v[2] * w[0]) +
                 static_cast<long>(u[2]) * (v[0] * w[1] - v[1] * w[0]);
      if (modp(det, p) == 0) {
        found = true;
        break;
      }
    }
    ++r.algebras;
    r.with_nontrivial += found;
    if (has_nontrivial_subalgebra(algebra_from_index(p64, x)) == found) ++r.agree;
    else if (!r.first_disagreement) r.first_disagreement = x;
  }
  return r;
}

}  // namespace acalg
