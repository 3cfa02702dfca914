#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "acalg/invariants.hpp"

namespace acalg {

// Index of a 3-dimensional anticommutative algebra over GF(p): the nine
// coordinates of e1e2, e1e3, e2e3 read as base-p digits, most significant
// first. Index 0 is the zero algebra.
std::uint32_t algebra_index(const Msc& a);
Msc algebra_from_index(std::uint64_t p, std::uint32_t index);
std::uint32_t algebra_count(std::uint64_t p);

// Structure form of the image under act_iso(g, .): det(g)^{-1} g M g^T.
std::uint32_t transform_index(std::uint64_t p, std::uint32_t index, const std::array<int, 9>& g);

// For every index, the smallest index of its GL_3(GF(p)) orbit. Raises
// FieldTooLarge for p > 5 and InputError for p not an odd prime.
std::vector<std::uint32_t> orbit_partition(std::uint64_t p);

// Binary cache: 8-byte magic "ACALGORB", u32 format version, u32 p,
// u64 entry count, then one u32 orbit root per index. All little-endian.
void write_orbit_cache(const std::string& path, std::uint64_t p, const std::vector<std::uint32_t>& roots);
// nullopt when the file is missing or its header does not match.
std::optional<std::vector<std::uint32_t>> read_orbit_cache(const std::string& path, std::uint64_t p);

struct OrbitInfo {
  std::uint32_t id = 0;           // smallest index in the orbit
  std::uint64_t size = 0;
  std::uint32_t representative = 0;  // index with the smallest row-major MSC
  InvariantProfile profile;
  bool profile_constant = true;
  std::string classification;     // label, or the error that stopped it
  std::vector<std::string> catalog;
};

struct StabilizerCheck {
  std::uint32_t orbit = 0;
  std::uint64_t size = 0;
  std::uint64_t automorphisms = 0;
  bool ok = false;
};

struct CatalogPlacement {
  std::string name;
  std::uint32_t orbit = 0;
};

struct OrbitCensus {
  std::uint64_t p = 0;
  std::uint64_t total = 0;
  std::uint64_t group_order = 0;
  std::vector<OrbitInfo> orbits;
  bool sizes_sum = false;
  bool sizes_divide = false;
  bool profiles_exhaustive = false;
  bool profiles_constant = false;
  std::vector<StabilizerCheck> stabilizer;
  std::vector<CatalogPlacement> catalog;
  std::vector<std::pair<std::string, std::string>> collisions;
  bool classification_consistent = true;
};

struct CensusOptions {
  bool long_mode = false;         // required for p = 5
  std::optional<std::string> cache_path;
  std::size_t stabilizer_samples = 20;
};

OrbitCensus census(std::uint64_t p, const CensusOptions& options = {});
nlohmann::json census_to_json(const OrbitCensus& c);

// Catalog algebras over GF(p) with every parameter value in the prime field.
std::vector<std::pair<std::string, Msc>> catalog_over(std::uint64_t p);

struct PlaneSearchAgreement {
  std::uint64_t algebras = 0;
  std::uint64_t with_nontrivial = 0;
  std::uint64_t agree = 0;
  std::optional<std::uint32_t> first_disagreement;
};

// Compares has_nontrivial_subalgebra with a scan of all p^2 + p + 1 planes
// on every algebra over GF(p).
PlaneSearchAgreement plane_search_agreement(std::uint64_t p);

}  // namespace acalg
