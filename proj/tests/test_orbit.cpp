#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "acalg/catalog.hpp"
#include "acalg/classifier.hpp"
#include "acalg/der_aut.hpp"
#include "acalg/orbit.hpp"

using namespace acalg;

namespace {

Matrix residues(Field f, const std::array<int, 9>& g) {
  Matrix m(3, 3, f);
  for (std::size_t i = 0; i < 9; ++i) m.set(i / 3, i % 3, FieldElement::from_residue(f, static_cast<std::uint64_t>(g[i])));
  return m;
}

const OrbitCensus& census3() {
  static const OrbitCensus c = census(3);
  return c;
}

std::uint32_t orbit_of(const std::vector<std::uint32_t>& roots, const Msc& a) { return roots[algebra_index(a)]; }

}  // namespace

TEST_CASE("index round trip") {
  CHECK(algebra_count(3) == 19683);
  CHECK(algebra_index(Msc::zero(3, FieldDescriptor::prime(3))) == 0);
  for (std::uint32_t i : {0u, 1u, 17u, 4000u, 19682u}) {
    Msc a = algebra_from_index(3, i);
    CHECK(is_anticommutative(a));
    CHECK(algebra_index(a) == i);
  }
}

TEST_CASE("transform_index matches act_iso") {
  std::mt19937 rng(11);
  for (std::uint64_t p : {3u, 5u}) {
    Field f = FieldDescriptor::prime(p);
    int done = 0;
    while (done < 40) {
      std::array<int, 9> g{};
      for (auto& x : g) x = static_cast<int>(rng() % p);
      Matrix m = residues(f, g);
      if (determinant(m).is_zero()) continue;
      std::uint32_t idx = static_cast<std::uint32_t>(rng() % algebra_count(p));
      Msc image = act_iso(BasisChange(m), algebra_from_index(p, idx));
      CHECK(transform_index(p, idx, g) == algebra_index(image));
      ++done;
    }
  }
}

TEST_CASE("partition guards") {
  CHECK_THROWS_AS(orbit_partition(7), FieldTooLarge);
  CHECK_THROWS_AS(orbit_partition(4), InputError);
  CHECK_THROWS_AS(census(5), InputError);
}

TEST_CASE("orbit cache round trip") {
  const std::string path = "acalg_test_orbits.bin";
  std::vector<std::uint32_t> roots = orbit_partition(3);
  write_orbit_cache(path, 3, roots);
  auto back = read_orbit_cache(path, 3);
  REQUIRE(back.has_value());
  CHECK(*back == roots);
  CHECK_FALSE(read_orbit_cache(path, 5).has_value());
  {
    std::fstream io(path, std::ios::in | std::ios::out | std::ios::binary);
    io.seekp(0);
    io.write("XCALGORB", 8);
  }
  CHECK_FALSE(read_orbit_cache(path, 3).has_value());
  CHECK_FALSE(read_orbit_cache("no_such_cache.bin", 3).has_value());
  std::remove(path.c_str());
}

TEST_CASE("GF(3) census") {
  const OrbitCensus& c = census3();
  CHECK(c.total == 19683);
  CHECK(c.group_order == 11232);
  // Regression constant from the full union-find enumeration.
  CHECK(c.orbits.size() == 16);
  std::uint64_t sum = 0;
  for (const auto& o : c.orbits) {
    sum += o.size;
    CHECK(11232 % o.size == 0);
    CHECK(o.profile_constant);
  }
  CHECK(sum == 19683);
  CHECK(c.sizes_sum);
  CHECK(c.sizes_divide);
  CHECK(c.profiles_exhaustive);
  CHECK(c.profiles_constant);
  CHECK(c.classification_consistent);
  REQUIRE(c.stabilizer.size() == 16);
  for (const auto& s : c.stabilizer) CHECK(s.size * s.automorphisms == 11232);
  CHECK(c.orbits.front().id == 0);
  CHECK(c.orbits.front().size == 1);
}

TEST_CASE("orbit-stabilizer against a direct automorphism count") {
  const OrbitCensus& c = census3();
  for (std::size_t i = 0; i < c.orbits.size(); i += 5) {
    Msc rep = algebra_from_index(3, c.orbits[i].representative);
    CHECK(c.orbits[i].size * automorphism_search_fp(rep).count == 11232);
  }
}

TEST_CASE("catalog placement") {
  std::vector<std::uint32_t> roots = orbit_partition(3);
  const OrbitCensus& c = census3();
  Field f = FieldDescriptor::prime(3);
  CHECK(orbit_of(roots, catalog::a9(f)) == orbit_of(roots, catalog::h3(f)));
  CHECK(orbit_of(roots, catalog::a5_family(FieldElement(f, 0L))) ==
        orbit_of(roots, catalog::a4(FieldElement(f, 1L))));
  std::set<std::string> names;
  for (const auto& e : c.catalog) names.insert(e.name);
  CHECK(names.count("A1") == 1);
  CHECK(names.count("h3") == 1);
}

TEST_CASE("GF(5): A6(2) and A6(3) share an orbit") {
  std::vector<std::uint32_t> roots = orbit_partition(5);
  Field f = FieldDescriptor::prime(5);
  CHECK(roots[algebra_index(catalog::a6(FieldElement(f, 2L)))] == roots[algebra_index(catalog::a6(FieldElement(f, 3L)))]);
  CHECK(roots[algebra_index(catalog::a6(FieldElement(f, 2L)))] != roots[algebra_index(catalog::a6(FieldElement(f, 4L)))]);
  std::set<std::uint32_t> distinct(roots.begin(), roots.end());
  CHECK(distinct.size() == 20);
}

TEST_CASE("plane search agrees on all of GF(3)") {
  PlaneSearchAgreement a = plane_search_agreement(3);
  CHECK(a.algebras == 19683);
  CHECK(a.agree == 19683);
  CHECK_FALSE(a.first_disagreement.has_value());
}

TEST_CASE("census json is deterministic") {
  CHECK(census_to_json(census3()).dump() == census_to_json(census(3)).dump());
}
