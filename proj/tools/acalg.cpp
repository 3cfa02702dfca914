#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "acalg/claims.hpp"
#include "acalg/classifier.hpp"
#include "acalg/der_aut.hpp"
#include "acalg/msc_io.hpp"
#include "acalg/orbit.hpp"
#include "acalg/report.hpp"

using namespace acalg;
using nlohmann::json;

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw InputError("write failed: " + path);
}

Msc load_checked(const std::string& path) {
  Msc a = load_msc(path);
  require_anticommutative(a);
  return a;
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent = "  ") {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).to_string();
    out << "]\n";
  }
}

int cmd_check(const std::string& path) {
  Msc a = load_checked(path);
  std::cout << "field: " << a.field()->name() << "\n";
  std::cout << "dim: " << a.dim() << "\n";
  std::cout << "anti-commutative: yes\n";
  std::cout << "lie: " << (is_lie(a) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_invariants(const std::string& path) {
  Msc a = load_checked(path);
  InvariantProfile p = profile(a);
  std::cout << "dim_ann: " << p.dim_ann << "\n"
            << "dim_sq: " << p.dim_sq << "\n"
            << "dim_ann_cap_sq: " << p.dim_ann_cap_sq << "\n"
            << "dim_der: " << p.dim_der << "\n"
            << "dim_leftmult_der: " << p.dim_leftmult_der << "\n"
            << "is_lie: " << (p.is_lie ? "yes" : "no") << "\n"
            << "dim_center: " << p.dim_center << "\n";
  return 0;
}

int cmd_derivations(const std::string& path) {
  Msc a = load_checked(path);
  auto basis = derivations(a);
  std::cout << "dim Der: " << basis.size() << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::cout << "D" << i + 1 << ":\n";
    print_matrix(std::cout, basis[i]);
  }
  return 0;
}

int cmd_classify(const std::string& path) {
  Msc a = load_checked(path);
  Classification c = classify(a);
  std::cout << "family: " << family_name(c.label.family) << "\n";
  if (c.label.parameter) std::cout << "parameter: " << c.label.parameter->to_string() << "\n";
  if (c.label.lie_alias != LieAlias::None) std::cout << "alias: " << lie_alias_name(c.label.lie_alias) << "\n";
  std::cout << "label: " << c.label.to_string() << "\n";
  std::cout << "field: " << c.field->name() << "\n";
  std::cout << "witness:\n";
  print_matrix(std::cout, c.witness.matrix());
  return 0;
}

int cmd_iso(const std::string& pa, const std::string& pb) {
  Msc a = load_checked(pa), b = load_checked(pb);
  if (a.dim() != 3 || b.dim() != 3) throw DimensionMismatch("iso needs two three-dimensional algebras");
  IsoResult r = isomorphic(a, b);
  std::cout << "isomorphic: " << (r.witness ? "yes" : "no") << "\n";
  std::cout << "labels: " << r.label_a.to_string() << " | " << r.label_b.to_string() << "\n";
  std::cout << "evidence: " << r.evidence << "\n";
  if (r.witness) {
    std::cout << "witness (B = g A (g^-1 x g^-1)):\n";
    print_matrix(std::cout, r.witness->matrix());
  }
  return 0;
}

int cmd_orbits(std::uint64_t p, bool long_mode, const std::string& out, const std::string& cache) {
  CensusOptions opt;
  opt.long_mode = long_mode;
  if (!cache.empty()) opt.cache_path = cache;
  OrbitCensus c = census(p, opt);
  json j = census_to_json(c);
  std::cout << "p: " << c.p << "\n"
            << "algebras: " << c.total << "\n"
            << "orbits: " << c.orbits.size() << "\n"
            << "sizes sum: " << (c.sizes_sum ? "ok" : "FAIL") << "\n"
            << "sizes divide " << c.group_order << ": " << (c.sizes_divide ? "ok" : "FAIL") << "\n"
            << "profiles constant: " << (c.profiles_constant ? "ok" : "FAIL")
            << (c.profiles_exhaustive ? " (exhaustive)" : " (sampled)") << "\n"
            << "classification consistent: " << (c.classification_consistent ? "ok" : "FAIL") << "\n";
  for (const auto& [x, y] : c.collisions) std::cout << "collision: " << x << " ~ " << y << "\n";
  if (!out.empty()) write_text(out, emit_report(j));
  return 0;
}

int finish_report(const json& report, const std::string& out) {
  std::cout << report_summary(report);
  if (!out.empty()) write_text(out, emit_report(report));
  return report_exit_status(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for three-dimensional anti-commutative algebras"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string path, path_b, out, cache, claims, table;
  std::uint64_t prime = 3;
  bool long_mode = false;

  auto* check = app.add_subcommand("check", "Validate an MSC document");
  check->add_option("msc", path, "MSC JSON document")->required();
  auto* inv = app.add_subcommand("invariants", "Invariant profile");
  inv->add_option("msc", path, "MSC JSON document")->required();
  auto* der = app.add_subcommand("derivations", "Basis of the derivation algebra");
  der->add_option("msc", path, "MSC JSON document")->required();
  auto* cls = app.add_subcommand("classify", "Canonical form with witness");
  cls->add_option("msc", path, "MSC JSON document")->required();
  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("a", path, "first MSC document")->required();
  iso->add_option("b", path_b, "second MSC document")->required();
  auto* orb = app.add_subcommand("orbits", "Orbit census over GF(p)");
  orb->add_option("--prime", prime, "3, or 5 with --long")->required();
  orb->add_flag("--long", long_mode, "allow the GF(5) census");
  orb->add_option("--out", out, "census JSON");
  orb->add_option("--cache", cache, "binary orbit cache");
  auto* ver = app.add_subcommand("verify-paper", "Audit every transcribed claim");
  ver->add_option("--out", out, "report JSON");
  ver->add_option("--claims", claims, "Der/Aut claims fixture");
  ver->add_option("--table", table, "table and statement fixture");
  ver->add_option("--cache", cache, "binary orbit cache for GF(3)");
  auto* cmp = app.add_subcommand("compare-k", "Coverage of the ZA list");
  cmp->add_option("--out", out, "report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*check) return cmd_check(path);
    if (*inv) return cmd_invariants(path);
    if (*der) return cmd_derivations(path);
    if (*cls) return cmd_classify(path);
    if (*iso) return cmd_iso(path, path_b);
    if (*orb) return cmd_orbits(prime, long_mode, out, cache);
    if (*ver) {
      ReportOptions opt;
      opt.claims_path = claims;
      opt.table_path = table;
      if (!cache.empty()) opt.orbit_cache = cache;
      return finish_report(verification_report(opt), out);
    }
    if (*cmp) return finish_report(comparison_report(), out);
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
