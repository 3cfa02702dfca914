#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "acalg/classifier.hpp"

namespace acalg {

inline constexpr const char* kToolVersion = "0.1.0";

std::string default_table_claims_path();
nlohmann::json parse_table_claims(const std::string& text, const std::string& origin);
nlohmann::json load_table_claims(const std::string& path);

struct ReportOptions {
  std::string claims_path = "";   // empty: default fixture
  std::string table_path = "";
  std::optional<std::string> orbit_cache;
};

// Sections anticommutativity, jacobi, classification, isomorphisms,
// invariant_table, der_aut_audit, k_comparison, orbit_census. Each holds
// "entries" of {claim, locator, status, computed, payload}.
nlohmann::json verification_report(const ReportOptions& options = {});
nlohmann::json comparison_report();
nlohmann::json k_comparison_section(const KComparison& k);
// One entry per table cell and per uniqueness statement of the fixture.
nlohmann::json invariant_table_section(const nlohmann::json& table);

// 2 when any entry is REFUTED or DISCREPANCY, else 0.
int report_exit_status(const nlohmann::json& report);
std::string report_summary(const nlohmann::json& report);
// Sorted keys, two-space indent, trailing newline.
std::string emit_report(const nlohmann::json& report);

// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a64(const std::string& bytes);

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json label_to_json(const ClassLabel& l);

}  // namespace acalg
