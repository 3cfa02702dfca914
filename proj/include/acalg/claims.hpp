#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "acalg/catalog.hpp"
#include "acalg/symbolic.hpp"

namespace acalg {

enum class ClaimKind { Der, Aut };

// A printed derivation or automorphism family: the union of the components,
// each a 3x3 grid of rational functions in the parameters and possibly in
// the structure parameter.
struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::Der;
  Family family = Family::A1;
  std::string locator;
  std::string text;
  std::vector<std::string> params;
  std::vector<std::string> nonzero;           // parameters required nonzero
  std::optional<std::string> lambda_symbol;   // symbolic structure parameter
  std::optional<mpq_class> lambda_value;      // fixed structure parameter
  std::vector<mpq_class> lambda_excluded;
  std::vector<std::array<std::string, 9>> component_text;
  std::vector<std::array<RationalFunction, 9>> components;
};

// Raises TranscriptionError on malformed shapes or unknown names.
std::vector<Claim> parse_claims(const nlohmann::json& doc);
std::vector<Claim> load_claims(const std::string& path);
std::string default_claims_path();

enum class AuditStatus { Verified, Refuted, Partial };
std::string audit_status_name(AuditStatus s);

struct ClaimAudit {
  std::string id;
  AuditStatus status = AuditStatus::Partial;
  bool sound = false;
  std::string summary;
  nlohmann::json payload;  // instantiations, residuals, dimensions, evidence
  // Same claim with every component transposed.
  std::optional<AuditStatus> transposed_status;
  bool transposed_sound = false;
};

// Symbolic residual X A - A(X kron I + I kron X) or X A - A(X kron X),
// 27 entries in the MSC layout (row k, column i*3 + j).
std::array<RationalFunction, 27> symbolic_residual(const Claim& claim, std::size_t component);

ClaimAudit audit_claim(const Claim& claim);
std::vector<ClaimAudit> verify_claimed_families(const std::vector<Claim>& claims);

nlohmann::json audit_to_json(const Claim& claim, const ClaimAudit& audit);

// Recomputes every residual stored in a REFUTED payload through the numeric
// library and checks that it matches and is nonzero.
bool replay_refutation(const Claim& claim, const ClaimAudit& audit);

}  // namespace acalg
