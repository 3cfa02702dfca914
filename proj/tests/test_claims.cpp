#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "acalg/claims.hpp"
#include "acalg/der_aut.hpp"

using namespace acalg;
using nlohmann::json;

namespace {

Field Q() { return FieldDescriptor::rationals(); }

const std::vector<Claim>& claims() {
  static const std::vector<Claim> c = load_claims(default_claims_path());
  return c;
}

const std::vector<ClaimAudit>& audits() {
  static const std::vector<ClaimAudit> a = verify_claimed_families(claims());
  return a;
}

FieldElement eval_at(const std::string& expr, std::map<std::string, long> vals) {
  std::map<std::string, FieldElement> v;
  for (const auto& [k, x] : vals) v.emplace(k, FieldElement(Q(), x));
  return parse_expression(expr).eval(v, Q());
}

}  // namespace

TEST_CASE("expression parser") {
  CHECK(eval_at("b*(1-l)", {{"b", 3}, {"l", 2}}) == FieldElement(Q(), -3L));
  CHECK(eval_at("1/t - 1", {{"t", 4}}) == FieldElement(Q(), mpq_class(-3, 4)));
  CHECK(eval_at("-a/l + 2^3", {{"a", 1}, {"l", 2}}) == FieldElement(Q(), mpq_class(15, 2)));
  CHECK(parse_expression("a*(l-1)/l - a + a/l").is_zero());
  CHECK_THROWS_AS(parse_expression("1/(t-t)"), ParseError);
  CHECK_THROWS_AS(parse_expression("2 +"), ParseError);
  CHECK_THROWS_AS(parse_expression("(a"), ParseError);
  CHECK_THROWS_AS(parse_expression("1/t").eval({{"t", FieldElement::zero(Q())}}, Q()), DivisionByZero);
}

TEST_CASE("multivariate arithmetic") {
  MultiPoly t = MultiPoly::variable("t");
  MultiPoly one = MultiPoly::constant(1);
  MultiPoly p = (t + one) * (t - one);
  CHECK(p == t * t - one);
  CHECK(p.degree_in("t") == 2);
  CHECK(p.to_string() == "-1 + t^2");
}

TEST_CASE("fixture loads every printed family") {
  REQUIRE(claims().size() == 14);
  std::size_t der = 0;
  for (const auto& c : claims()) der += c.kind == ClaimKind::Der;
  CHECK(der == 7);
}

TEST_CASE("malformed claims are transcription errors") {
  json good = {{"claims", json::array({{{"id", "x"}, {"kind", "der"}, {"algebra", "A1"}, {"params", {"a"}},
                                        {"components", {{{"0", "0", "0"}, {"0", "a", "0"}, {"0", "0", "a"}}}}}})}};
  CHECK(parse_claims(good).size() == 1);
  json bad_row = good;
  bad_row["claims"][0]["components"][0][1] = {"0", "a"};
  CHECK_THROWS_AS(parse_claims(bad_row), TranscriptionError);
  json bad_symbol = good;
  bad_symbol["claims"][0]["components"][0][1][1] = "q";
  CHECK_THROWS_AS(parse_claims(bad_symbol), TranscriptionError);
  json bad_lambda = good;
  bad_lambda["claims"][0]["algebra"] = "A2";
  CHECK_THROWS_AS(parse_claims(bad_lambda), TranscriptionError);
  json bad_kind = good;
  bad_kind["claims"][0]["kind"] = "endo";
  CHECK_THROWS_AS(parse_claims(bad_kind), TranscriptionError);
}

TEST_CASE("Der(A1) symbolic residual is -a in row 3 of column (2,3)") {
  const Claim& c = claims()[0];
  REQUIRE(c.id == "der-A1");
  auto r = symbolic_residual(c, 0);
  CHECK(r[2 * 9 + 1 * 3 + 2].to_string() == "-a");
  CHECK(r[2 * 9 + 2 * 3 + 1].to_string() == "a");
}

TEST_CASE("audit outcomes") {
  const std::map<std::string, std::string> expected{
      {"der-A1", "REFUTED"},  {"aut-A1", "REFUTED"},  {"der-A2", "VERIFIED"}, {"der-A2-0", "VERIFIED"},
      {"aut-A2", "REFUTED"},  {"der-A3", "VERIFIED"}, {"aut-A3", "PARTIAL"},  {"der-A4", "REFUTED"},
      {"aut-A4", "REFUTED"},  {"der-A5", "VERIFIED"}, {"aut-A5", "PARTIAL"},  {"der-A7", "VERIFIED"},
      {"aut-A7", "REFUTED"},  {"aut-A7-0", "REFUTED"}};
  for (const auto& a : audits()) {
    REQUIRE(expected.count(a.id));
    CHECK_MESSAGE(audit_status_name(a.status) == expected.at(a.id), a.id);
    REQUIRE(a.transposed_status.has_value());
  }
}

TEST_CASE("every refutation replays with a nonzero residual") {
  for (std::size_t i = 0; i < claims().size(); ++i)
    if (audits()[i].status == AuditStatus::Refuted) CHECK_MESSAGE(replay_refutation(claims()[i], audits()[i]), audits()[i].id);
}

TEST_CASE("verified families pass the numeric predicates") {
  for (std::size_t i = 0; i < claims().size(); ++i) {
    const Claim& c = claims()[i];
    if (audits()[i].status == AuditStatus::Refuted) continue;
    for (long s : {1L, 2L, -1L, 3L, 5L}) {
      for (mpq_class l : {mpq_class(2), mpq_class(3)}) {
        std::optional<mpq_class> lambda = c.lambda_value ? c.lambda_value : std::optional<mpq_class>(l);
        std::map<std::string, FieldElement> vals;
        if (c.lambda_symbol) vals.emplace(*c.lambda_symbol, FieldElement(Q(), *lambda));
        for (const auto& p : c.params) vals.emplace(p, FieldElement(Q(), s + static_cast<long>(vals.size())));
        Msc a = family_has_parameter(c.family) ? canonical(c.family, Q(), FieldElement(Q(), *lambda))
                                               : canonical(c.family, Q());
        for (const auto& comp : c.components) {
          Matrix x(3, 3, Q());
          for (std::size_t e = 0; e < 9; ++e) x.set(e / 3, e % 3, comp[e].eval(vals, Q()));
          if (c.kind == ClaimKind::Der)
            CHECK(is_derivation(x, a));
          else
            CHECK(is_automorphism(x, a));
        }
      }
    }
  }
}

TEST_CASE("audit json is deterministic") {
  json first = json::array(), second = json::array();
  auto again = verify_claimed_families(claims());
  for (std::size_t i = 0; i < claims().size(); ++i) {
    first.push_back(audit_to_json(claims()[i], audits()[i]));
    second.push_back(audit_to_json(claims()[i], again[i]));
  }
  CHECK(first.dump() == second.dump());
  CHECK(first[0]["transposed_convention"]["status"] == "REFUTED");
}

TEST_CASE("Aut(A2(2)) over GF(5) has five elements") {
  const auto& a = audits()[4];
  REQUIRE(a.id == "aut-A2");
  const auto& ev = a.payload["finite_field_evidence"];
  CHECK(ev[1]["p"] == 5);
  CHECK(ev[1]["automorphisms"] == 5);
  CHECK(ev[1]["family_members"] == 1);
}
