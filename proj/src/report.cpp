#include "acalg/report.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "acalg/claims.hpp"
#include "acalg/msc_io.hpp"
#include "acalg/orbit.hpp"

namespace acalg {

using nlohmann::json;

namespace {

Field Q() { return FieldDescriptor::rationals(); }

const std::vector<mpq_class>& lambda_grid() {
  static const std::vector<mpq_class> v{-2, -1, 0, mpq_class(1, 2), 1, 2};
  return v;
}

std::string qtext(const mpq_class& q) { return FieldElement(Q(), q).to_string(); }

struct Form {
  std::string name;
  Family family;
  std::optional<mpq_class> lambda;
  Msc msc;
};

Form form(Family f, std::optional<mpq_class> l = std::nullopt) {
  std::string name = family_name(f);
  if (l) {
    name += "(" + qtext(*l) + ")";
    return {name, f, l, canonical(f, Q(), FieldElement(Q(), *l))};
  }
  return {name, f, l, canonical(f, Q())};
}

std::vector<Form> theorem_forms() {
  std::vector<Form> out;
  for (Family f : {Family::A1, Family::A2, Family::A3, Family::A4, Family::A5, Family::A6, Family::A7, Family::A8,
                   Family::A9}) {
    if (family_has_parameter(f))
      for (const auto& l : lambda_grid()) out.push_back(form(f, l));
    else
      out.push_back(form(f));
  }
  return out;
}

std::vector<Form> non_lie_forms() {
  std::vector<Form> out;
  for (const auto& f : theorem_forms()) {
    if (f.family == Family::A6 || f.family == Family::A8 || f.family == Family::A9) continue;
    if (f.family == Family::A4 && f.lambda == mpq_class(-1)) continue;
    out.push_back(f);
  }
  return out;
}

std::string column_label(std::size_t col) {
  return "(" + std::to_string(col / 3 + 1) + "," + std::to_string(col % 3 + 1) + ")";
}

json first_nonzero(const Matrix& r) {
  for (std::size_t c = 0; c < r.cols(); ++c)
    for (std::size_t k = 0; k < r.rows(); ++k)
      if (!r(k, c).is_zero()) return {{"row", k + 1}, {"column", column_label(c)}, {"value", r(k, c).to_string()}};
  return nullptr;
}

json entry(const std::string& claim, const std::string& locator, const std::string& status, json computed,
           json payload = json::object()) {
  return {{"claim", claim}, {"locator", locator}, {"status", status}, {"computed", std::move(computed)},
          {"payload", std::move(payload)}};
}

json vector_json(const Matrix& v) {
  json out = json::array();
  for (const auto& e : v.entries()) out.push_back(e.to_string());
  return out;
}

Matrix e123_jacobiator(const Msc& a) {
  Field f = a.field();
  return jacobiator(a, basis_vector(3, 0, f), basis_vector(3, 1, f), basis_vector(3, 2, f));
}

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::C6: return "c6";
    case Branch::A6: return "a6";
    case Branch::A6C3One: return "a6,c3=1";
    case Branch::C3: return "c3";
    case Branch::C3One: return "c3=1";
    case Branch::Trivial: return "trivial";
  }
  return "";
}

json classification_json(const Classification& c) {
  return {{"label", label_to_json(c.label)},
          {"branch", branch_name(c.branch)},
          {"field", c.field->name()},
          {"witness", matrix_to_json(c.witness.matrix())}};
}

Matrix diag3(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  Matrix m(3, 3, a.field());
  m.set(0, 0, a);
  m.set(1, 1, b);
  m.set(2, 2, c);
  return m;
}

// ---------------------------------------------------------------- sections

json anticommutativity_section() {
  std::vector<std::pair<std::string, Msc>> all;
  for (const auto& f : theorem_forms()) all.emplace_back(f.name, f.msc);
  all.emplace_back("sl2", catalog::sl2(Q()));
  for (const auto& l : lambda_grid()) all.emplace_back("r3(" + qtext(l) + ")", catalog::r3(FieldElement(Q(), l)));
  all.emplace_back("r3'1", catalog::r3_prime(Q()));
  all.emplace_back("h3", catalog::h3(Q()));
  all.emplace_back("two-dimensional", Msc(2, Matrix::from_ints(Q(), 2, 4, {0, 0, 0, 0, 0, 1, -1, 0})));
  all.emplace_back("ZA1", catalog::za1(Q()));
  all.emplace_back("ZA2", catalog::za2(Q()));
  for (const auto& l : lambda_grid())
    if (l != 0) all.emplace_back("ZA3(" + qtext(l) + ")", catalog::za3(FieldElement(Q(), l)));
  all.emplace_back("ZA4", catalog::za4(Q()));
  all.emplace_back("ZA5", catalog::za5(Q()));

  json entries = json::array();
  for (const auto& [name, a] : all) {
    auto v = find_anticommutativity_violation(a);
    json payload = json::object();
    if (v) payload = {{"column", "(" + std::to_string(v->i + 1) + "," + std::to_string(v->j + 1) + ")"},
                      {"msc", matrix_to_json(a.matrix())}};
    entries.push_back(entry(name + " is anti-commutative", "MSC of " + name, v ? "REFUTED" : "VERIFIED",
                            {{"anticommutative", !v}, {"field", a.field()->name()}}, payload));
  }
  return {{"entries", entries}};
}

struct LieMember {
  Family family;
  std::optional<mpq_class> lambda;
};

json jacobi_section(const json& table) {
  std::vector<LieMember> members;
  for (const auto& m : table.at("lie").at("members")) {
    auto fam = family_from_name(m.at("algebra").get<std::string>());
    if (!fam) throw TranscriptionError("unknown algebra in lie list: " + m.at("algebra").dump());
    std::optional<mpq_class> l;
    if (m.contains("lambda")) l = FieldElement::parse(m.at("lambda").get<std::string>(), Q()).as_rational();
    members.push_back({*fam, l});
  }
  const std::string lie_text = table.at("lie").at("text").get<std::string>();

  json entries = json::array();
  for (const auto& f : theorem_forms()) {
    bool claimed = false;
    for (const auto& m : members) claimed = claimed || (m.family == f.family && (!m.lambda || m.lambda == f.lambda));
    bool lie = is_lie(f.msc);
    Matrix j = e123_jacobiator(f.msc);
    json payload = json::object();
    if (lie != claimed) payload = {{"msc", matrix_to_json(f.msc.matrix())}, {"jacobiator_e1_e2_e3", vector_json(j)}};
    entries.push_back(entry(f.name + (claimed ? " is Lie" : " is not Lie"), lie_text,
                            lie == claimed ? "VERIFIED" : "REFUTED",
                            {{"is_lie", lie}, {"jacobiator_e1_e2_e3", vector_json(j)}}, payload));
  }

  for (const auto& jc : table.at("jacobiators")) {
    auto fam = family_from_name(jc.at("algebra").get<std::string>());
    if (!fam || (*fam != Family::A5 && *fam != Family::A7))
      throw TranscriptionError("jacobiator claim for unsupported algebra " + jc.at("algebra").dump());
    const std::string param = jc.at("parameter").get<std::string>();
    std::vector<RationalFunction> claimed;
    for (const auto& v : jc.at("value")) claimed.push_back(parse_expression(v.get<std::string>()));
    if (claimed.size() != 3) throw TranscriptionError("jacobiator value must have three coordinates");
    for (const auto& l : lambda_grid()) {
      FieldElement a(Q(), l);
      Msc m = *fam == Family::A5 ? catalog::a5_family(a) : catalog::a7(a);
      Matrix got = e123_jacobiator(m);
      Matrix want(3, 1, Q());
      for (std::size_t i = 0; i < 3; ++i) want.set(i, 0, claimed[i].eval({{param, a}}, Q()));
      Matrix res = got - want;
      std::string name = family_name(*fam) + "(" + qtext(l) + ")";
      json payload = json::object();
      if (!res.is_zero())
        payload = {{"parameter", qtext(l)}, {"claimed", vector_json(want)}, {"residual", vector_json(res)}};
      entries.push_back(entry(jc.at("text").get<std::string>() + " at " + param + " = " + qtext(l),
                              "jacobiator of " + name, res.is_zero() ? "VERIFIED" : "REFUTED",
                              {{"jacobiator_e1_e2_e3", vector_json(got)}}, payload));
    }
  }
  return {{"entries", entries}};
}

bool label_matches(const ClassLabel& l, Family f, const std::optional<mpq_class>& lambda) {
  if (l.family != f) return false;
  if (!lambda) return true;
  auto p = l.parameter ? l.parameter->as_rational() : std::nullopt;
  if (!p) return false;
  if (*p == *lambda) return true;
  return f == Family::A6 && *lambda != 0 && *p == 1 / *lambda;
}

json classification_section() {
  struct Expect {
    std::string name;
    Msc msc;
    Family family;
    std::optional<mpq_class> lambda;
    LieAlias alias;
    std::string locator;
  };
  std::vector<Expect> cases;
  for (const auto& f : theorem_forms()) {
    LieAlias alias = LieAlias::None;
    if (f.family == Family::A4 && f.lambda == mpq_class(-1)) alias = LieAlias::Sl2;
    if (f.family == Family::A6) alias = LieAlias::R3;
    if (f.family == Family::A8) alias = LieAlias::R3Prime1;
    if (f.family == Family::A9) alias = LieAlias::H3;
    cases.push_back({f.name, f.msc, f.family, f.lambda, alias, "list of canonical forms, " + f.name});
  }
  cases.push_back({"sl2", catalog::sl2(Q()), Family::A4, mpq_class(-1), LieAlias::Sl2, "Lie list, sl_2"});
  for (const auto& l : lambda_grid())
    cases.push_back({"r3(" + qtext(l) + ")", catalog::r3(FieldElement(Q(), l)), Family::A6, l, LieAlias::R3,
                     "Lie list, r_{3,lambda}"});
  cases.push_back({"r3'1", catalog::r3_prime(Q()), Family::A8, std::nullopt, LieAlias::R3Prime1, "Lie list, r'_{3,1}"});
  cases.push_back({"h3", catalog::h3(Q()), Family::A9, std::nullopt, LieAlias::H3, "Lie list, h_3"});

  json entries = json::array();
  for (const auto& c : cases) {
    Classification r = classify(c.msc);
    bool ok = label_matches(r.label, c.family, c.lambda) && r.label.lie_alias == c.alias;
    json payload = json::object();
    if (!ok)
      payload = {{"input", matrix_to_json(c.msc.matrix())},
                 {"witness", matrix_to_json(r.witness.matrix())},
                 {"canonical", matrix_to_json(canonical(r.label, r.field).matrix())},
                 {"field", r.field->name()}};
    std::string expected = c.name;
    if (c.alias != LieAlias::None) expected += " (" + lie_alias_name(c.alias) + ")";
    entries.push_back(entry(c.name + " is its own class " + expected, c.locator, ok ? "VERIFIED" : "DISCREPANCY",
                            classification_json(r), payload));
  }
  return {{"entries", entries}};
}

json identity_entry(const std::string& claim, const std::string& locator, const Msc& lhs, const Msc& rhs) {
  Matrix res = lhs.matrix() - rhs.matrix();
  json payload = json::object();
  if (!res.is_zero())
    payload = {{"lhs", matrix_to_json(lhs.matrix())},
               {"rhs", matrix_to_json(rhs.matrix())},
               {"residual", matrix_to_json(res)},
               {"first_nonzero", first_nonzero(res)}};
  return entry(claim, locator, res.is_zero() ? "VERIFIED" : "REFUTED", {{"equal", res.is_zero()}}, payload);
}

json isomorphisms_section() {
  json entries = json::array();

  for (const auto& l : lambda_grid())
    entries.push_back(identity_entry("A6(" + qtext(l) + ") = r3(" + qtext(l) + ")", "A_6(a) = r_{3,a}",
                                     catalog::a6(FieldElement(Q(), l)), catalog::r3(FieldElement(Q(), l))));
  entries.push_back(identity_entry("A8 = r3'1", "A_8 = r'_{3,1}", catalog::a8(Q()), catalog::r3_prime(Q())));
  entries.push_back(identity_entry("A9 = h3", "A_9 = h_3", catalog::a9(Q()), catalog::h3(Q())));
  entries.push_back(identity_entry("A5(0) = A4(1)", "A_5(0)=A_4(1)", catalog::a5_family(FieldElement(Q(), 0L)),
                                   catalog::a4(FieldElement(Q(), 1L))));

  const std::pair<mpq_class, mpq_class> diag_pairs[] = {{2, 3}, {1, -1}, {mpq_class(1, 2), 5}};
  for (const auto& [a, b] : diag_pairs) {
    FieldElement fa(Q(), a), fb(Q(), b);
    Matrix g = diag3(FieldElement::one(Q()), fb / fa, fa / fb);
    Msc image = act(BasisChange(g), catalog::a5_family(fb));
    json e = identity_entry("Diag(1, b/a, a/b) maps A5(" + qtext(b) + ") onto A5(" + qtext(a) + ")",
                            "Diag(1, b/a, a/b)", image, catalog::a5_family(fa));
    e["computed"]["witness"] = matrix_to_json(g);
    entries.push_back(e);
  }

  for (const mpq_class& l : {mpq_class(2), mpq_class(1, 2), mpq_class(-3)}) {
    Msc a = catalog::a6(FieldElement(Q(), l)), b = catalog::a6(FieldElement(Q(), 1 / l));
    IsoResult r = isomorphic(a, b);
    bool ok = r.witness && act_iso(*r.witness, a) == b;
    json computed = {{"evidence", r.evidence}, {"isomorphic", r.witness.has_value()}};
    if (r.witness) computed["witness"] = matrix_to_json(r.witness->matrix());
    json payload = json::object();
    if (!ok) payload = {{"label_a", label_to_json(r.label_a)}, {"label_b", label_to_json(r.label_b)}};
    entries.push_back(entry("A6(" + qtext(l) + ") is isomorphic to A6(" + qtext(1 / l) + ")",
                            "r_{3,lambda} ~ r_{3,1/lambda}", ok ? "VERIFIED" : "REFUTED", computed, payload));
  }

  {
    FieldElement z = FieldElement::zero(Q()), two(Q(), 2L), one = FieldElement::one(Q());
    auto witness = [&](const FieldElement& fc) {
      return Matrix(3, 3, std::vector<FieldElement>{z, z, two, one, z, z, z, fc, z});
    };
    Msc a = catalog::a4(FieldElement(Q(), -1L));
    Msc target = catalog::sl2(Q());
    Matrix g = witness(-two);
    Msc image = act(BasisChange(g), a);
    Matrix res = image.matrix() - target.matrix();
    Matrix fixed = witness(two);
    bool fixed_ok = act(BasisChange(fixed), a) == target;
    json computed = {{"witness", matrix_to_json(g)},
                     {"image", matrix_to_json(image.matrix())},
                     {"image_under_act_iso", matrix_to_json(act_iso(BasisChange(g), a).matrix())},
                     {"corrected_witness", matrix_to_json(fixed)},
                     {"corrected_witness_maps_onto_sl2", fixed_ok}};
    json payload = json::object();
    if (!res.is_zero())
      payload = {{"witness", matrix_to_json(g)},
                 {"algebra", matrix_to_json(a.matrix())},
                 {"target", matrix_to_json(target.matrix())},
                 {"residual", matrix_to_json(res)},
                 {"first_nonzero", first_nonzero(res)}};
    entries.push_back(entry("The change of basis e=e_2, f=-2e_3, h=2e_1 maps A4(-1) onto sl2",
                            "e=e_2, f=-2e_3, h=2e_1", res.is_zero() ? "VERIFIED" : "REFUTED", computed, payload));
  }

  std::vector<Form> forms = non_lie_forms();
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t k = i + 1; k < forms.size(); ++k) {
      const Msc& a = forms[i].msc;
      const Msc& b = forms[k].msc;
      IsoResult r = isomorphic(a, b);
      json computed = {{"isomorphic", r.witness.has_value()},
                       {"evidence", r.evidence},
                       {"label_a", label_to_json(r.label_a)},
                       {"label_b", label_to_json(r.label_b)}};
      json payload = json::object();
      if (r.witness) {
        Msc image = act_iso(*r.witness, a);
        payload = {{"a", matrix_to_json(a.matrix())},
                   {"b", matrix_to_json(b.matrix())},
                   {"witness", matrix_to_json(r.witness->matrix())},
                   {"field", r.witness->matrix().field()->name()},
                   {"residual_is_zero", (image.matrix() - b.embed(image.field()).matrix()).is_zero()}};
      }
      entries.push_back(entry(forms[i].name + " and " + forms[k].name + " are not isomorphic",
                              "isomorphic to exactly one of the listed algebras",
                              r.witness ? "REFUTED" : "VERIFIED", computed, payload));
    }
  return {{"entries", entries}};
}

std::size_t invariant_value(const InvariantProfile& p, const std::string& name) {
  if (name == "dim_ann") return p.dim_ann;
  if (name == "dim_sq") return p.dim_sq;
  if (name == "dim_ann_cap_sq") return p.dim_ann_cap_sq;
  if (name == "dim_center") return p.dim_center;
  if (name == "dim_der") return p.dim_der;
  throw TranscriptionError("unknown invariant " + name);
}

}  // namespace

json invariant_table_section(const json& table) {
  json entries = json::array();
  const auto& cols = table.at("invariant_table").at("columns");
  for (const auto& row : table.at("invariant_table").at("rows")) {
    auto fam = family_from_name(row.at("algebra").get<std::string>());
    if (!fam) throw TranscriptionError("unknown algebra in table: " + row.at("algebra").dump());
    const auto& claimed = row.at("claimed");
    if (claimed.size() != cols.size()) throw TranscriptionError("table row width mismatch for " + row.dump());
    std::vector<Form> forms;
    if (family_has_parameter(*fam))
      for (const auto& l : lambda_grid()) forms.push_back(form(*fam, l));
    else
      forms.push_back(form(*fam));
    std::vector<InvariantProfile> profiles;
    for (const auto& f : forms) profiles.push_back(profile(f.msc));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string col = cols[c].get<std::string>();
      const std::size_t want = claimed[c].get<std::size_t>();
      json values = json::object();
      bool ok = true;
      for (std::size_t i = 0; i < forms.size(); ++i) {
        std::size_t v = invariant_value(profiles[i], col);
        values[forms[i].name] = v;
        ok = ok && v == want;
      }
      json payload = json::object();
      if (!ok) {
        payload = {{"claimed", want}, {"values", values}, {"bases", json::object()}};
        for (const auto& f : forms)
          payload["bases"][f.name] = {{"annihilator", matrix_to_json(annihilator(f.msc))},
                                      {"derived", matrix_to_json(derived_subalgebra(f.msc))}};
      }
      json computed = {{"values", values}};
      json centers = json::object();
      for (std::size_t i = 0; i < forms.size(); ++i) centers[forms[i].name] = profiles[i].dim_center;
      computed["dim_center"] = centers;
      entries.push_back(entry(row.at("algebra").get<std::string>() + " has " + col + " = " + std::to_string(want),
                              row.at("locator").get<std::string>(), ok ? "VERIFIED" : "DISCREPANCY", computed,
                              payload));
    }
  }

  for (const auto& st : table.at("statements")) {
    auto fam = family_from_name(st.at("algebra").get<std::string>());
    if (!fam) throw TranscriptionError("unknown algebra in statement " + st.dump());
    const std::string inv = st.at("invariant").get<std::string>();
    const std::size_t want = st.at("value").get<std::size_t>();
    json values = json::object();
    json offending = json::array();
    for (const auto& f : non_lie_forms()) {
      std::size_t v = invariant_value(profile(f.msc), inv);
      values[f.name] = v;
      if ((v == want) != (f.family == *fam)) offending.push_back(f.name);
    }
    bool ok = offending.empty();
    json payload = json::object();
    if (!ok) payload = {{"invariant", inv}, {"value", want}, {"offending", offending}, {"values", values}};
    entries.push_back(entry(st.at("text").get<std::string>(), st.at("id").get<std::string>(),
                            ok ? "VERIFIED" : "DISCREPANCY", {{"invariant", inv}, {"values", values}}, payload));
  }
  return {{"entries", entries}};
}

namespace {

json audit_section(const std::vector<Claim>& claims) {
  json entries = json::array();
  auto audits = verify_claimed_families(claims);
  for (std::size_t i = 0; i < claims.size(); ++i) {
    json a = audit_to_json(claims[i], audits[i]);
    json computed = {{"id", a["id"]},
                     {"kind", a["kind"]},
                     {"algebra", a["algebra"]},
                     {"components", a["components"]},
                     {"sound", a["sound"]},
                     {"summary", a["summary"]},
                     {"transposed_convention", a["transposed_convention"]}};
    entries.push_back(entry(a["claim"].get<std::string>(), a["locator"].get<std::string>(),
                            a["status"].get<std::string>(), computed, a["payload"]));
  }
  return {{"entries", entries}};
}

json orbit_section(const std::optional<std::string>& cache) {
  CensusOptions opt;
  opt.cache_path = cache;
  OrbitCensus c = census(3, opt);
  PlaneSearchAgreement ps = plane_search_agreement(3);
  bool stab = !c.stabilizer.empty();
  for (const auto& s : c.stabilizer) stab = stab && s.ok;
  json entries = json::array();
  auto check = [&](const std::string& claim, bool ok, json computed) {
    json payload = json::object();
    if (!ok) payload = {{"p", c.p}, {"census_flags", census_to_json(c)}};
    entries.push_back(entry(claim, "census over GF(3)", ok ? "VERIFIED" : "DISCREPANCY", std::move(computed), payload));
  };
  check("orbit sizes sum to " + std::to_string(c.total), c.sizes_sum, {{"orbit_count", c.orbits.size()}});
  check("orbit sizes divide |GL3(GF(3))| = " + std::to_string(c.group_order), c.sizes_divide, json::object());
  check("invariant profile is constant on every orbit", c.profiles_constant && c.profiles_exhaustive,
        {{"exhaustive", c.profiles_exhaustive}});
  check("orbit size times automorphism count equals |GL3(GF(3))|", stab, {{"sampled", c.stabilizer.size()}});
  check("classification labels agree within orbits", c.classification_consistent, json::object());
  check("nontrivial subalgebra test agrees with a 13-plane scan", ps.agree == ps.algebras,
        {{"algebras", ps.algebras}, {"with_nontrivial", ps.with_nontrivial}, {"agree", ps.agree}});
  return {{"entries", entries}, {"census", census_to_json(c)}};
}

json summary_counts(const json& sections) {
  std::map<std::string, std::size_t> counts{
      {"VERIFIED", 0}, {"REFUTED", 0}, {"DISCREPANCY", 0}, {"PARTIAL", 0}, {"SKIPPED", 0}};
  for (const auto& [name, s] : sections.items())
    for (const auto& e : s.at("entries")) ++counts[e.at("status").get<std::string>()];
  return counts;
}

}  // namespace

json parse_table_claims(const std::string& text, const std::string& origin) {
  json table;
  try {
    table = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!table.is_object() || table.value("version", 0) != 1) throw TranscriptionError(origin + ": version must be 1");
  return table;
}

json load_table_claims(const std::string& path) { return parse_table_claims(read_file(path), path); }

std::string default_table_claims_path() { return std::string(ACALG_DATA_DIR) + "/table_claims.json"; }

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

json label_to_json(const ClassLabel& l) {
  json j = {{"text", l.to_string()}, {"family", family_name(l.family)}, {"parameter", nullptr}, {"lie_alias", nullptr}};
  if (l.parameter) j["parameter"] = l.parameter->to_string();
  if (l.lie_alias != LieAlias::None) j["lie_alias"] = lie_alias_name(l.lie_alias);
  return j;
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json k_comparison_section(const KComparison& k) {
  json entries = json::array();
  for (const auto& e : k.entries) {
    std::string name = e.name + (e.lambda ? "(" + qtext(*e.lambda) + ")" : "");
    json computed = {{"is_lie", e.is_lie},
                     {"jacobiator_e1_e2_e3", vector_json(e.jacobiator_e123)},
                     {"field", e.input.field()->name()}};
    json payload = json::object();
    if (e.result) {
      computed["classification"] = classification_json(*e.result);
    } else {
      payload = {{"failure", e.failure}, {"msc", matrix_to_json(e.input.matrix())}};
    }
    entries.push_back(entry(name + " is classified", "[K] list, " + e.name, e.result ? "VERIFIED" : "SKIPPED",
                            computed, payload));
  }
  json coverage = {{"attained", k.attained},
                   {"missing", k.missing},
                   {"verdict", k.complete ? "complete" : "not complete"}};
  entries.push_back(entry("the classification presented in [K] is not complete", "[K] comparison",
                          k.complete ? "REFUTED" : "VERIFIED", coverage));
  return {{"entries", entries}, {"coverage", coverage}};
}

json verification_report(const ReportOptions& options) {
  const std::string claims_path = options.claims_path.empty() ? default_claims_path() : options.claims_path;
  const std::string table_path = options.table_path.empty() ? default_table_claims_path() : options.table_path;
  const std::string claims_text = read_file(claims_path);
  const std::string table_text = read_file(table_path);
  json claims_doc;
  try {
    claims_doc = json::parse(claims_text);
  } catch (const json::parse_error& e) {
    throw ParseError(claims_path + ": " + e.what());
  }
  json table = parse_table_claims(table_text, table_path);
  std::vector<Claim> claims = parse_claims(claims_doc);

  json sections;
  try {
    sections = {{"anticommutativity", anticommutativity_section()},
                {"jacobi", jacobi_section(table)},
                {"classification", classification_section()},
                {"isomorphisms", isomorphisms_section()},
                {"invariant_table", invariant_table_section(table)},
                {"der_aut_audit", audit_section(claims)},
                {"k_comparison", k_comparison_section(compare_with_k())},
                {"orbit_census", orbit_section(options.orbit_cache)}};
  } catch (const json::exception& e) {
    throw TranscriptionError(std::string("table fixture: ") + e.what());
  }
  return {{"tool", "acalg"},
          {"tool_version", kToolVersion},
          {"input_digests",
           {{"theorem_claims", "fnv1a64:" + fnv1a64(claims_text)}, {"table_claims", "fnv1a64:" + fnv1a64(table_text)}}},
          {"sections", sections},
          {"summary", summary_counts(sections)}};
}

json comparison_report() {
  json sections = {{"k_comparison", k_comparison_section(compare_with_k())}};
  return {{"tool", "acalg"},
          {"tool_version", kToolVersion},
          {"input_digests", json::object()},
          {"sections", sections},
          {"summary", summary_counts(sections)}};
}

int report_exit_status(const json& report) {
  const auto& s = report.at("summary");
  return s.value("REFUTED", 0) + s.value("DISCREPANCY", 0) > 0 ? 2 : 0;
}

std::string report_summary(const json& report) {
  std::ostringstream out;
  const char* order[] = {"VERIFIED", "REFUTED", "DISCREPANCY", "PARTIAL", "SKIPPED"};
  for (const auto& [name, s] : report.at("sections").items()) {
    std::map<std::string, std::size_t> counts;
    for (const auto& e : s.at("entries")) ++counts[e.at("status").get<std::string>()];
    out << name << ":";
    for (const char* k : order)
      if (counts[k]) out << " " << k << "=" << counts[k];
    out << "\n";
  }
  out << "total:";
  for (const char* k : order) out << " " << k << "=" << report.at("summary").value(k, 0);
  out << "\n";
  return out.str();
}

std::string emit_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace acalg
