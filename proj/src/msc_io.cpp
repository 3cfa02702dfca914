#include "acalg/msc_io.hpp"

#include <fstream>
#include <sstream>

namespace acalg {

using nlohmann::json;

json field_to_json(Field f) {
  switch (f->kind()) {
    case FieldDescriptor::Kind::Rationals:
      return {{"kind", "Q"}};
    case FieldDescriptor::Kind::PrimeField:
      return {{"kind", "Fp"}, {"p", f->characteristic()}};
    case FieldDescriptor::Kind::Tower: {
      json gens = json::array();
      for (const auto& r : f->radicands()) gens.push_back(r.to_string());
      return {{"kind", "tower"}, {"gens", gens}};
    }
  }
  return nullptr;
}

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("field must be an object with a string 'kind'");
  const std::string kind = j["kind"];
  if (kind == "Q") return FieldDescriptor::rationals();
  if (kind == "Fp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) throw ParseError("Fp field needs an unsigned 'p'");
    return FieldDescriptor::prime(j["p"].get<std::uint64_t>());
  }
  if (kind == "tower") {
    if (!j.contains("gens") || !j["gens"].is_array()) throw ParseError("tower field needs 'gens'");
    Field f = FieldDescriptor::rationals();
    for (const auto& g : j["gens"]) {
      if (!g.is_string()) throw ParseError("tower generators must be strings");
      FieldElement r = FieldElement::parse(g.get<std::string>(), f);
      if (r.is_zero() || try_sqrt(r)) throw FieldMismatch("generator sqrt(" + r.to_string() + ") is redundant");
      f = f->adjoin(r);
    }
    return f;
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

json msc_to_json(const Msc& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.dim() * a.dim(); ++c) row.push_back(a.matrix()(r, c).to_string());
    rows.push_back(row);
  }
  return {{"field", field_to_json(a.field())}, {"dim", a.dim()}, {"rows", rows}};
}

Msc msc_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("MSC document must be a JSON object");
  for (const char* key : {"field", "dim", "rows"})
    if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  Field f = field_from_json(j["field"]);
  if (!j["dim"].is_number_unsigned()) throw ParseError("'dim' must be a positive integer");
  const std::size_t n = j["dim"];
  if (n == 0 || n > 16) throw ParseError("'dim' out of range");
  const json& rows = j["rows"];
  if (!rows.is_array() || rows.size() != n)
    throw DimensionMismatch("expected " + std::to_string(n) + " rows");
  std::vector<FieldElement> entries;
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n * n)
      throw DimensionMismatch("row " + std::to_string(r + 1) + " must have " + std::to_string(n * n) + " entries");
    for (const auto& e : rows[r]) {
      if (e.is_string()) {
        entries.push_back(FieldElement::parse(e.get<std::string>(), f));
      } else if (e.is_number_integer()) {
        entries.emplace_back(f, e.get<long>());
      } else {
        throw ParseError("entries must be strings or integers");
      }
    }
  }
  return Msc(n, Matrix(n, n * n, std::move(entries)).embed(f));
}

std::string serialize_msc(const Msc& a) { return msc_to_json(a).dump(2) + "\n"; }

Msc parse_msc(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return msc_from_json(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Msc load_msc(const std::string& path) { return parse_msc(read_file(path)); }

}  // namespace acalg
