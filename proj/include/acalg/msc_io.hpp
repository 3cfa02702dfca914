#pragma once

#include <json.hpp>

#include <string>

#include "acalg/msc.hpp"

namespace acalg {

// Document layout:
//   {"field": {"kind": "Q"} | {"kind": "Fp", "p": P} | {"kind": "tower", "gens": [...]},
//    "dim": n,
//    "rows": [[n^2 scalar strings], ... n rows]}
// Scalars are "p/q" over Q, residues over GF(p), and
// "c0 + c1*sqrt(d1) + c2*sqrt(d2) + c3*sqrt(d1*d2)" over towers.
nlohmann::json field_to_json(Field f);
Field field_from_json(const nlohmann::json& j);

nlohmann::json msc_to_json(const Msc& a);
Msc msc_from_json(const nlohmann::json& j);

std::string serialize_msc(const Msc& a);
Msc parse_msc(const std::string& text);
Msc load_msc(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace acalg
