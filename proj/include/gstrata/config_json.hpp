#pragma once

#include <string>

#include <json.hpp>

#include "gstrata/subspace.hpp"

namespace gstrata {

// Wire format shared with the CLI:
//   {"field": {"kind": "prime", "p": 5} | {"kind": "rational"},
//    "n": 4, "k": 2,
//    "subspaces": [["1", "0", "2", "3", ...], ...]}
// Each subspace lists its n x k basis row-major as decimal strings ("3/7").
// Bases are canonicalized on read and written in canonical form.

nlohmann::json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const nlohmann::json& j);

nlohmann::json configuration_to_json(const Configuration& config);
/// ParseError on malformed documents; the Configuration invariants raise
/// their own codes (InvalidConfiguration, RankDeficient, ...).
Configuration configuration_from_json(const nlohmann::json& j);
Configuration parse_configuration(const std::string& text);

}  // namespace gstrata
