#include "gstrata/config_json.hpp"

#include <vector>

#include "gstrata/error.hpp"

namespace gstrata {

using nlohmann::json;

json field_to_json(const FieldSpec& field) {
  if (field.is_rational()) return json{{"kind", "rational"}};
  return json{{"kind", "prime"}, {"p", field.modulus()}};
}

FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorCode::ParseError, "field must be an object with a string 'kind'");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "prime") {
    if (!j.contains("p") || !j["p"].is_number_unsigned())
      throw Error(ErrorCode::ParseError, "prime field needs a positive integer 'p'");
    return FieldSpec::prime(j["p"].get<std::uint64_t>());
  }
  throw Error(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
}

json configuration_to_json(const Configuration& config) {
  json subspaces = json::array();
  for (const auto& s : config.subspaces()) {
    json entries = json::array();
    for (const auto& e : s.basis().entries()) entries.push_back(config.field().format(e));
    subspaces.push_back(std::move(entries));
  }
  return json{{"field", field_to_json(config.field())},
              {"n", config.ambient_dim()},
              {"k", config.dim()},
              {"subspaces", std::move(subspaces)}};
}

Configuration configuration_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "configuration must be a JSON object");
  for (const char* key : {"field", "n", "k", "subspaces"})
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  const FieldSpec field = field_from_json(j["field"]);
  if (!j["n"].is_number_unsigned() || !j["k"].is_number_unsigned())
    throw Error(ErrorCode::ParseError, "'n' and 'k' must be non-negative integers");
  const auto n = j["n"].get<std::size_t>();
  const auto k = j["k"].get<std::size_t>();
  if (!j["subspaces"].is_array()) throw Error(ErrorCode::ParseError, "'subspaces' must be an array");

  std::vector<Subspace> subspaces;
  for (const auto& raw : j["subspaces"]) {
    if (!raw.is_array() || raw.size() != n * k)
      throw Error(ErrorCode::ParseError, "each subspace needs exactly n*k entries");
    std::vector<Scalar> data;
    data.reserve(n * k);
    for (const auto& e : raw) {
      if (!e.is_string()) throw Error(ErrorCode::ParseError, "entries must be decimal strings");
      data.push_back(field.parse(e.get<std::string>()));
    }
    subspaces.push_back(Subspace::from_basis(Matrix(field, n, k, std::move(data))));
  }
  return Configuration(std::move(subspaces));
}

Configuration parse_configuration(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return configuration_from_json(j);
}

}  // namespace gstrata
