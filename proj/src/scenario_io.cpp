#include "mechopt/scenario_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace mechopt {

namespace {

using nlohmann::json;

Rat value_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw ParseError(where + ": values must be integers or decimal strings");
}

Valuation valuation_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of values");
  Valuation v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(value_from_json(x, where));
  return v;
}

Piece piece_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError(where + ": piece must be an object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "box") {
    BoxPiece box;
    box.lower = valuation_from_json(j.at("lower"), where + ".lower");
    const auto& up = j.at("upper");
    if (!up.is_array()) throw ParseError(where + ".upper: expected an array");
    for (const auto& x : up) {
      if (x.is_null())
        box.upper.push_back(ExtRat::infinity());
      else
        box.upper.push_back(ExtRat(value_from_json(x, where + ".upper")));
    }
    return box;
  }
  if (kind == "points") {
    PointSetPiece ps;
    for (const auto& pt : j.at("points"))
      ps.points.push_back(valuation_from_json(pt, where + ".points"));
    return ps;
  }
  throw ParseError(where + ": unknown piece kind '" + kind + "'");
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  Scenario s;
  if (!j.is_object()) throw ParseError("scenario: expected a JSON object");
  for (const char* key : {"allocations", "agents", "reported", "spaces"})
    if (!j.contains(key)) throw ParseError(std::string("scenario: missing key '") + key + "'");

  s.allocations = j.at("allocations").get<std::vector<std::string>>();
  s.agents = j.at("agents").get<std::vector<std::string>>();
  for (std::size_t i = 0; i < j.at("reported").size(); ++i)
    s.reported.push_back(
        valuation_from_json(j.at("reported")[i], "reported[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < j.at("spaces").size(); ++i) {
    const auto& sp = j.at("spaces")[i];
    if (!sp.is_array())
      throw ParseError("spaces[" + std::to_string(i) + "]: expected an array of pieces");
    TypeSpace ts;
    for (std::size_t k = 0; k < sp.size(); ++k)
      ts.pieces.push_back(piece_from_json(
          sp[k], "spaces[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    s.spaces.push_back(std::move(ts));
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return scenario_from_json(j);
}

}  // namespace mechopt
