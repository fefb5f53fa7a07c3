#pragma once

#include "mechopt/model.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace mechopt {

// Scenario file schema: top-level keys
//   allocations : array of label strings (array order = tie-break order)
//   agents      : array of agent names
//   reported    : per agent, array of values (integers or decimal strings)
//   spaces      : per agent, array of pieces, each either
//                   {"kind":"box","lower":[...],"upper":[...]}   null upper = +inf
//                   {"kind":"points","points":[[...],...]}
Scenario scenario_from_json(const nlohmann::json& j);

Scenario load_scenario(const std::string& path);

}  // namespace mechopt
