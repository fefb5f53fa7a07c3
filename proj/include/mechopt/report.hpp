#pragma once

#include "mechopt/mechanisms.hpp"
#include "mechopt/verify.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace mechopt {

std::string render_solve_text(const Scenario& s, const MechanismResult& r);
nlohmann::json render_solve_json(const Scenario& s, const MechanismResult& r);

/// Revenue table plus per-agent uplifts opt - wt and wt - vcg.
std::string render_compare_text(const Scenario& s, const MechanismResult& r);
nlohmann::json render_compare_json(const Scenario& s, const MechanismResult& r);

std::string render_verify_text(const VerifyReport& r);

}  // namespace mechopt
