#pragma once

#include "mechopt/graphs.hpp"
#include "mechopt/scenario_io.hpp"

#include <map>

namespace mechopt {

// Everything the solver derives for one agent: the four payments plus the
// optimal h labels of both price graphs (the full pricing function: the
// payment for any counterfactual report is h at its vertex minus the
// externality at its efficient allocation).
struct AgentPricing {
  std::size_t agent = 0;
  Rat vcg;
  Rat wt;
  Rat opt_alloc;
  Rat opt_comp;
  std::map<std::size_t, Rat> h_alloc;  // allocation index -> h
  std::map<std::size_t, Rat> h_comp;   // component id -> h
  std::size_t component = 0;           // component of the reported type
};

struct MechanismResult {
  std::size_t efficient_allocation = 0;
  std::vector<AgentPricing> per_agent;
  Rat revenue_vcg;
  Rat revenue_wt;
  Rat revenue_opt;
};

/// w(0, v_-i) - c[eff]: the agent's externality relative to exiting.
Rat vcg_payment(const std::vector<Valuation>& profile, std::size_t agent);

/// Infimum welfare over the whole type space, minus c[eff].
Rat wt_payment(const std::vector<Valuation>& profile, std::size_t agent, const TypeSpace& ts);

/// Shortest-path h at the reported type's efficient allocation, minus c[eff].
Rat opt_alloc_payment(const std::vector<Valuation>& profile, std::size_t agent,
                      const TypeSpace& ts, const std::vector<std::string>& alloc_labels,
                      std::map<std::size_t, Rat>* h_out = nullptr);

/// Shortest-path h at the reported type's connected component, minus c[eff].
Rat opt_comp_payment(const std::vector<Valuation>& profile, std::size_t agent,
                     const TypeSpace& ts, std::map<std::size_t, Rat>* h_out = nullptr,
                     std::size_t* component_out = nullptr);

/// All four rules for every agent. Throws InternalError if the two optimal
/// characterizations ever disagree.
MechanismResult solve(const Scenario& s);

}  // namespace mechopt
