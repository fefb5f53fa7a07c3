#pragma once

#include "mechopt/model.hpp"

namespace mechopt {

// For agent i and fixed reports of everyone else: c[g] = sum over j != i of
// v_j(g). Welfare at (v_i, v_-i) is then max_g v_i(g) + c[g].
struct ExternalityContext {
  std::size_t agent = 0;
  std::vector<Rat> c;
};

/// Welfare-maximizing allocation; ties go to the smallest allocation index.
std::size_t eff_alloc(const std::vector<Valuation>& profile);

/// Efficient allocation when agent ctx.agent reports v and the rest are
/// folded into ctx: argmax_g v[g] + c[g], smallest index on ties.
std::size_t eff_alloc_with(const Valuation& v, const ExternalityContext& ctx);

ExternalityContext externality_ctx(const std::vector<Valuation>& profile, std::size_t agent);

/// max_g (v[g] + c[g]) — the welfare of the full profile (v, v_-i).
Rat welfare_at(const Valuation& v, const ExternalityContext& ctx);

}  // namespace mechopt
