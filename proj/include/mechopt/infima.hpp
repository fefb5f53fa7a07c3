#pragma once

#include "mechopt/model.hpp"
#include "mechopt/welfare.hpp"

#include <optional>

namespace mechopt {

// Result of an infimum kernel. `value` is empty when the region optimized
// over is empty. A finite result carries a witness in the closure of the
// region; `attained` is false when the witness sits on a boundary the
// tie-breaking rule assigns to another allocation (the infimum is then a
// limit, not a minimum).
struct InfResult {
  std::optional<Rat> value;
  std::optional<Valuation> witness;
  bool attained = false;

  static InfResult infeasible() { return {}; }
  bool feasible() const { return value.has_value(); }
};

/// Allocations g such that some type in the piece makes g efficient
/// (tie-breaking included). Sorted ascending.
std::vector<std::size_t> alloc_image(const Piece& p, const ExternalityContext& ctx);

/// inf of welfare over the piece. For a box the welfare is a max of terms
/// each increasing in one coordinate, so the infimum sits at the lower
/// corner; point sets are enumerated. Always feasible (pieces are nonempty).
InfResult inf_welfare(const Piece& p, const ExternalityContext& ctx);

/// inf of welfare over the closure of {v in piece : eff_alloc_with(v) == alpha}.
InfResult inf_welfare_given_eff(const Piece& p, std::size_t alpha, const ExternalityContext& ctx);

/// inf of (v[alpha]+c[alpha]) - (v[beta]+c[beta]) over the closure of
/// {v in piece : eff_alloc_with(v) == alpha}. Requires alpha != beta.
InfResult inf_diff_given_eff(const Piece& p, std::size_t alpha, std::size_t beta,
                             const ExternalityContext& ctx);

}  // namespace mechopt
