#include "mechopt/infima.hpp"

#include <algorithm>

namespace mechopt {

namespace {

// Best case for alpha within a box: every other coordinate at its lower
// bound, alpha's coordinate as high as the box allows.
bool box_achieves(const BoxPiece& b, std::size_t alpha, const ExternalityContext& ctx) {
  if (b.upper[alpha].is_infinite()) return true;  // can outbid everything
  Valuation v = b.lower;
  v[alpha] = b.upper[alpha].finite();
  return eff_alloc_with(v, ctx) == alpha;
}

// Smallest level of v[alpha] (others pinned to lower bounds) at which alpha
// weakly beats every competitor: max(lower[alpha], max_{g != alpha}(l_g + c_g) - c_alpha).
Rat box_min_winning_level(const BoxPiece& b, std::size_t alpha, const ExternalityContext& ctx) {
  Rat level = b.lower[alpha];
  for (std::size_t g = 0; g < b.dim(); ++g) {
    if (g == alpha) continue;
    Rat need = b.lower[g] + ctx.c[g] - ctx.c[alpha];
    if (need > level) level = std::move(need);
  }
  return level;
}

InfResult box_result(Valuation witness, Rat value, std::size_t alpha,
                     const ExternalityContext& ctx) {
  InfResult r;
  r.attained = eff_alloc_with(witness, ctx) == alpha;
  r.value = std::move(value);
  r.witness = std::move(witness);
  return r;
}

}  // namespace

std::vector<std::size_t> alloc_image(const Piece& p, const ExternalityContext& ctx) {
  std::vector<std::size_t> out;
  if (const auto* box = std::get_if<BoxPiece>(&p)) {
    for (std::size_t g = 0; g < box->dim(); ++g)
      if (box_achieves(*box, g, ctx)) out.push_back(g);
  } else {
    const auto& ps = std::get<PointSetPiece>(p);
    for (const auto& pt : ps.points) {
      std::size_t g = eff_alloc_with(pt, ctx);
      if (!std::binary_search(out.begin(), out.end(), g))
        out.insert(std::lower_bound(out.begin(), out.end(), g), g);
    }
  }
  return out;
}

InfResult inf_welfare(const Piece& p, const ExternalityContext& ctx) {
  if (const auto* box = std::get_if<BoxPiece>(&p)) {
    InfResult r;
    r.witness = box->lower;
    r.value = welfare_at(box->lower, ctx);
    r.attained = true;
    return r;
  }
  const auto& ps = std::get<PointSetPiece>(p);
  InfResult r;
  for (const auto& pt : ps.points) {
    Rat w = welfare_at(pt, ctx);
    if (!r.value || w < *r.value) {
      r.value = std::move(w);
      r.witness = pt;
    }
  }
  r.attained = r.value.has_value();
  return r;
}

InfResult inf_welfare_given_eff(const Piece& p, std::size_t alpha,
                                const ExternalityContext& ctx) {
  if (const auto* box = std::get_if<BoxPiece>(&p)) {
    if (!box_achieves(*box, alpha, ctx)) return InfResult::infeasible();
    Rat level = box_min_winning_level(*box, alpha, ctx);
    Valuation witness = box->lower;
    witness[alpha] = level;
    return box_result(std::move(witness), level + ctx.c[alpha], alpha, ctx);
  }
  const auto& ps = std::get<PointSetPiece>(p);
  InfResult r;
  for (const auto& pt : ps.points) {
    if (eff_alloc_with(pt, ctx) != alpha) continue;
    Rat w = pt[alpha] + ctx.c[alpha];
    if (!r.value || w < *r.value) {
      r.value = std::move(w);
      r.witness = pt;
    }
  }
  r.attained = r.value.has_value();
  return r;
}

InfResult inf_diff_given_eff(const Piece& p, std::size_t alpha, std::size_t beta,
                             const ExternalityContext& ctx) {
  if (alpha == beta) throw std::invalid_argument("inf_diff_given_eff: alpha == beta");
  if (const auto* box = std::get_if<BoxPiece>(&p)) {
    if (!box_achieves(*box, alpha, ctx)) return InfResult::infeasible();
    // Minimize (x + c_a) - (y + c_b) over the closure of the efficiency
    // region, x = v[alpha] in [l_a, u_a], y = v[beta] in [l_b, u_b], all
    // other coordinates pinned to their lower bounds. Efficiency forces
    // x + c_a >= y + c_b and x >= min winning level; the objective is
    // increasing in x and decreasing in y, so take x minimal, y maximal.
    Rat x_lo = box_min_winning_level(*box, alpha, ctx);
    Rat y_cap = x_lo + ctx.c[alpha] - ctx.c[beta];
    Rat y = box->upper[beta].is_infinite() ? y_cap
                                           : std::min(y_cap, box->upper[beta].finite());
    Rat value = y_cap - y;  // max(0, x_lo + c_a - c_b - u_b)
    Valuation witness = box->lower;
    witness[alpha] = x_lo;
    witness[beta] = std::move(y);
    return box_result(std::move(witness), std::move(value), alpha, ctx);
  }
  const auto& ps = std::get<PointSetPiece>(p);
  InfResult r;
  for (const auto& pt : ps.points) {
    if (eff_alloc_with(pt, ctx) != alpha) continue;
    Rat d = (pt[alpha] + ctx.c[alpha]) - (pt[beta] + ctx.c[beta]);
    if (!r.value || d < *r.value) {
      r.value = std::move(d);
      r.witness = pt;
    }
  }
  r.attained = r.value.has_value();
  return r;
}

}  // namespace mechopt
