#include "mechopt/welfare.hpp"

namespace mechopt {

std::size_t eff_alloc(const std::vector<Valuation>& profile) {
  if (profile.empty() || profile.front().empty())
    throw InternalError("eff_alloc: empty profile or no allocations");
  const std::size_t dim = profile.front().size();
  std::size_t best = 0;
  Rat best_total;
  for (std::size_t g = 0; g < dim; ++g) {
    Rat total;
    for (const auto& v : profile) total += v[g];
    if (g == 0 || total > best_total) {
      best = g;
      best_total = std::move(total);
    }
  }
  return best;
}

std::size_t eff_alloc_with(const Valuation& v, const ExternalityContext& ctx) {
  std::size_t best = 0;
  Rat best_total;
  for (std::size_t g = 0; g < v.size(); ++g) {
    Rat total = v[g] + ctx.c[g];
    if (g == 0 || total > best_total) {
      best = g;
      best_total = std::move(total);
    }
  }
  return best;
}

ExternalityContext externality_ctx(const std::vector<Valuation>& profile, std::size_t agent) {
  ExternalityContext ctx;
  ctx.agent = agent;
  ctx.c.assign(profile.front().size(), Rat(0));
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j == agent) continue;
    for (std::size_t g = 0; g < ctx.c.size(); ++g) ctx.c[g] += profile[j][g];
  }
  return ctx;
}

Rat welfare_at(const Valuation& v, const ExternalityContext& ctx) {
  Rat best;
  for (std::size_t g = 0; g < v.size(); ++g) {
    Rat total = v[g] + ctx.c[g];
    if (g == 0 || total > best) best = std::move(total);
  }
  return best;
}

}  // namespace mechopt
