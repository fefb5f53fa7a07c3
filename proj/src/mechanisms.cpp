#include "mechopt/mechanisms.hpp"

namespace mechopt {

Rat vcg_payment(const std::vector<Valuation>& profile, std::size_t agent) {
  ExternalityContext ctx = externality_ctx(profile, agent);
  const std::size_t eff = eff_alloc(profile);
  Rat others_alone = ctx.c[0];
  for (const Rat& x : ctx.c)
    if (x > others_alone) others_alone = x;
  return others_alone - ctx.c[eff];
}

Rat wt_payment(const std::vector<Valuation>& profile, std::size_t agent, const TypeSpace& ts) {
  ExternalityContext ctx = externality_ctx(profile, agent);
  const std::size_t eff = eff_alloc(profile);
  std::optional<Rat> weakest;
  for (const auto& p : ts.pieces) {
    InfResult r = inf_welfare(p, ctx);
    if (!r.feasible()) continue;
    if (!weakest || *r.value < *weakest) weakest = *r.value;
  }
  if (!weakest) throw InternalError("wt_payment: type space has no welfare infimum");
  return *weakest - ctx.c[eff];
}

Rat opt_alloc_payment(const std::vector<Valuation>& profile, std::size_t agent,
                      const TypeSpace& ts, const std::vector<std::string>& alloc_labels,
                      std::map<std::size_t, Rat>* h_out) {
  ExternalityContext ctx = externality_ctx(profile, agent);
  const std::size_t eff = eff_alloc(profile);
  PriceGraph g = build_allocation_graph(ts, ctx, alloc_labels);
  ShortestPaths sp = shortest_paths(g);
  if (h_out) {
    h_out->clear();
    for (std::size_t v = 0; v < g.size(); ++v) (*h_out)[g.vertex_ids[v]] = sp.h[v];
  }
  // The reported type lies in the space, so its efficient allocation must be
  // a graph vertex; index_of throws InternalError otherwise.
  return sp.h[g.index_of(eff)] - ctx.c[eff];
}

Rat opt_comp_payment(const std::vector<Valuation>& profile, std::size_t agent,
                     const TypeSpace& ts, std::map<std::size_t, Rat>* h_out,
                     std::size_t* component_out) {
  ExternalityContext ctx = externality_ctx(profile, agent);
  const std::size_t eff = eff_alloc(profile);
  std::vector<Component> comps = connected_components(ts);
  const std::size_t home = component_of(comps, profile[agent]);
  PriceGraph g = build_component_graph(comps, ctx);
  ShortestPaths sp = shortest_paths(g);
  if (h_out) {
    h_out->clear();
    for (std::size_t v = 0; v < g.size(); ++v) (*h_out)[g.vertex_ids[v]] = sp.h[v];
  }
  if (component_out) *component_out = home;
  return sp.h[g.index_of(home)] - ctx.c[eff];
}

MechanismResult solve(const Scenario& s) {
  validate_or_throw(s);
  MechanismResult out;
  out.efficient_allocation = eff_alloc(s.reported);
  for (std::size_t i = 0; i < s.num_agents(); ++i) {
    AgentPricing ap;
    ap.agent = i;
    ap.vcg = vcg_payment(s.reported, i);
    ap.wt = wt_payment(s.reported, i, s.spaces[i]);
    ap.opt_alloc = opt_alloc_payment(s.reported, i, s.spaces[i], s.allocations, &ap.h_alloc);
    ap.opt_comp = opt_comp_payment(s.reported, i, s.spaces[i], &ap.h_comp, &ap.component);
    if (ap.opt_alloc != ap.opt_comp)
      throw InternalError("characterization mismatch for agent " + s.agents[i] + ": " +
                          render_rat(ap.opt_alloc) + " vs " + render_rat(ap.opt_comp));
    out.revenue_vcg += ap.vcg;
    out.revenue_wt += ap.wt;
    out.revenue_opt += ap.opt_alloc;
    out.per_agent.push_back(std::move(ap));
  }
  return out;
}

}  // namespace mechopt
