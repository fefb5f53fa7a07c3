#include "mechopt/graphs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mechopt {

std::size_t PriceGraph::index_of(std::size_t id) const {
  auto it = std::find(vertex_ids.begin(), vertex_ids.end(), id);
  if (it == vertex_ids.end())
    throw InternalError("price graph has no vertex with id " + std::to_string(id));
  return static_cast<std::size_t>(it - vertex_ids.begin());
}

PriceGraph build_allocation_graph(const TypeSpace& ts, const ExternalityContext& ctx,
                                  const std::vector<std::string>& alloc_labels) {
  PriceGraph g;
  g.kind = PriceGraph::Kind::allocation;

  std::set<std::size_t> achievable;
  std::vector<std::vector<std::size_t>> images;
  for (const auto& p : ts.pieces) {
    images.push_back(alloc_image(p, ctx));
    achievable.insert(images.back().begin(), images.back().end());
  }
  g.vertex_ids.assign(achievable.begin(), achievable.end());
  for (std::size_t id : g.vertex_ids) g.labels.push_back(alloc_labels[id]);

  const std::size_t n = g.size();
  g.source_cost.resize(n);
  g.cost.assign(n, std::vector<ExtRat>(n, ExtRat::infinity()));

  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t alpha = g.vertex_ids[a];
    ExtRat src = ExtRat::infinity();
    for (std::size_t k = 0; k < ts.pieces.size(); ++k) {
      InfResult r = inf_welfare_given_eff(ts.pieces[k], alpha, ctx);
      if (r.feasible() && ExtRat(*r.value) < src) src = ExtRat(*r.value);
    }
    g.source_cost[a] = src.finite();  // every vertex is achievable somewhere

    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      const std::size_t beta = g.vertex_ids[b];
      // Edge beta -> alpha: minimum welfare-difference over the alpha region.
      for (std::size_t k = 0; k < ts.pieces.size(); ++k) {
        InfResult r = inf_diff_given_eff(ts.pieces[k], alpha, beta, ctx);
        if (r.feasible() && ExtRat(*r.value) < g.cost[b][a]) g.cost[b][a] = ExtRat(*r.value);
      }
    }
  }
  return g;
}

PriceGraph build_component_graph(const std::vector<Component>& comps,
                                 const ExternalityContext& ctx) {
  PriceGraph g;
  g.kind = PriceGraph::Kind::component;

  std::vector<std::vector<std::size_t>> images(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::set<std::size_t> image;
    for (const auto& p : comps[c].pieces) {
      auto im = alloc_image(p, ctx);
      image.insert(im.begin(), im.end());
    }
    images[c].assign(image.begin(), image.end());
    g.vertex_ids.push_back(comps[c].id);
    g.labels.push_back("C" + std::to_string(comps[c].id));
  }

  const std::size_t n = g.size();
  g.source_cost.resize(n);
  g.cost.assign(n, std::vector<ExtRat>(n, ExtRat::infinity()));

  for (std::size_t c = 0; c < n; ++c) {
    ExtRat src = ExtRat::infinity();
    for (const auto& p : comps[c].pieces) {
      InfResult r = inf_welfare(p, ctx);
      if (r.feasible() && ExtRat(*r.value) < src) src = ExtRat(*r.value);
    }
    g.source_cost[c] = src.finite();

    for (std::size_t d = 0; d < n; ++d) {
      if (d == c) continue;
      // Edge d -> c: the joint infimum splits by the efficient allocation
      // beta of the type in d and alpha of the type in c. When the images
      // share an allocation the difference vanishes.
      ExtRat best = ExtRat::infinity();
      for (std::size_t beta : images[d]) {
        for (const auto& p : comps[c].pieces) {
          for (std::size_t alpha : alloc_image(p, ctx)) {
            if (alpha == beta) {
              best = ExtRat(Rat(0));
              continue;
            }
            InfResult r = inf_diff_given_eff(p, alpha, beta, ctx);
            if (r.feasible() && ExtRat(*r.value) < best) best = ExtRat(*r.value);
          }
        }
      }
      g.cost[d][c] = best;
    }
  }
  return g;
}

ShortestPaths shortest_paths(const PriceGraph& g) {
  const std::size_t n = g.size();
  ShortestPaths sp;
  sp.h = g.source_cost;  // paths of length one
  sp.pred.assign(n, -1);

  for (std::size_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v || g.cost[u][v].is_infinite()) continue;
        Rat cand = sp.h[u] + g.cost[u][v].finite();
        if (cand < sp.h[v]) {
          sp.h[v] = std::move(cand);
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  // One extra pass: any further improvement implies a negative cycle.
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !g.cost[u][v].is_infinite() &&
          sp.h[u] + g.cost[u][v].finite() < sp.h[v])
        throw InternalError("negative cycle in price graph");

  // Grow the predecessor tree from the source, preferring the source and
  // then the smallest vertex position among equal-cost predecessors.
  std::vector<bool> in_tree(n, false);
  for (std::size_t added = 0; added < n; ++added) {
    bool grown = false;
    for (std::size_t v = 0; v < n && !grown; ++v) {
      if (in_tree[v]) continue;
      if (sp.h[v] == g.source_cost[v]) {
        sp.pred[v] = -1;
        in_tree[v] = true;
        grown = true;
        break;
      }
      for (std::size_t u = 0; u < n; ++u) {
        if (!in_tree[u] || u == v || g.cost[u][v].is_infinite()) continue;
        if (sp.h[u] + g.cost[u][v].finite() == sp.h[v]) {
          sp.pred[v] = static_cast<int>(u);
          in_tree[v] = true;
          grown = true;
          break;
        }
      }
    }
    if (!grown) throw InternalError("predecessor tree construction stalled");
  }
  return sp;
}

ShortestPaths enumerate_paths_oracle(const PriceGraph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap) throw std::length_error("enumerate_paths_oracle: vertex cap exceeded");
  ShortestPaths sp;
  sp.h = g.source_cost;
  sp.pred.assign(n, -1);

  std::vector<bool> on_path(n, false);
  // DFS over simple paths s -> ... -> v, tracking the running cost.
  auto dfs = [&](auto&& self, std::size_t v, const Rat& cost_so_far) -> void {
    if (cost_so_far < sp.h[v]) sp.h[v] = cost_so_far;
    on_path[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (on_path[w] || w == v || g.cost[v][w].is_infinite()) continue;
      self(self, w, cost_so_far + g.cost[v][w].finite());
    }
    on_path[v] = false;
  };
  for (std::size_t v = 0; v < n; ++v) dfs(dfs, v, g.source_cost[v]);
  return sp;
}

std::string to_dot(const PriceGraph& g, const ShortestPaths& sp) {
  std::ostringstream os;
  os << "digraph price_graph {\n";
  os << "  rankdir=LR;\n";
  os << "  s [shape=circle];\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    os << "  v" << v << " [shape=box, label=\"" << g.labels[v] << "\"];\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    const char* style = sp.pred[v] == -1 ? "solid" : "dashed";
    os << "  s -> v" << v << " [label=\"" << render_rat(g.source_cost[v])
       << "\", style=" << style << "];\n";
  }
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (u == v || g.cost[u][v].is_infinite()) continue;
      const char* style = sp.pred[v] == static_cast<int>(u) ? "solid" : "dashed";
      os << "  v" << u << " -> v" << v << " [label=\"" << render_rat(g.cost[u][v].finite())
         << "\", style=" << style << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace mechopt
