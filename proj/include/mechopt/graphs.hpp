#pragma once

#include "mechopt/components.hpp"
#include "mechopt/infima.hpp"

#include <string>

namespace mechopt {

// Source-plus-content-vertices digraph whose shortest-path labels from the
// source are the optimal h values. Content vertices are either allocations
// that some type in the space can make efficient, or connected components.
struct PriceGraph {
  enum class Kind { allocation, component };
  Kind kind = Kind::allocation;
  std::vector<std::size_t> vertex_ids;  // allocation index or component id
  std::vector<std::string> labels;
  std::vector<Rat> source_cost;            // cost(s, v), finite by construction
  std::vector<std::vector<ExtRat>> cost;   // cost[u][v]; +inf = absent, diagonal unused

  std::size_t size() const { return vertex_ids.size(); }
  /// Vertex position for a content id; throws InternalError when absent.
  std::size_t index_of(std::size_t id) const;
};

struct ShortestPaths {
  std::vector<Rat> h;          // per content vertex
  std::vector<int> pred;       // predecessor vertex position; -1 = source
};

PriceGraph build_allocation_graph(const TypeSpace& ts, const ExternalityContext& ctx,
                                  const std::vector<std::string>& alloc_labels);

PriceGraph build_component_graph(const std::vector<Component>& comps,
                                 const ExternalityContext& ctx);

/// Exact Bellman-Ford from the source. A negative cycle cannot occur on
/// well-formed inputs; detecting one throws InternalError.
ShortestPaths shortest_paths(const PriceGraph& g);

/// Exhaustive minimum over all simple source paths; independent oracle for
/// shortest_paths. Throws std::length_error above the vertex cap.
ShortestPaths enumerate_paths_oracle(const PriceGraph& g, std::size_t cap = 10);

/// Deterministic DOT rendering; predecessor-tree edges solid, others dashed.
std::string to_dot(const PriceGraph& g, const ShortestPaths& sp);

}  // namespace mechopt
