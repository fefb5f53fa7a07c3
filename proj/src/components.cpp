#include "mechopt/components.hpp"

#include <algorithm>
#include <numeric>

namespace mechopt {

namespace {

bool boxes_overlap(const BoxPiece& a, const BoxPiece& b) {
  for (std::size_t g = 0; g < a.dim(); ++g) {
    if (ExtRat(a.lower[g]) > b.upper[g]) return false;
    if (ExtRat(b.lower[g]) > a.upper[g]) return false;
  }
  return true;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// A connectivity unit: a whole box piece, or one point of a point-set piece.
struct Unit {
  std::size_t piece;
  int point;  // -1 for a box
};

}  // namespace

std::vector<Component> connected_components(const TypeSpace& ts) {
  std::vector<Unit> units;
  for (std::size_t k = 0; k < ts.pieces.size(); ++k) {
    if (std::holds_alternative<BoxPiece>(ts.pieces[k])) {
      units.push_back({k, -1});
    } else {
      const auto& ps = std::get<PointSetPiece>(ts.pieces[k]);
      for (int j = 0; j < static_cast<int>(ps.points.size()); ++j) units.push_back({k, j});
    }
  }

  auto unit_point = [&](const Unit& u) -> const Valuation& {
    return std::get<PointSetPiece>(ts.pieces[u.piece]).points[static_cast<std::size_t>(u.point)];
  };

  UnionFind uf(units.size());
  for (std::size_t a = 0; a < units.size(); ++a) {
    for (std::size_t b = a + 1; b < units.size(); ++b) {
      const bool a_box = units[a].point < 0;
      const bool b_box = units[b].point < 0;
      bool linked;
      if (a_box && b_box)
        linked = boxes_overlap(std::get<BoxPiece>(ts.pieces[units[a].piece]),
                               std::get<BoxPiece>(ts.pieces[units[b].piece]));
      else if (a_box)
        linked = contains(std::get<BoxPiece>(ts.pieces[units[a].piece]), unit_point(units[b]));
      else if (b_box)
        linked = contains(std::get<BoxPiece>(ts.pieces[units[b].piece]), unit_point(units[a]));
      else
        linked = unit_point(units[a]) == unit_point(units[b]);
      if (linked) uf.unite(a, b);
    }
  }

  // Group by root, ordered by each group's first unit (piece order).
  std::vector<Component> comps;
  std::vector<int> root_to_comp(units.size(), -1);
  for (std::size_t u = 0; u < units.size(); ++u) {
    std::size_t root = uf.find(u);
    if (root_to_comp[root] < 0) {
      root_to_comp[root] = static_cast<int>(comps.size());
      comps.push_back(Component{comps.size(), {}, {}});
    }
    Component& comp = comps[static_cast<std::size_t>(root_to_comp[root])];
    comp.members.emplace_back(units[u].piece, units[u].point);
    if (units[u].point < 0)
      comp.pieces.push_back(ts.pieces[units[u].piece]);
    else
      comp.pieces.push_back(PointSetPiece{{unit_point(units[u])}});
  }
  return comps;
}

std::size_t component_of(const std::vector<Component>& comps, const Valuation& v) {
  for (const auto& comp : comps)
    for (const auto& p : comp.pieces)
      if (contains(p, v)) return comp.id;
  throw MembershipError("valuation lies in no piece of the type space");
}

}  // namespace mechopt
