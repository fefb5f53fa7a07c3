#pragma once

#include "mechopt/model.hpp"

namespace mechopt {

// One connected component of a type space. Connectivity is decided at the
// piece level: boxes are linked when their closed intervals intersect in
// every coordinate; an individual point links to a box containing it or to
// an equal point. A point-set piece is treated as its individual points, so
// isolated points become singleton components.
struct Component {
  std::size_t id = 0;
  // (piece index, point index within the piece; -1 for a whole box)
  std::vector<std::pair<std::size_t, int>> members;
  // Materialized geometry: member boxes, and single-point pieces for points.
  std::vector<Piece> pieces;
};

/// Components partition the piece list; ids are deterministic given piece order.
std::vector<Component> connected_components(const TypeSpace& ts);

/// Index into `comps` of the component containing v. Throws MembershipError
/// when v lies in no piece.
std::size_t component_of(const std::vector<Component>& comps, const Valuation& v);

}  // namespace mechopt
