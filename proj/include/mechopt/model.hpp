#pragma once

#include "mechopt/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mechopt {

// A type is a value vector indexed by allocation (dense 0..|allocations|-1;
// index order in the scenario file is the global tie-breaking order).
using Valuation = std::vector<Rat>;

// Axis-aligned box of valuations, closed below; upper ends may be +infinity.
// Degenerate coordinates (lower == upper) pin a value, e.g. packages an
// agent never bids on.
struct BoxPiece {
  std::vector<Rat> lower;
  std::vector<ExtRat> upper;

  std::size_t dim() const { return lower.size(); }
};

// Finite set of pairwise-distinct valuations.
struct PointSetPiece {
  std::vector<Valuation> points;

  std::size_t dim() const { return points.empty() ? 0 : points.front().size(); }
};

using Piece = std::variant<BoxPiece, PointSetPiece>;

std::size_t piece_dim(const Piece& p);

// An agent's type space: a finite union of pieces.
struct TypeSpace {
  std::vector<Piece> pieces;
};

struct Scenario {
  std::vector<std::string> allocations;  // labels; index order breaks ties
  std::vector<std::string> agents;
  std::vector<Valuation> reported;  // one per agent
  std::vector<TypeSpace> spaces;    // one per agent

  std::size_t num_allocations() const { return allocations.size(); }
  std::size_t num_agents() const { return agents.size(); }
};

struct ValidationError : std::runtime_error {
  std::vector<std::string> violations;
  explicit ValidationError(std::vector<std::string> v);
};

struct MembershipError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool contains(const BoxPiece& p, const Valuation& v);
bool contains(const PointSetPiece& p, const Valuation& v);
bool contains(const Piece& p, const Valuation& v);
bool contains(const TypeSpace& ts, const Valuation& v);

/// Checks every scenario invariant (dimensions, nonnegativity, box ordering,
/// point distinctness, reported-type membership). Empty result means valid.
std::vector<std::string> validate(const Scenario& s);

/// validate + throw ValidationError on any violation.
void validate_or_throw(const Scenario& s);

}  // namespace mechopt
