#include "mechopt/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mechopt {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << "; ";
    os << v[i];
  }
  return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> v)
    : std::runtime_error("invalid scenario: " + join(v)), violations(std::move(v)) {}

std::size_t piece_dim(const Piece& p) {
  return std::visit([](const auto& x) { return x.dim(); }, p);
}

bool contains(const BoxPiece& p, const Valuation& v) {
  if (v.size() != p.dim()) return false;
  for (std::size_t g = 0; g < v.size(); ++g) {
    if (v[g] < p.lower[g]) return false;
    if (ExtRat(v[g]) > p.upper[g]) return false;
  }
  return true;
}

bool contains(const PointSetPiece& p, const Valuation& v) {
  return std::find(p.points.begin(), p.points.end(), v) != p.points.end();
}

bool contains(const Piece& p, const Valuation& v) {
  return std::visit([&](const auto& x) { return contains(x, v); }, p);
}

bool contains(const TypeSpace& ts, const Valuation& v) {
  for (const auto& p : ts.pieces)
    if (contains(p, v)) return true;
  return false;
}

namespace {

void validate_piece(const Piece& piece, std::size_t dim, const std::string& where,
                    std::vector<std::string>& out) {
  if (piece_dim(piece) != dim) {
    out.push_back(where + ": piece dimension " + std::to_string(piece_dim(piece)) +
                  " != |allocations| = " + std::to_string(dim));
    return;
  }
  if (const auto* box = std::get_if<BoxPiece>(&piece)) {
    if (box->lower.size() != box->upper.size()) {
      out.push_back(where + ": box lower/upper length mismatch");
      return;
    }
    for (std::size_t g = 0; g < box->lower.size(); ++g) {
      if (box->lower[g] < 0)
        out.push_back(where + ": negative lower bound at coordinate " + std::to_string(g));
      if (ExtRat(box->lower[g]) > box->upper[g])
        out.push_back(where + ": empty interval at coordinate " + std::to_string(g) +
                      " (lower " + render_rat(box->lower[g]) + " > upper " +
                      render_ext(box->upper[g]) + ")");
    }
  } else {
    const auto& ps = std::get<PointSetPiece>(piece);
    if (ps.points.empty()) {
      out.push_back(where + ": empty point set");
      return;
    }
    std::set<Valuation> seen;
    for (const auto& pt : ps.points) {
      if (pt.size() != dim) {
        out.push_back(where + ": point dimension mismatch");
        continue;
      }
      for (const auto& x : pt)
        if (x < 0) {
          out.push_back(where + ": negative point coordinate");
          break;
        }
      if (!seen.insert(pt).second) out.push_back(where + ": duplicate point");
    }
  }
}

}  // namespace

std::vector<std::string> validate(const Scenario& s) {
  std::vector<std::string> out;
  const std::size_t dim = s.num_allocations();
  if (dim == 0) out.push_back("no allocations");
  if (s.num_agents() == 0) out.push_back("no agents");
  if (s.reported.size() != s.num_agents())
    out.push_back("reported count != agent count");
  if (s.spaces.size() != s.num_agents())
    out.push_back("type space count != agent count");

  for (std::size_t i = 0; i < s.reported.size() && i < s.num_agents(); ++i) {
    const std::string who = "agent " + s.agents[i];
    if (s.reported[i].size() != dim) {
      out.push_back(who + ": reported valuation has wrong dimension");
      continue;
    }
    for (const auto& x : s.reported[i])
      if (x < 0) {
        out.push_back(who + ": negative reported value");
        break;
      }
  }
  for (std::size_t i = 0; i < s.spaces.size() && i < s.num_agents(); ++i) {
    const std::string who = "agent " + s.agents[i];
    if (s.spaces[i].pieces.empty()) {
      out.push_back(who + ": empty type space");
      continue;
    }
    for (std::size_t k = 0; k < s.spaces[i].pieces.size(); ++k)
      validate_piece(s.spaces[i].pieces[k], dim, who + " piece " + std::to_string(k), out);
  }
  if (out.empty()) {
    for (std::size_t i = 0; i < s.num_agents(); ++i)
      if (!contains(s.spaces[i], s.reported[i]))
        out.push_back("agent " + s.agents[i] + ": reported type not in type space");
  }
  return out;
}

void validate_or_throw(const Scenario& s) {
  auto v = validate(s);
  if (!v.empty()) throw ValidationError(std::move(v));
}

}  // namespace mechopt
