#include "mechopt/mechanisms.hpp"

#include "support/scenario_gen.hpp"

#include <doctest.h>

using namespace mechopt;

TEST_CASE("exclusivity scenario payment ladder") {
  Scenario s = testing::load_golden("two_item_exclusivity.json");
  MechanismResult r = solve(s);
  CHECK(s.allocations[r.efficient_allocation] == "win_A");
  CHECK(r.per_agent[0].vcg == Rat(1));
  CHECK(r.per_agent[0].wt == Rat(2));
  CHECK(r.per_agent[0].opt_alloc == Rat(4));
  CHECK(r.per_agent[0].opt_comp == Rat(4));

  SUBCASE("payment is 4 from the other ray as well") {
    s.reported[0] = {Rat(0), Rat(0), Rat(9, 2)};
    MechanismResult alt = solve(s);
    CHECK(s.allocations[alt.efficient_allocation] == "win_B");
    CHECK(alt.per_agent[0].opt_alloc == Rat(4));
    CHECK(alt.per_agent[0].opt_comp == Rat(4));
  }
}

TEST_CASE("tight two-box scenario") {
  Scenario s = testing::load_golden("two_boxes_tight.json");
  MechanismResult r = solve(s);
  CHECK(r.per_agent[0].opt_alloc == Rat(4));
  CHECK(r.per_agent[0].h_alloc.at(1) == Rat(7));
  CHECK(r.per_agent[0].h_alloc.at(2) == Rat(5));

  SUBCASE("same 4 when the true type sits in the B box") {
    s.reported[0] = {Rat(0), Rat(1), Rat(4)};
    MechanismResult alt = solve(s);
    CHECK(alt.per_agent[0].opt_alloc == Rat(4));
  }
}

TEST_CASE("widened two-box scenario pays 3 or 4 by component") {
  Scenario s = testing::load_golden("two_boxes_wide.json");
  MechanismResult r = solve(s);
  CHECK(r.per_agent[0].h_alloc.at(1) == Rat(6));
  CHECK(r.per_agent[0].h_alloc.at(2) == Rat(5));
  CHECK(r.per_agent[0].opt_alloc == Rat(3));
  CHECK(r.per_agent[0].opt_comp == Rat(3));

  s.reported[0] = {Rat(0), Rat(1), Rat(4)};
  MechanismResult alt = solve(s);
  CHECK(alt.per_agent[0].opt_alloc == Rat(4));
}

TEST_CASE("vcg payment basics") {
  Scenario s = testing::load_golden("two_item_exclusivity.json");
  CHECK(vcg_payment(s.reported, 0) == Rat(1));
  // Bidder 3 wins nothing and displaces nobody.
  CHECK(vcg_payment(s.reported, 2) == Rat(0));
  // Solo agent pays nothing under VCG.
  CHECK(vcg_payment({{Rat(3), Rat(1)}}, 0) == Rat(0));
}

TEST_CASE("weakest-type payment basics") {
  Scenario s = testing::load_golden("two_item_exclusivity.json");
  CHECK(wt_payment(s.reported, 0, s.spaces[0]) == Rat(2));

  SUBCASE("orthant space collapses to vcg") {
    CHECK(wt_payment(s.reported, 1, s.spaces[1]) == vcg_payment(s.reported, 1));
  }
  SUBCASE("singleton space extracts full surplus") {
    TypeSpace singleton{{PointSetPiece{{s.reported[0]}}}};
    ExternalityContext ctx = externality_ctx(s.reported, 0);
    Rat full = welfare_at(s.reported[0], ctx) - ctx.c[eff_alloc(s.reported)];
    CHECK(wt_payment(s.reported, 0, singleton) == full);
    CHECK(opt_alloc_payment(s.reported, 0, singleton, s.allocations) == full);
  }
}

TEST_CASE("orthant spaces equalize all three mechanisms") {
  Scenario s = testing::load_golden("two_item_exclusivity.json");
  // Give bidder 1 the unconstrained orthant too.
  s.spaces[0] = s.spaces[1];
  MechanismResult r = solve(s);
  for (const auto& ap : r.per_agent) {
    CHECK(ap.vcg == ap.wt);
    CHECK(ap.wt == ap.opt_alloc);
  }
  CHECK(r.revenue_vcg == r.revenue_opt);
}

TEST_CASE("characterization equality and dominance on random scenarios") {
  std::mt19937_64 rng(83);
  for (int k = 0; k < 400; ++k) {
    Scenario s = testing::random_scenario(rng);
    MechanismResult r = solve(s);  // throws on characterization mismatch
    std::size_t eff = r.efficient_allocation;
    for (const auto& ap : r.per_agent) {
      CHECK(ap.opt_alloc == ap.opt_comp);
      CHECK(ap.vcg <= ap.wt);
      CHECK(ap.wt <= ap.opt_alloc);
      // IR at the reported type.
      CHECK(ap.opt_alloc <= s.reported[ap.agent][eff]);
      // Every optimal h label dominates the weakest-type level.
      ExternalityContext ctx = externality_ctx(s.reported, ap.agent);
      Rat wt_level = ap.wt + ctx.c[eff];
      for (const auto& [alloc, h] : ap.h_alloc) CHECK(h >= wt_level);
      for (const auto& [comp, h] : ap.h_comp) CHECK(h >= wt_level);
    }
  }
}

TEST_CASE("connected single-piece spaces reduce to weakest type") {
  std::mt19937_64 rng(89);
  testing::GenOptions opt;
  opt.max_pieces = 1;
  for (int k = 0; k < 200; ++k) {
    Scenario s = testing::random_scenario(rng, opt);
    MechanismResult r = solve(s);
    for (const auto& ap : r.per_agent) {
      if (std::holds_alternative<PointSetPiece>(s.spaces[ap.agent].pieces[0])) continue;
      CHECK(ap.opt_alloc == ap.wt);
    }
  }
}

TEST_CASE("payments scale with the scenario") {
  std::mt19937_64 rng(97);
  const Rat k(3, 2);
  auto scale_piece = [&](Piece& p) {
    if (auto* box = std::get_if<BoxPiece>(&p)) {
      for (auto& x : box->lower) x *= k;
      for (auto& x : box->upper)
        if (!x.is_infinite()) x = ExtRat(x.finite() * k);
    } else {
      for (auto& pt : std::get<PointSetPiece>(p).points)
        for (auto& x : pt) x *= k;
    }
  };
  for (int t = 0; t < 100; ++t) {
    Scenario s = testing::random_scenario(rng);
    MechanismResult base = solve(s);
    for (auto& v : s.reported)
      for (auto& x : v) x *= k;
    for (auto& ts : s.spaces)
      for (auto& p : ts.pieces) scale_piece(p);
    MechanismResult scaled = solve(s);
    for (std::size_t i = 0; i < base.per_agent.size(); ++i) {
      CHECK(scaled.per_agent[i].vcg == base.per_agent[i].vcg * k);
      CHECK(scaled.per_agent[i].wt == base.per_agent[i].wt * k);
      CHECK(scaled.per_agent[i].opt_alloc == base.per_agent[i].opt_alloc * k);
    }
  }
}
