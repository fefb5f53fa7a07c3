#include "mechopt/infima.hpp"
#include "mechopt/verify.hpp"

#include "support/scenario_gen.hpp"

#include <doctest.h>

using namespace mechopt;

namespace {

const ExternalityContext kCtx{0, {Rat(4), Rat(3), Rat(1)}};

BoxPiece ray(std::size_t axis) {
  BoxPiece b{{Rat(0), Rat(0), Rat(0)},
             {ExtRat(Rat(0)), ExtRat(Rat(0)), ExtRat(Rat(0))}};
  b.lower[axis] = Rat(4);
  b.upper[axis] = ExtRat::infinity();
  return b;
}

// v(win_A) in [4,6], v(win_B) in [1, b_hi], nothing-coordinate pinned to 0.
BoxPiece box_a(int b_hi) {
  return BoxPiece{{Rat(0), Rat(4), Rat(1)},
                  {ExtRat(Rat(0)), ExtRat(Rat(6)), ExtRat(Rat(b_hi))}};
}

BoxPiece box_b() {
  return BoxPiece{{Rat(0), Rat(1), Rat(4)},
                  {ExtRat(Rat(0)), ExtRat(Rat(1)), ExtRat(Rat(6))}};
}

}  // namespace

TEST_CASE("allocation image") {
  CHECK(alloc_image(ray(1), kCtx) == std::vector<std::size_t>{1});
  CHECK(alloc_image(ray(2), kCtx) == std::vector<std::size_t>{2});
  CHECK(alloc_image(box_a(3), kCtx) == std::vector<std::size_t>{1});
  CHECK(alloc_image(box_a(5), kCtx) == std::vector<std::size_t>{1});
  CHECK(alloc_image(box_b(), kCtx) == std::vector<std::size_t>{2});

  SUBCASE("degenerate zero box maps to the context argmax") {
    BoxPiece zero{{Rat(0), Rat(0), Rat(0)},
                  {ExtRat(Rat(0)), ExtRat(Rat(0)), ExtRat(Rat(0))}};
    CHECK(alloc_image(zero, kCtx) == std::vector<std::size_t>{0});
  }
  SUBCASE("point sets enumerate") {
    PointSetPiece ps{{{Rat(0), Rat(5), Rat(0)}, {Rat(0), Rat(0), Rat(5)}}};
    CHECK(alloc_image(ps, kCtx) == std::vector<std::size_t>{1, 2});
  }
}

TEST_CASE("infimum welfare per piece") {
  InfResult a = inf_welfare(ray(1), kCtx);
  REQUIRE(a.feasible());
  CHECK(*a.value == Rat(7));
  CHECK(*a.witness == Valuation{Rat(0), Rat(4), Rat(0)});
  CHECK(*inf_welfare(ray(2), kCtx).value == Rat(5));

  SUBCASE("singleton point piece") {
    PointSetPiece ps{{{Rat(0), Rat(2), Rat(1)}}};
    CHECK(*inf_welfare(ps, kCtx).value == welfare_at(ps.points[0], kCtx));
  }
}

TEST_CASE("infimum welfare restricted to an efficiency region") {
  InfResult a = inf_welfare_given_eff(box_a(3), 1, kCtx);
  REQUIRE(a.feasible());
  CHECK(*a.value == Rat(7));
  CHECK(*a.witness == Valuation{Rat(0), Rat(4), Rat(1)});
  CHECK(a.attained);

  InfResult b = inf_welfare_given_eff(box_b(), 2, kCtx);
  REQUIRE(b.feasible());
  CHECK(*b.value == Rat(5));
  CHECK(*b.witness == Valuation{Rat(0), Rat(1), Rat(4)});

  CHECK_FALSE(inf_welfare_given_eff(box_a(3), 2, kCtx).feasible());
  CHECK_FALSE(inf_welfare_given_eff(ray(1), 0, kCtx).feasible());
}

TEST_CASE("infimum welfare difference between allocations") {
  SUBCASE("tight second box") {
    InfResult r = inf_diff_given_eff(box_a(3), 1, 2, kCtx);
    REQUIRE(r.feasible());
    CHECK(*r.value == Rat(3));
    CHECK(*r.witness == Valuation{Rat(0), Rat(4), Rat(3)});
  }
  SUBCASE("taller second box") {
    InfResult r = inf_diff_given_eff(box_a(5), 1, 2, kCtx);
    REQUIRE(r.feasible());
    CHECK(*r.value == Rat(1));
    CHECK(*r.witness == Valuation{Rat(0), Rat(4), Rat(5)});
  }
  SUBCASE("reverse direction") {
    InfResult r = inf_diff_given_eff(box_b(), 2, 1, kCtx);
    REQUIRE(r.feasible());
    CHECK(*r.value == Rat(1));
    CHECK(*r.witness == Valuation{Rat(0), Rat(1), Rat(4)});
  }
  SUBCASE("infeasible region") {
    CHECK_FALSE(inf_diff_given_eff(box_a(3), 2, 1, kCtx).feasible());
  }
  SUBCASE("alpha must differ from beta") {
    CHECK_THROWS_AS(inf_diff_given_eff(box_a(3), 1, 1, kCtx), std::invalid_argument);
  }
}

namespace {

ExternalityContext random_ctx(std::mt19937_64& rng, std::size_t dim) {
  ExternalityContext ctx{0, {}};
  for (std::size_t g = 0; g < dim; ++g) ctx.c.push_back(testing::rand_half(rng, 0, 8));
  return ctx;
}

}  // namespace

TEST_CASE("properties of the infimum kernels against the grid oracle") {
  std::mt19937_64 rng(53);
  int checked = 0;
  while (checked < 150) {
    testing::GenOptions opt;
    opt.finite_boxes_only = true;
    Piece piece = testing::random_piece(rng, 3, opt);
    ExternalityContext ctx = random_ctx(rng, 3);
    auto image = alloc_image(piece, ctx);
    if (image.empty()) continue;
    ++checked;

    TypeSpace ts{{piece}};
    SampleSet grid = enumerate_types(ts, Rat(1, 2), Rat(10));

    // Welfare infimum splits across the efficiency partition.
    InfResult whole = inf_welfare(piece, ctx);
    std::optional<Rat> min_part;
    for (std::size_t alpha : image) {
      InfResult part = inf_welfare_given_eff(piece, alpha, ctx);
      REQUIRE(part.feasible());
      if (!min_part || *part.value < *min_part) min_part = *part.value;
      // Witness re-evaluates exactly.
      CHECK(*part.value == (*part.witness)[alpha] + ctx.c[alpha]);
      // Closed form lower-bounds the grid; equal when the witness is on-grid.
      ExtRat grid_min = oracle_infimum(piece, InfExpr::welfare, alpha, 0, ctx, grid);
      if (!grid_min.is_infinite()) CHECK(ExtRat(*part.value) <= grid_min);

      for (std::size_t beta = 0; beta < 3; ++beta) {
        if (beta == alpha) continue;
        InfResult d = inf_diff_given_eff(piece, alpha, beta, ctx);
        REQUIRE(d.feasible());
        CHECK(*d.value >= 0);
        CHECK(*d.value ==
              ((*d.witness)[alpha] + ctx.c[alpha]) - ((*d.witness)[beta] + ctx.c[beta]));
        ExtRat grid_diff = oracle_infimum(piece, InfExpr::diff, alpha, beta, ctx, grid);
        if (!grid_diff.is_infinite()) CHECK(ExtRat(*d.value) <= grid_diff);
        // On-grid witness means exact agreement.
        SampleSet with_witness = grid;
        with_witness.samples.push_back(*d.witness);
        if (d.attained)
          CHECK(oracle_infimum(piece, InfExpr::diff, alpha, beta, ctx, with_witness) ==
                ExtRat(*d.value));
      }
    }
    REQUIRE(whole.feasible());
    CHECK(*whole.value == *min_part);

    SampleSet with_w = grid;
    with_w.samples.push_back(*whole.witness);
    CHECK(oracle_infimum(piece, InfExpr::welfare, std::nullopt, 0, ctx, with_w) ==
          ExtRat(*whole.value));
  }
}
