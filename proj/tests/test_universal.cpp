#include <gtest/gtest.h>

#include <set>

#include "orbsnake/universal.hpp"

using namespace orbsnake;

TEST(Universal, MatchingCountIsPowerOfTwo) {
  for (int n = 1; n <= 12; ++n) {
    ChainGraph g = build_ug(UniversalLabels::generic(n));
    auto dp = g.matchings_dp();
    EXPECT_EQ(dp.size(), std::size_t{1} << n) << "n=" << n;
    if (n <= 10) EXPECT_EQ(dp, g.matchings_bfs()) << "n=" << n;
  }
}

TEST(Universal, SingleTile) {
  ChainGraph g = build_ug(UniversalLabels::generic(1));
  EXPECT_EQ(g.edges().size(), 4u);
  EXPECT_EQ(g.matchings_dp().size(), 2u);
  EXPECT_EQ(mg_matrix(g.labels()), Mat2::identity());
}

TEST(Universal, HeightsAreDistinctSubsets) {
  for (int n = 1; n <= 8; ++n) {
    ChainGraph g = build_ug(UniversalLabels::generic(n));
    std::set<std::vector<int>> seen;
    for (const auto& m : g.matchings_dp()) seen.insert(g.enclosed_tiles(m));
    EXPECT_EQ(seen.size(), std::size_t{1} << n);
  }
}

TEST(Universal, TwoTileMatrixIsFirstStep) {
  UniversalLabels u = UniversalLabels::generic(2);
  Mat2 m = mg_matrix(u);
  EXPECT_EQ(m.a11, u.lj[1] * u.i[1].inverse_monomial());
  EXPECT_EQ(m.a12, u.y[1] * u.bj[1]);
  EXPECT_EQ(m.a21, u.aj[1] * (u.i[1] * u.i[2]).inverse_monomial());
  EXPECT_EQ(m.a22, u.y[1] * u.rj[1] * u.i[2].inverse_monomial());
}

TEST(Universal, PartitionedSumsMatchMatrix) {
  for (int n = 1; n <= 7; ++n) {
    UniversalLabels u = UniversalLabels::generic(n);
    PartitionedSums s = partitioned_sums(build_ug(u));
    Mat2 m = mg_matrix(u);
    EXPECT_EQ(s.A, m.a11) << "n=" << n;
    EXPECT_EQ(s.B, m.a12) << "n=" << n;
    EXPECT_EQ(s.C, m.a21) << "n=" << n;
    EXPECT_EQ(s.D, m.a22) << "n=" << n;
  }
}

TEST(Universal, UpperRightFormula) {
  for (int n = 1; n <= 7; ++n) {
    UniversalLabels u = UniversalLabels::generic(n);
    EXPECT_EQ(weighted_sum_via_matrices(u, Glue::None), matching_sum(build_ug(u), Glue::None)) << "n=" << n;
  }
  UniversalLabels u = UniversalLabels::generic(1);
  LaurentPoly expect = u.a * u.w + u.b * u.z * u.y[1];
  EXPECT_EQ(weighted_sum_via_matrices(u, Glue::None), expect);
}

TEST(Universal, BandTraceFormulas) {
  LaurentPoly c = LaurentPoly::x(9);
  for (Glue glue : {Glue::AZ, Glue::BW}) {
    for (int n = 1; n <= 7; ++n) {
      UniversalLabels u = band_labels(UniversalLabels::generic(n), glue, c);
      EXPECT_EQ(weighted_sum_via_matrices(u, glue), matching_sum(build_ug(u), glue)) << "n=" << n;
    }
  }
}

TEST(Universal, PrintedBwBoundaryDisagrees) {
  UniversalLabels u = band_labels(UniversalLabels::generic(2), Glue::BW, LaurentPoly::x(9));
  LaurentPoly printed = tile_product(u, 1, 2) * (printed_bw_boundary(u) * mg_matrix(u)).trace();
  EXPECT_NE(printed, matching_sum(build_ug(u), Glue::BW));
}

TEST(Universal, OrdinarySpecialization) {
  UniversalLabels u = UniversalLabels::generic(3);
  for (int j = 1; j < 3; ++j) u.bj[j] = 0;
  ChainGraph g = build_ug(u);
  EXPECT_EQ(g.edges().size(), 10u);
  EXPECT_EQ(g.matchings_dp(), g.matchings_bfs());
  EXPECT_EQ(g.matchings_dp().size(), 5u);
}

TEST(Universal, RejectsNonMonomialMarker) {
  UniversalLabels u = UniversalLabels::generic(2);
  u.i[1] = LaurentPoly::x(1) + 1;
  EXPECT_THROW(build_ug(u), Error);
}
