#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "orbsnake/orbifold.hpp"

using namespace orbsnake;

namespace {

Triangulation base() { return fixtures::triangulation("two_orbifold_points.json"); }

std::string input_error(const CurveDescriptor& d, const Triangulation& t) {
  try {
    validate(d, t);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Input);
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Orbifold, FixturesValidate) {
  for (const char* f : {"curves/gamma1.json", "curves/gamma3.json", "curves/gamma4.json"})
    EXPECT_NO_THROW(validate(fixtures::curve(f), base())) << f;
  EXPECT_NO_THROW(validate(fixtures::curve("curves/gamma2.json"), fixtures::triangulation("two_orbifold_points_mirror.json")));
}

TEST(Orbifold, CorruptionDiagnostics) {
  auto g3 = fixtures::curve("curves/gamma3.json");
  auto bad = g3;
  bad.word[0].arc = 9;
  EXPECT_NE(input_error(bad, base()).find("unknown label"), std::string::npos);
  bad = g3;
  bad.word[0].winding = 2;
  EXPECT_NE(input_error(bad, base()).find("winding out of range"), std::string::npos);
  bad = g3;
  bad.word[0].glue = 2;
  EXPECT_NE(input_error(bad, base()).find("broken triangle adjacency"), std::string::npos);
  auto g4 = fixtures::curve("curves/gamma4.json");
  g4.ends.a = 3;
  EXPECT_NE(input_error(g4, base()).find("open endpoints on closed curve"), std::string::npos);
}

TEST(Orbifold, JsonRoundTrip) {
  for (const char* f : {"curves/gamma1.json", "curves/gamma2.json", "curves/gamma3.json", "curves/gamma4.json"}) {
    auto j = fixtures::load(f);
    j.erase("triangulation_file");
    EXPECT_EQ(to_json(curve_from_json(j)), j) << f;
  }
  auto t = fixtures::load("two_orbifold_points.json");
  EXPECT_EQ(to_json(triangulation_from_json(t)), t);
}

TEST(Orbifold, PrincipalExtend) {
  ExtendedBMatrix b = principal_extend({{0, -1}, {1, 0}}, {true, true});
  EXPECT_EQ(b.rows, (std::vector<std::vector<int>>{{0, -1}, {1, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(principal_extend({}, {}).rows.size(), 0u);
  auto fig = fixtures::load("mutation/lam_flip_pending.json");
  ExtendedBMatrix before = bmatrix_from_json(fig.at("before"));
  std::vector<std::vector<int>> top(before.rows.begin(), before.rows.begin() + 3);
  EXPECT_EQ(principal_extend(top, before.pending), before);
}

TEST(Orbifold, PendingFlipMatrices) {
  auto fig = fixtures::load("mutation/lam_flip_pending.json");
  ExtendedBMatrix before = bmatrix_from_json(fig.at("before"));
  ExtendedBMatrix after = bmatrix_from_json(fig.at("after"));
  EXPECT_EQ(generalized_mutate(before, fig.at("index").get<int>()), after);
  EXPECT_EQ(generalized_mutate(after, fig.at("index").get<int>()), before);
}

TEST(Orbifold, StandardSeedFlip) {
  ExtendedBMatrix a2{2, {{0, 1}, {-1, 0}}, {false, false}};
  EXPECT_EQ(generalized_mutate(a2, 1).rows, (std::vector<std::vector<int>>{{0, -1}, {1, 0}}));
  EXPECT_THROW(generalized_mutate(a2, 3), Error);
  EXPECT_THROW(generalized_mutate(a2, 0), Error);
}

TEST(Orbifold, MutationInvolution) {
  std::mt19937_64 rng(5);
  auto entry = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = entry(1, 6), m = entry(0, 6);
    std::vector<std::vector<int>> top(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        top[i][j] = entry(-3, 3);
        top[j][i] = -top[i][j];
      }
    std::vector<bool> pending(n);
    for (int i = 0; i < n; ++i) pending[i] = entry(0, 2) == 0;
    ExtendedBMatrix b = principal_extend(top, pending);
    for (int r = 0; r < m; ++r) {
      std::vector<int> row(n);
      for (int& x : row) x = entry(-3, 3);
      b.rows.push_back(row);
    }
    for (int k = 1; k <= n; ++k) {
      ExtendedBMatrix once = generalized_mutate(b, k);
      EXPECT_EQ(generalized_mutate(once, k), b);
      if (!pending[k - 1])
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) EXPECT_EQ(once.rows[i][j], -once.rows[j][i]);
    }
  }
}
