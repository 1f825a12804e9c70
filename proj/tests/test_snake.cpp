#include <gtest/gtest.h>

#include "example_values.hpp"
#include "fixtures.hpp"
#include "orbsnake/snake.hpp"

using namespace orbsnake;

namespace {

Triangulation base() { return fixtures::triangulation("two_orbifold_points.json"); }
Triangulation mirror() { return fixtures::triangulation("two_orbifold_points_mirror.json"); }

}  // namespace

TEST(Snake, Gamma1) {
  auto d = fixtures::curve("curves/gamma1.json");
  EXPECT_EQ(cluster_expansion(d, base()), example::gamma1());
  LaurentPoly swapped = cluster_expansion(d, base()).substitute([](Var v) {
    return v == yv(1) ? LaurentPoly::y(2) : LaurentPoly::var(v);
  });
  EXPECT_EQ(swapped, example::gamma1_printed());
  SnakeGraph g = build_snake_graph(d, base());
  EXPECT_EQ(g.matchings.size(), 3u);
}

TEST(Snake, Gamma2) {
  auto d = fixtures::curve("curves/gamma2.json");
  EXPECT_EQ(cluster_expansion(d, mirror()), example::gamma2());
}

TEST(Snake, Gamma3) {
  auto d = fixtures::curve("curves/gamma3.json");
  EXPECT_EQ(cluster_expansion(d, base()), example::gamma3());
}

TEST(Snake, Gamma4Band) {
  auto d = fixtures::curve("curves/gamma4.json");
  SnakeGraph g = build_snake_graph(d, base());
  EXPECT_TRUE(g.band);
  EXPECT_EQ(g.matchings.size(), 5u);
  EXPECT_EQ(cluster_expansion(d, base()), example::gamma4());
}
