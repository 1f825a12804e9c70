#include <gtest/gtest.h>

#include "orbsnake/fuzz.hpp"
#include "orbsnake/mpath.hpp"
#include "orbsnake/snake.hpp"

using namespace orbsnake;

namespace {

void check_kind(CurveKind kind, std::uint64_t seed, int count) {
  Fuzzer f(seed);
  DiskOptions disk;
  CurveOptions opt;
  opt.kind = kind;
  for (int i = 0; i < count; ++i) {
    disk.triangles = f.uniform(kind == CurveKind::ClosedCurve ? 3 : 1, 7);
    FuzzCase c = f.next(disk, opt);
    SCOPED_TRACE(to_json(c.curve).dump() + " on " + to_json(c.triangulation).dump());
    ASSERT_EQ(chi(c.curve, c.triangulation), cluster_expansion(c.curve, c.triangulation));
  }
}

}  // namespace

TEST(Fuzz, OrdinaryArcsChiEqualsExpansion) { check_kind(CurveKind::OrdinaryArc, 11, 150); }
TEST(Fuzz, GeneralizedArcsChiEqualsExpansion) { check_kind(CurveKind::GeneralizedArc, 12, 150); }
TEST(Fuzz, ClosedCurvesChiEqualsExpansion) { check_kind(CurveKind::ClosedCurve, 13, 100); }

TEST(Fuzz, DiskIsValid) {
  Fuzzer f(3);
  for (int i = 0; i < 50; ++i) {
    Triangulation t = f.random_disk({8, 0.5, 2, 6});
    EXPECT_EQ(t.triangles().size(), 8u);
    EXPECT_NO_THROW(triangulation_from_json(to_json(t)));
  }
}
