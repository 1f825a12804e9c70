#include <gtest/gtest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "orbsnake/skein.hpp"

using namespace orbsnake;

namespace {

std::vector<std::string> skein_files() {
  std::vector<std::string> r;
  for (const auto& e : std::filesystem::directory_iterator(std::string(ORBSNAKE_DATA_DIR) + "/skein"))
    if (e.path().extension() == ".json") r.push_back("skein/" + e.path().filename().string());
  std::sort(r.begin(), r.end());
  return r;
}

SkeinFixture fixture(const std::string& rel) {
  return skein_fixture_from_json(fixtures::load(rel), ORBSNAKE_DATA_DIR);
}

std::vector<LaurentPoly> stored(const SkeinFixture& f) {
  if (f.relation == SkeinRelation::ThreeTerm) return f.y;
  return {f.terms[0].y, f.terms[1].y};
}

LaurentPoly y_to_one(const LaurentPoly& p) {
  return p.substitute([](Var v) { return v.is_y ? LaurentPoly(1) : LaurentPoly::var(v); });
}

}  // namespace

TEST(Skein, ShippedFixturesHold) {
  auto files = skein_files();
  ASSERT_GE(files.size(), 9u);
  for (const auto& rel : files) {
    SCOPED_TRACE(rel);
    SkeinFixture f = fixture(rel);
    EXPECT_TRUE(verify_skein(f));
    auto [lhs, basis] = skein_system(f);
    auto ys = solve_y_monomials(lhs, basis);
    ASSERT_TRUE(ys.has_value());
    EXPECT_EQ(*ys, stored(f));
  }
}

TEST(Skein, RoundTrip) {
  for (const auto& rel : skein_files()) {
    auto j = fixtures::load(rel);
    EXPECT_EQ(to_json(skein_fixture_from_json(j)), j) << rel;
  }
}

TEST(Skein, WrongRelationRejected) {
  EXPECT_THROW(verify_two_term(fixture("skein/exchange_tau1.json")), Error);
  EXPECT_THROW(verify_three_term(fixture("skein/ptolemy.json")), Error);
}

TEST(Skein, WrongCoefficientsFail) {
  SkeinFixture f = fixture("skein/exchange_tau1.json");
  f.y[1] = LaurentPoly::y(1, 2);
  EXPECT_FALSE(verify_three_term(f));
  SkeinFixture g = fixture("skein/ptolemy.json");
  std::swap(g.terms[0].y, g.terms[1].y);
  EXPECT_FALSE(verify_two_term(g));
}

TEST(Skein, ExchangeRelationOfPendingFlip) {
  SkeinFixture f = fixture("skein/exchange_tau1.json");
  EXPECT_EQ(f.y, (std::vector<LaurentPoly>{1, LaurentPoly::y(1), LaurentPoly::y(1, 2)}));
  EXPECT_EQ(chi(f.gamma2, f.triangulation), LaurentPoly::x(1));
}

TEST(Skein, OrderTwoDropsMiddleTerm) {
  SkeinFixture f = fixture("skein/exchange_order2.json");
  EXPECT_EQ(f.order, 2);
  auto [lhs, basis] = skein_system(f);
  EXPECT_TRUE(basis[1].is_zero());
  EXPECT_TRUE(f.y[1].is_zero());
  f.y[1] = LaurentPoly::y(1);
  EXPECT_TRUE(verify_three_term(f));
  EXPECT_EQ(lhs, basis[0] + LaurentPoly::y(1, 2) * basis[2]);
}

TEST(Skein, CoefficientFree) {
  for (const auto& rel : skein_files()) {
    SkeinFixture f = fixture(rel);
    if (f.relation != SkeinRelation::ThreeTerm) continue;
    auto [lhs, basis] = skein_system(f);
    EXPECT_EQ(y_to_one(lhs), y_to_one(basis[0] + basis[1] + basis[2])) << rel;
  }
}

TEST(Skein, KinkSign) {
  SkeinFixture f = fixture("skein/kink.json");
  EXPECT_EQ(chi(f.curves, f.triangulation), -chi(f.terms[0].curves, f.triangulation));
}

TEST(Skein, SolverEdgeCases) {
  LaurentPoly b0 = LaurentPoly::x(2, 2), b1 = LaurentPoly::x(2) * LaurentPoly::x(3), b2 = LaurentPoly::x(3, 2);
  auto r = solve_y_monomials(b0, {b0, b1, b2});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, (std::vector<LaurentPoly>{1, 0, 0}));
  EXPECT_FALSE(solve_y_monomials(b0 + 1, {b0, b1, b2}).has_value());
  EXPECT_FALSE(solve_y_monomials(LaurentPoly::x(1), {b0}).has_value());
  auto s = solve_y_monomials(LaurentPoly::y(4) * b1 + b2, {b0, b1, b2});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, (std::vector<LaurentPoly>{0, LaurentPoly::y(4), 1}));
}
