#include <gtest/gtest.h>

#include "example_values.hpp"
#include "fixtures.hpp"
#include "orbsnake/fuzz.hpp"
#include "orbsnake/mpath.hpp"
#include "orbsnake/snake.hpp"

using namespace orbsnake;

namespace {

LaurentPoly X(int i) { return LaurentPoly::x(i); }
LaurentPoly Y(int i) { return LaurentPoly::y(i); }
LaurentPoly inv(const LaurentPoly& p) { return p.inverse_monomial(); }
LaurentPoly L(int p) { return CoefPoly::lambda(p); }

MPath right_pair(int rho, int p, int l) {
  MPath w{{StepType::Type2, rho, 0, 0, 1, p}, {StepType::Pending1, rho, 0, 0, 1, p}};
  for (int i = 0; i < l; ++i) {
    w.push_back({StepType::Pending3, rho, 0, 0, 1, p});
    w.push_back({StepType::Pending1, rho, 0, 0, 1, p});
  }
  return w;
}

MPath left_pair(int rho, int p, int l) {
  MPath w{{StepType::Type2, rho, 0, 0, 1, p}};
  for (int i = 0; i <= l; ++i) {
    w.push_back({StepType::Pending3, rho, 0, 0, -1, p});
    w.push_back({StepType::Pending1, rho, 0, 0, -1, p});
  }
  w.push_back({StepType::Pending3, rho, 0, 0, 1, p});
  return w;
}

double at(const LaurentPoly& p) {
  return p.eval([](Var v) { return v.is_y ? 0.7 : 1.3 + 0.1 * v.id; });
}

void expect_near(const Mat2& a, const Mat2& b, double tol) {
  EXPECT_NEAR(at(a.a11), at(b.a11), tol);
  EXPECT_NEAR(at(a.a12), at(b.a12), tol);
  EXPECT_NEAR(at(a.a21), at(b.a21), tol);
  EXPECT_NEAR(at(a.a22), at(b.a22), tol);
}

}  // namespace

TEST(MPath, StepMatrices) {
  EXPECT_EQ(step_matrix({StepType::Type3, 5, 0, 0, 1, 0}), (Mat2{0, X(5), -inv(X(5)), 0}));
  EXPECT_EQ(step_matrix({StepType::Type3, 5, 0, 0, -1, 0}), (Mat2{0, -X(5), inv(X(5)), 0}));
  EXPECT_EQ(step_matrix({StepType::Type2, 5, 0, 0, 1, 0}), (Mat2{1, 0, 0, Y(5)}));
  EXPECT_EQ(step_matrix({StepType::Type2, 5, 0, 0, -1, 0}), (Mat2{Y(5), 0, 0, 1}));
  EXPECT_EQ(step_matrix({StepType::Pending1, 7, 0, 0, 1, 5}), (Mat2{1, 0, L(5) * inv(X(7)), 1}));
  EXPECT_EQ(step_matrix({StepType::Type1, 1, 2, 3, -1, 0}), (Mat2{1, 0, -X(3) * inv(X(1) * X(2)), 1}));
  EXPECT_EQ(m_of({}), Mat2::identity());
}

TEST(MPath, CompoundSteps) {
  // Compound A between crossings 1, 2 with third side 3.
  MPath a{{StepType::Type2, 1, 0, 0, 1, 0}, {StepType::Type1, 1, 2, 3, 1, 0}};
  EXPECT_EQ(m_of(a), (Mat2{1, 0, X(3) * inv(X(1) * X(2)), Y(1)}));
  MPath b{{StepType::Type2, 1, 0, 0, 1, 0},
          {StepType::Type1, 1, 3, 2, 1, 0},
          {StepType::Type3, 3, 0, 0, 1, 0},
          {StepType::Type1, 3, 2, 1, 1, 0}};
  EXPECT_EQ(m_of(b), (Mat2{X(2) * inv(X(1)), Y(1) * X(3), 0, Y(1) * X(1) * inv(X(2))}));
}

TEST(MPath, RightBasedPendingWithOneWinding) {
  const int rho = 7, p = 5;
  MPath w{{StepType::Type2, rho, 0, 0, 1, p},
          {StepType::Pending1, rho, 0, 0, 1, p},
          {StepType::Pending3, rho, 0, 0, 1, p},
          {StepType::Pending1, rho, 0, 0, 1, p}};
  LaurentPoly l = L(p);
  EXPECT_EQ(m_of(w), (Mat2{l, Y(rho) * X(rho), (l * l - 1) * inv(X(rho)), l * Y(rho)}));
}

TEST(MPath, DeterminantIsProductOfStepDeterminants) {
  auto t = fixtures::triangulation("two_orbifold_points_mirror.json");
  MPath path = standard_mpath(fixtures::curve("curves/gamma2.json"), t);
  LaurentPoly det = 1;
  for (const auto& s : path) det *= step_matrix(s).det();
  EXPECT_EQ(m_of(path).det(), det);
}

TEST(MPath, ChebyshevMatrixPowers) {
  for (int p : {3, 5, 8}) {
    for (int k = 0; k <= 30; ++k) {
      auto r = cheb_matrix_power(k, p, 9);
      EXPECT_EQ(r.product, r.closed_form) << "k=" << k << " p=" << p;
      EXPECT_EQ(r.clockwise_product, r.clockwise_closed_form) << "k=" << k << " p=" << p;
    }
  }
  auto one = cheb_matrix_power(1, 4, 9);
  EXPECT_EQ(one.product, (Mat2{0, X(9), -inv(X(9)), L(4)}));
  auto two = cheb_matrix_power(2, 4, 9);
  EXPECT_EQ(two.product, (Mat2{-1, L(4) * X(9), -L(4) * inv(X(9)), L(4) * L(4) - 1}));
  EXPECT_EQ(cheb_matrix_power(0, 4).product, Mat2::identity());
}

TEST(MPath, WindingReduction) {
  EXPECT_TRUE(winding_reduction_check(0, 1, 3));
  EXPECT_TRUE(winding_reduction_check(1, 2, 4));
  EXPECT_TRUE(winding_reduction_check(5, 0, 4));
  for (int p = 2; p <= 12; ++p)
    for (int m = -3; m <= 3; ++m)
      for (int k = std::max(0, -m * p); k <= std::max(0, -m * p) + p; ++k)
        EXPECT_TRUE(winding_reduction_check(k, m, p)) << k << " " << m << " " << p;
}

TEST(MPath, ChiMatchesExpansionOnExamples) {
  auto t = fixtures::triangulation("two_orbifold_points.json");
  auto tm = fixtures::triangulation("two_orbifold_points_mirror.json");
  EXPECT_EQ(chi(fixtures::curve("curves/gamma1.json"), t), example::gamma1());
  EXPECT_EQ(chi(fixtures::curve("curves/gamma2.json"), tm), example::gamma2());
  EXPECT_EQ(chi(fixtures::curve("curves/gamma3.json"), t), example::gamma3());
  EXPECT_EQ(chi(fixtures::curve("curves/gamma4.json"), t), example::gamma4());
}

TEST(MPath, SpecialCurves) {
  auto t = fixtures::triangulation("two_orbifold_points.json");
  CurveDescriptor loop;
  loop.kind = CurveKind::OrbifoldLoop;
  loop.order = 5;
  EXPECT_EQ(chi(loop, t), L(5));
  loop.self_intersections = 2;
  EXPECT_EQ(chi(loop, t), LaurentPoly(cheb_t(3, 5)));
  EXPECT_EQ(cluster_expansion(loop, t), chi(loop, t));
  CurveDescriptor c;
  c.kind = CurveKind::ContractibleLoop;
  EXPECT_EQ(chi(c, t), LaurentPoly(-2));
}

TEST(MPath, PendingPairClosedForms) {
  const int rho = 7;
  for (int p = 3; p <= 9; ++p) {
    auto U = [&](int j) { return LaurentPoly(cheb_u(j, p)); };
    LaurentPoly x = X(rho), xi = inv(X(rho)), y = Y(rho);
    for (int l = 0; l <= 10; ++l) {
      SCOPED_TRACE("p=" + std::to_string(p) + " l=" + std::to_string(l));
      EXPECT_EQ(m_of(right_pair(rho, p, l)), (Mat2{U(l), U(l - 1) * y * x, U(l + 1) * xi, U(l) * y}));
      EXPECT_EQ(m_of(left_pair(rho, p, l)), (Mat2{U(l), U(l + 1) * y * x, U(l - 1) * xi, U(l) * y}));
    }
  }
}

TEST(MPath, LeftBasedPairIsReflectedRightBasedPair) {
  for (int p = 2; p <= 12; ++p)
    for (int l = 0; l <= p - 2; ++l) {
      SCOPED_TRACE("p=" + std::to_string(p) + " l=" + std::to_string(l));
      expect_near(m_of(left_pair(7, p, l)), m_of(right_pair(7, p, p - 2 - l)), 1e-9);
    }
}

TEST(MPath, TraceInvariantUnderRotation) {
  Fuzzer f(17);
  DiskOptions disk;
  CurveOptions opt;
  opt.kind = CurveKind::ClosedCurve;
  for (int i = 0; i < 100; ++i) {
    disk.triangles = f.uniform(3, 7);
    FuzzCase c = f.next(disk, opt);
    SCOPED_TRACE(to_json(c.curve).dump() + " on " + to_json(c.triangulation).dump());
    const double tr = std::abs(at(m_of(standard_mpath(c.curve, c.triangulation)).trace()));
    const LaurentPoly value = chi(c.curve, c.triangulation);
    CurveDescriptor r = c.curve;
    for (std::size_t k = 0; k < r.word.size(); ++k)
      if (c.triangulation.arc(r.word[k].arc).kind == ArcKind::Pending) r.word[k].base = pending_base(c.curve, c.triangulation, k);
    for (std::size_t k = 1; k < c.curve.word.size(); ++k) {
      std::rotate(r.word.begin(), r.word.begin() + 1, r.word.end());
      EXPECT_NEAR(std::abs(at(m_of(standard_mpath(r, c.triangulation)).trace())), tr, 1e-9 * std::max(1.0, tr));
      EXPECT_EQ(chi(r, c.triangulation), value);
    }
  }
}
