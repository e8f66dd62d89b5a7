#include <gtest/gtest.h>

#include <cfloat>
#include <cmath>

#include "equichord/dynamics.hpp"
#include "equichord/series_solver.hpp"
#include "test_support.hpp"

using namespace equichord;
using equichord::testing::Gen;

namespace {

double sup_dist(PlanePoint a, PlanePoint b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

/// Uniform point of the annulus 1e-3 <= |q - S| <= 1 - 1e-3.
PlanePoint random_domain_point(Gen& g, double c) {
  const double r = g.real(1e-3, 1.0 - 1e-3);
  const double t = g.real(0.0, 2.0 * M_PI);
  return {r * std::cos(t), c + r * std::sin(t)};
}

}  // namespace

TEST(GMap, Domain) {
  const MapParams p(0.7);
  EXPECT_FALSE(g_domain_contains({0.0, 0.7}, p));
  EXPECT_FALSE(g_domain_contains({0.0, 0.7 - 1.0}, p));
  EXPECT_TRUE(g_domain_contains({0.1, 0.7}, p));
  EXPECT_THROW(g_map({0.0, 0.7}, p), DomainError);
  EXPECT_THROW(g_map({2.0, 0.0}, p), DomainError);
  EXPECT_THROW(g_map({NAN, 0.0}, p), DomainError);
  EXPECT_THROW(MapParams(0.0), ParameterError);
  EXPECT_THROW(MapParams(1.0), ParameterError);
}

TEST(GMap, DomainErrorsDistinguishPunctureAndDisk) {
  const MapParams p(0.3);
  try {
    g_map({0.0, 0.3}, p);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), DomainError::Kind::Puncture);
  }
  try {
    g_map({0.0, -0.7}, p);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), DomainError::Kind::OutsideDisk);
  }
}

TEST(GMap, HalfExample) {
  const PlanePoint r = g_map({0.5, 0.5}, MapParams(0.5));
  EXPECT_DOUBLE_EQ(r.x, 0.5);
  EXPECT_DOUBLE_EQ(r.y, 0.5);
}

TEST(GMap, AxisIsReflected) {
  Gen g(0x801);
  for (int i = 0; i < 2000; ++i) {
    const double c = g.real(0.01, 0.99);
    const MapParams p(c);
    const double y = g.real(-1.0, 1.0) * p.axis_bound() * 0.999;
    const PlanePoint r = g_map({0.0, y}, p);
    EXPECT_EQ(r.x, 0.0);
    EXPECT_LE(std::abs(r.y + y), 2.0 * DBL_EPSILON * std::max(1.0, std::abs(y))) << c << " " << y;
  }
}

TEST(GMap, InverseLaw) {
  Gen g(0x802);
  for (double c : {0.3, 0.55, 0.7, 0.9, 0.1}) {
    const MapParams p(c);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const PlanePoint q = random_domain_point(g, c);
      const PlanePoint back = g_map(g_map(q, p), p.reflected());
      worst = std::max(worst, sup_dist(back, q));
    }
    EXPECT_LT(worst, 1e-11) << "c=" << c;
  }
}

TEST(HMap, PicksTheContractingBranch) {
  const PlanePoint q{0.03, 0.01};
  EXPECT_EQ(h_map(q, MapParams(0.7)), g_map(q, MapParams(0.7)));
  EXPECT_EQ(h_map(q, MapParams(0.3)), g_map(q, MapParams(0.7)));
  EXPECT_THROW(h_map(q, MapParams(0.5)), ParameterError);
  const PlanePoint axis = h_map({0.0, 0.1}, MapParams(0.3));
  EXPECT_EQ(axis.x, 0.0);
  EXPECT_NEAR(axis.y, -0.1, 1e-16);
}

TEST(Frechet, DiagonalWithAnalyticEigenvalues) {
  for (double c : {0.2, 0.35, 0.5, 0.65, 0.8}) {
    const MapParams p(c);
    for (double t : {-0.9, -0.5, 0.0, 0.4, 0.9}) {
      const double y = t * p.axis_bound();
      const AxisEigenvalues e = frechet_at_axis(y, p);
      EXPECT_DOUBLE_EQ(e.lambda1, 1.0 / (c - y) - 1.0);
      EXPECT_EQ(e.lambda2, -1.0);
      EXPECT_LT(std::abs(e.numeric.a12), 1e-6);
      EXPECT_LT(std::abs(e.numeric.a21), 1e-6);
      EXPECT_LT(std::abs(e.numeric.a11 / e.lambda1 - 1.0), 1e-5);
      EXPECT_LT(std::abs(e.numeric.a22 + 1.0), 1e-5);
    }
  }
  EXPECT_DOUBLE_EQ(frechet_at_axis(0.0, MapParams(0.5)).lambda1, 1.0);
  EXPECT_THROW(frechet_at_axis(0.3, MapParams(0.3)), DomainError);
}

TEST(Multiplier, Examples) {
  EXPECT_DOUBLE_EQ(multiplier(0.0, MapParams(0.75)), 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(multiplier(0.0, MapParams(0.25)), 9.0);
  for (double y : {-0.4, -0.1, 0.0, 0.2, 0.45}) EXPECT_DOUBLE_EQ(multiplier(y, MapParams(0.5)), 1.0);
  Gen g(0x803);
  for (int i = 0; i < 100; ++i) {
    const double c = g.real(0.05, 0.95);
    EXPECT_NEAR(multiplier(0.0, MapParams(c)), std::pow((1.0 - c) / c, 2), 1e-12 * std::pow((1.0 - c) / c, 2));
  }
  EXPECT_THROW(multiplier(0.3, MapParams(0.3)), SingularityError);
}

TEST(Multiplier, IsTheProductOfNormalEigenvaluesAtPlusMinusY) {
  for (double c : {0.6, 0.7, 0.85}) {
    const MapParams p(c);
    for (double y : {-0.1, 0.0, 0.12}) {
      EXPECT_NEAR(multiplier(y, p), frechet_at_axis(y, p).lambda1 * frechet_at_axis(-y, p).lambda1, 1e-12);
    }
  }
}

TEST(Projection, AxisPointsAreFixed) {
  for (double y : {-0.2, 0.0, 0.15}) {
    const auto d = project_pi({0.0, y}, MapParams(0.7));
    EXPECT_TRUE(d.converged());
    EXPECT_EQ(d.steps, 0);
    EXPECT_EQ(d.limit.y, y);
  }
}

TEST(Projection, SeriesCurveProjectsToOrigin) {
  const auto t = solve_coefficients(10, CoefficientMode::fixed(BigRat(BigInt(7), BigInt(10))));
  const double y = taylor_eval(t, BigRat(BigInt(7), BigInt(10)), 0.05);
  const auto d = project_pi({0.05, y}, MapParams(0.7));
  ASSERT_TRUE(d.converged());
  EXPECT_LT(std::abs(d.limit.y), 1e-12);
}

TEST(Projection, EmpiricalRatioApproachesMultiplier) {
  for (double y : {-0.05, 0.0, 0.03, 0.05}) {
    const auto d = project_pi({0.05, y}, MapParams(0.7));
    ASSERT_TRUE(d.converged());
    EXPECT_GT(std::abs(d.limit.y), 0.0);
    EXPECT_LT(std::abs(d.empirical_ratio / d.predicted_mu - 1.0), 0.01);
    EXPECT_EQ(d.iterates.size(), static_cast<std::size_t>(d.steps) + 1);
  }
}

TEST(Projection, BelowOneHalfUsesTheInverseMap) {
  const auto a = project_pi({0.04, 0.02}, MapParams(0.3));
  const auto b = project_pi({0.04, 0.02}, MapParams(0.7));
  ASSERT_TRUE(a.converged());
  EXPECT_EQ(a.limit.y, b.limit.y);
  EXPECT_LT(a.predicted_mu, 1.0);
}

TEST(Projection, ReportsDivergenceAndExhaustion) {
  EXPECT_EQ(project_pi({0.05, 0.31}, MapParams(0.7)).status, ConvergenceStatus::Diverged);
  EXPECT_EQ(project_pi({0.2, 0.0}, MapParams(0.7)).status, ConvergenceStatus::Converged);
  ProjectOptions opt;
  opt.max_iter = 3;
  const auto d = project_pi({0.05, 0.0}, MapParams(0.7), opt);
  EXPECT_EQ(d.status, ConvergenceStatus::Inconclusive);
  EXPECT_FALSE(d.iterates.empty());
  EXPECT_THROW(project_pi({0.05, 0.0}, MapParams(0.5)), ParameterError);
}

TEST(Fiber, PassesThroughTheAxisPoint) {
  const FiberSample s = fiber_point(0.0, 0.1, MapParams(0.7));
  EXPECT_EQ(s.F_value, 0.1);
  EXPECT_EQ(s.residual, 0.0);
}

TEST(Fiber, ProjectsBackToY0) {
  const MapParams p(0.7);
  for (double y0 : {-0.1, 0.0, 0.05}) {
    for (double x : {-0.05, 0.02, 0.06}) {
      const FiberSample s = fiber_point(x, y0, p);
      EXPECT_LT(s.residual, 1e-14);
      const auto d = project_pi({x, s.F_value}, p);
      EXPECT_NEAR(d.limit.y, y0, 1e-14);
    }
  }
}

TEST(Fiber, TangentToTheAxis) {
  const MapParams p(0.7);
  for (double y0 : {0.0, 0.08}) {
    double prev = INFINITY;
    for (double x : {1e-2, 1e-3, 1e-4}) {
      const double slope = std::abs((fiber_point(x, y0, p).F_value - y0) / x);
      EXPECT_LT(slope, prev);
      prev = slope;
    }
    EXPECT_LT(prev, 1e-3);
  }
}

TEST(Fiber, RejectsOutOfRangeInput) {
  const MapParams p(0.7);
  EXPECT_THROW(fiber_point(0.02, 0.31, p), DomainError);
  EXPECT_THROW(fiber_point(0.2, 0.0, p), UsageError);
  EXPECT_THROW(fiber_point(0.02, 0.0, MapParams(0.5)), ParameterError);
}

TEST(TraceCurve, EvenInX) {
  const auto curve = trace_invariant_curve(MapParams(0.7), 0.0, {-0.06, -0.03, 0.03, 0.06});
  for (const auto& s : curve) ASSERT_TRUE(s.ok()) << s.error;
  EXPECT_NEAR(curve[0].sample->F_value, curve[3].sample->F_value, 1e-15);
  EXPECT_NEAR(curve[1].sample->F_value, curve[2].sample->F_value, 1e-15);
}

TEST(TraceCurve, ImageLandsOnTheOppositeFiber) {
  for (double c : {0.3, 0.7}) {
    const auto curve = trace_invariant_curve(MapParams(c), 0.04, {-0.05, -0.01, 0.02, 0.05});
    for (const auto& s : curve) {
      ASSERT_TRUE(s.ok()) << s.error;
      EXPECT_NEAR(s.image_fiber, -0.04, 1e-12);
    }
  }
}

TEST(TraceCurve, OppositeLevelsAreMirroredThroughTheFamilySymmetry) {
  // Gamma(-y0) = H(Gamma(y0)) pointwise: the mirror image of the trace at y0
  // under H lies on the trace at -y0.
  const MapParams p(0.7);
  const std::vector<double> xs{-0.05, -0.02, 0.02, 0.05};
  for (const auto& s : trace_invariant_curve(p, 0.06, xs)) {
    ASSERT_TRUE(s.ok());
    const PlanePoint img = h_map({s.sample->x, s.sample->F_value}, p);
    EXPECT_NEAR(fiber_point(img.x, -0.06, p).F_value, img.y, 1e-13);
  }
}

TEST(TraceCurve, CollectsPerSampleErrors) {
  const auto curve = trace_invariant_curve(MapParams(0.7), 0.0, {0.02, 0.5});
  EXPECT_TRUE(curve[0].ok());
  EXPECT_FALSE(curve[1].ok());
  EXPECT_FALSE(curve[1].error.empty());
}

TEST(TrustRadius, AdaptiveRadiusNeverExceedsTheHeuristic) {
  for (double c : {0.3, 0.6, 0.9}) {
    const MapParams p(c);
    const double r = adaptive_trust_radius(p, 0.0);
    EXPECT_GT(r, 0.0);
    EXPECT_LE(r, trust_radius(p));
  }
}
