#include "toruscurv/vanishing_locus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "toruscurv/invariants.hpp"

namespace toruscurv {
namespace {

TorusCurveSpec exact_spec(int p, int q, std::int64_t num, std::int64_t den) {
  return TorusCurveSpec(p, q, TubeRadius::exact(Rational(num, den)));
}

TorusCurveSpec float_spec(int p, int q, double b) { return TorusCurveSpec(p, q, TubeRadius::approximate(b)); }

TEST(CriticalRadiusTest, ExactValues) {
  EXPECT_EQ(critical_radius(2, 3).as_rational(), Rational(4, 13));
  EXPECT_EQ(critical_radius(1, 4).as_rational(), Rational(1, 17));
  EXPECT_EQ(critical_radius(1, 1).as_rational(), Rational(1, 2));
  EXPECT_EQ(critical_radius(2, 4).as_rational(), Rational(1, 5));
  EXPECT_DOUBLE_EQ(critical_radius(2, 3).float_value, 4.0 / 13.0);
}

TEST(CriticalRadiusTest, ExactAndFloatMatching) {
  const CriticalMatch exact = match_critical(exact_spec(2, 3, 4, 13));
  EXPECT_TRUE(exact.is_critical);
  EXPECT_FALSE(exact.float_matched);

  const CriticalMatch approx = match_critical(float_spec(2, 3, 4.0 / 13.0));
  EXPECT_TRUE(approx.is_critical);
  EXPECT_TRUE(approx.float_matched);

  EXPECT_FALSE(match_critical(float_spec(2, 3, 4.0 / 13.0 + 1e-9)).is_critical);
  EXPECT_FALSE(match_critical(exact_spec(2, 3, 3, 13)).is_critical);
}

TEST(GeodesicCandidatesTest, ListsEveryMultipleOfPiOverQ) {
  const auto c3 = geodesic_zero_candidates(3);
  ASSERT_EQ(c3.size(), 7u);
  for (int k = 0; k <= 6; ++k) EXPECT_NEAR(c3[k], k * kPi / 3, 1e-15);
  const auto c1 = geodesic_zero_candidates(1);
  ASSERT_EQ(c1.size(), 3u);
  EXPECT_NEAR(c1[2], kTwoPi, 1e-15);
}

TEST(NormalQuadraticTest, CriticalRadiusRoots) {
  const QuadraticRoots roots = normal_quadratic_roots(exact_spec(2, 3, 4, 13));
  ASSERT_EQ(roots.roots.size(), 2u);
  EXPECT_NEAR(roots.roots[0].cos_qt, -9.0 / 4.0, 1e-12);
  EXPECT_FALSE(roots.roots[0].feasible);
  EXPECT_NEAR(roots.roots[1].cos_qt, -1.0, 1e-12);
  EXPECT_TRUE(roots.roots[1].feasible);
}

TEST(NormalQuadraticTest, ComplexRootsOffCritical) {
  const QuadraticRoots roots = normal_quadratic_roots(float_spec(2, 3, 0.5));
  EXPECT_LT(roots.discriminant, 0.0);
  EXPECT_TRUE(roots.roots.empty());
}

TEST(NormalQuadraticTest, RootsSatisfyTheQuadratic) {
  oracle::SpecSampler sample(31);
  for (int i = 0; i < 300; ++i) {
    const TorusCurveSpec s = float_spec(sample.winding(), sample.winding(), sample.radius(0.01, 0.3));
    const double p2 = s.p() * s.p(), q2 = s.q() * s.q(), b = s.b();
    const QuadraticRoots roots = normal_quadratic_roots(s);
    for (const auto& r : roots.roots) {
      const double c = r.cos_qt;
      ASSERT_NEAR(b * p2 * c * c + p2 * c + b * q2, 0.0, 1e-9 * std::max({1.0, p2 * c * c, b * q2}));
      ASSERT_EQ(r.feasible, c >= -1.0 - 1e-12 && c <= 1.0 + 1e-12);
    }
  }
}

TEST(ZeroCurvatureTest, CriticalRadiusGivesQPointsOnTheInnerCircle) {
  for (auto [p, q] : {std::pair{2, 3}, {1, 4}, {3, 5}, {5, 2}}) {
    const CriticalRadius critical = critical_radius(p, q);
    const TorusCurveSpec s(p, q, TubeRadius::exact(critical.as_rational()));
    const ZeroCurvatureSet set = zero_curvature_points(s);
    ASSERT_TRUE(set.is_critical);
    ASSERT_EQ(static_cast<int>(set.points.size()), q);
    const TrigCurve curve = build_trig_curve(s);
    for (std::size_t i = 0; i < set.points.size(); ++i) {
      const double t = set.points[i];
      EXPECT_NEAR(t, (2.0 * i + 1) * kPi / q, 1e-14);
      const Vec3 x = oracle::alpha(p, q, critical.float_value, t);
      EXPECT_LT(std::abs(x.z()), 1e-12);
      EXPECT_NEAR(x.head<2>().norm(), 1.0 - critical.float_value, 1e-12);
      EXPECT_LT(curvature(jet_at(curve, t, 2)), 1e-9);
    }
  }
}

TEST(ZeroCurvatureTest, OffCriticalIsEmpty) {
  EXPECT_TRUE(zero_curvature_points(float_spec(2, 3, 0.5)).points.empty());
  EXPECT_TRUE(zero_curvature_points(float_spec(2, 3, 0.3)).points.empty());
  EXPECT_FALSE(zero_curvature_points(float_spec(2, 3, 0.5)).is_critical);
}

TEST(ZeroCurvatureTest, FloatInputWithinToleranceMatches) {
  const ZeroCurvatureSet set = zero_curvature_points(float_spec(2, 3, 4.0 / 13.0));
  EXPECT_TRUE(set.is_critical);
  EXPECT_TRUE(set.float_matched);
  EXPECT_EQ(set.points.size(), 3u);
}

TEST(ZeroCurvatureTest, EvenMultiplesAreOnTheOuterCircle) {
  const TorusCurveSpec s = exact_spec(2, 3, 4, 13);
  const TrigCurve curve = build_trig_curve(s);
  for (int k = 0; k <= 6; k += 2) EXPECT_GT(curvature(jet_at(curve, k * kPi / 3, 2)), 0.1);
}

TEST(ZeroCurvatureTest, DenseScanFindsNothingElse) {
  for (auto [p, q] : {std::pair{2, 3}, {1, 4}}) {
    const TorusCurveSpec s(p, q, TubeRadius::exact(critical_radius(p, q).as_rational()));
    const auto scanned = scan_zero_curvature(s, 4096);
    const auto listed = zero_curvature_points(s).points;
    ASSERT_EQ(scanned.size(), listed.size());
    for (std::size_t i = 0; i < listed.size(); ++i) EXPECT_NEAR(scanned[i], listed[i], 1e-9);
  }
  EXPECT_TRUE(scan_zero_curvature(float_spec(2, 3, 0.25), 4096).empty());
}

TEST(TorsionIntervalTest, Bounds) {
  const TorsionInterval one_four = nonvanishing_torsion_interval(1, 4);
  EXPECT_FALSE(one_four.empty);
  EXPECT_EQ(one_four.lower, Rational(1, 17));
  EXPECT_EQ(one_four.upper, Rational(5, 11));
  EXPECT_TRUE(one_four.contains(0.3));
  EXPECT_FALSE(one_four.contains(0.5));

  const TorsionInterval two_three = nonvanishing_torsion_interval(2, 3);
  EXPECT_TRUE(two_three.empty);
  EXPECT_EQ(two_three.upper, Rational(5, 22));
  EXPECT_FALSE(two_three.contains(0.25));
}

TEST(BGridTest, PinsTheNearestPoint) {
  const auto grid = make_b_grid(0.01, 0.99, 401, 4.0 / 13.0);
  ASSERT_EQ(grid.size(), 401u);
  EXPECT_EQ(std::count(grid.begin(), grid.end(), 4.0 / 13.0), 1);
  EXPECT_TRUE(std::is_sorted(grid.begin(), grid.end()));
  EXPECT_EQ(grid.front(), 0.01);
  EXPECT_EQ(grid.back(), 0.99);
}

TEST(ScanOverBTest, UniqueMinimumAtTheCriticalRadius) {
  const double critical = 4.0 / 13.0;
  const auto grid = make_b_grid(0.01, 0.99, 101, critical);
  const BScanResult scan = scan_over_b(2, 3, grid, 1024);
  ASSERT_EQ(scan.rows.size(), grid.size());
  EXPECT_EQ(scan.rows[scan.closest_to_critical()].b, critical);
  for (const auto& row : scan.rows) {
    if (row.b == critical) {
      EXPECT_LT(row.min_kappa, 1e-9);
    } else {
      EXPECT_GT(row.min_kappa, 1e-4) << "b " << row.b;
    }
  }
}

TEST(ScanOverBTest, TorsionKeepsItsSignInsideTheInterval) {
  const std::vector<double> grid{0.1, 0.2, 0.3, 0.4};
  const BScanResult scan = scan_over_b(1, 4, grid, 1024);
  for (const auto& row : scan.rows) {
    EXPECT_GT(row.min_abs_tau, 1e-3) << "b " << row.b;
    EXPECT_EQ(row.tau_sign_changes, 0);
  }
}

TEST(ScanOverBTest, TorsionUndefinedAtTheCriticalRadius) {
  const std::vector<double> grid{4.0 / 13.0};
  const BScanResult scan = scan_over_b(2, 3, grid, 1024);
  EXPECT_TRUE(std::isnan(scan.rows[0].min_abs_tau));
}

TEST(ScanOverBTest, SinglePointGrid) {
  const std::vector<double> grid{0.5};
  const BScanResult scan = scan_over_b(2, 3, grid, 512);
  ASSERT_EQ(scan.rows.size(), 1u);
  EXPECT_EQ(scan.closest_to_critical(), 0u);
  EXPECT_GT(scan.rows[0].min_kappa, 1e-4);
}

TEST(ScanOverBTest, ThreadCountDoesNotChangeResults) {
  const auto grid = make_b_grid(0.1, 0.9, 17);
  const BScanResult one = scan_over_b(3, 5, grid, 512, 1);
  const BScanResult many = scan_over_b(3, 5, grid, 512, 4);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(one.rows[i].min_kappa, many.rows[i].min_kappa);
    EXPECT_EQ(one.rows[i].argmin_t_kappa, many.rows[i].argmin_t_kappa);
  }
}

TEST(ScanOverBTest, RejectsBadInput) {
  const std::vector<double> empty;
  const std::vector<double> ok{0.5};
  const std::vector<double> out_of_range{0.5, 1.0};
  EXPECT_THROW(scan_over_b(2, 3, empty), std::invalid_argument);
  EXPECT_THROW(scan_over_b(2, 3, ok, 255), std::invalid_argument);
  EXPECT_THROW(scan_over_b(2, 3, out_of_range, 256), std::invalid_argument);
}

}  // namespace
}  // namespace toruscurv
