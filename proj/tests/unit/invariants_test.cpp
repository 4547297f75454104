#include "toruscurv/invariants.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "toruscurv/vanishing_locus.hpp"

namespace toruscurv {
namespace {

TorusCurveSpec float_spec(int p, int q, double b) { return TorusCurveSpec(p, q, TubeRadius::approximate(b)); }

double mixed_error(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

Jet circle_jet(double t) {
  Jet jet;
  jet.t = t;
  jet.order = 3;
  for (int k = 0; k <= 3; ++k) {
    const double phase = t + k * kPi / 2;
    jet.derivatives.push_back(Vec3(std::cos(phase), std::sin(phase), 0.0));
  }
  return jet;
}

TEST(InvariantsTest, UnitCircleHasUnitCurvatureAndNoTorsion) {
  const Jet jet = circle_jet(0.8);
  EXPECT_NEAR(curvature(jet), 1.0, 1e-15);
  ASSERT_TRUE(torsion(jet).has_value());
  EXPECT_NEAR(*torsion(jet), 0.0, 1e-15);
  EXPECT_NEAR(speed_factor(jet), 1.0, 1e-15);
}

TEST(InvariantsTest, TorsionUndefinedOnAStraightLine) {
  Jet jet;
  jet.order = 3;
  jet.derivatives = {Vec3(0, 0, 0), Vec3(1, 2, 3), Vec3(2, 4, 6), Vec3(0, 0, 0)};
  EXPECT_NEAR(curvature(jet), 0.0, 1e-15);
  EXPECT_FALSE(torsion(jet).has_value());
}

TEST(InvariantsTest, RejectsShortJets) {
  const Jet jet = jet_at(build_trig_curve(float_spec(2, 3, 0.5)), 0.1, 2);
  EXPECT_NO_THROW(curvature(jet));
  EXPECT_THROW(torsion(jet), std::invalid_argument);
  const Jet first = jet_at(build_trig_curve(float_spec(2, 3, 0.5)), 0.1, 1);
  EXPECT_THROW(curvature(first), std::invalid_argument);
}

TEST(InvariantsTest, TorsionMatchesFrenetFiniteDifferences) {
  const TorusCurveSpec s = float_spec(1, 4, 0.2);
  for (double t : {0.3, 1.1, 2.9, 5.0}) {
    const auto tau = torsion(jet_at(build_trig_curve(s), t, 3));
    ASSERT_TRUE(tau.has_value());
    EXPECT_NEAR(*tau, oracle::frenet_torsion(1, 4, 0.2, t), 1e-6 * std::max(1.0, std::abs(*tau))) << "t " << t;
  }
}

TEST(InvariantsTest, TorsionUndefinedAtZeroCurvaturePoints) {
  const TorusCurveSpec s(2, 3, TubeRadius::exact(Rational(4, 13)));
  const InvariantSample sample = invariant_sample(s, kPi);
  EXPECT_LT(sample.kappa, 1e-9);
  EXPECT_FALSE(sample.tau.has_value());
}

TEST(GeodesicCurvatureTest, VanishesExactlyWhereSinQtDoes) {
  const TorusCurveSpec s = float_spec(2, 3, 0.5);
  const TrigCurve curve = build_trig_curve(s);
  for (double t : geodesic_zero_candidates(3)) {
    EXPECT_NEAR(invariant_sample(s, curve, t).kappa_g, 0.0, 1e-12) << "t " << t;
    EXPECT_NEAR(geodesic_curvature_closed_form(s, t), 0.0, 1e-12);
  }
  for (double t : {0.2, 0.9, 1.3, 2.2, 4.4}) EXPECT_GT(std::abs(invariant_sample(s, curve, t).kappa_g), 1e-3);
}

TEST(GeodesicCurvatureTest, IsOddAboutTheOrigin) {
  const TorusCurveSpec s = float_spec(3, 5, 0.35);
  for (double t : {0.1, 0.7, 1.9}) {
    EXPECT_NEAR(geodesic_curvature_closed_form(s, t), -geodesic_curvature_closed_form(s, -t), 1e-13);
    EXPECT_NEAR(invariant_sample(s, t).kappa_g, -invariant_sample(s, kTwoPi - t).kappa_g, 1e-12);
  }
}

TEST(GeodesicCurvatureTest, PrintedVariantSharesZerosButNotMagnitude) {
  const TorusCurveSpec s = float_spec(2, 3, 0.5);
  for (double t : geodesic_zero_candidates(3)) {
    EXPECT_NEAR(geodesic_curvature_closed_form(s, t, FormulaVariant::printed), 0.0, 1e-12);
  }
  double worst = 0.0;
  for (double t : {0.2, 0.5, 1.2, 2.0}) {
    const double corrected = geodesic_curvature_closed_form(s, t);
    const double printed = geodesic_curvature_closed_form(s, t, FormulaVariant::printed);
    EXPECT_EQ(std::signbit(corrected), std::signbit(printed));
    worst = std::max(worst, mixed_error(corrected, printed));
  }
  EXPECT_GT(worst, 1e-3);
}

TEST(NormalCurvatureTest, PositiveOnTheOuterHalf) {
  oracle::SpecSampler sample(21);
  for (int i = 0; i < 500; ++i) {
    const TorusCurveSpec s = float_spec(sample.winding(), sample.winding(), sample.radius());
    const double t = sample.parameter();
    if (std::cos(s.q() * t) <= 0.0) continue;
    ASSERT_GT(invariant_sample(s, t).kappa_n, 0.0);
  }
}

TEST(NormalCurvatureTest, KnownValueAtOrigin) {
  // (1.5 * 4 + 0.5 * 9) / (4 * 2.25 + 9 * 0.25)
  EXPECT_NEAR(normal_curvature_closed_form(float_spec(2, 3, 0.5), 0.0), 10.5 / 11.25, 1e-15);
  EXPECT_NEAR(invariant_sample(float_spec(2, 3, 0.5), 0.0).kappa_n, 10.5 / 11.25, 1e-13);
}

TEST(NormalCurvatureTest, PrintedVariantDiffersAwayFromUnitRadius) {
  const TorusCurveSpec s = float_spec(2, 3, 0.5);
  EXPECT_GT(mixed_error(normal_curvature_closed_form(s, 0.3), normal_curvature_closed_form(s, 0.3, FormulaVariant::printed)),
            1e-3);
}

TEST(InvariantsTest, CurvatureIsInvariantUnderReparametrizationScale) {
  // alpha(2s) has derivatives scaled by 2^k; curvature and torsion are unchanged.
  const Jet jet = jet_at(build_trig_curve(float_spec(2, 3, 0.4)), 1.3, 3);
  Jet scaled = jet;
  for (int k = 1; k <= 3; ++k) scaled.derivatives[k] *= std::pow(2.0, k);
  EXPECT_NEAR(curvature(scaled), curvature(jet), 1e-13);
  EXPECT_NEAR(*torsion(scaled), *torsion(jet), 1e-12);
}

TEST(InvariantsTest, DecompositionIdentityAtRandomPoints) {
  oracle::SpecSampler sample(22);
  for (int i = 0; i < 2000; ++i) {
    const InvariantSample s = invariant_sample(float_spec(sample.winding(), sample.winding(), sample.radius()),
                                               sample.parameter());
    const double k2 = s.kappa * s.kappa;
    ASSERT_LE(std::abs(k2 - s.kappa_g * s.kappa_g - s.kappa_n * s.kappa_n), 1e-9 * std::max(1.0, k2));
  }
}

TEST(InvariantsTest, ClosedFormsAgreeWithDefinitionalRoutes) {
  oracle::SpecSampler sample(23);
  for (int i = 0; i < 2000; ++i) {
    const TorusCurveSpec spec = float_spec(sample.winding(), sample.winding(), sample.radius());
    const double t = sample.parameter();
    const InvariantSample def = invariant_sample(spec, t);
    const InvariantSample closed = invariant_sample(spec, t, Source::closed_form);
    EXPECT_EQ(closed.source, Source::closed_form);
    ASSERT_LE(mixed_error(def.kappa_g, closed.kappa_g), 1e-10);
    ASSERT_LE(mixed_error(def.kappa_n, closed.kappa_n), 1e-10);
    ASSERT_LE(mixed_error(def.kappa, closed.kappa), 1e-9);
  }
}

TEST(InvariantsTest, SpeedMatchesDirectDerivative) {
  oracle::SpecSampler sample(24);
  for (int i = 0; i < 200; ++i) {
    const int p = sample.winding(), q = sample.winding();
    const double b = sample.radius(), t = sample.parameter();
    EXPECT_NEAR(invariant_sample(float_spec(p, q, b), t).speed, oracle::alpha_prime(p, q, b, t).norm(), 1e-12);
  }
}

}  // namespace
}  // namespace toruscurv
