#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "toruscurv/rational.hpp"

namespace toruscurv {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.14159265358979323846264338327950;

// Highest derivative order a Jet may carry. Amplitudes grow like |frequency|^order.
inline constexpr int kMaxJetOrder = 16;

// Tube radius of the torus (the core circle has radius 1). Remembers the exact
// fraction when one was supplied so that critical-radius tests can be exact.
class TubeRadius {
 public:
  static TubeRadius exact(Rational value);
  static TubeRadius approximate(double value);
  // "num/den" yields an exact radius, anything else is read as a decimal.
  static TubeRadius parse(std::string_view text);

  double value() const { return value_; }
  const std::optional<Rational>& exact_value() const { return exact_; }
  bool is_exact() const { return exact_.has_value(); }
  std::string to_string() const;

 private:
  TubeRadius(double value, std::optional<Rational> exact) : value_(value), exact_(exact) {}

  double value_ = 0.0;
  std::optional<Rational> exact_;
};

// A (p,q) torus curve on the torus with tube radius b. Windings are stored as
// absolute values; the sign product is kept in orientation().
class TorusCurveSpec {
 public:
  // Throws std::invalid_argument unless p, q != 0 and 0 < b < 1.
  TorusCurveSpec(int p, int q, TubeRadius b);

  int p() const { return p_; }
  int q() const { return q_; }
  const TubeRadius& tube() const { return b_; }
  double b() const { return b_.value(); }
  int orientation() const { return orientation_; }
  // Non-coprime windings trace a gcd(p,q)-fold cover of a smaller curve.
  bool coprime() const;

 private:
  int p_;
  int q_;
  TubeRadius b_;
  int orientation_ = 1;
};

// One sinusoid amplitude * cos(frequency * t + quarter_turns * pi/2).
// quarter_turns = 0 is a cosine, quarter_turns = 3 a sine.
struct TrigTerm {
  double amplitude = 0.0;
  int frequency = 0;
  int quarter_turns = 0;

  double value_at(double t) const;
  // Exact k-th derivative: amplitude * frequency^k, phase advanced by k quarter turns.
  TrigTerm derivative(int k) const;
};

// Curve in R^3 whose coordinates are finite sums of integer-frequency sinusoids.
struct TrigCurve {
  std::array<std::vector<TrigTerm>, 3> coordinates;

  Vec3 evaluate(double t) const;
};

// Position and the first `order` parameter derivatives at t.
struct Jet {
  double t = 0.0;
  int order = 0;
  std::vector<Vec3> derivatives;  // derivatives[0] is the position

  const Vec3& operator[](int k) const { return derivatives[static_cast<std::size_t>(k)]; }
};

// Orthonormal frame of the torus along the curve; n is the outward normal.
struct SurfaceFrame {
  Vec3 x_u;
  Vec3 x_v;
  Vec3 n;
};

// Second fundamental form of the torus in the (u,v) chart, taken with respect to
// the inward normal -n so that its entries are diag((1 + b cos v) cos v, b).
struct FormMatrix {
  double e = 0.0;
  double f = 0.0;
  double g = 0.0;

  // II((du, dv), (du, dv)).
  double quadratic(double du, double dv) const { return e * du * du + 2.0 * f * du * dv + g * dv * dv; }
};

// x(u,v) = ((1 + b cos v) cos u, (1 + b cos v) sin u, b sin v).
Vec3 torus_point(double b, double u, double v);

// Direct product-form evaluation of the curve, alpha(t) = x(pt, qt).
Vec3 curve_point(const TorusCurveSpec& spec, double t);

// Rewrites the product form as a trigonometric polynomial using
// (1 + b cos qt) cos pt = cos pt + b/2 cos((p+q)t) + b/2 cos((p-q)t) and its sine analogue.
TrigCurve build_trig_curve(const TorusCurveSpec& spec);

// Exact jet of order m. Throws std::invalid_argument for m < 1, m > kMaxJetOrder,
// or non-finite t.
Jet jet_at(const TrigCurve& curve, double t, int m);

// Frame obtained by differentiating x(u,v) at (u,v) = (pt, qt) and normalizing.
SurfaceFrame surface_frame_at(const TorusCurveSpec& spec, double t);

FormMatrix second_fundamental_form_at(const TorusCurveSpec& spec, double t);

// Squared speed p^2 (1 + b cos qt)^2 + q^2 b^2.
double squared_speed(const TorusCurveSpec& spec, double t);

// Reduces t into [0, 2pi).
double wrap_parameter(double t);

}  // namespace toruscurv
