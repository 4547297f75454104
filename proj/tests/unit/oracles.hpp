#pragma once

// Test-only reference computations. Nothing here calls into the trigonometric
// polynomial or jet machinery of the library.

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cmath>
#include <random>
#include <type_traits>

namespace toruscurv::oracle {

using V3 = Eigen::Vector3d;

inline V3 alpha(int p, int q, double b, double t) {
  const double r = 1.0 + b * std::cos(q * t);
  return {r * std::cos(p * t), r * std::sin(p * t), b * std::sin(q * t)};
}

// First derivative, transcribed term by term from the product rule.
inline V3 alpha_prime(int p, int q, double b, double t) {
  const double r = 1.0 + b * std::cos(q * t);
  return {-b * q * std::sin(q * t) * std::cos(p * t) - p * r * std::sin(p * t),
          -b * q * std::sin(q * t) * std::sin(p * t) + p * r * std::cos(p * t), b * q * std::cos(q * t)};
}

// Five-point central difference of a vector-valued function.
template <typename F>
auto derivative5(F&& f, double t, double h) {
  using R = std::decay_t<decltype(f(t))>;
  return R((f(t - 2 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2 * h)) / (12.0 * h));
}

template <typename F>
auto second_derivative5(F&& f, double t, double h) {
  using R = std::decay_t<decltype(f(t))>;
  return R((-f(t - 2 * h) + 16.0 * f(t - h) - 30.0 * f(t) + 16.0 * f(t + h) - f(t + 2 * h)) / (12.0 * h * h));
}

// Torsion from the Frenet equations dB/ds = -tau N with every derivative taken
// by finite differences of the direct parametrization.
inline double frenet_torsion(int p, int q, double b, double t) {
  constexpr double kInner = 1e-3;
  constexpr double kOuter = 1e-3;
  auto pos = [&](double s) { return alpha(p, q, b, s); };
  auto binormal = [&](double s) {
    const V3 d1 = derivative5(pos, s, kInner);
    const V3 d2 = second_derivative5(pos, s, kInner);
    return V3(d1.cross(d2).normalized());
  };
  const V3 d1 = derivative5(pos, t, kInner);
  const V3 tangent = d1.normalized();
  const V3 bn = binormal(t);
  const V3 normal = bn.cross(tangent);
  const V3 db = derivative5(binormal, t, kOuter);
  return -db.dot(normal) / d1.norm();
}

// Random (p, q, b, t) draws for property tests.
struct SpecSampler {
  std::mt19937_64 rng;
  explicit SpecSampler(std::uint64_t seed) : rng(seed) {}

  int winding() { return std::uniform_int_distribution<int>(1, 7)(rng); }
  double radius(double lo = 0.05, double hi = 0.95) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  double parameter() { return std::uniform_real_distribution<double>(0.0, 6.283185307179586)(rng); }
};

}  // namespace toruscurv::oracle
