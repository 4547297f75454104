#include "toruscurv/curve_model.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace toruscurv {

TubeRadius TubeRadius::exact(Rational value) { return TubeRadius(value.to_double(), value); }

TubeRadius TubeRadius::approximate(double value) { return TubeRadius(value, std::nullopt); }

TubeRadius TubeRadius::parse(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return exact(Rational::parse(text));
  const std::string owned(text);
  char* end = nullptr;
  const double value = std::strtod(owned.c_str(), &end);
  if (owned.empty() || end != owned.c_str() + owned.size()) {
    throw std::invalid_argument("tube radius is neither a fraction nor a decimal: '" + owned + "'");
  }
  return approximate(value);
}

std::string TubeRadius::to_string() const {
  if (exact_) return exact_->to_string();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

TorusCurveSpec::TorusCurveSpec(int p, int q, TubeRadius b) : p_(std::abs(p)), q_(std::abs(q)), b_(b) {
  if (p == 0 || q == 0) throw std::invalid_argument("winding numbers p and q must be nonzero");
  if (!(b.value() > 0.0 && b.value() < 1.0)) {
    throw std::invalid_argument("tube radius must satisfy 0 < b < 1, got " + b.to_string());
  }
  orientation_ = ((p < 0) != (q < 0)) ? -1 : 1;
}

bool TorusCurveSpec::coprime() const { return std::gcd(p_, q_) == 1; }

double TrigTerm::value_at(double t) const {
  const double angle = static_cast<double>(frequency) * t;
  switch (((quarter_turns % 4) + 4) % 4) {
    case 0: return amplitude * std::cos(angle);
    case 1: return -amplitude * std::sin(angle);
    case 2: return -amplitude * std::cos(angle);
    default: return amplitude * std::sin(angle);
  }
}

TrigTerm TrigTerm::derivative(int k) const {
  double scale = 1.0;
  for (int i = 0; i < k; ++i) scale *= static_cast<double>(frequency);
  return {amplitude * scale, frequency, (quarter_turns + k) % 4};
}

Vec3 TrigCurve::evaluate(double t) const {
  Vec3 out = Vec3::Zero();
  for (int axis = 0; axis < 3; ++axis) {
    for (const auto& term : coordinates[static_cast<std::size_t>(axis)]) out[axis] += term.value_at(t);
  }
  return out;
}

Vec3 torus_point(double b, double u, double v) {
  const double r = 1.0 + b * std::cos(v);
  return {r * std::cos(u), r * std::sin(u), b * std::sin(v)};
}

Vec3 curve_point(const TorusCurveSpec& spec, double t) {
  return torus_point(spec.b(), spec.p() * t, spec.q() * t);
}

TrigCurve build_trig_curve(const TorusCurveSpec& spec) {
  const int p = spec.p();
  const int q = spec.q();
  const double half_b = 0.5 * spec.b();
  constexpr int kCos = 0;
  constexpr int kSin = 3;

  TrigCurve curve;
  curve.coordinates[0] = {{1.0, p, kCos}, {half_b, p + q, kCos}, {half_b, p - q, kCos}};
  curve.coordinates[1] = {{1.0, p, kSin}, {half_b, p + q, kSin}, {half_b, p - q, kSin}};
  curve.coordinates[2] = {{spec.b(), q, kSin}};
  return curve;
}

double wrap_parameter(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

Jet jet_at(const TrigCurve& curve, double t, int m) {
  if (!std::isfinite(t)) throw std::invalid_argument("jet parameter must be finite");
  if (m < 1 || m > kMaxJetOrder) {
    throw std::invalid_argument("jet order must lie in [1, " + std::to_string(kMaxJetOrder) + "], got " +
                                std::to_string(m));
  }
  const double s = wrap_parameter(t);
  Jet jet;
  jet.t = s;
  jet.order = m;
  jet.derivatives.assign(static_cast<std::size_t>(m) + 1, Vec3::Zero());
  for (int axis = 0; axis < 3; ++axis) {
    for (const auto& term : curve.coordinates[static_cast<std::size_t>(axis)]) {
      for (int k = 0; k <= m; ++k) {
        jet.derivatives[static_cast<std::size_t>(k)][axis] += term.derivative(k).value_at(s);
      }
    }
  }
  return jet;
}

SurfaceFrame surface_frame_at(const TorusCurveSpec& spec, double t) {
  const double b = spec.b();
  const double u = spec.p() * t;
  const double v = spec.q() * t;
  const double cu = std::cos(u), su = std::sin(u);
  const double cv = std::cos(v), sv = std::sin(v);

  // Partial derivatives of x(u,v).
  const Vec3 du = (1.0 + b * cv) * Vec3(-su, cu, 0.0);
  const Vec3 dv = b * Vec3(-sv * cu, -sv * su, cv);

  SurfaceFrame frame;
  frame.x_u = du.normalized();
  frame.x_v = dv.normalized();
  frame.n = frame.x_u.cross(frame.x_v);
  return frame;
}

FormMatrix second_fundamental_form_at(const TorusCurveSpec& spec, double t) {
  const double c = std::cos(spec.q() * t);
  return {(1.0 + spec.b() * c) * c, 0.0, spec.b()};
}

double squared_speed(const TorusCurveSpec& spec, double t) {
  const double p = spec.p();
  const double q = spec.q();
  const double b = spec.b();
  const double r = 1.0 + b * std::cos(q * t);
  return p * p * r * r + q * q * b * b;
}

}  // namespace toruscurv
