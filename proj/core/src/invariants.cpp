#include "toruscurv/invariants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace toruscurv {

namespace {

void require_order(const Jet& jet, int needed, const char* what) {
  if (jet.order < needed) {
    throw std::invalid_argument(std::string(what) + " needs a jet of order >= " + std::to_string(needed));
  }
}

double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return a.dot(b.cross(c)); }

}  // namespace

double speed_factor(const Jet& jet) {
  require_order(jet, 1, "speed_factor");
  return 1.0 / jet[1].norm();
}

double curvature(const Jet& jet) {
  require_order(jet, 2, "curvature");
  const double speed = jet[1].norm();
  return jet[1].cross(jet[2]).norm() / (speed * speed * speed);
}

std::optional<double> torsion(const Jet& jet) {
  require_order(jet, 3, "torsion");
  const Vec3 binormal = jet[1].cross(jet[2]);
  const double cross_norm = binormal.norm();
  if (cross_norm < kTorsionGuard * jet[1].squaredNorm()) return std::nullopt;
  return binormal.dot(jet[3]) / (cross_norm * cross_norm);
}

double geodesic_curvature(const Jet& jet, const SurfaceFrame& frame) {
  require_order(jet, 2, "geodesic_curvature");
  const double dt_ds = speed_factor(jet);
  return triple(frame.n, jet[1], jet[2]) * dt_ds * dt_ds * dt_ds;
}

double geodesic_curvature_closed_form(const TorusCurveSpec& spec, double t, FormulaVariant variant) {
  const double p = spec.p();
  const double q = spec.q();
  const double b = spec.b();
  const double r = 1.0 + b * std::cos(q * t);
  const double radial = variant == FormulaVariant::corrected ? r * r : r;
  const double numerator = p * std::sin(q * t) * (p * p * radial + 2.0 * q * q * b * b);
  const double speed2 = squared_speed(spec, t);
  return numerator / (speed2 * std::sqrt(speed2));
}

double normal_curvature(const Jet& jet, const SurfaceFrame& frame) {
  require_order(jet, 2, "normal_curvature");
  return -frame.n.dot(jet[2]) / jet[1].squaredNorm();
}

double normal_curvature_closed_form(const TorusCurveSpec& spec, double t, FormulaVariant variant) {
  const double p = spec.p();
  const double q = spec.q();
  const double b = spec.b();
  const double c = std::cos(q * t);
  const FormMatrix form = second_fundamental_form_at(spec, t);
  const double numerator = form.quadratic(p, q);
  double denominator = squared_speed(spec, t);
  if (variant == FormulaVariant::printed) denominator = p * p * (1.0 + c) * (1.0 + c) + q * q * b * b;
  return numerator / denominator;
}

InvariantSample invariant_sample(const TorusCurveSpec& spec, double t, Source source) {
  return invariant_sample(spec, build_trig_curve(spec), t, source);
}

InvariantSample invariant_sample(const TorusCurveSpec& spec, const TrigCurve& curve, double t, Source source) {
  const Jet jet = jet_at(curve, t, 3);
  InvariantSample sample;
  sample.t = jet.t;
  sample.source = source;
  sample.tau = torsion(jet);
  if (source == Source::definitional) {
    const SurfaceFrame frame = surface_frame_at(spec, jet.t);
    sample.speed = jet[1].norm();
    sample.kappa = curvature(jet);
    sample.kappa_g = geodesic_curvature(jet, frame);
    sample.kappa_n = normal_curvature(jet, frame);
  } else {
    sample.speed = std::sqrt(squared_speed(spec, jet.t));
    sample.kappa_g = geodesic_curvature_closed_form(spec, jet.t);
    sample.kappa_n = normal_curvature_closed_form(spec, jet.t);
    sample.kappa = std::hypot(sample.kappa_g, sample.kappa_n);
  }
  return sample;
}

}  // namespace toruscurv
