#include "toruscurv/vanishing_locus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "golden_section.hpp"
#include "toruscurv/invariants.hpp"

namespace toruscurv {

CriticalRadius critical_radius(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("critical_radius needs p, q >= 1");
  const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
  const std::int64_t q2 = static_cast<std::int64_t>(q) * q;
  const Rational reduced(p2, p2 + q2);
  return {reduced.numerator(), reduced.denominator(), reduced.to_double()};
}

CriticalMatch match_critical(const TorusCurveSpec& spec) {
  const CriticalRadius critical = critical_radius(spec.p(), spec.q());
  if (const auto& exact = spec.tube().exact_value()) return {*exact == critical.as_rational(), false};
  const bool close = std::abs(spec.b() - critical.float_value) < kCriticalFloatTolerance;
  return {close, close};
}

std::vector<double> geodesic_zero_candidates(int q) {
  if (q < 1) throw std::invalid_argument("geodesic_zero_candidates needs q >= 1");
  std::vector<double> ts;
  ts.reserve(2 * static_cast<std::size_t>(q) + 1);
  for (int k = 0; k <= 2 * q; ++k) ts.push_back(k * kPi / q);
  return ts;
}

QuadraticRoots normal_quadratic_roots(const TorusCurveSpec& spec) {
  const double p2 = static_cast<double>(spec.p()) * spec.p();
  const double q2 = static_cast<double>(spec.q()) * spec.q();
  const double b = spec.b();
  const double a = b * p2;
  const double lin = p2;
  const double c0 = b * q2;

  QuadraticRoots out;
  out.discriminant = lin * lin - 4.0 * a * c0;
  if (out.discriminant < 0.0) return out;

  // Cancellation-free form: both roots share the sign of -lin.
  const double root = std::sqrt(out.discriminant);
  const double w = -0.5 * (lin + root);
  double r1 = w / a;
  double r2 = c0 / w;
  if (r1 > r2) std::swap(r1, r2);
  for (double c : {r1, r2}) {
    constexpr double kSlack = 1e-12;
    out.roots.push_back({c, c >= -1.0 - kSlack && c <= 1.0 + kSlack});
  }
  return out;
}

ZeroCurvatureSet zero_curvature_points(const TorusCurveSpec& spec) {
  const CriticalMatch match = match_critical(spec);
  ZeroCurvatureSet set{spec, {}, match.is_critical, match.float_matched};
  if (!match.is_critical) return set;
  const int q = spec.q();
  for (int k = 1; k <= 2 * q - 1; k += 2) set.points.push_back(k * kPi / q);
  return set;
}

std::vector<double> scan_zero_curvature(const TorusCurveSpec& spec, int t_resolution, double threshold) {
  const TrigCurve curve = build_trig_curve(spec);
  auto kappa = [&curve](double t) { return curvature(jet_at(curve, t, 2)); };
  std::vector<double> hits;
  for (const auto& m : detail::periodic_local_minima(kappa, t_resolution)) {
    if (m.value < threshold) hits.push_back(m.x);
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

TorsionInterval nonvanishing_torsion_interval(int p, int q) {
  const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
  const std::int64_t q2 = static_cast<std::int64_t>(q) * q;
  TorsionInterval interval;
  interval.lower = Rational(p2, p2 + q2);
  interval.upper = Rational(q2 - p2, 2 * q2 + p2);
  interval.empty = !(interval.lower < interval.upper);
  return interval;
}

std::size_t BScanResult::closest_to_critical() const {
  const double critical = critical_radius(p, q).float_value;
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (std::abs(rows[i].b - critical) < std::abs(rows[best].b - critical)) best = i;
  }
  return best;
}

namespace {

BScanRow scan_row(int p, int q, double b, int n) {
  const TorusCurveSpec spec(p, q, TubeRadius::approximate(b));
  const TrigCurve curve = build_trig_curve(spec);
  const double h = kTwoPi / n;

  BScanRow row;
  row.b = b;

  auto kappa = [&curve](double t) { return curvature(jet_at(curve, t, 2)); };
  row.min_kappa = std::numeric_limits<double>::infinity();
  for (const auto& m : detail::periodic_local_minima(kappa, n)) {
    if (m.value < row.min_kappa) {
      row.min_kappa = m.value;
      row.argmin_t_kappa = m.x;
    }
  }

  std::vector<std::optional<double>> tau(static_cast<std::size_t>(n));
  bool undefined_somewhere = false;
  for (int i = 0; i < n; ++i) {
    tau[static_cast<std::size_t>(i)] = torsion(jet_at(curve, h * i, 3));
    undefined_somewhere = undefined_somewhere || !tau[static_cast<std::size_t>(i)];
  }
  double last_sign = 0.0;
  for (int i = 0; i <= n; ++i) {
    const auto& v = tau[static_cast<std::size_t>(i % n)];
    if (!v || *v == 0.0) continue;
    const double s = std::copysign(1.0, *v);
    if (last_sign != 0.0 && s != last_sign && i > 0) ++row.tau_sign_changes;
    last_sign = s;
  }

  if (undefined_somewhere) {
    row.min_abs_tau = std::numeric_limits<double>::quiet_NaN();
    row.argmin_t_tau = std::numeric_limits<double>::quiet_NaN();
    return row;
  }
  auto abs_tau = [&curve](double t) {
    const auto v = torsion(jet_at(curve, t, 3));
    return v ? std::abs(*v) : std::numeric_limits<double>::infinity();
  };
  row.min_abs_tau = std::numeric_limits<double>::infinity();
  for (const auto& m : detail::periodic_local_minima(abs_tau, n)) {
    if (m.value < row.min_abs_tau) {
      row.min_abs_tau = m.value;
      row.argmin_t_tau = m.x;
    }
  }
  return row;
}

}  // namespace

BScanResult scan_over_b(int p, int q, std::span<const double> b_grid, int t_resolution, unsigned threads) {
  if (b_grid.empty()) throw std::invalid_argument("scan_over_b: empty b grid");
  if (t_resolution < 256) throw std::invalid_argument("scan_over_b: t_resolution must be >= 256");
  for (double b : b_grid) {
    if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("scan_over_b: grid value outside (0,1)");
  }
  // Validates p and q.
  (void)TorusCurveSpec(p, q, TubeRadius::approximate(b_grid.front()));

  BScanResult result;
  result.p = std::abs(p);
  result.q = std::abs(q);
  result.t_resolution = t_resolution;
  result.torsion_interval = nonvanishing_torsion_interval(result.p, result.q);
  result.rows.resize(b_grid.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(b_grid.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < b_grid.size(); i = next++) {
      result.rows[i] = scan_row(result.p, result.q, b_grid[i], t_resolution);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  return result;
}

std::vector<double> make_b_grid(double lo, double hi, int steps, std::optional<double> pin) {
  if (steps < 1) throw std::invalid_argument("make_b_grid: steps must be >= 1");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid.push_back(lo);
  } else {
    for (int i = 0; i < steps; ++i) grid.push_back(lo + (hi - lo) * i / (steps - 1));
  }
  if (pin) {
    auto nearest = std::min_element(grid.begin(), grid.end(),
                                    [&](double a, double b) { return std::abs(a - *pin) < std::abs(b - *pin); });
    *nearest = *pin;
  }
  return grid;
}

}  // namespace toruscurv
