#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "toruscurv/curve_model.hpp"
#include "toruscurv/rational.hpp"

namespace toruscurv {

// Float-supplied radii within this distance of p^2/(p^2+q^2) count as critical.
inline constexpr double kCriticalFloatTolerance = 1e-12;
// Curvature below this counts as vanishing.
inline constexpr double kZeroCurvatureThreshold = 1e-9;
inline constexpr int kDefaultTResolution = 4096;

// The tube radius p^2 / (p^2 + q^2), the only one admitting zero curvature.
struct CriticalRadius {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  double float_value = 0.0;

  Rational as_rational() const { return Rational(numerator, denominator); }
};

CriticalRadius critical_radius(int p, int q);

struct CriticalMatch {
  bool is_critical = false;
  // True when the radius had no exact form and matched only within kCriticalFloatTolerance.
  bool float_matched = false;
};

CriticalMatch match_critical(const TorusCurveSpec& spec);

// k*pi/q for k = 0..2q: the zeros of sin(qt) on [0, 2pi], both endpoints kept.
std::vector<double> geodesic_zero_candidates(int q);

struct QuadraticRoot {
  double cos_qt = 0.0;
  bool feasible = false;  // lies in [-1, 1]
};

// Real roots of b p^2 c^2 + p^2 c + b q^2 = 0 in c = cos(qt), ascending.
// Complex roots produce an empty list.
struct QuadraticRoots {
  double discriminant = 0.0;
  std::vector<QuadraticRoot> roots;
};

QuadraticRoots normal_quadratic_roots(const TorusCurveSpec& spec);

struct ZeroCurvatureSet {
  TorusCurveSpec spec;
  std::vector<double> points;  // parameter values, ascending
  bool is_critical = false;
  bool float_matched = false;
};

// t = k*pi/q for odd k when the radius is critical, otherwise empty.
ZeroCurvatureSet zero_curvature_points(const TorusCurveSpec& spec);

// Dense numerical search for {t : kappa(t) < threshold}, independent of the
// closed-form locus above. Each hit is refined by golden-section descent.
std::vector<double> scan_zero_curvature(const TorusCurveSpec& spec, int t_resolution = kDefaultTResolution,
                                        double threshold = kZeroCurvatureThreshold);

// The interval p^2/(p^2+q^2) < b < (q^2-p^2)/(2q^2+p^2) on which the torsion of
// the (p,q) curve never vanishes. Empty unless q^2/p^2 > 1 + sqrt(3).
struct TorsionInterval {
  Rational lower;
  Rational upper;
  bool empty = true;

  bool contains(double b) const { return !empty && b > lower.to_double() && b < upper.to_double(); }
};

TorsionInterval nonvanishing_torsion_interval(int p, int q);

struct BScanRow {
  double b = 0.0;
  double min_kappa = 0.0;
  double argmin_t_kappa = 0.0;
  double min_abs_tau = 0.0;  // NaN when torsion is undefined somewhere on the grid
  double argmin_t_tau = 0.0;
  int tau_sign_changes = 0;  // sign flips of tau around the closed t-grid
};

struct BScanResult {
  int p = 0;
  int q = 0;
  int t_resolution = 0;
  std::vector<BScanRow> rows;
  TorsionInterval torsion_interval;

  // Index of the row whose b is closest to the critical radius.
  std::size_t closest_to_critical() const;
};

// For each b: minimum curvature over t (grid scan refined by golden-section
// descent to 1e-12 in t) and minimum |torsion| on the same grid, also refined.
// Rows are independent and are computed on `threads` worker threads (0 picks the
// hardware concurrency). Throws std::invalid_argument for an empty grid, b outside
// (0,1) or t_resolution < 256.
BScanResult scan_over_b(int p, int q, std::span<const double> b_grid, int t_resolution = kDefaultTResolution,
                        unsigned threads = 0);

// `steps` evenly spaced values on [lo, hi]. With `pin`, the grid value nearest
// to *pin is replaced by *pin exactly.
std::vector<double> make_b_grid(double lo, double hi, int steps, std::optional<double> pin = std::nullopt);

}  // namespace toruscurv
