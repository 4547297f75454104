#pragma once

#include <optional>

#include "toruscurv/curve_model.hpp"

namespace toruscurv {

// |alpha' x alpha''| below this fraction of |alpha'|^2 leaves torsion undefined.
inline constexpr double kTorsionGuard = 1e-9;

enum class Source { definitional, closed_form };

// Which rendering of the closed forms to use. `printed` reproduces the formulas
// as they were originally typeset (unsquared factor in the geodesic numerator,
// missing b in the normal-curvature denominator) and exists only for comparison.
enum class FormulaVariant { corrected, printed };

struct InvariantSample {
  double t = 0.0;
  double speed = 0.0;
  double kappa = 0.0;
  std::optional<double> tau;
  double kappa_g = 0.0;
  double kappa_n = 0.0;
  Source source = Source::definitional;
};

// dt/ds = 1 / |alpha'|.
double speed_factor(const Jet& jet);

// |alpha' x alpha''| / |alpha'|^3. Needs jet.order >= 2.
double curvature(const Jet& jet);

// [alpha', alpha'', alpha'''] / |alpha' x alpha''|^2, or nullopt where the
// curvature vanishes (see kTorsionGuard). Needs jet.order >= 3.
std::optional<double> torsion(const Jet& jet);

// [n, alpha', alpha''] (dt/ds)^3 with n the outward normal of `frame`.
double geodesic_curvature(const Jet& jet, const SurfaceFrame& frame);

// p sin(qt) (p^2 (1 + b cos qt)^2 + 2 q^2 b^2) / |alpha'|^3.
double geodesic_curvature_closed_form(const TorusCurveSpec& spec, double t,
                                      FormulaVariant variant = FormulaVariant::corrected);

// Normal curvature against the inward normal: -n . alpha'' (dt/ds)^2.
double normal_curvature(const Jet& jet, const SurfaceFrame& frame);

// II(alpha', alpha') (dt/ds)^2 with coordinate velocity (p, q):
// ((1 + b cos qt) cos qt p^2 + b q^2) / (p^2 (1 + b cos qt)^2 + q^2 b^2).
double normal_curvature_closed_form(const TorusCurveSpec& spec, double t,
                                    FormulaVariant variant = FormulaVariant::corrected);

InvariantSample invariant_sample(const TorusCurveSpec& spec, double t, Source source = Source::definitional);

// Same as above, reusing an existing trigonometric form of the curve.
InvariantSample invariant_sample(const TorusCurveSpec& spec, const TrigCurve& curve, double t,
                                 Source source = Source::definitional);

}  // namespace toruscurv
