#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "toruscurv/invariants.hpp"
#include "toruscurv/serialization.hpp"
#include "toruscurv/vanishing_locus.hpp"

namespace toruscurv::cli {

namespace {

double mixed_error(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

std::vector<CheckResult> verification_battery(int p, int q, double tolerance) {
  std::vector<CheckResult> checks;
  const CriticalRadius critical = critical_radius(p, q);
  const TorusCurveSpec spec(p, q, TubeRadius::exact(critical.as_rational()));
  const TrigCurve curve = build_trig_curve(spec);
  const double b = critical.float_value;

  {
    const bool ok = critical.as_rational() == Rational(static_cast<std::int64_t>(p) * p,
                                                       static_cast<std::int64_t>(p) * p + static_cast<std::int64_t>(q) * q);
    checks.push_back({"critical_radius", ok, "b* = " + critical.as_rational().to_string()});
  }

  const ZeroCurvatureSet zeros = zero_curvature_points(spec);
  {
    bool ok = zeros.is_critical && static_cast<int>(zeros.points.size()) == q;
    double worst_kappa = 0.0, worst_z = 0.0, worst_radius = 0.0;
    for (double t : zeros.points) {
      const Jet jet = jet_at(curve, t, 2);
      worst_kappa = std::max(worst_kappa, curvature(jet));
      worst_z = std::max(worst_z, std::abs(jet[0].z()));
      worst_radius = std::max(worst_radius, std::abs(jet[0].head<2>().norm() - (1.0 - b)));
    }
    ok = ok && worst_kappa < 1e-9 && worst_z < 1e-12 && worst_radius < 1e-12;
    checks.push_back({"zero_curvature_points", ok,
                      std::to_string(zeros.points.size()) + " points, max kappa " + sci(worst_kappa) + ", max |z| " +
                          sci(worst_z) + ", max radius error " + sci(worst_radius)});
  }

  {
    double worst = 0.0;
    for (double t : zeros.points) {
      const InvariantSample s = invariant_sample(spec, curve, t);
      worst = std::max({worst, std::abs(s.kappa_g), std::abs(s.kappa_n)});
    }
    checks.push_back({"simultaneous_vanishing", !zeros.points.empty() && worst < 1e-10,
                      "max |kappa_g|, |kappa_n| " + sci(worst)});
  }

  {
    const QuadraticRoots roots = normal_quadratic_roots(spec);
    const bool ok = std::any_of(roots.roots.begin(), roots.roots.end(), [](const QuadraticRoot& r) {
      return r.feasible && std::abs(r.cos_qt + 1.0) < 1e-12;
    });
    checks.push_back({"normal_quadratic_root", ok, "cos(qt) = -1 is a feasible root at b*"});
  }

  {
    std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(p * 1000 + q));
    std::uniform_real_distribution<double> b_dist(0.05, 0.95);
    std::uniform_real_distribution<double> t_dist(0.0, kTwoPi);
    double worst_decomposition = 0.0, worst_geodesic = 0.0, worst_normal = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const TorusCurveSpec s(p, q, TubeRadius::approximate(b_dist(rng)));
      const double t = t_dist(rng);
      const Jet jet = jet_at(build_trig_curve(s), t, 2);
      const SurfaceFrame frame = surface_frame_at(s, t);
      const double k = curvature(jet);
      const double kg = geodesic_curvature(jet, frame);
      const double kn = normal_curvature(jet, frame);
      worst_decomposition = std::max(worst_decomposition, std::abs(k * k - kg * kg - kn * kn) / std::max(1.0, k * k));
      worst_geodesic = std::max(worst_geodesic, mixed_error(kg, geodesic_curvature_closed_form(s, t)));
      worst_normal = std::max(worst_normal, mixed_error(kn, normal_curvature_closed_form(s, t)));
    }
    checks.push_back({"decomposition_identity", worst_decomposition <= 1e-9, "max residual " + sci(worst_decomposition)});
    checks.push_back({"closed_forms", worst_geodesic <= 1e-10 && worst_normal <= 1e-10,
                      "kappa_g " + sci(worst_geodesic) + ", kappa_n " + sci(worst_normal)});
  }

  {
    const auto grid = make_b_grid(0.01, 0.99, 101, b);
    const BScanResult scan = scan_over_b(p, q, grid, 1024);
    bool ok = true;
    double floor = std::numeric_limits<double>::infinity();
    for (const auto& row : scan.rows) {
      if (row.b == b) {
        ok = ok && row.min_kappa < 1e-9;
      } else {
        ok = ok && row.min_kappa > 1e-4;
        floor = std::min(floor, row.min_kappa);
      }
    }
    checks.push_back({"uniqueness_scan", ok, "101-point b grid, off-critical floor " + sci(floor)});
  }

  {
    bool ok = true;
    std::string detail;
    for (double bb : {b, 0.5 * b, 0.5 * (1.0 + b)}) {
      const TorusCurveSpec s = bb == b ? spec : TorusCurveSpec(p, q, TubeRadius::approximate(bb));
      const PropositionReport report = verify_proposition(s, 2048, tolerance);
      const bool expected_count = bb == b ? static_cast<int>(report.zero_curvature.size()) == q
                                          : report.zero_curvature.empty();
      ok = ok && report.holds() && expected_count;
      detail += "b=" + format_real(bb).substr(0, 8) + ": " + std::to_string(report.zero_curvature.size()) + "/" +
                std::to_string(report.inflections.size()) + "; ";
    }
    checks.push_back({"proposition_iff", ok, detail + "(zero-curvature/inflection counts)"});
  }

  {
    bool ok = !zeros.points.empty();
    double worst_det = 0.0;
    for (double t : zeros.points) {
      const Jet jet = jet_at(curve, t, 3);
      ok = ok && tangent_space_dim(jet, 2, tolerance).dim == 1 && tangent_space_dim(jet, 3, tolerance).dim == 2;
      worst_det = std::max(worst_det, std::abs(axis_containment_det(jet)));
    }
    ok = ok && worst_det < 1e-9;
    checks.push_back({"case_analysis", ok, "dim T2 = 1, dim T3 = 2, max |axis det| " + sci(worst_det)});
  }

  {
    const auto solutions = simultaneous_system_solve(p, q);
    const bool ok = solutions.size() == 1 && std::abs(solutions[0].b - b) < 1e-9 &&
                    std::abs(solutions[0].cos_qt + 1.0) < 1e-9;
    checks.push_back({"determinant_system", ok, std::to_string(solutions.size()) + " solution(s)"});
  }

  {
    const TorsionInterval interval = nonvanishing_torsion_interval(p, q);
    if (interval.empty) {
      checks.push_back({"torsion_interval", true,
                        "interval (" + interval.lower.to_string() + ", " + interval.upper.to_string() +
                            ") is empty; finding reported, nothing to check"});
    } else {
      const double lo = interval.lower.to_double();
      const double hi = interval.upper.to_double();
      std::vector<double> grid;
      for (int i = 1; i <= 20; ++i) grid.push_back(lo + (hi - lo) * i / 21.0);
      const BScanResult scan = scan_over_b(p, q, grid, 1024);
      bool ok = true;
      double smallest = std::numeric_limits<double>::infinity();
      for (const auto& row : scan.rows) {
        ok = ok && row.min_abs_tau > 0.0 && row.tau_sign_changes == 0;
        smallest = std::min(smallest, row.min_abs_tau);
      }
      checks.push_back({"torsion_interval", ok,
                        "min |tau| " + sci(smallest) + " over 20 b inside (" + interval.lower.to_string() + ", " +
                            interval.upper.to_string() + ")"});
    }
  }
  return checks;
}

}  // namespace toruscurv::cli
