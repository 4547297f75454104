#include "toruscurv/projection_analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "golden_section.hpp"
#include "toruscurv/invariants.hpp"

namespace toruscurv {

namespace {

template <int Dim>
RankReport rank_of(std::span<const Eigen::Matrix<double, Dim, 1>> rows, double tolerance) {
  if (rows.empty()) throw std::invalid_argument("tangent_space_dim: no derivative rows");
  const auto m = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd mat(m, Dim);
  for (Eigen::Index i = 0; i < m; ++i) mat.row(i) = rows[static_cast<std::size_t>(i)].transpose();
  if (mat.isZero(0.0)) throw std::invalid_argument("tangent_space_dim: all derivative rows are zero");

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat);
  const Eigen::VectorXd& sigma = svd.singularValues();

  RankReport report;
  report.m = static_cast<int>(m);
  report.tolerance_used = tolerance;
  report.singular_values.assign(rows.size(), 0.0);
  for (Eigen::Index i = 0; i < sigma.size(); ++i) report.singular_values[static_cast<std::size_t>(i)] = sigma[i];
  const double cutoff = tolerance * sigma[0];
  report.dim = static_cast<int>(std::count_if(report.singular_values.begin(), report.singular_values.end(),
                                              [cutoff](double s) { return s > cutoff; }));
  return report;
}

void require_rows(int m, int order) {
  if (m < 1 || m > order) {
    throw std::invalid_argument("tangent_space_dim: m = " + std::to_string(m) + " outside [1, " +
                                std::to_string(order) + "]");
  }
}

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace

ProjectedJet project_jet(const Jet& jet) {
  ProjectedJet out;
  out.t = jet.t;
  out.order = jet.order;
  out.derivatives.reserve(jet.derivatives.size());
  for (const Vec3& d : jet.derivatives) out.derivatives.emplace_back(d.x(), d.y());
  return out;
}

RankReport tangent_space_dim(std::span<const Vec3> rows, double tolerance) { return rank_of<3>(rows, tolerance); }

RankReport tangent_space_dim(std::span<const Vec2> rows, double tolerance) { return rank_of<2>(rows, tolerance); }

RankReport tangent_space_dim(const Jet& jet, int m, double tolerance) {
  require_rows(m, jet.order);
  RankReport report = rank_of<3>(std::span(jet.derivatives).subspan(1, static_cast<std::size_t>(m)), tolerance);
  report.t = jet.t;
  return report;
}

RankReport tangent_space_dim(const ProjectedJet& jet, int m, double tolerance) {
  require_rows(m, jet.order);
  RankReport report = rank_of<2>(std::span(jet.derivatives).subspan(1, static_cast<std::size_t>(m)), tolerance);
  report.t = jet.t;
  return report;
}

InflectionReport inflection_order(std::span<const Vec2> derivatives, double t, double tolerance) {
  if (derivatives.size() < 2) throw std::invalid_argument("inflection_order: need at least two derivatives");
  InflectionReport report;
  report.t = t;
  for (std::size_t m = 2; m <= derivatives.size(); ++m) {
    RankReport rank = tangent_space_dim(derivatives.first(m), tolerance);
    rank.t = t;
    const bool spans_plane = rank.dim >= 2;
    report.ranks.push_back(std::move(rank));
    if (spans_plane) {
      report.order = static_cast<int>(m) - 2;
      return report;
    }
  }
  // Rank 1 through m = M only bounds the order from below: k >= M - 1.
  report.saturated = true;
  report.order = static_cast<int>(derivatives.size()) - 1;
  return report;
}

InflectionReport inflection_order(const TorusCurveSpec& spec, double t, int max_order, double tolerance) {
  if (max_order < 0 || max_order > kMaxInflectionOrder) {
    throw std::invalid_argument("inflection_order: max_order must lie in [0, " +
                                std::to_string(kMaxInflectionOrder) + "]");
  }
  const ProjectedJet beta = project_jet(jet_at(build_trig_curve(spec), t, max_order + 2));
  return inflection_order(std::span(beta.derivatives).subspan(1), beta.t, tolerance);
}

double axis_containment_det(const Jet& jet) {
  if (jet.order < 3) throw std::invalid_argument("axis_containment_det needs a jet of order >= 3");
  const Vec3 axis(0.0, 0.0, 1.0);
  return axis.dot(jet[1].cross(jet[3]));
}

DeterminantPair determinant_conditions(int p, int q, double b, double cos_qt, int sin_sign) {
  const TorusCurveSpec spec(p, q, TubeRadius::approximate(b));
  double theta = std::acos(std::clamp(cos_qt, -1.0, 1.0));
  if (sin_sign < 0) theta = kTwoPi - theta;
  const Jet jet = jet_at(build_trig_curve(spec), theta / spec.q(), 3);

  const Vec2 d1 = jet[1].head<2>();
  const Vec2 d2 = jet[2].head<2>();
  const double planar_speed = d1.norm();
  const double speed2 = jet[1].squaredNorm();

  DeterminantPair out;
  out.planar = cross2(d1, d2) / (planar_speed * planar_speed * planar_speed);
  out.spatial = jet[1].dot(jet[2].cross(jet[3])) / (speed2 * speed2 * speed2);
  return out;
}

namespace {

struct SolverContext {
  int p;
  int q;
  int sign;
  Interval b_range;
  Interval c_range;
  double b_step;
  double residual_tolerance;

  DeterminantPair eval(double b, double c) const { return determinant_conditions(p, q, b, c, sign); }

  bool accept(double b, double c) const {
    const DeterminantPair r = eval(b, c);
    return std::abs(r.planar) < residual_tolerance && std::abs(r.spatial) < residual_tolerance;
  }

  // Bisection for a root of one condition along the line c = c_fixed, near b.
  std::optional<double> boundary_root(double b, double c_fixed, bool planar) const {
    auto f = [&](double x) {
      const DeterminantPair r = eval(x, c_fixed);
      return planar ? r.planar : r.spatial;
    };
    for (double width = b_step; width <= 8.0 * b_step; width *= 2.0) {
      double lo = std::max(b_range.lo, b - width);
      double hi = std::min(b_range.hi, b + width);
      double flo = f(lo);
      double fhi = f(hi);
      if (flo == 0.0) return lo;
      if (fhi == 0.0) return hi;
      if ((flo < 0.0) == (fhi < 0.0)) continue;
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    return std::nullopt;
  }

  std::optional<std::array<double, 2>> on_boundary(double b, double c_fixed) const {
    for (bool planar : {true, false}) {
      if (auto root = boundary_root(b, c_fixed, planar); root && accept(*root, c_fixed)) {
        return std::array<double, 2>{*root, c_fixed};
      }
    }
    return std::nullopt;
  }

  std::optional<std::array<double, 2>> newton(double b, double c) const {
    constexpr double kStep = 1e-7;
    for (int iter = 0; iter < 60; ++iter) {
      const DeterminantPair r = eval(b, c);
      if (std::abs(r.planar) < 1e-15 && std::abs(r.spatial) < 1e-15) break;

      // Central differences in the interior, one-sided at the range edges.
      auto partial = [&](bool along_b) {
        const double x = along_b ? b : c;
        const Interval range = along_b ? b_range : c_range;
        const double lo = std::max(range.lo, x - kStep);
        const double hi = std::min(range.hi, x + kStep);
        const DeterminantPair a = along_b ? eval(lo, c) : eval(b, lo);
        const DeterminantPair z = along_b ? eval(hi, c) : eval(b, hi);
        return std::array<double, 2>{(z.planar - a.planar) / (hi - lo), (z.spatial - a.spatial) / (hi - lo)};
      };
      const auto db = partial(true);
      const auto dc = partial(false);
      const double det = db[0] * dc[1] - dc[0] * db[1];
      const double scale = std::abs(db[0] * dc[1]) + std::abs(dc[0] * db[1]);
      if (!(std::abs(det) > 1e-14 * scale)) {
        const double edge = std::abs(c - c_range.lo) < std::abs(c - c_range.hi) ? c_range.lo : c_range.hi;
        return on_boundary(b, edge);
      }
      const double step_b = -(dc[1] * r.planar - dc[0] * r.spatial) / det;
      const double step_c = -(-db[1] * r.planar + db[0] * r.spatial) / det;
      const double next_b = b + step_b;
      const double next_c = c + step_c;
      if (next_c < c_range.lo) return on_boundary(std::clamp(next_b, b_range.lo, b_range.hi), c_range.lo);
      if (next_c > c_range.hi) return on_boundary(std::clamp(next_b, b_range.lo, b_range.hi), c_range.hi);
      if (next_b < b_range.lo || next_b > b_range.hi) return std::nullopt;
      b = next_b;
      c = next_c;
      if (std::abs(step_b) < 1e-15 && std::abs(step_c) < 1e-15) break;
    }
    if (!accept(b, c)) return std::nullopt;
    return std::array<double, 2>{b, c};
  }
};

bool straddles(double a, double b, double c, double d) {
  const double lo = std::min({a, b, c, d});
  const double hi = std::max({a, b, c, d});
  return lo <= 0.0 && hi >= 0.0;
}

}  // namespace

std::vector<SystemSolution> simultaneous_system_solve(int p, int q, Interval b_range, Interval c_range,
                                                      const SystemSolveOptions& options) {
  if (!(b_range.lo > 0.0 && b_range.hi < 1.0 && b_range.lo < b_range.hi)) {
    throw std::invalid_argument("simultaneous_system_solve: b range must lie inside (0,1)");
  }
  if (!(c_range.lo >= -1.0 && c_range.hi <= 1.0 && c_range.lo < c_range.hi)) {
    throw std::invalid_argument("simultaneous_system_solve: c range must lie inside [-1,1]");
  }
  const int nb = options.b_cells;
  const int nc = options.c_cells;
  const double hb = (b_range.hi - b_range.lo) / nb;
  const double hc = (c_range.hi - c_range.lo) / nc;

  std::vector<SystemSolution> solutions;
  auto record = [&](double b, double c, int sign) {
    for (auto& s : solutions) {
      if (std::abs(s.b - b) < 1e-8 && std::abs(s.cos_qt - c) < 1e-8) {
        if (std::find(s.sin_branches.begin(), s.sin_branches.end(), sign) == s.sin_branches.end()) {
          s.sin_branches.push_back(sign);
        }
        return;
      }
    }
    const DeterminantPair r = determinant_conditions(p, q, b, c, sign);
    solutions.push_back({b, c, {sign}, std::abs(r.planar), std::abs(r.spatial)});
  };

  for (int sign : {1, -1}) {
    const SolverContext ctx{p, q, sign, b_range, c_range, hb, options.residual_tolerance};
    std::vector<DeterminantPair> grid(static_cast<std::size_t>((nb + 1) * (nc + 1)));
    auto at = [&](int i, int j) -> DeterminantPair& { return grid[static_cast<std::size_t>(i * (nc + 1) + j)]; };
    for (int i = 0; i <= nb; ++i) {
      for (int j = 0; j <= nc; ++j) at(i, j) = ctx.eval(b_range.lo + hb * i, c_range.lo + hc * j);
    }
    for (int i = 0; i < nb; ++i) {
      for (int j = 0; j < nc; ++j) {
        const auto &a = at(i, j), &b = at(i + 1, j), &c = at(i, j + 1), &d = at(i + 1, j + 1);
        if (!straddles(a.planar, b.planar, c.planar, d.planar)) continue;
        if (!straddles(a.spatial, b.spatial, c.spatial, d.spatial)) continue;
        const double b0 = b_range.lo + hb * (i + 0.5);
        const double c0 = c_range.lo + hc * (j + 0.5);
        if (auto root = ctx.newton(b0, c0)) record((*root)[0], (*root)[1], sign);
      }
    }
  }
  std::sort(solutions.begin(), solutions.end(),
            [](const SystemSolution& x, const SystemSolution& y) { return x.b < y.b; });
  return solutions;
}

std::vector<LocatedInflection> locate_higher_inflections(const TorusCurveSpec& spec, int t_resolution,
                                                         double tolerance) {
  const TrigCurve curve = build_trig_curve(spec);
  // Relative second singular value of the normalized [beta'; beta''; beta'''];
  // zero exactly when dim T_3(beta) = 1.
  auto defect = [&curve](double t) {
    const ProjectedJet beta = project_jet(jet_at(curve, t, 3));
    const RankReport r = tangent_space_dim(beta, 3);
    return r.singular_values[1] / r.singular_values[0];
  };
  std::vector<LocatedInflection> found;
  for (const auto& m : detail::periodic_local_minima(defect, t_resolution)) {
    if (m.value > tolerance) continue;
    InflectionReport report = inflection_order(spec, m.x, kDefaultInflectionOrder, tolerance);
    if (report.order >= 2) found.push_back({m.x, std::move(report)});
  }
  std::sort(found.begin(), found.end(),
            [](const LocatedInflection& a, const LocatedInflection& b) { return a.t < b.t; });
  return found;
}

namespace {

double circular_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

}  // namespace

PropositionReport verify_proposition(const TorusCurveSpec& spec, int t_resolution, double tolerance) {
  constexpr double kMatch = 1e-9;
  PropositionReport report;
  report.zero_curvature = scan_zero_curvature(spec, t_resolution);
  report.inflections = locate_higher_inflections(spec, t_resolution, tolerance);

  auto nearest = [](double t, const auto& set, auto key) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& item : set) best = std::min(best, circular_distance(t, key(item)));
    return best;
  };
  auto as_t = [](double t) { return t; };
  auto inflection_t = [](const LocatedInflection& l) { return l.t; };

  report.zero_curvature_implies_inflection = true;
  for (double t : report.zero_curvature) {
    const double d = nearest(t, report.inflections, inflection_t);
    report.zero_curvature_implies_inflection = report.zero_curvature_implies_inflection && d <= kMatch;
    if (std::isfinite(d)) report.max_pair_distance = std::max(report.max_pair_distance, d);
  }
  report.inflection_implies_zero_curvature = true;
  for (const auto& l : report.inflections) {
    const double d = nearest(l.t, report.zero_curvature, as_t);
    report.inflection_implies_zero_curvature = report.inflection_implies_zero_curvature && d <= kMatch;
    if (std::isfinite(d)) report.max_pair_distance = std::max(report.max_pair_distance, d);
  }
  return report;
}

}  // namespace toruscurv
