#pragma once

#include <span>
#include <vector>

#include "toruscurv/curve_model.hpp"
#include "toruscurv/vanishing_locus.hpp"

namespace toruscurv {

// Singular values at or below this fraction of the largest one count as zero.
inline constexpr double kDefaultRankTolerance = 1e-8;
inline constexpr int kMaxInflectionOrder = kMaxJetOrder - 2;
inline constexpr int kDefaultInflectionOrder = 4;

// Jet of beta = pi(alpha), the orthogonal projection along (0,0,1).
struct ProjectedJet {
  double t = 0.0;
  int order = 0;
  std::vector<Vec2> derivatives;  // derivatives[0] is the projected position
};

ProjectedJet project_jet(const Jet& jet);

// Dimension of the span of the first m derivatives: the number of singular
// values of the m-row matrix exceeding tolerance_used * sigma_max.
struct RankReport {
  double t = 0.0;
  int m = 0;
  int dim = 0;
  std::vector<double> singular_values;  // m entries, descending, zero-padded past the ambient dimension
  double tolerance_used = kDefaultRankTolerance;
};

// Rank of the given derivative rows (alpha', ..., alpha^(m)). Throws
// std::invalid_argument for an empty list or an all-zero matrix.
RankReport tangent_space_dim(std::span<const Vec3> rows, double tolerance = kDefaultRankTolerance);
RankReport tangent_space_dim(std::span<const Vec2> rows, double tolerance = kDefaultRankTolerance);

// T_m of a jet, using derivatives 1..m. Requires m <= jet.order.
RankReport tangent_space_dim(const Jet& jet, int m, double tolerance = kDefaultRankTolerance);
RankReport tangent_space_dim(const ProjectedJet& jet, int m, double tolerance = kDefaultRankTolerance);

// Order k when dim T_m = 1 for m <= k+1 and dim T_{k+2} >= 2. When every checked
// space has rank 1, `saturated` is set and order is the largest k checked.
struct InflectionReport {
  double t = 0.0;
  int order = 0;
  bool saturated = false;
  std::vector<RankReport> ranks;  // m = 2 .. order + 2
};

// Inflection order of the planar projection of the torus curve at t.
// Throws std::invalid_argument for max_order outside [0, kMaxInflectionOrder].
InflectionReport inflection_order(const TorusCurveSpec& spec, double t, int max_order = kDefaultInflectionOrder,
                                  double tolerance = kDefaultRankTolerance);

// Same classification from an explicit list of planar derivatives beta', beta'', ...
InflectionReport inflection_order(std::span<const Vec2> derivatives, double t,
                                  double tolerance = kDefaultRankTolerance);

// det[(0,0,1); alpha'; alpha''']. Requires jet.order >= 3.
double axis_containment_det(const Jet& jet);

// The two determinant conditions at tube radius b and cos(qt) = c, with
// sin(qt) = sin_sign * sqrt(1 - c^2). Both are divided by a power of the speed,
// which never vanishes, so they are scale free.
struct DeterminantPair {
  double planar = 0.0;   // det(beta', beta'') / |beta'|^3
  double spatial = 0.0;  // det(alpha', alpha'', alpha''') / |alpha'|^6
};

DeterminantPair determinant_conditions(int p, int q, double b, double cos_qt, int sin_sign = 1);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct SystemSolveOptions {
  int b_cells = 240;
  int c_cells = 240;
  double residual_tolerance = 1e-10;
};

struct SystemSolution {
  double b = 0.0;
  double cos_qt = 0.0;
  std::vector<int> sin_branches;  // which signs of sin(qt) produced this solution
  double planar_residual = 0.0;
  double spatial_residual = 0.0;
};

// Common zeros of both determinant conditions over b_range x c_range, by a dense
// grid over both sin(qt) branches followed by Newton refinement. Newton steps
// leaving the c range fall back to bisection along the boundary.
std::vector<SystemSolution> simultaneous_system_solve(int p, int q, Interval b_range = {1e-3, 1.0 - 1e-3},
                                                      Interval c_range = {-1.0, 1.0},
                                                      const SystemSolveOptions& options = {});

// Order >= 2 inflections of the planar projection found by scanning the rank
// defect of T_3(beta) over a t-grid and refining each local minimum.
struct LocatedInflection {
  double t = 0.0;
  InflectionReport report;
};

std::vector<LocatedInflection> locate_higher_inflections(const TorusCurveSpec& spec,
                                                         int t_resolution = kDefaultTResolution,
                                                         double tolerance = kDefaultRankTolerance);

struct PropositionReport {
  std::vector<double> zero_curvature;  // {t : kappa(t) < 1e-9}
  std::vector<LocatedInflection> inflections;
  bool zero_curvature_implies_inflection = false;
  bool inflection_implies_zero_curvature = false;
  double max_pair_distance = 0.0;

  bool holds() const { return zero_curvature_implies_inflection && inflection_implies_zero_curvature; }
};

// Computes both parameter sets independently and matches them within 1e-9 in t.
PropositionReport verify_proposition(const TorusCurveSpec& spec, int t_resolution = kDefaultTResolution,
                                     double tolerance = kDefaultRankTolerance);

}  // namespace toruscurv
