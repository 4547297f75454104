#include "toruscurv/serialization.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <ostream>

namespace toruscurv {

std::string format_real(double value) {
  if (std::isnan(value)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

nlohmann::json to_json(const Vec3& v) { return nlohmann::json::array({v.x(), v.y(), v.z()}); }

nlohmann::json to_json(const Jet& jet) {
  nlohmann::json derivatives = nlohmann::json::array();
  for (const Vec3& d : jet.derivatives) derivatives.push_back(to_json(d));
  return {{"t", jet.t}, {"order", jet.order}, {"derivatives", derivatives}};
}

nlohmann::json to_json(const SurfaceFrame& frame) {
  return {{"x_u", to_json(frame.x_u)}, {"x_v", to_json(frame.x_v)}, {"n", to_json(frame.n)}};
}

nlohmann::json to_json(const InvariantSample& sample) {
  return {{"t", sample.t},
          {"speed", sample.speed},
          {"kappa", sample.kappa},
          {"tau", sample.tau ? nlohmann::json(*sample.tau) : nlohmann::json(nullptr)},
          {"kappa_g", sample.kappa_g},
          {"kappa_n", sample.kappa_n},
          {"source", sample.source == Source::definitional ? "definitional" : "closed_form"}};
}

nlohmann::json to_json(const CriticalRadius& radius) {
  return {{"exact", radius.as_rational().to_string()}, {"value", radius.float_value}};
}

nlohmann::json to_json(const ZeroCurvatureSet& set) {
  nlohmann::json points = nlohmann::json::array();
  for (double t : set.points) {
    const Vec3 x = curve_point(set.spec, t);
    points.push_back({{"t", t}, {"x", x.x()}, {"y", x.y()}, {"z", x.z()}});
  }
  return {{"p", set.spec.p()},
          {"q", set.spec.q()},
          {"b", set.spec.tube().to_string()},
          {"b_value", set.spec.b()},
          {"critical_b", to_json(critical_radius(set.spec.p(), set.spec.q()))},
          {"is_critical", set.is_critical},
          {"float_matched", set.float_matched},
          {"coprime", set.spec.coprime()},
          {"points", points}};
}

nlohmann::json to_json(const TorsionInterval& interval) {
  return {{"lower", interval.lower.to_string()}, {"upper", interval.upper.to_string()}, {"empty", interval.empty}};
}

nlohmann::json to_json(const BScanResult& scan) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : scan.rows) {
    rows.push_back({{"b", r.b},
                    {"min_kappa", r.min_kappa},
                    {"argmin_t_kappa", r.argmin_t_kappa},
                    {"min_abs_tau", r.min_abs_tau},
                    {"argmin_t_tau", r.argmin_t_tau},
                    {"tau_sign_changes", r.tau_sign_changes}});
  }
  return {{"p", scan.p},
          {"q", scan.q},
          {"t_resolution", scan.t_resolution},
          {"rows", rows},
          {"closest_to_critical", scan.rows.empty() ? -1 : static_cast<int>(scan.closest_to_critical())},
          {"torsion_interval", to_json(scan.torsion_interval)}};
}

nlohmann::json to_json(const RankReport& report) {
  return {{"t", report.t},
          {"m", report.m},
          {"dim", report.dim},
          {"singular_values", report.singular_values},
          {"tolerance_used", report.tolerance_used}};
}

nlohmann::json to_json(const InflectionReport& report) {
  nlohmann::json ranks = nlohmann::json::array();
  for (const auto& r : report.ranks) ranks.push_back(to_json(r));
  return {{"t", report.t}, {"order", report.order}, {"saturated", report.saturated}, {"ranks", ranks}};
}

nlohmann::json to_json(const SystemSolution& solution) {
  return {{"b", solution.b},
          {"cos_qt", solution.cos_qt},
          {"sin_branches", solution.sin_branches},
          {"planar_residual", solution.planar_residual},
          {"spatial_residual", solution.spatial_residual}};
}

nlohmann::json to_json(const PropositionReport& report) {
  nlohmann::json inflections = nlohmann::json::array();
  for (const auto& l : report.inflections) inflections.push_back(to_json(l.report));
  return {{"zero_curvature", report.zero_curvature},
          {"inflections", inflections},
          {"zero_curvature_implies_inflection", report.zero_curvature_implies_inflection},
          {"inflection_implies_zero_curvature", report.inflection_implies_zero_curvature},
          {"max_pair_distance", report.max_pair_distance},
          {"holds", report.holds()}};
}

namespace {

void write_string(std::ostream& out, const std::string& s) {
  // nlohmann's own escaping for strings.
  out << nlohmann::json(s).dump();
}

void write_value(std::ostream& out, const nlohmann::json& v, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        write_string(out, key);
        out << ": ";
        write_value(out, item, indent, depth + 1);
      }
      out << "\n" << close_pad << "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(v.begin(), v.end(), [](const auto& e) { return e.is_structured(); });
      out << "[";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out << (flat ? ", " : ",");
        if (!flat) out << "\n" << pad;
        first = false;
        write_value(out, item, indent, depth + 1);
      }
      if (!flat) out << "\n" << close_pad;
      out << "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double d = v.get<double>();
      if (std::isfinite(d)) {
        out << format_real(d);
      } else {
        out << "null";
      }
      return;
    }
    case nlohmann::json::value_t::string:
      write_string(out, v.get<std::string>());
      return;
    default:
      out << v.dump();
      return;
  }
}

}  // namespace

void write_json(std::ostream& out, const nlohmann::json& value, int indent) {
  write_value(out, value, indent, 0);
  out << "\n";
}

void write_invariants_csv_header(std::ostream& out) { out << "t,speed,kappa,tau,kappa_g,kappa_n\n"; }

void write_invariants_csv_row(std::ostream& out, const InvariantSample& s) {
  out << format_real(s.t) << ',' << format_real(s.speed) << ',' << format_real(s.kappa) << ','
      << (s.tau ? format_real(*s.tau) : std::string("NaN")) << ',' << format_real(s.kappa_g) << ','
      << format_real(s.kappa_n) << '\n';
}

void write_scan_csv(std::ostream& out, const BScanResult& scan) {
  out << "b,min_kappa,argmin_t_kappa,min_abs_tau,argmin_t_tau\n";
  for (const auto& r : scan.rows) {
    out << format_real(r.b) << ',' << format_real(r.min_kappa) << ',' << format_real(r.argmin_t_kappa) << ','
        << format_real(r.min_abs_tau) << ',' << format_real(r.argmin_t_tau) << '\n';
  }
  const CriticalRadius critical = critical_radius(scan.p, scan.q);
  if (!scan.rows.empty()) {
    const auto& closest = scan.rows[scan.closest_to_critical()];
    out << "# closest_to_critical,b=" << format_real(closest.b) << ",critical_b=" << critical.as_rational().to_string()
        << ",min_kappa=" << format_real(closest.min_kappa) << '\n';
  }
  const auto& interval = scan.torsion_interval;
  out << "# torsion_interval," << interval.lower.to_string() << ',' << interval.upper.to_string() << ','
      << (interval.empty ? "empty" : "nonempty") << '\n';
}

}  // namespace toruscurv
