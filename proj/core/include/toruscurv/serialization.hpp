#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>

#include "toruscurv/curve_model.hpp"
#include "toruscurv/invariants.hpp"
#include "toruscurv/projection_analysis.hpp"
#include "toruscurv/vanishing_locus.hpp"

namespace toruscurv {

// Real numbers are always written with 17 significant digits; NaN as "NaN".
std::string format_real(double value);

nlohmann::json to_json(const Vec3& v);
nlohmann::json to_json(const Jet& jet);
nlohmann::json to_json(const SurfaceFrame& frame);
nlohmann::json to_json(const InvariantSample& sample);
nlohmann::json to_json(const CriticalRadius& radius);
nlohmann::json to_json(const ZeroCurvatureSet& set);
nlohmann::json to_json(const TorsionInterval& interval);
nlohmann::json to_json(const BScanResult& scan);
nlohmann::json to_json(const RankReport& report);
nlohmann::json to_json(const InflectionReport& report);
nlohmann::json to_json(const SystemSolution& solution);
nlohmann::json to_json(const PropositionReport& report);

// Pretty printer with alphabetical keys and 17-digit reals (NaN and infinities become null).
void write_json(std::ostream& out, const nlohmann::json& value, int indent = 2);

// CSV columns: t,speed,kappa,tau,kappa_g,kappa_n.
void write_invariants_csv_header(std::ostream& out);
void write_invariants_csv_row(std::ostream& out, const InvariantSample& sample);

// CSV columns: b,min_kappa,argmin_t_kappa,min_abs_tau,argmin_t_tau, followed by
// '#'-prefixed footer lines naming the row closest to the critical radius and
// the torsion-interval finding.
void write_scan_csv(std::ostream& out, const BScanResult& scan);

}  // namespace toruscurv
