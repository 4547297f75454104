#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toruscurv/invariants.hpp"
#include "toruscurv/serialization.hpp"
#include "toruscurv/vanishing_locus.hpp"

namespace toruscurv::cli {

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::invariants: return "invariants";
    case Command::locate: return "locate";
    case Command::scan_b: return "scan-b";
    case Command::project: return "project";
    case Command::verify: return "verify";
  }
  return "?";
}

const char* format_name(Format f) {
  switch (f) {
    case Format::csv: return "csv";
    case Format::json: return "json";
    case Format::svg: return "svg";
    case Format::text: return "text";
  }
  return "?";
}

TorusCurveSpec spec_of(const RunConfig& config) { return TorusCurveSpec(config.p, config.q, *config.b); }

// Writes through `write` to stdout or to config.output. Returns 2 when the file
// cannot be written.
template <typename Write>
int emit(const RunConfig& config, std::ostream& out, std::ostream& err, Write&& write) {
  if (config.output.empty() || config.output == "-") {
    write(out);
    out.flush();
    return kExitOk;
  }
  std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file '" << config.output << "'\n";
    return kExitUsage;
  }
  write(file);
  file.flush();
  if (!file) {
    err << "error: failed writing output file '" << config.output << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

RunConfig validate(RunConfig config) {
  if (config.p == 0 || config.q == 0) throw ConfigError("p and q must be nonzero integers");
  const bool needs_b = config.command == Command::invariants || config.command == Command::locate ||
                       config.command == Command::project;
  if (needs_b && !config.b) throw ConfigError(std::string(command_name(config.command)) + " requires -b");
  if (config.b && !(config.b->value() > 0.0 && config.b->value() < 1.0)) {
    throw ConfigError("b must satisfy 0 < b < 1, got " + config.b->to_string());
  }
  if (!(config.tolerance > 0.0 && config.tolerance < 1.0)) throw ConfigError("--tolerance must lie in (0,1)");

  Format default_format = Format::text;
  std::vector<Format> allowed;
  int default_resolution = 0;
  int min_resolution = 0;
  switch (config.command) {
    case Command::invariants:
      default_format = Format::csv;
      allowed = {Format::csv, Format::json};
      default_resolution = 1024;
      min_resolution = 2;
      break;
    case Command::locate:
      default_format = Format::json;
      allowed = {Format::json};
      break;
    case Command::scan_b:
      default_format = Format::csv;
      allowed = {Format::csv, Format::json};
      default_resolution = kDefaultTResolution;
      min_resolution = 256;
      if (config.b_steps < 1) throw ConfigError("--b-steps must be >= 1");
      if (!(config.b_min > 0.0 && config.b_max < 1.0 && config.b_min <= config.b_max)) {
        throw ConfigError("scan-b needs 0 < --b-min <= --b-max < 1");
      }
      break;
    case Command::project:
      default_format = Format::svg;
      allowed = {Format::svg};
      default_resolution = 1024;
      min_resolution = 16;
      break;
    case Command::verify:
      allowed = {Format::text};
      break;
  }
  if (!config.format) config.format = default_format;
  if (std::find(allowed.begin(), allowed.end(), *config.format) == allowed.end()) {
    throw ConfigError(std::string("format '") + format_name(*config.format) + "' is not available for " +
                      command_name(config.command));
  }
  if (config.resolution == 0) config.resolution = default_resolution;
  if (config.resolution < min_resolution) {
    throw ConfigError(std::string(command_name(config.command)) + " needs resolution >= " +
                      std::to_string(min_resolution));
  }
  return config;
}

int cmd_invariants(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const TorusCurveSpec spec = spec_of(config);
  const TrigCurve curve = build_trig_curve(spec);
  std::vector<InvariantSample> samples;
  samples.reserve(static_cast<std::size_t>(config.resolution));
  for (int i = 0; i < config.resolution; ++i) {
    samples.push_back(invariant_sample(spec, curve, kTwoPi * i / config.resolution));
  }
  return emit(config, out, err, [&](std::ostream& os) {
    if (*config.format == Format::csv) {
      write_invariants_csv_header(os);
      for (const auto& s : samples) write_invariants_csv_row(os, s);
      return;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : samples) rows.push_back(to_json(s));
    write_json(os, {{"p", spec.p()}, {"q", spec.q()}, {"b", spec.tube().to_string()}, {"samples", rows}});
  });
}

int cmd_locate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const ZeroCurvatureSet set = zero_curvature_points(spec_of(config));
  return emit(config, out, err, [&](std::ostream& os) { write_json(os, to_json(set)); });
}

int cmd_scan_b(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<double> pin;
  if (config.include_critical) pin = critical_radius(std::abs(config.p), std::abs(config.q)).float_value;
  const std::vector<double> grid = make_b_grid(config.b_min, config.b_max, config.b_steps, pin);
  const BScanResult scan = scan_over_b(config.p, config.q, grid, config.resolution);
  return emit(config, out, err, [&](std::ostream& os) {
    if (*config.format == Format::csv) {
      write_scan_csv(os, scan);
    } else {
      write_json(os, to_json(scan));
    }
  });
}

int cmd_project(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string svg = render_projection_svg(spec_of(config), config.resolution, config.tolerance);
  return emit(config, out, err, [&](std::ostream& os) { os << svg; });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto checks = verification_battery(std::abs(config.p), std::abs(config.q), config.tolerance);
  int failed = 0;
  const int rc = emit(config, out, err, [&](std::ostream& os) {
    os << "verify (p,q)=(" << std::abs(config.p) << "," << std::abs(config.q) << ")\n";
    for (const auto& c : checks) {
      os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
      if (!c.passed) ++failed;
    }
    os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
  });
  if (rc != kExitOk) return rc;
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature, torsion and zero-curvature analysis of (p,q) torus curves"};
  app.require_subcommand(1);

  RunConfig config;
  std::string b_text;
  std::string format_text;

  auto add_common = [&](CLI::App* sub, bool with_b) {
    sub->add_option("-p", config.p, "Winding count around the axis")->required();
    sub->add_option("-q", config.q, "Winding count around the tube")->required();
    if (with_b) sub->add_option("-b", b_text, "Tube radius as num/den or decimal");
    sub->add_option("-n,--resolution", config.resolution, "Number of t samples");
    sub->add_option("-o,--output", config.output, "Output path (default stdout)");
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"csv", "json", "svg", "text"}));
    sub->add_option("--tolerance", config.tolerance, "Relative singular-value cutoff for rank decisions");
  };

  auto* invariants = app.add_subcommand("invariants", "Sample kappa, tau, kappa_g, kappa_n over t");
  add_common(invariants, true);
  auto* locate = app.add_subcommand("locate", "Report the zero-curvature points");
  add_common(locate, true);
  auto* scan = app.add_subcommand("scan-b", "Scan minimum curvature and |torsion| over a grid of b");
  add_common(scan, false);
  scan->add_option("--b-min", config.b_min, "Smallest grid b");
  scan->add_option("--b-max", config.b_max, "Largest grid b");
  scan->add_option("--b-steps", config.b_steps, "Number of grid points");
  scan->add_flag("--include-critical", config.include_critical, "Replace the nearest grid b by p^2/(p^2+q^2)");
  auto* project = app.add_subcommand("project", "Write the planar projection as SVG");
  add_common(project, true);
  auto* verify = app.add_subcommand("verify", "Run every consistency check for (p,q)");
  add_common(verify, false);

  std::vector<std::string> storage{"toruscurv"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (invariants->parsed()) config.command = Command::invariants;
  if (locate->parsed()) config.command = Command::locate;
  if (scan->parsed()) config.command = Command::scan_b;
  if (project->parsed()) config.command = Command::project;
  if (verify->parsed()) config.command = Command::verify;

  try {
    if (!b_text.empty()) config.b = TubeRadius::parse(b_text);
    if (format_text == "csv") config.format = Format::csv;
    if (format_text == "json") config.format = Format::json;
    if (format_text == "svg") config.format = Format::svg;
    if (format_text == "text") config.format = Format::text;
    config = validate(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  switch (config.command) {
    case Command::invariants: return cmd_invariants(config, out, err);
    case Command::locate: return cmd_locate(config, out, err);
    case Command::scan_b: return cmd_scan_b(config, out, err);
    case Command::project: return cmd_project(config, out, err);
    case Command::verify: return cmd_verify(config, out, err);
  }
  return kExitUsage;
}

}  // namespace toruscurv::cli
