#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toruscurv/curve_model.hpp"
#include "toruscurv/projection_analysis.hpp"

namespace toruscurv::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Command { invariants, locate, scan_b, project, verify };
enum class Format { csv, json, svg, text };

struct RunConfig {
  Command command = Command::verify;
  int p = 0;
  int q = 0;
  std::optional<TubeRadius> b;
  int resolution = 0;  // 0 selects the per-command default
  std::string output;  // empty or "-" writes to stdout
  std::optional<Format> format;
  double b_min = 0.01;
  double b_max = 0.99;
  int b_steps = 201;
  bool include_critical = false;
  double tolerance = kDefaultRankTolerance;
};

// Invalid flag combinations and values; reported as a single line with exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fills defaults and checks the config; throws ConfigError.
RunConfig validate(RunConfig config);

int cmd_invariants(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_locate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan_b(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_project(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

// SVG of the planar projection with a circle on every order >= 2 inflection.
std::string render_projection_svg(const TorusCurveSpec& spec, int resolution, double tolerance);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// The checks behind `verify`.
std::vector<CheckResult> verification_battery(int p, int q, double tolerance = kDefaultRankTolerance);

// Parses argv-style arguments (without the program name) and runs the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toruscurv::cli
