#include "toruscurv/serialization.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "toruscurv/invariants.hpp"
#include "toruscurv/vanishing_locus.hpp"

namespace toruscurv {
namespace {

TEST(FormatRealTest, RoundTripsWithSeventeenDigits) {
  for (double v : {0.1, 1.0 / 3.0, 4.0 / 13.0, -2.718281828459045, 1e-300, 6.02214076e23}) {
    const std::string text = format_real(v);
    EXPECT_EQ(std::strtod(text.c_str(), nullptr), v) << text;
  }
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(format_real(std::nan("")), "NaN");
}

TEST(WriteJsonTest, SortsKeysAndFormatsReals) {
  const nlohmann::json value = {{"zeta", 0.1}, {"alpha", 1}, {"mid", {{"y", true}, {"x", nullptr}}}};
  std::ostringstream out;
  write_json(out, value, 0);
  const std::string text = out.str();
  EXPECT_LT(text.find("\"alpha\""), text.find("\"mid\""));
  EXPECT_LT(text.find("\"mid\""), text.find("\"zeta\""));
  EXPECT_LT(text.find("\"x\""), text.find("\"y\""));
  EXPECT_NE(text.find("0.10000000000000001"), std::string::npos);
}

TEST(WriteJsonTest, NonFiniteBecomesNull) {
  std::ostringstream out;
  write_json(out, nlohmann::json{{"v", std::numeric_limits<double>::quiet_NaN()}});
  EXPECT_NE(out.str().find("null"), std::string::npos);
  const auto parsed = nlohmann::json::parse(out.str());
  EXPECT_TRUE(parsed["v"].is_null());
}

TEST(WriteJsonTest, OutputParsesBackToTheSameValues) {
  const TorusCurveSpec spec(2, 3, TubeRadius::exact(Rational(4, 13)));
  std::ostringstream out;
  write_json(out, to_json(zero_curvature_points(spec)));
  const auto parsed = nlohmann::json::parse(out.str());
  EXPECT_EQ(parsed["b"], "4/13");
  EXPECT_EQ(parsed["critical_b"]["exact"], "4/13");
  EXPECT_EQ(parsed["is_critical"], true);
  ASSERT_EQ(parsed["points"].size(), 3u);
  EXPECT_EQ(parsed["points"][1]["t"].get<double>(), kPi);
}

TEST(InvariantsCsvTest, HeaderAndUndefinedTorsion) {
  std::ostringstream out;
  write_invariants_csv_header(out);
  const TorusCurveSpec spec(2, 3, TubeRadius::exact(Rational(4, 13)));
  write_invariants_csv_row(out, invariant_sample(spec, kPi));
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "t,speed,kappa,tau,kappa_g,kappa_n");
  EXPECT_NE(text.find(",NaN,"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(ScanCsvTest, FooterNamesTheCriticalRowAndTheInterval) {
  const std::vector<double> grid{0.2, 4.0 / 13.0, 0.5};
  std::ostringstream out;
  write_scan_csv(out, scan_over_b(2, 3, grid, 256));
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "b,min_kappa,argmin_t_kappa,min_abs_tau,argmin_t_tau");
  EXPECT_NE(text.find("# closest_to_critical,b=0.30769230769230771,critical_b=4/13"), std::string::npos);
  EXPECT_NE(text.find("# torsion_interval,4/13,5/22,empty"), std::string::npos);
}

}  // namespace
}  // namespace toruscurv
