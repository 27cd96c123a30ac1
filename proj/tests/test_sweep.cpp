#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "mcp/config.hpp"
#include "mcp/sweep.hpp"

using namespace mcp;

namespace {

std::string config(const std::string& model, const std::string& state, const std::string& method,
                   const std::string& grid, const std::string& T, const std::string& extra = "") {
  const std::string material =
      model == "drude" ? R"({"model": "drude", "omega_p_rad_s": 8.9e15, "gamma_rad_s": 8.9e13})"
                       : R"({"model": "plasma", "omega_p_rad_s": 8.9e15})";
  return R"({"material": )" + material + R"(, "atom": {"Omega_m_rad_s": 3e9}, "state": ")" + state +
         R"(", "method": ")" + method + R"(", "L_grid": )" + grid + R"(, "T_list_K": )" + T + extra +
         "}";
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string csv(const SweepTable& t, const SweepConfig& cfg) {
  std::ostringstream out;
  write_csv(t, cfg, out);
  return out.str();
}

}  // namespace

TEST_CASE("row count and ordering") {
  auto cfg = parse_config(config("drude", "thermal", "equilibrium_series",
                                 R"({"min_m": 1e-6, "max_m": 1e-5, "points": 100})", "[300, 77]",
                                 R"(, "tol": 1e-4)"));
  const auto t = run_sweep(cfg);
  REQUIRE(t.energy.size() == 200);
  for (std::size_t i = 0; i < t.energy.size(); ++i) {
    CHECK(t.energy[i].T == (i % 2 == 0 ? 300.0 : 77.0));
    if (i >= 2) CHECK(t.energy[i].L > t.energy[i - 2].L);
    CHECK(t.energy[i].status == RowStatus::Ok);
    CHECK(*t.energy[i].est_error <= cfg.tol * std::fabs(*t.energy[i].F));
  }
}

TEST_CASE("self-normalisation") {
  auto cfg = parse_config(config("plasma", "thermal", "zero_T_integral",
                                 R"({"min_m": 1e-6, "max_m": 1e-6, "points": 1})", "[0]",
                                 R"(, "normalize": true)"));
  const auto t = run_sweep(cfg);
  REQUIRE(t.normalization);
  REQUIRE(t.energy.size() == 1);
  CHECK(*t.energy[0].F_normalized == doctest::Approx(1.0).epsilon(1e-12));
  const std::string text = csv(t, cfg);
  CHECK(text.find("# normalization_F_pl_1um_0K_J: ") != std::string::npos);
}

TEST_CASE("normalisation column shares one reference") {
  auto cfg = parse_config(config("drude", "thermal", "equilibrium_series",
                                 R"({"min_m": 1e-8, "max_m": 1e-6, "points": 5})", "[0, 300]",
                                 R"(, "normalize": true)"));
  const auto t = run_sweep(cfg);
  REQUIRE(t.normalization);
  for (const auto& r : t.energy) {
    REQUIRE(r.F);
    CHECK(*r.F_normalized == *r.F / *t.normalization);
    if (r.T == 0.0) CHECK(r.method == Method::ZeroTIntegral);
  }
}

TEST_CASE("CSV layout") {
  auto cfg = parse_config(config("drude", "thermal", "equilibrium_series",
                                 R"({"min_m": 1e-7, "max_m": 1e-6, "points": 2})", "[300]"));
  const auto t = run_sweep(cfg);
  const auto ls = lines(csv(t, cfg));
  std::size_t header = 0;
  while (header < ls.size() && ls[header].rfind("#", 0) == 0) ++header;
  REQUIRE(header + 3 == ls.size());
  CHECK(ls[header] == energy_csv_header);
  bool has_hash = false;
  bool has_constants = false;
  bool has_mu = false;
  for (std::size_t i = 0; i < header; ++i) {
    has_hash |= ls[i].find("config_hash: fnv1a64:") != std::string::npos;
    has_constants |= ls[i].find("CODATA") != std::string::npos;
    has_mu |= ls[i].find("mu_J_T: 9.2740100783000004e-24") != std::string::npos;
  }
  CHECK(has_hash);
  CHECK(has_constants);
  CHECK(has_mu);
  const std::string& row = ls[header + 1];
  // 1e-7 is not representable; 17 significant digits expose the binary value.
  CHECK(row.rfind("9.9999999999999995e-08,3.0000000000000000e+02,thermal,equilibrium_series,drude,", 0) == 0);
  CHECK(row.substr(row.size() - 3) == ",ok");
}

TEST_CASE("failed rows keep their place") {
  auto cfg = parse_config(config("drude", "thermal", "equilibrium_series",
                                 R"({"min_m": 1e-7, "max_m": 1e-6, "points": 2})", "[300]",
                                 R"(, "max_terms": 1, "tail_switch_terms": 0)"));
  const auto t = run_sweep(cfg);
  REQUIRE(t.energy.size() == 2);
  for (const auto& r : t.energy) {
    CHECK(r.status == RowStatus::ConvergenceFailure);
    CHECK_FALSE(r.F);
  }
  const auto ls = lines(csv(t, cfg));
  CHECK(ls.back().find(",drude,,,,,convergence_failure") != std::string::npos);
}

TEST_CASE("empty sweep writes header and comments only") {
  auto cfg = parse_config(config("drude", "thermal", "equilibrium_series",
                                 R"({"min_m": 1e-7, "max_m": 1e-6, "points": 2})", "[]"));
  const auto t = run_sweep(cfg);
  CHECK(t.energy.empty());
  const auto ls = lines(csv(t, cfg));
  REQUIRE_FALSE(ls.empty());
  CHECK(ls.back() == energy_csv_header);
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) CHECK(ls[i][0] == '#');
}

TEST_CASE("output is deterministic across thread counts") {
  const std::string base = config("plasma", "ground", "eq1_full",
                                  R"({"min_m": 1e-8, "max_m": 1e-5, "points": 7})", "[1, 4]");
  auto one = parse_config(base.substr(0, base.size() - 1) + R"(, "threads": 1})");
  auto many = parse_config(base.substr(0, base.size() - 1) + R"(, "threads": 4})");
  const std::string a = csv(run_sweep(one), one);
  CHECK(a == csv(run_sweep(many), many));
  CHECK(a == csv(run_sweep(one), one));
}

TEST_CASE("green and polarizability quantities") {
  auto cfg = parse_config(config("plasma", "thermal", "equilibrium_series",
                                 R"({"min_m": 1e-7, "max_m": 1e-6, "points": 2})", "[300]"));
  const auto g = run_sweep(cfg, Quantity::Green);
  REQUIRE(g.green.size() == 6);
  CHECK(g.green[0].tag == FrequencyTag::Static);
  CHECK(g.green[1].tag == FrequencyTag::Imaginary);
  CHECK(g.green[2].tag == FrequencyTag::Real);
  for (const auto& r : g.green) {
    CHECK(r.status == RowStatus::Ok);
    CHECK(*r.H_xx < 0.0);
  }
  const auto p = run_sweep(cfg, Quantity::Polarizability);
  REQUIRE(p.polarizability.size() == polarizability_rows_per_temperature);
  CHECK(p.polarizability[0].xi == 0.0);
  CHECK(p.polarizability[1].beta_xx < p.polarizability[0].beta_xx);
  CHECK(p.polarizability[3].beta_zz == 0.0);
  const std::string text = csv(p, cfg);
  CHECK(text.find("T_K,state,n,xi_rad_s,beta_xx_J_per_T2") != std::string::npos);
}

TEST_CASE("unwritable output path") {
  auto cfg = parse_config(config("drude", "thermal", "equilibrium_series",
                                 R"({"min_m": 1e-7, "max_m": 1e-6, "points": 1})", "[]"));
  CHECK_THROWS_AS(write_csv(run_sweep(cfg), cfg, std::string("/nonexistent/dir/out.csv")), IoError);
}
