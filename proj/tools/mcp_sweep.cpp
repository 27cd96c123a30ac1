// Distance/temperature sweeps of the magnetic Casimir-Polder free energy,
// Green tensor or polarizability, written as CSV.
//
// Exit codes: 0 success (individual rows may still report failures),
// 2 configuration error, 3 I/O error.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mcp/config.hpp"
#include "mcp/sweep.hpp"

namespace {
constexpr int kConfigError = 2;
constexpr int kIoError = 3;
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnetic Casimir-Polder sweeps (Drude / plasma surfaces)"};

  std::string config_path;
  std::string output_path;
  std::optional<double> tolerance;
  std::string quantity_name = "free_energy";
  const std::map<std::string, mcp::Quantity> quantities = {
      {"free_energy", mcp::Quantity::FreeEnergy},
      {"green", mcp::Quantity::Green},
      {"polarizability", mcp::Quantity::Polarizability}};

  app.add_option("--config", config_path, "JSON sweep configuration")->required();
  app.add_option("--output", output_path, "CSV destination (default: stdout)");
  app.add_option("--tolerance", tolerance, "relative tolerance, overrides the config")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--quantity", quantity_name, "free_energy | green | polarizability")
      ->check(CLI::IsMember({"free_energy", "green", "polarizability"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  mcp::SweepConfig cfg = [&] {
    try {
      return mcp::load_config(config_path);
    } catch (const mcp::IoError& e) {
      std::cerr << "error: " << e.what() << '\n';
      std::exit(kIoError);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      std::exit(kConfigError);
    }
  }();
  if (tolerance) {
    if (!(*tolerance > 0.0 && *tolerance < 1.0)) {
      std::cerr << "error: --tolerance must lie in (0, 1)\n";
      return kConfigError;
    }
    cfg.tol = *tolerance;
  }

  const mcp::SweepTable table = mcp::run_sweep(cfg, quantities.at(quantity_name));

  std::size_t failures = 0;
  for (const auto& row : table.energy) {
    if (row.status != mcp::RowStatus::Ok) {
      ++failures;
      std::cerr << "warning: L=" << row.L << " m, T=" << row.T << " K: " << row.message << '\n';
    }
  }
  if (failures > 0) std::cerr << failures << " of " << table.energy.size() << " points failed\n";

  try {
    if (output_path.empty()) {
      mcp::write_csv(table, cfg, std::cout);
      std::cout.flush();
      if (!std::cout) throw mcp::IoError("write to stdout failed");
    } else {
      mcp::write_csv(table, cfg, output_path);
    }
  } catch (const mcp::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return 0;
}
