#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mcp/config.hpp"
#include "mcp/green.hpp"

namespace mcp {

enum class Quantity { FreeEnergy, Green, Polarizability };

std::string_view to_string(Quantity q);

enum class RowStatus { Ok, ConvergenceFailure, Error };

std::string_view to_string(RowStatus s);

struct EnergyRow {
  double L = 0.0;
  double T = 0.0;
  AtomState state = AtomState::Thermal;
  Method method = Method::EquilibriumSeries;
  std::string material;
  std::optional<double> F;
  std::optional<double> F_normalized;
  std::size_t n_terms = 0;
  std::optional<double> est_error;
  RowStatus status = RowStatus::Ok;
  std::string message;  // failure detail, not written to the CSV body
};

struct GreenRow {
  double L = 0.0;
  double T = 0.0;
  std::string material;
  FrequencyTag tag = FrequencyTag::Static;
  double frequency = 0.0;
  std::optional<double> H_xx;
  std::optional<double> H_zz;
  std::optional<double> est_error;
  RowStatus status = RowStatus::Ok;
};

struct PolarizabilityRow {
  double T = 0.0;
  AtomState state = AtomState::Thermal;
  std::size_t n = 0;
  double xi = 0.0;
  double beta_xx = 0.0;
  double beta_yy = 0.0;
  double beta_zz = 0.0;
};

/// Rows of one sweep, L outer (ascending) and T inner (as listed).
struct SweepTable {
  Quantity quantity = Quantity::FreeEnergy;
  std::vector<EnergyRow> energy;
  std::vector<GreenRow> green;
  std::vector<PolarizabilityRow> polarizability;
  /// F_pl(1 um, 0 K) for the configured atom and plasma frequency, when
  /// normalisation was requested and succeeded.
  std::optional<double> normalization;
};

/// Number of Matsubara indices (n = 0, 1, ...) listed per temperature by the
/// polarizability quantity.
inline constexpr std::size_t polarizability_rows_per_temperature = 10;

/// Reference point for normalised output.
inline constexpr double normalization_distance_m = 1e-6;

/// Evaluates every grid point. Points are independent and may run on several
/// threads; a failing point is recorded in its row and never aborts the sweep.
SweepTable run_sweep(const SweepConfig& cfg, Quantity quantity = Quantity::FreeEnergy);

/// Computes one free-energy row.
EnergyRow evaluate_energy(const SweepConfig& cfg, double L, double T);

/// FNV-1a 64-bit hash, hex encoded.
std::string fnv1a_hex(std::string_view data);

/// Header line of the free-energy CSV.
inline constexpr std::string_view energy_csv_header =
    "L_m,T_K,state,method,material,F_J,F_normalized,n_terms,est_error_J,status";

/// Writes '#' metadata comments, the header and one line per row. Floating
/// fields use scientific notation with 17 significant digits.
void write_csv(const SweepTable& table, const SweepConfig& cfg, std::ostream& out);

/// Same, to a file. Throws IoError if the file cannot be written.
void write_csv(const SweepTable& table, const SweepConfig& cfg, const std::string& path);

}  // namespace mcp
