#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcp/atom.hpp"
#include "mcp/material.hpp"

namespace mcp {

/// Malformed or invalid configuration document. The message names the line
/// (for syntax errors) or the offending key (for validation errors).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AtomState { Thermal, Ground, Excited };
enum class Method { EquilibriumSeries, ZeroTIntegral, Eq1Full, Eq6Approx };
enum class Spacing { Log, Linear };

std::string_view to_string(AtomState s);
std::string_view to_string(Method m);
std::string_view to_string(Spacing s);

struct DistanceGrid {
  double min_m = 0.0;
  double max_m = 0.0;
  std::size_t points = 1;
  Spacing spacing = Spacing::Log;

  /// Ascending grid; a single point sits at min_m.
  std::vector<double> values() const;
};

struct SweepConfig {
  SweepConfig(const DielectricModel& material_, const TwoLevelAtom& atom_)
      : material(material_), atom(atom_) {}

  DielectricModel material;
  TwoLevelAtom atom;
  bool mu_defaulted = false;
  AtomState state = AtomState::Thermal;
  Method method = Method::EquilibriumSeries;
  DistanceGrid L_grid;
  std::vector<double> T_list;  // K
  double tol = 1e-8;
  bool normalize = false;
  std::size_t tail_switch_terms = 10'000;
  std::size_t max_terms = 1'000'000;
  unsigned threads = 0;  // 0: one per hardware thread

  /// Effective configuration as compact JSON with sorted keys and all
  /// defaults filled in; hashing this identifies a run.
  std::string canonical_json() const;
};

/// Parses and validates a JSON configuration document:
///
///   {
///     "material": {"model": "drude", "omega_p_rad_s": 8.9e15, "gamma_rad_s": 8.9e13},
///     "atom": {"Omega_m_rad_s": 3e9, "mu_J_T": 9.274e-24},
///     "state": "thermal",                 // thermal | ground | excited
///     "method": "equilibrium_series",     // | zero_T_integral | eq1_full | eq6_approx
///     "L_grid": {"min_m": 1e-8, "max_m": 1e-5, "points": 100, "spacing": "log"},
///     "T_list_K": [300],
///     "tol": 1e-8, "normalize": true,
///     "tail_switch_terms": 10000, "max_terms": 1000000, "threads": 0
///   }
///
/// "mu_J_T", "tol", "normalize", "tail_switch_terms", "max_terms" and
/// "threads" are optional. Unknown keys are rejected.
SweepConfig parse_config(std::string_view text);

SweepConfig load_config(const std::filesystem::path& path);

}  // namespace mcp
