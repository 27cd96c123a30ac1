#pragma once

#include <cstddef>
#include <optional>

#include "mcp/atom.hpp"
#include "mcp/fresnel.hpp"
#include "mcp/green.hpp"

namespace mcp {

struct EnergyOptions {
  /// Relative accuracy requested for the free energy.
  double tol = 1e-8;
  /// Per Green-tensor call; the effective value is min(green_tol, tol / 100).
  double green_tol = default_green_tol;
  std::size_t max_terms = 1'000'000;
  /// Matsubara terms summed explicitly before the remaining tail is replaced
  /// by its Euler-Maclaurin integral (the low-temperature path). 0 disables.
  std::size_t tail_switch = 10'000;
};

struct FreeEnergyResult {
  double value = 0.0;  // J
  /// Explicit Matsubara terms summed (0 for the zero-temperature integral).
  std::size_t n_terms = 0;
  double est_error = 0.0;  // J
  /// Reference energy used for scaled output, if any.
  std::optional<double> normalization;

  /// Contribution of the half-weighted n = 0 term (or, for the two-level
  /// approximation, of -k_B T beta(0) H_xx(L, 0)).
  double static_term = 0.0;
  /// Contribution of the resonant real-frequency part, if the method has one.
  double resonant_term = 0.0;
  /// True when the series tail beyond EnergyOptions::tail_switch terms was
  /// replaced by its integral.
  bool tail_integrated = false;

  std::optional<double> normalized() const {
    if (!normalization) return std::nullopt;
    return value / *normalization;
  }
};

/// xi_n = 2 pi n k_B T / hbar.
double matsubara_frequency(std::size_t n, double T);

/// Lambda_T = hbar c / (4 pi k_B T).
double thermal_wavelength(double T);

/// Thermal-equilibrium two-level atom:
/// F = -k_B T sum'_n beta^T_ij(i xi_n) H_ji(L, i xi_n), n = 0 at half weight.
FreeEnergyResult free_energy_equilibrium(const TwoLevelAtom& atom, const Surface& surface,
                                         double L, double T, const EnergyOptions& opt = {});

/// T -> 0 limit of the equilibrium series for the ground state:
/// F = -(hbar / 2 pi) int_0^inf dxi beta^g_ij(i xi) H_ji(L, i xi).
FreeEnergyResult free_energy_zero_temperature(const TwoLevelAtom& atom, const Surface& surface,
                                              double L, const EnergyOptions& opt = {});

/// Same integral for an arbitrary prepared state.
FreeEnergyResult free_energy_zero_temperature(const LevelScheme& scheme, const Surface& surface,
                                              double L, const EnergyOptions& opt = {});

/// Free energy of an atom prepared in state a: the nonresonant Matsubara
/// series with beta^a plus the resonant term
/// sum_b n(omega_ba) mu_i^{ab} mu_j^{ba} Re H_ji(L, |omega_ba|).
FreeEnergyResult free_energy_state(const LevelScheme& scheme, const Surface& surface, double L,
                                   double T, const EnergyOptions& opt = {});

/// High-temperature approximation for the two-level ground state:
/// F = -2 k_B T sum_{n>=1} beta^g(i xi_n) H_xx(L, i xi_n)
///     + k_B T beta^g(0) { Re H_xx(L, Omega_m) - H_xx(L, 0) }.
FreeEnergyResult free_energy_ground_2level(const TwoLevelAtom& atom, const Surface& surface,
                                           double L, double T, const EnergyOptions& opt = {});

}  // namespace mcp
