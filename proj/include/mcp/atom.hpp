#pragma once

#include <array>
#include <complex>
#include <vector>

namespace mcp {

using Tensor3 = std::array<std::array<double, 3>, 3>;
using MomentVector = std::array<std::complex<double>, 3>;  // J/T

/// Magnetic two-level atom with its static dipole perpendicular to the
/// surface, so the transition moments lie in the surface plane:
/// beta_xx = beta_yy and beta_zz = 0.
struct TwoLevelAtom {
  double Omega_m;  // transition angular frequency, rad/s
  double mu;       // transition moment magnitude, J/T

  /// Throws DomainError unless both parameters are positive and finite.
  TwoLevelAtom(double Omega_m, double mu);
};

/// One virtual transition |a> -> |b>: signed frequency omega_ba and the
/// matrix element mu^{ab}. The product mu_i^{ab} mu_j^{ba} is
/// mu_i conj(mu_j).
struct Transition {
  double omega_ba;
  MomentVector mu;
};

/// All transitions out of one prepared state a.
class LevelScheme {
 public:
  /// Throws DomainError if empty, if any omega_ba is zero, or if a moment is
  /// not finite.
  explicit LevelScheme(std::vector<Transition> transitions);

  const std::vector<Transition>& transitions() const noexcept { return transitions_; }

  /// Smallest |omega_ba|; the frequency scale of the polarizability.
  double min_frequency() const noexcept;

 private:
  std::vector<Transition> transitions_;
};

/// Ground state of a two-level atom: one upward transition with the in-plane
/// circular moment mu (1, i, 0), so |mu_x|^2 = |mu_y|^2 = mu^2.
LevelScheme ground_scheme(const TwoLevelAtom& atom);
/// Excited state: the same transition taken downwards (omega_ba = -Omega_m).
LevelScheme excited_scheme(const TwoLevelAtom& atom);

/// Real (symmetric) part of beta^a_ij(i xi) = sum_b Re[mu_i conj(mu_j)] / hbar
/// * 2 omega_ba / (omega_ba^2 + xi^2). Requires xi >= 0.
Tensor3 polarizability_imag(const LevelScheme& scheme, double xi);

/// tanh(hbar Omega_m / 2 k_B T); exactly 1 at T = 0.
double thermal_factor(const TwoLevelAtom& atom, double T);

/// Thermally averaged two-level tensor, tanh(hbar Omega_m / 2 k_B T) times
/// the ground-state tensor. T = 0 returns the ground-state tensor.
Tensor3 polarizability_thermal(const TwoLevelAtom& atom, double T, double xi);

/// Bose-Einstein occupation 1 / (exp(hbar omega / k_B T) - 1), defined for
/// either sign of omega; n(-w) = -(1 + n(w)).
double photon_number(double omega, double T);

}  // namespace mcp
