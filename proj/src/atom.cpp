#include "mcp/atom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mcp/constants.hpp"
#include "mcp/errors.hpp"

namespace mcp {

using constants::hbar;
using constants::k_B;

TwoLevelAtom::TwoLevelAtom(double Omega_m_, double mu_) : Omega_m(Omega_m_), mu(mu_) {
  if (!(Omega_m > 0.0) || !std::isfinite(Omega_m)) {
    throw DomainError("transition frequency must be positive");
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw DomainError("transition moment must be positive");
  }
}

LevelScheme::LevelScheme(std::vector<Transition> transitions)
    : transitions_(std::move(transitions)) {
  if (transitions_.empty()) throw DomainError("level scheme needs at least one transition");
  for (const auto& t : transitions_) {
    if (t.omega_ba == 0.0 || !std::isfinite(t.omega_ba)) {
      throw DomainError("transition frequency must be finite and nonzero");
    }
    for (const auto& m : t.mu) {
      if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
        throw DomainError("transition moment must be finite");
      }
    }
  }
}

double LevelScheme::min_frequency() const noexcept {
  double w = std::numeric_limits<double>::infinity();
  for (const auto& t : transitions_) w = std::min(w, std::fabs(t.omega_ba));
  return w;
}

LevelScheme ground_scheme(const TwoLevelAtom& atom) {
  const MomentVector m = {std::complex<double>(atom.mu, 0.0),
                          std::complex<double>(0.0, atom.mu), 0.0};
  return LevelScheme({Transition{atom.Omega_m, m}});
}

LevelScheme excited_scheme(const TwoLevelAtom& atom) {
  const MomentVector m = {std::complex<double>(atom.mu, 0.0),
                          std::complex<double>(0.0, -atom.mu), 0.0};
  return LevelScheme({Transition{-atom.Omega_m, m}});
}

Tensor3 polarizability_imag(const LevelScheme& scheme, double xi) {
  if (!(xi >= 0.0)) throw DomainError("polarizability needs xi >= 0");
  Tensor3 beta{};
  for (const auto& t : scheme.transitions()) {
    const double w = t.omega_ba;
    // 2 w / (w^2 + xi^2), arranged to stay finite for xi >> |w|.
    const double lorentz = 2.0 * w / (w * w + xi * xi);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        beta[i][j] += (t.mu[i] * std::conj(t.mu[j])).real() / hbar * lorentz;
      }
    }
  }
  return beta;
}

double thermal_factor(const TwoLevelAtom& atom, double T) {
  if (!(T >= 0.0)) throw DomainError("temperature must be non-negative");
  if (T == 0.0) return 1.0;
  return std::tanh(hbar * atom.Omega_m / (2.0 * k_B * T));
}

Tensor3 polarizability_thermal(const TwoLevelAtom& atom, double T, double xi) {
  const double f = thermal_factor(atom, T);
  Tensor3 beta = polarizability_imag(ground_scheme(atom), xi);
  for (auto& row : beta) {
    for (auto& e : row) e *= f;
  }
  return beta;
}

double photon_number(double omega, double T) {
  if (omega == 0.0) throw DomainError("photon number diverges at omega = 0");
  if (!(T > 0.0)) throw DomainError("photon number needs T > 0");
  const double x = hbar * omega / (k_B * T);
  return 1.0 / std::expm1(x);
}

}  // namespace mcp
