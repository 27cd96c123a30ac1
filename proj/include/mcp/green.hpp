#pragma once

#include <algorithm>

#include "mcp/fresnel.hpp"

namespace mcp {

enum class FrequencyTag { Imaginary, Static, Real };

/// Diagonal of the reflected magnetic Green tensor at one (L, frequency)
/// point, in T^2/J. For a planar surface H_yy = H_xx and the off-diagonal
/// elements vanish. Real-frequency values hold real parts only.
struct GreenDiag {
  double xx = 0.0;
  double zz = 0.0;
  FrequencyTag tag = FrequencyTag::Static;
  double frequency = 0.0;  // xi or omega in rad/s, 0 for the static point
  double err_xx = 0.0;     // absolute quadrature error estimates
  double err_zz = 0.0;

  double yy() const noexcept { return xx; }
  double est_error() const noexcept { return std::max(err_xx, err_zz); }
};

inline constexpr double default_green_tol = 1e-10;

/// H(L, i xi) for xi > 0. Integrates over the vacuum kappa in [xi/c, xi/c +
/// 30/L], past which the integrand is below e^-60 of its value at the lower
/// limit. Throws ConvergenceError if the relative tolerance cannot be met.
GreenDiag green_imag(double L, double xi, const Surface& surface,
                     double tol = default_green_tol);

/// H(L, 0). Identically zero for a dissipative Drude metal, which does not
/// screen static magnetic fields; for a shielding surface H_zz = 2 H_xx.
GreenDiag green_static(double L, const Surface& surface, double tol = default_green_tol);

/// Re H(L, omega) for omega > 0, from the evanescent (k > omega/c) and
/// propagating (k < omega/c) sectors. The propagating integrand oscillates
/// as exp(2 i q L) and is pre-split at the zeros of cos(2 q L).
GreenDiag green_real(double L, double omega, const Surface& surface,
                     double tol = default_green_tol);

/// mu_0 / (8 pi L^3): natural scale of every component above.
double green_scale(double L);

}  // namespace mcp
