#pragma once

#include <complex>
#include <string_view>

namespace mcp {

/// Local dielectric response of the surface: Drude metal or its
/// dissipationless plasma limit. Frequencies in rad/s.
class DielectricModel {
 public:
  enum class Kind { Drude, Plasma };

  /// Throws DomainError unless omega_p > 0 and gamma >= 0.
  static DielectricModel drude(double omega_p, double gamma);
  static DielectricModel plasma(double omega_p);

  Kind kind() const noexcept { return kind_; }
  double omega_p() const noexcept { return omega_p_; }
  /// Always 0 for the plasma model.
  double gamma() const noexcept { return gamma_; }

  /// True when the surface expels static magnetic fields (gamma == 0).
  bool shields_static_fields() const noexcept { return gamma_ == 0.0; }

  std::string_view name() const noexcept;

 private:
  DielectricModel(Kind kind, double omega_p, double gamma)
      : kind_(kind), omega_p_(omega_p), gamma_(gamma) {}

  Kind kind_;
  double omega_p_;
  double gamma_;
};

/// eps(i xi) - 1 = omega_p^2 / [xi (xi + gamma)]. Requires xi > 0.
double susceptibility_imag(const DielectricModel& model, double xi);

/// eps(i xi) on the imaginary axis; real, > 1 and decreasing in xi.
double permittivity_imag(const DielectricModel& model, double xi);

/// eps(omega) - 1 = -omega_p^2 / [omega (omega + i gamma)]. Requires omega > 0.
std::complex<double> susceptibility_real(const DielectricModel& model, double omega);

/// eps(omega) on the real axis.
std::complex<double> permittivity_real(const DielectricModel& model, double omega);

}  // namespace mcp
