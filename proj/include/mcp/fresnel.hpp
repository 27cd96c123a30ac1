#pragma once

#include <complex>
#include <variant>

#include "mcp/material.hpp"

namespace mcp {

struct ImaginaryFrequency {
  double xi;  // rad/s, > 0
};

struct RealFrequency {
  double omega;  // rad/s, > 0
};

using Frequency = std::variant<ImaginaryFrequency, RealFrequency>;

/// Normal wavevector in vacuum, kappa = [k^2 - (omega + i0)^2 / c^2]^(1/2).
///
/// Branch: Re >= 0 always. On the imaginary axis the value is real and
/// >= xi/c. On the real axis it is real inside the evanescent sector
/// (k > omega/c) and equals -i sqrt(omega^2/c^2 - k^2) in the propagating
/// sector, which is the outgoing-wave root.
struct Kappa {
  std::complex<double> value;
};

/// Reflecting half-space seen by the atom. Besides the physical Drude/plasma
/// metals it admits two idealised surrogates used to validate the quadrature:
/// a perfect mirror (r_s = -1, r_p = +1 everywhere) and a transparent
/// surface (eps = 1, no reflection).
class Surface {
 public:
  enum class Kind { Metal, PerfectMirror, Transparent };

  Surface(const DielectricModel& metal)  // NOLINT(google-explicit-constructor)
      : kind_(Kind::Metal), metal_(metal) {}

  static Surface perfect_mirror() { return Surface(Kind::PerfectMirror); }
  static Surface transparent() { return Surface(Kind::Transparent); }

  Kind kind() const noexcept { return kind_; }
  /// Only meaningful for Kind::Metal.
  const DielectricModel& metal() const noexcept { return metal_; }

  /// Whether the static (omega = 0) magnetic Green tensor is nonzero.
  bool shields_static_fields() const noexcept;

 private:
  explicit Surface(Kind kind)
      : kind_(kind), metal_(DielectricModel::plasma(1.0)) {}

  Kind kind_;
  DielectricModel metal_;
};

struct ReflectionPair {
  double s;
  double p;
};

struct ComplexReflectionPair {
  std::complex<double> s;
  std::complex<double> p;
};

Kappa kappa_vacuum(double k, const Frequency& frequency);

std::complex<double> r_s(double k, const Frequency& frequency, const Surface& surface);
std::complex<double> r_p(double k, const Frequency& frequency, const Surface& surface);

/// Both amplitudes at imaginary frequency xi, parametrised by the vacuum
/// kappa (>= xi/c) instead of k. This is the form the Green tensor
/// quadrature uses; it never forms k^2 = kappa^2 - xi^2/c^2 explicitly.
ReflectionPair reflection_imag(double kappa, double xi, const Surface& surface);

/// Both amplitudes at real frequency omega, parametrised by the vacuum
/// kappa (real >= 0 or negative imaginary).
ComplexReflectionPair reflection_real(std::complex<double> kappa, double omega,
                                      const Surface& surface);

/// xi -> 0 limit of r_s at in-plane wavevector k. Zero for surfaces that do
/// not shield static fields; the r_p contribution to the static Green tensor
/// vanishes with xi^2 and has no counterpart here.
double static_rs(double k, const Surface& surface);

}  // namespace mcp
