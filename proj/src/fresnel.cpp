#include "mcp/fresnel.hpp"

#include <cmath>

#include "mcp/constants.hpp"
#include "mcp/errors.hpp"

namespace mcp {
namespace {

using cplx = std::complex<double>;
using constants::c;

// Root with Re >= 0; on the cut (Re == 0) take Im <= 0.
cplx decaying_root(cplx z) {
  cplx root = std::sqrt(z);
  if (root.real() < 0.0) root = -root;
  if (root.real() == 0.0 && root.imag() > 0.0) root = -root;
  return root;
}

}  // namespace

bool Surface::shields_static_fields() const noexcept {
  switch (kind_) {
    case Kind::Metal:
      return metal_.shields_static_fields();
    case Kind::PerfectMirror:
      return true;
    case Kind::Transparent:
      return false;
  }
  return false;
}

Kappa kappa_vacuum(double k, const Frequency& frequency) {
  if (!(k >= 0.0)) throw DomainError("in-plane wavevector must be non-negative");
  if (const auto* im = std::get_if<ImaginaryFrequency>(&frequency)) {
    return {cplx(std::hypot(k, im->xi / c), 0.0)};
  }
  const double q0 = std::get<RealFrequency>(frequency).omega / c;
  // Difference of squares keeps the result accurate next to the light cone.
  if (k >= q0) return {cplx(std::sqrt((k - q0) * (k + q0)), 0.0)};
  return {cplx(0.0, -std::sqrt((q0 - k) * (q0 + k)))};
}

ReflectionPair reflection_imag(double kappa, double xi, const Surface& surface) {
  switch (surface.kind()) {
    case Surface::Kind::PerfectMirror:
      return {-1.0, 1.0};
    case Surface::Kind::Transparent:
      return {0.0, 0.0};
    case Surface::Kind::Metal:
      break;
  }
  const auto& m = surface.metal();
  const double chi = susceptibility_imag(m, xi);
  // (eps - 1) xi^2 / c^2, formed without the large chi * xi^2 cancellation.
  const double wp_c = m.omega_p() / c;
  const double shift = wp_c * wp_c * (xi / (xi + m.gamma()));
  const double kappa_in = std::sqrt(kappa * kappa + shift);
  const double sum = kappa + kappa_in;
  const double rs = -shift / (sum * sum);
  // Divided through by eps so that eps -> inf gives r_p -> 1 cleanly.
  const double damped = kappa_in / (1.0 + chi);
  const double rp = (kappa - damped) / (kappa + damped);
  return {rs, rp};
}

ComplexReflectionPair reflection_real(cplx kappa, double omega, const Surface& surface) {
  switch (surface.kind()) {
    case Surface::Kind::PerfectMirror:
      return {cplx(-1.0), cplx(1.0)};
    case Surface::Kind::Transparent:
      return {cplx(0.0), cplx(0.0)};
    case Surface::Kind::Metal:
      break;
  }
  const auto& m = surface.metal();
  const cplx chi = susceptibility_real(m, omega);
  // kappa_in^2 - kappa^2 = -(eps - 1) omega^2 / c^2 = wp^2 omega / [c^2 (omega + i gamma)]
  const double wp_c = m.omega_p() / c;
  const cplx shift = wp_c * wp_c * omega / cplx(omega, m.gamma());
  const cplx kappa_in = decaying_root(kappa * kappa + shift);
  const cplx sum = kappa + kappa_in;
  const cplx rs = -shift / (sum * sum);
  const cplx eps = 1.0 + chi;
  if (eps == 0.0) return {rs, cplx(-1.0)};  // omega == omega_p of a plasma
  const cplx damped = kappa_in / eps;
  const cplx rp = (kappa - damped) / (kappa + damped);
  return {rs, rp};
}

std::complex<double> r_s(double k, const Frequency& frequency, const Surface& surface) {
  const Kappa kappa = kappa_vacuum(k, frequency);
  if (const auto* im = std::get_if<ImaginaryFrequency>(&frequency)) {
    return reflection_imag(kappa.value.real(), im->xi, surface).s;
  }
  return reflection_real(kappa.value, std::get<RealFrequency>(frequency).omega, surface).s;
}

std::complex<double> r_p(double k, const Frequency& frequency, const Surface& surface) {
  const Kappa kappa = kappa_vacuum(k, frequency);
  if (const auto* im = std::get_if<ImaginaryFrequency>(&frequency)) {
    return reflection_imag(kappa.value.real(), im->xi, surface).p;
  }
  return reflection_real(kappa.value, std::get<RealFrequency>(frequency).omega, surface).p;
}

double static_rs(double k, const Surface& surface) {
  if (!surface.shields_static_fields()) return 0.0;
  if (surface.kind() == Surface::Kind::PerfectMirror) return -1.0;
  const double wp_c = surface.metal().omega_p() / c;
  const double sum = k + std::hypot(k, wp_c);
  return -(wp_c * wp_c) / (sum * sum);
}

}  // namespace mcp
