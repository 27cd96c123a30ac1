#include "mcp/green.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "mcp/constants.hpp"
#include "mcp/errors.hpp"
#include "mcp/quadrature.hpp"

namespace mcp {
namespace {

using cplx = std::complex<double>;
using constants::c;
using constants::pi;

// Dimensionless cutoff: kappa L beyond the lower limit.
constexpr double kCutoff = 30.0;

void check_inputs(double L, double tol) {
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("distance must be positive");
  if (!(tol > 0.0 && tol < 1.0)) throw DomainError("tolerance must lie in (0, 1)");
}

quad::Options options_for(double tol) {
  quad::Options opt;
  opt.rel_tol = tol;
  opt.abs_tol = 0.0;
  opt.max_intervals = 4000;
  return opt;
}

// Length scale (in units of 1/L) on which the metal response changes the
// reflection amplitudes; worth a breakpoint when it falls inside the range.
double response_scale(const Surface& surface, double L, double shift_magnitude) {
  if (surface.kind() != Surface::Kind::Metal) return 0.0;
  return std::sqrt(shift_magnitude) * L;
}

std::vector<double> breakpoints_with(double lo, double hi, double feature) {
  std::vector<double> bp{lo};
  if (feature > lo && feature < hi) {
    // A few points straddling the feature help the first subdivision.
    for (double f : {0.25 * feature, feature, 4.0 * feature}) {
      if (f > bp.back() && f < hi) bp.push_back(f);
    }
  }
  bp.push_back(hi);
  return bp;
}

[[noreturn]] void fail(const char* where, double L, double freq, double err) {
  throw ConvergenceError(std::string(where) + ": quadrature did not converge at L=" +
                             std::to_string(L) + " m, frequency=" + std::to_string(freq) +
                             " rad/s",
                         err);
}

}  // namespace

double green_scale(double L) { return constants::mu_0 / (8.0 * pi * L * L * L); }

GreenDiag green_imag(double L, double xi, const Surface& surface, double tol) {
  check_inputs(L, tol);
  if (!(xi > 0.0)) throw DomainError("green_imag needs xi > 0; use green_static at xi = 0");

  GreenDiag out;
  out.tag = FrequencyTag::Imaginary;
  out.frequency = xi;
  if (surface.kind() == Surface::Kind::Transparent) return out;

  const double a = xi * L / c;
  // exp(-2a) underflows; the exact result is representable as zero.
  if (a > 700.0) return out;
  const double a2 = a * a;
  // H = scale * exp(-2a) * integral over u = kappa L - a of the bracket below.
  auto integrand = [&](double u) {
    const double t = a + u;
    const auto r = reflection_imag(t / L, xi, surface);
    const double damp = std::exp(-2.0 * u);
    return std::array<double, 2>{(t * t * r.s - a2 * r.p) * damp,
                                 2.0 * u * (2.0 * a + u) * r.s * damp};
  };

  double feature = 0.0;
  if (surface.kind() == Surface::Kind::Metal) {
    const auto& m = surface.metal();
    const double wp_c = m.omega_p() / c;
    feature = response_scale(surface, L, wp_c * wp_c * (xi / (xi + m.gamma()))) - a;
  }
  const auto bp = breakpoints_with(0.0, kCutoff, feature);
  const auto res = quad::integrate<2>(integrand, std::span<const double>(bp), options_for(tol));

  const double prefactor = green_scale(L) * std::exp(-2.0 * a);
  out.xx = prefactor * res.value[0];
  out.zz = prefactor * res.value[1];
  out.err_xx = prefactor * res.error[0];
  out.err_zz = prefactor * res.error[1];
  if (!res.converged) fail("green_imag", L, xi, out.est_error());
  return out;
}

GreenDiag green_static(double L, const Surface& surface, double tol) {
  check_inputs(L, tol);
  GreenDiag out;
  out.tag = FrequencyTag::Static;
  out.frequency = 0.0;
  if (!surface.shields_static_fields()) return out;

  auto integrand = [&](double t) {
    return std::array<double, 1>{t * t * static_rs(t / L, surface) * std::exp(-2.0 * t)};
  };
  double feature = 0.0;
  if (surface.kind() == Surface::Kind::Metal) {
    feature = surface.metal().omega_p() / c * L;
  }
  const auto bp = breakpoints_with(0.0, kCutoff, feature);
  const auto res = quad::integrate<1>(integrand, std::span<const double>(bp), options_for(tol));

  const double scale = green_scale(L);
  out.xx = scale * res.value[0];
  out.zz = 2.0 * out.xx;
  out.err_xx = scale * res.error[0];
  out.err_zz = 2.0 * out.err_xx;
  if (!res.converged) fail("green_static", L, 0.0, out.est_error());
  return out;
}

GreenDiag green_real(double L, double omega, const Surface& surface, double tol) {
  check_inputs(L, tol);
  if (!(omega > 0.0)) throw DomainError("green_real needs omega > 0");

  GreenDiag out;
  out.tag = FrequencyTag::Real;
  out.frequency = omega;
  if (surface.kind() == Surface::Kind::Transparent) return out;

  const double b = omega * L / c;
  const double b2 = b * b;

  // Evanescent sector, t = kappa L in [0, inf): real kappa, complex amplitudes.
  auto evanescent = [&](double t) {
    const auto r = reflection_real(cplx(t / L, 0.0), omega, surface);
    const double damp = std::exp(-2.0 * t);
    return std::array<double, 2>{(t * t * r.s + b2 * r.p).real() * damp,
                                 (2.0 * (t * t + b2) * r.s).real() * damp};
  };

  // Propagating sector, s = q L in [0, b] with kappa = -i q.
  auto propagating = [&](double s) {
    const auto r = reflection_real(cplx(0.0, -s / L), omega, surface);
    const cplx phase = std::polar(1.0, 2.0 * s);
    const cplx xx = cplx(0.0, -1.0) * (s * s * r.s - b2 * r.p) * phase;
    const cplx zz = cplx(0.0, 2.0) * ((b - s) * (b + s)) * r.s * phase;
    return std::array<double, 2>{xx.real(), zz.real()};
  };

  double feature = 0.0;
  if (surface.kind() == Surface::Kind::Metal) {
    const auto& m = surface.metal();
    const double wp_c = m.omega_p() / c;
    feature = response_scale(surface, L, wp_c * wp_c * omega / std::hypot(omega, m.gamma()));
  }
  const auto ev_bp = breakpoints_with(0.0, kCutoff, feature);
  const auto ev = quad::integrate<2>(evanescent, std::span<const double>(ev_bp), options_for(tol));

  std::vector<double> pr_bp{0.0};
  if (2.0 * b > pi) {
    constexpr std::size_t kMaxOscillations = 200000;
    const double first = 0.25 * pi;
    const auto count = static_cast<std::size_t>((b - first) / (0.5 * pi)) + 1;
    if (count > kMaxOscillations) fail("green_real (too many oscillations)", L, omega, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
      const double z = first + 0.5 * pi * static_cast<double>(i);
      if (z < b) pr_bp.push_back(z);
    }
  }
  pr_bp.push_back(b);
  quad::Options pr_opt = options_for(tol);
  pr_opt.max_intervals = std::max<std::size_t>(pr_opt.max_intervals, 4 * pr_bp.size());
  // The propagating sector may cancel against the evanescent one; measure
  // its accuracy against the combined magnitude.
  pr_opt.abs_tol = 0.5 * tol * std::min(std::fabs(ev.value[0]), std::fabs(ev.value[1]));
  const auto pr = quad::integrate<2>(propagating, std::span<const double>(pr_bp), pr_opt);

  const double scale = green_scale(L);
  out.xx = scale * (ev.value[0] + pr.value[0]);
  out.zz = scale * (ev.value[1] + pr.value[1]);
  out.err_xx = scale * (ev.error[0] + pr.error[0]);
  out.err_zz = scale * (ev.error[1] + pr.error[1]);
  if (!ev.converged || !pr.converged) fail("green_real", L, omega, out.est_error());
  return out;
}

}  // namespace mcp
