#include "mcp/energy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "mcp/constants.hpp"
#include "mcp/errors.hpp"
#include "mcp/quadrature.hpp"
#include "mcp/series.hpp"

namespace mcp {
namespace {

using constants::hbar;
using constants::k_B;
using constants::pi;

struct Contracted {
  double value;
  double error;
};

// sum_i beta_ii H_ii for the diagonal Green tensor (H_yy = H_xx).
Contracted contract(const Tensor3& beta, const GreenDiag& h) {
  return {beta[0][0] * h.xx + beta[1][1] * h.yy() + beta[2][2] * h.zz,
          std::fabs(beta[0][0]) * h.err_xx + std::fabs(beta[1][1]) * h.err_xx +
              std::fabs(beta[2][2]) * h.err_zz};
}

void check_point(double L, double T) {
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("distance must be positive");
  if (!(T > 0.0) || !std::isfinite(T)) throw DomainError("temperature must be positive");
}

double effective_green_tol(const EnergyOptions& opt) {
  if (!(opt.tol > 0.0 && opt.tol < 1.0)) throw DomainError("tolerance must lie in (0, 1)");
  return std::min(opt.green_tol, opt.tol / 100.0);
}

SeriesOptions series_options(const EnergyOptions& opt) {
  SeriesOptions s;
  s.tol = 0.25 * opt.tol;
  s.max_terms = opt.max_terms;
  s.tail_switch = opt.tail_switch;
  return s;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

bool meets_tolerance(const FreeEnergyResult& r, const EnergyOptions& opt) {
  if (r.value == 0.0 && r.est_error == 0.0) return true;
  return r.est_error <= opt.tol * std::fabs(r.value);
}

// Runs compute(green_tol) and enforces est_error <= tol |value|. Parts of the
// free energy can cancel (the static and resonant terms of a plasma do so
// almost completely), so a failed check is retried with the Green-tensor
// tolerance tightened by the observed shortfall before giving up.
template <class Compute>
FreeEnergyResult with_refinement(const EnergyOptions& opt, Compute compute) {
  constexpr double kFloor = 1e-14;
  constexpr int kAttempts = 3;
  double gtol = effective_green_tol(opt);
  FreeEnergyResult r = compute(gtol);
  for (int i = 0; i < kAttempts && !meets_tolerance(r, opt) && gtol > kFloor; ++i) {
    const double shortfall = r.est_error / (opt.tol * std::fabs(r.value));
    gtol = std::max(kFloor, gtol / (4.0 * std::min(shortfall, 1e4)));
    r = compute(gtol);
  }
  if (!meets_tolerance(r, opt)) {
    throw ConvergenceError("free energy error estimate " + sci(r.est_error) +
                               " J exceeds tolerance for value " + sci(r.value) + " J",
                           r.est_error);
  }
  return r;
}

// Resonant contribution sum_b n(omega_ba) sum_i |mu_i|^2 Re H_ii(L, |omega_ba|).
Contracted resonant_part(const LevelScheme& scheme, const Surface& surface, double L, double T,
                         double gtol) {
  std::map<double, GreenDiag> cache;
  Contracted total{0.0, 0.0};
  for (const auto& t : scheme.transitions()) {
    const double w = std::fabs(t.omega_ba);
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, green_real(L, w, surface, gtol)).first;
    const GreenDiag& h = it->second;
    const double occupation = photon_number(t.omega_ba, T);
    const double mx = std::norm(t.mu[0]);
    const double my = std::norm(t.mu[1]);
    const double mz = std::norm(t.mu[2]);
    total.value += occupation * (mx * h.xx + my * h.yy() + mz * h.zz);
    total.error += std::fabs(occupation) * ((mx + my) * h.err_xx + mz * h.err_zz);
  }
  return total;
}

// -k_B T sum'_n contract(beta^a(i xi_n), H(L, i xi_n)), scaled by `weight`.
struct NonResonant {
  double static_term = 0.0;
  double static_error = 0.0;
  SeriesResult series;
};

NonResonant nonresonant_series(const LevelScheme& scheme, double weight, const Surface& surface,
                               double L, double T, const EnergyOptions& opt, double gtol) {
  const double kT = k_B * T;
  NonResonant out;
  const auto h0 = green_static(L, surface, gtol);
  const auto s0 = contract(polarizability_imag(scheme, 0.0), h0);
  out.static_term = -0.5 * kT * weight * s0.value;
  out.static_error = 0.5 * kT * std::fabs(weight) * s0.error;

  const double xi1 = matsubara_frequency(1, T);
  auto summand = [&](double n) {
    const double xi = n * xi1;
    const auto h = green_imag(L, xi, surface, gtol);
    const auto s = contract(polarizability_imag(scheme, xi), h);
    return SeriesTerm{weight * s.value, std::fabs(weight) * s.error};
  };
  out.series = sum_series(summand, 1, series_options(opt));
  return out;
}

}  // namespace

double matsubara_frequency(std::size_t n, double T) {
  if (!(T > 0.0)) throw DomainError("Matsubara frequencies need T > 0");
  return 2.0 * pi * static_cast<double>(n) * k_B * T / hbar;
}

double thermal_wavelength(double T) {
  if (!(T > 0.0)) throw DomainError("thermal wavelength needs T > 0");
  return hbar * constants::c / (4.0 * pi * k_B * T);
}

FreeEnergyResult free_energy_equilibrium(const TwoLevelAtom& atom, const Surface& surface,
                                         double L, double T, const EnergyOptions& opt) {
  check_point(L, T);
  const double kT = k_B * T;
  return with_refinement(opt, [&](double gtol) {
    const auto nr = nonresonant_series(ground_scheme(atom), thermal_factor(atom, T), surface, L,
                                       T, opt, gtol);
    FreeEnergyResult r;
    r.static_term = nr.static_term;
    r.value = nr.static_term - kT * nr.series.sum;
    r.est_error = nr.static_error + kT * nr.series.est_error;
    r.n_terms = nr.series.terms;
    r.tail_integrated = nr.series.tail_integrated;
    return r;
  });
}

FreeEnergyResult free_energy_zero_temperature(const LevelScheme& scheme, const Surface& surface,
                                              double L, const EnergyOptions& opt) {
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("distance must be positive");
  const double scale = scheme.min_frequency();
  return with_refinement(opt, [&](double gtol) {
    // xi = scale * tan(theta) flattens the Lorentzian polarizability.
    auto integrand = [&](double theta) {
      const double cosine = std::cos(theta);
      const double xi = scale * std::tan(theta);
      std::array<double, 1> v{0.0};
      if (!(xi > 0.0) || !std::isfinite(xi)) return v;
      const auto s = contract(polarizability_imag(scheme, xi), green_imag(L, xi, surface, gtol));
      v[0] = s.value * scale / (cosine * cosine);
      return v;
    };
    quad::Options qopt;
    qopt.rel_tol = 0.25 * opt.tol;
    qopt.max_intervals = 4000;
    const auto res = quad::integrate<1>(integrand, 0.0, 0.5 * pi, qopt);
    if (!res.converged) {
      throw ConvergenceError("zero-temperature frequency integral did not converge",
                             res.error[0]);
    }
    const double prefactor = hbar / (2.0 * pi);
    FreeEnergyResult r;
    r.value = -prefactor * res.value[0];
    r.est_error = prefactor * (res.error[0] + gtol * res.l1[0]);
    r.n_terms = 0;
    return r;
  });
}

FreeEnergyResult free_energy_zero_temperature(const TwoLevelAtom& atom, const Surface& surface,
                                              double L, const EnergyOptions& opt) {
  return free_energy_zero_temperature(ground_scheme(atom), surface, L, opt);
}

FreeEnergyResult free_energy_state(const LevelScheme& scheme, const Surface& surface, double L,
                                   double T, const EnergyOptions& opt) {
  check_point(L, T);
  const double kT = k_B * T;
  return with_refinement(opt, [&](double gtol) {
    const auto nr = nonresonant_series(scheme, 1.0, surface, L, T, opt, gtol);
    const auto res = resonant_part(scheme, surface, L, T, gtol);
    FreeEnergyResult r;
    r.static_term = nr.static_term;
    r.resonant_term = res.value;
    r.value = nr.static_term - kT * nr.series.sum + res.value;
    r.est_error = nr.static_error + kT * nr.series.est_error + res.error;
    r.n_terms = nr.series.terms;
    r.tail_integrated = nr.series.tail_integrated;
    return r;
  });
}

FreeEnergyResult free_energy_ground_2level(const TwoLevelAtom& atom, const Surface& surface,
                                           double L, double T, const EnergyOptions& opt) {
  check_point(L, T);
  const double kT = k_B * T;
  const LevelScheme ground = ground_scheme(atom);
  const double xi1 = matsubara_frequency(1, T);
  const double beta0 = polarizability_imag(ground, 0.0)[0][0];

  return with_refinement(opt, [&](double gtol) {
    auto summand = [&](double n) {
      const double xi = n * xi1;
      const double beta = polarizability_imag(ground, xi)[0][0];
      const auto h = green_imag(L, xi, surface, gtol);
      return SeriesTerm{beta * h.xx, std::fabs(beta) * h.err_xx};
    };
    const auto series = sum_series(summand, 1, series_options(opt));
    const auto h_res = green_real(L, atom.Omega_m, surface, gtol);
    const auto h_0 = green_static(L, surface, gtol);

    FreeEnergyResult r;
    r.static_term = -kT * beta0 * h_0.xx;
    r.resonant_term = kT * beta0 * h_res.xx;
    r.value = -2.0 * kT * series.sum + r.resonant_term + r.static_term;
    r.est_error = 2.0 * kT * series.est_error + kT * beta0 * (h_res.err_xx + h_0.err_xx);
    r.n_terms = series.terms;
    r.tail_integrated = series.tail_integrated;
    return r;
  });
}

}  // namespace mcp
