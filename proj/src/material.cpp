#include "mcp/material.hpp"

#include <cmath>
#include <string>

#include "mcp/errors.hpp"

namespace mcp {

DielectricModel DielectricModel::drude(double omega_p, double gamma) {
  if (!(omega_p > 0.0) || !std::isfinite(omega_p)) {
    throw DomainError("plasma frequency must be positive and finite");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("dissipation rate must be non-negative and finite");
  }
  return {Kind::Drude, omega_p, gamma};
}

DielectricModel DielectricModel::plasma(double omega_p) {
  if (!(omega_p > 0.0) || !std::isfinite(omega_p)) {
    throw DomainError("plasma frequency must be positive and finite");
  }
  return {Kind::Plasma, omega_p, 0.0};
}

std::string_view DielectricModel::name() const noexcept {
  return kind_ == Kind::Drude ? "drude" : "plasma";
}

double susceptibility_imag(const DielectricModel& model, double xi) {
  if (!(xi > 0.0)) {
    throw DomainError("imaginary frequency must be strictly positive, got " +
                      std::to_string(xi));
  }
  const double wp = model.omega_p();
  return (wp / xi) * (wp / (xi + model.gamma()));
}

double permittivity_imag(const DielectricModel& model, double xi) {
  return 1.0 + susceptibility_imag(model, xi);
}

std::complex<double> susceptibility_real(const DielectricModel& model, double omega) {
  if (!(omega > 0.0)) {
    throw DomainError("real frequency must be strictly positive, got " +
                      std::to_string(omega));
  }
  const double wp = model.omega_p();
  const double g = model.gamma();
  // -wp^2 / [w (w + i g)] = -wp^2 (w - i g) / [w (w^2 + g^2)]
  const double scale = (wp / omega) * (wp / (omega * omega + g * g));
  return {-scale * omega, scale * g};
}

std::complex<double> permittivity_real(const DielectricModel& model, double omega) {
  return 1.0 + susceptibility_real(model, omega);
}

}  // namespace mcp
