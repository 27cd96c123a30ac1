#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "mcp/constants.hpp"
#include "mcp/material.hpp"

namespace mcp::testing {

// Parameters of the gold-like metal and the magnetic transition used
// throughout the reference configs.
inline constexpr double omega_p = 8.9e15;
inline constexpr double gamma_drude = 8.9e13;
inline constexpr double Omega_m = 3e9;

inline DielectricModel drude() { return DielectricModel::drude(omega_p, gamma_drude); }
inline DielectricModel plasma() { return DielectricModel::plasma(omega_p); }

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // Log-uniform on [lo, hi], both > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mcp::testing
