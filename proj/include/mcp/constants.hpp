#pragma once

#include <numbers>
#include <string_view>

namespace mcp::constants {

// CODATA 2018 recommended values, SI units.
inline constexpr std::string_view table_version = "CODATA-2018";

inline constexpr double pi = std::numbers::pi;
inline constexpr double hbar = 1.054571817e-34;         // J s
inline constexpr double k_B = 1.380649e-23;             // J/K
inline constexpr double c = 299792458.0;                // m/s
inline constexpr double mu_0 = 1.25663706212e-6;        // N/A^2
inline constexpr double bohr_magneton = 9.2740100783e-24;  // J/T

}  // namespace mcp::constants
