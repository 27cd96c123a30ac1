#include "mcp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "mcp/energy.hpp"
#include "mcp/errors.hpp"

namespace mcp {
namespace {

EnergyOptions energy_options(const SweepConfig& cfg) {
  EnergyOptions opt;
  opt.tol = cfg.tol;
  opt.max_terms = cfg.max_terms;
  opt.tail_switch = cfg.tail_switch_terms;
  return opt;
}

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
// written by exactly one worker, so results land in grid order.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

struct GridPoint {
  double L;
  double T;
};

std::vector<GridPoint> grid(const SweepConfig& cfg) {
  std::vector<GridPoint> pts;
  for (double L : cfg.L_grid.values()) {
    for (double T : cfg.T_list) pts.push_back({L, T});
  }
  return pts;
}

}  // namespace

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::FreeEnergy: return "free_energy";
    case Quantity::Green: return "green";
    case Quantity::Polarizability: return "polarizability";
  }
  return "?";
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::ConvergenceFailure: return "convergence_failure";
    case RowStatus::Error: return "error";
  }
  return "?";
}

EnergyRow evaluate_energy(const SweepConfig& cfg, double L, double T) {
  EnergyRow row;
  row.L = L;
  row.T = T;
  row.state = cfg.state;
  row.method = (cfg.state == AtomState::Thermal && T == 0.0) ? Method::ZeroTIntegral : cfg.method;
  row.material = std::string(cfg.material.name());
  const EnergyOptions opt = energy_options(cfg);
  try {
    FreeEnergyResult r;
    switch (row.method) {
      case Method::ZeroTIntegral:
        r = free_energy_zero_temperature(cfg.atom, cfg.material, L, opt);
        break;
      case Method::EquilibriumSeries:
        r = free_energy_equilibrium(cfg.atom, cfg.material, L, T, opt);
        break;
      case Method::Eq1Full: {
        const LevelScheme scheme = cfg.state == AtomState::Excited ? excited_scheme(cfg.atom)
                                                                   : ground_scheme(cfg.atom);
        r = free_energy_state(scheme, cfg.material, L, T, opt);
        break;
      }
      case Method::Eq6Approx:
        r = free_energy_ground_2level(cfg.atom, cfg.material, L, T, opt);
        break;
    }
    row.F = r.value;
    row.n_terms = r.n_terms;
    row.est_error = r.est_error;
    if (r.tail_integrated) row.message = "series tail integrated";
  } catch (const ConvergenceError& e) {
    row.status = RowStatus::ConvergenceFailure;
    row.message = e.what();
  } catch (const std::exception& e) {
    row.status = RowStatus::Error;
    row.message = e.what();
  }
  return row;
}

SweepTable run_sweep(const SweepConfig& cfg, Quantity quantity) {
  SweepTable table;
  table.quantity = quantity;
  const auto pts = grid(cfg);

  switch (quantity) {
    case Quantity::FreeEnergy: {
      if (cfg.normalize) {
        try {
          table.normalization =
              free_energy_zero_temperature(cfg.atom, DielectricModel::plasma(cfg.material.omega_p()),
                                           normalization_distance_m, energy_options(cfg))
                  .value;
        } catch (const std::exception&) {
          table.normalization.reset();
        }
      }
      table.energy.resize(pts.size());
      parallel_for(pts.size(), cfg.threads,
                   [&](std::size_t i) { table.energy[i] = evaluate_energy(cfg, pts[i].L, pts[i].T); });
      if (table.normalization) {
        for (auto& row : table.energy) {
          if (row.F) row.F_normalized = *row.F / *table.normalization;
        }
      }
      break;
    }
    case Quantity::Green: {
      // Static point, first Matsubara frequency (T > 0) and the transition
      // frequency on the real axis, for every grid point.
      constexpr std::size_t per_point = 3;
      table.green.resize(pts.size() * per_point);
      const double tol = std::min(default_green_tol, cfg.tol);
      parallel_for(pts.size(), cfg.threads, [&](std::size_t i) {
        const auto [L, T] = pts[i];
        for (std::size_t k = 0; k < per_point; ++k) {
          GreenRow& row = table.green[i * per_point + k];
          row.L = L;
          row.T = T;
          row.material = std::string(cfg.material.name());
          try {
            GreenDiag h;
            if (k == 0) {
              h = green_static(L, cfg.material, tol);
            } else if (k == 1) {
              row.tag = FrequencyTag::Imaginary;
              if (T == 0.0) {
                row.status = RowStatus::Error;
                row.frequency = 0.0;
                continue;
              }
              h = green_imag(L, matsubara_frequency(1, T), cfg.material, tol);
            } else {
              h = green_real(L, cfg.atom.Omega_m, cfg.material, tol);
            }
            row.tag = h.tag;
            row.frequency = h.frequency;
            row.H_xx = h.xx;
            row.H_zz = h.zz;
            row.est_error = h.est_error();
          } catch (const ConvergenceError&) {
            row.status = RowStatus::ConvergenceFailure;
          } catch (const std::exception&) {
            row.status = RowStatus::Error;
          }
        }
      });
      break;
    }
    case Quantity::Polarizability: {
      const LevelScheme scheme = cfg.state == AtomState::Excited ? excited_scheme(cfg.atom)
                                                                 : ground_scheme(cfg.atom);
      for (double T : cfg.T_list) {
        const std::size_t count = T > 0.0 ? polarizability_rows_per_temperature : 1;
        for (std::size_t n = 0; n < count; ++n) {
          PolarizabilityRow row;
          row.T = T;
          row.state = cfg.state;
          row.n = n;
          row.xi = n == 0 ? 0.0 : matsubara_frequency(n, T);
          const Tensor3 beta = cfg.state == AtomState::Thermal
                                   ? polarizability_thermal(cfg.atom, T, row.xi)
                                   : polarizability_imag(scheme, row.xi);
          row.beta_xx = beta[0][0];
          row.beta_yy = beta[1][1];
          row.beta_zz = beta[2][2];
          table.polarizability.push_back(row);
        }
      }
      break;
    }
  }
  return table;
}

}  // namespace mcp
