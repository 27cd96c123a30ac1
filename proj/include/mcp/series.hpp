#pragma once

#include <cstddef>
#include <functional>

namespace mcp {

struct SeriesTerm {
  double value = 0.0;
  double error = 0.0;  // absolute error of this term's own evaluation
};

struct SeriesOptions {
  double tol = 1e-8;
  std::size_t max_terms = 1'000'000;
  /// After this many explicit terms the remaining tail is replaced by its
  /// Euler-Maclaurin integral. 0 disables the tail and leaves max_terms as
  /// the only limit.
  std::size_t tail_switch = 10'000;
  std::size_t consecutive = 3;
};

struct SeriesResult {
  double sum = 0.0;
  /// Truncation (or Euler-Maclaurin remainder) bound plus the summed
  /// per-term evaluation errors.
  double est_error = 0.0;
  std::size_t terms = 0;
  bool tail_integrated = false;
};

/// Sums f(n) for n = first, first + 1, ... . The summand must accept
/// continuous arguments x >= first when the tail integral is enabled.
///
/// Stops once the geometric tail bound |f(n)| r / (1 - r), r the observed
/// term ratio, falls below tol * |partial sum| on `consecutive` successive
/// terms. Throws ConvergenceError when max_terms is exhausted first.
SeriesResult sum_series(const std::function<SeriesTerm(double)>& f, std::size_t first,
                        const SeriesOptions& opt);

}  // namespace mcp
