#include "mcp/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "mcp/errors.hpp"
#include "mcp/quadrature.hpp"

namespace mcp {
namespace {

// Sum_{n > N} f(n) = int_N^inf f - f(N)/2 - f'(N)/12 + O(f''').
// f'(N) comes from a central difference; the second difference bounds what
// the truncated expansion leaves out.
SeriesResult euler_maclaurin_tail(const std::function<SeriesTerm(double)>& f, double N,
                                  double f_prev, double f_last, double tol) {
  const SeriesTerm next = f(N + 1.0);
  const double derivative = 0.5 * (next.value - f_prev);
  const double curvature = next.value - 2.0 * f_last + f_prev;

  quad::Options opt;
  opt.rel_tol = tol;
  opt.abs_tol = 0.0;
  opt.max_intervals = 2000;
  auto integrand = [&f](double x) { return std::array<double, 1>{f(x).value}; };
  const auto res = quad::integrate_to_infinity<1>(integrand, N, N, opt);
  if (!res.converged) {
    throw ConvergenceError("series tail integral did not converge", res.error[0]);
  }

  SeriesResult tail;
  tail.sum = res.value[0] - 0.5 * f_last - derivative / 12.0;
  tail.est_error = res.error[0] + std::fabs(curvature) / 12.0 + next.error;
  tail.tail_integrated = true;
  return tail;
}

}  // namespace

SeriesResult sum_series(const std::function<SeriesTerm(double)>& f, std::size_t first,
                        const SeriesOptions& opt) {
  SeriesResult out;
  double sum = 0.0;
  double compensation = 0.0;
  double eval_error = 0.0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  double prev2 = std::numeric_limits<double>::quiet_NaN();
  double bound = std::numeric_limits<double>::infinity();
  std::size_t streak = 0;
  const std::size_t consecutive = std::max<std::size_t>(opt.consecutive, 1);

  for (std::size_t i = 0; i < opt.max_terms; ++i) {
    const double n = static_cast<double>(first + i);
    const SeriesTerm term = f(n);
    // Kahan summation: terms can span many orders of magnitude.
    const double y = term.value - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    eval_error += term.error;
    ++out.terms;

    const double mag = std::fabs(term.value);
    if (i == 0) {
      bound = std::numeric_limits<double>::infinity();
    } else if (mag == 0.0) {
      bound = 0.0;
    } else {
      const double ratio = mag / std::fabs(prev);
      bound = ratio < 1.0 ? mag * ratio / (1.0 - ratio) : std::numeric_limits<double>::infinity();
    }
    streak = (bound <= opt.tol * std::fabs(sum)) ? streak + 1 : 0;
    prev2 = prev;
    prev = term.value;

    if (streak >= consecutive) {
      out.sum = sum;
      out.est_error = bound + eval_error;
      return out;
    }

    if (opt.tail_switch >= 3 && out.terms >= opt.tail_switch) {
      const SeriesResult tail = euler_maclaurin_tail(f, n, prev2, prev, 0.25 * opt.tol);
      out.sum = sum + tail.sum;
      out.est_error = tail.est_error + eval_error;
      out.tail_integrated = true;
      return out;
    }
  }
  throw ConvergenceError("series did not converge within " + std::to_string(opt.max_terms) +
                             " terms",
                         bound);
}

}  // namespace mcp
