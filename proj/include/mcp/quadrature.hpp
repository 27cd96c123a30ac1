#pragma once

// Globally adaptive 21-point Gauss-Kronrod quadrature for vector-valued
// integrands. Subintervals are kept in a max-heap ordered by their share of
// the error budget, and the worst one is bisected until every component meets
// max(abs_tol, rel_tol * |I|) or the interval budget runs out.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <vector>

namespace mcp::quad {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_intervals = 4000;
};

template <std::size_t N>
struct Result {
  std::array<double, N> value{};
  std::array<double, N> error{};
  /// Integral of |f|, per component.
  std::array<double, N> l1{};
  std::size_t intervals = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 11> kronrod_nodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> kronrod_weights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452126, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss 10-point weights for kronrod_nodes[1], [3], ..., [9].
inline constexpr std::array<double, 5> gauss_weights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <std::size_t N>
struct Segment {
  double a = 0.0;
  double b = 0.0;
  std::array<double, N> value{};
  std::array<double, N> error{};
  std::array<double, N> l1{};
  double priority = 0.0;

  bool operator<(const Segment& other) const { return priority < other.priority; }
};

template <std::size_t N, class F>
Segment<N> gauss_kronrod_21(F& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, N> kronrod{}, gauss{}, absolute{}, asc{};
  std::array<std::array<double, N>, 21> samples{};

  samples[20] = f(center);
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * kronrod_nodes[i];
    samples[2 * i] = f(center - dx);
    samples[2 * i + 1] = f(center + dx);
  }

  for (std::size_t c = 0; c < N; ++c) {
    double k = kronrod_weights[10] * samples[20][c];
    double g = 0.0;
    double abs_sum = kronrod_weights[10] * std::fabs(samples[20][c]);
    for (std::size_t i = 0; i < 10; ++i) {
      const double pair = samples[2 * i][c] + samples[2 * i + 1][c];
      k += kronrod_weights[i] * pair;
      abs_sum += kronrod_weights[i] *
                 (std::fabs(samples[2 * i][c]) + std::fabs(samples[2 * i + 1][c]));
      if (i % 2 == 1) g += gauss_weights[i / 2] * pair;
    }
    const double mean = 0.5 * k;
    double dev = kronrod_weights[10] * std::fabs(samples[20][c] - mean);
    for (std::size_t i = 0; i < 10; ++i) {
      dev += kronrod_weights[i] *
             (std::fabs(samples[2 * i][c] - mean) + std::fabs(samples[2 * i + 1][c] - mean));
    }
    kronrod[c] = k * half;
    gauss[c] = g * half;
    absolute[c] = abs_sum * std::fabs(half);
    asc[c] = dev * std::fabs(half);
  }

  Segment<N> seg;
  seg.a = a;
  seg.b = b;
  for (std::size_t c = 0; c < N; ++c) {
    double err = std::fabs(kronrod[c] - gauss[c]);
    if (asc[c] != 0.0 && err != 0.0) {
      err = asc[c] * std::min(1.0, std::pow(200.0 * err / asc[c], 1.5));
    }
    if (absolute[c] > tiny / (50.0 * eps)) {
      err = std::max(50.0 * eps * absolute[c], err);
    }
    seg.value[c] = kronrod[c];
    seg.error[c] = err;
    seg.l1[c] = absolute[c];
  }
  return seg;
}

}  // namespace detail

/// Integrates f over the union of consecutive intervals given by the sorted
/// breakpoints (at least two). f maps double -> std::array<double, N>.
template <std::size_t N, class F>
Result<N> integrate(F&& f, std::span<const double> breakpoints, const Options& opt) {
  using Seg = detail::Segment<N>;
  Result<N> out;
  if (breakpoints.size() < 2) {
    out.converged = true;
    return out;
  }

  std::vector<Seg> initial;
  initial.reserve(breakpoints.size() - 1);
  std::array<double, N> total{}, total_err{}, scale{};
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    initial.push_back(detail::gauss_kronrod_21<N>(f, breakpoints[i], breakpoints[i + 1]));
    for (std::size_t c = 0; c < N; ++c) {
      total[c] += initial.back().value[c];
      total_err[c] += initial.back().error[c];
      scale[c] += initial.back().l1[c];
    }
  }
  for (auto& s : scale) s = std::max(s, std::numeric_limits<double>::min());

  auto weigh = [&scale](Seg& s) {
    double p = 0.0;
    for (std::size_t c = 0; c < N; ++c) p = std::max(p, s.error[c] / scale[c]);
    s.priority = p;
  };
  auto satisfied = [&opt](const std::array<double, N>& value, const std::array<double, N>& err) {
    for (std::size_t c = 0; c < N; ++c) {
      if (err[c] > std::max(opt.abs_tol, opt.rel_tol * std::fabs(value[c]))) return false;
    }
    return true;
  };

  std::priority_queue<Seg> heap;
  for (auto& s : initial) {
    weigh(s);
    heap.push(s);
  }

  std::size_t evaluations = 21 * initial.size();
  bool stuck = false;
  while (!satisfied(total, total_err) && heap.size() < opt.max_intervals) {
    Seg worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      stuck = true;
      break;
    }
    heap.pop();
    Seg left = detail::gauss_kronrod_21<N>(f, worst.a, mid);
    Seg right = detail::gauss_kronrod_21<N>(f, mid, worst.b);
    evaluations += 42;
    for (std::size_t c = 0; c < N; ++c) {
      total[c] += left.value[c] + right.value[c] - worst.value[c];
      total_err[c] += left.error[c] + right.error[c] - worst.error[c];
    }
    weigh(left);
    weigh(right);
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from scratch so running-update drift does not leak into the result.
  out.intervals = heap.size();
  out.evaluations = evaluations;
  std::vector<Seg> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(), [](const Seg& x, const Seg& y) { return x.a < y.a; });
  for (const auto& s : segs) {
    for (std::size_t c = 0; c < N; ++c) {
      out.value[c] += s.value[c];
      out.error[c] += s.error[c];
      out.l1[c] += s.l1[c];
    }
  }
  out.converged = !stuck && satisfied(out.value, out.error);
  return out;
}

template <std::size_t N, class F>
Result<N> integrate(F&& f, double a, double b, const Options& opt) {
  const std::array<double, 2> bp = {a, b};
  return integrate<N>(std::forward<F>(f), std::span<const double>(bp), opt);
}

/// Integral over [a, inf) through x = a + scale * t / (1 - t), t in [0, 1).
template <std::size_t N, class F>
Result<N> integrate_to_infinity(F&& f, double a, double scale, const Options& opt) {
  auto mapped = [&f, a, scale](double t) {
    const double one_minus = 1.0 - t;
    std::array<double, N> v{};
    if (one_minus <= 0.0) return v;
    const double x = a + scale * t / one_minus;
    const double jac = scale / (one_minus * one_minus);
    v = f(x);
    for (auto& e : v) e *= jac;
    return v;
  };
  return integrate<N>(mapped, 0.0, 1.0, opt);
}

}  // namespace mcp::quad
