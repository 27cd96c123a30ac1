#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <complex>

#include "mcp/constants.hpp"
#include "mcp/fresnel.hpp"
#include "support.hpp"

using namespace mcp;
using namespace mcp::testing;
using constants::c;

namespace {

double rs_imag(double k, double xi, const Surface& s) { return r_s(k, ImaginaryFrequency{xi}, s).real(); }
double rp_imag(double k, double xi, const Surface& s) { return r_p(k, ImaginaryFrequency{xi}, s).real(); }

}  // namespace

TEST_CASE("kappa_vacuum special points") {
  const double xi = 1e14;
  const auto k0 = kappa_vacuum(0.0, ImaginaryFrequency{xi}).value;
  CHECK(k0.real() == doctest::Approx(xi / c).epsilon(1e-15));
  CHECK(k0.imag() == 0.0);

  const double w = 1e14;
  const auto k1 = kappa_vacuum(0.0, RealFrequency{w}).value;
  CHECK(k1.real() == 0.0);
  CHECK(k1.imag() == doctest::Approx(-w / c).epsilon(1e-15));

  CHECK(std::abs(kappa_vacuum(w / c, RealFrequency{w}).value) < 1e-9 * w / c);
}

TEST_CASE("branch continuity across the light cone") {
  const double w = 3e9;
  const double k_cone = w / c;
  for (double d : {1e-3, 1e-6, 1e-9, 1e-12}) {
    const double kb = k_cone * (1.0 - d);
    const double ka = k_cone * (1.0 + d);
    const auto below = kappa_vacuum(kb, RealFrequency{w}).value;
    const auto above = kappa_vacuum(ka, RealFrequency{w}).value;
    CHECK(below.real() == 0.0);
    CHECK(below.imag() < 0.0);
    CHECK(above.imag() == 0.0);
    CHECK(above.real() > 0.0);
    // |kappa| = |k^2 - k_cone^2|^(1/2) in extended precision: no
    // cancellation loss near the cone.
    auto exact = [&](double k) {
      const long double kl = k;
      const long double kc = static_cast<long double>(w) / static_cast<long double>(c);
      return static_cast<double>(std::sqrt(std::fabs((kl - kc) * (kl + kc))));
    };
    CHECK(std::abs(below) == doctest::Approx(exact(kb)).epsilon(1e-6));
    CHECK(std::abs(above) == doctest::Approx(exact(ka)).epsilon(1e-6));
  }
}

TEST_CASE("transparent surface reflects nothing") {
  const Surface vac = Surface::transparent();
  for (double k : {0.0, 1e3, 1e7}) {
    CHECK(std::abs(r_s(k, ImaginaryFrequency{1e13}, vac)) == 0.0);
    CHECK(std::abs(r_p(k, ImaginaryFrequency{1e13}, vac)) == 0.0);
    CHECK(std::abs(r_s(k, RealFrequency{1e13}, vac)) == 0.0);
  }
}

TEST_CASE("infinitely conducting limit") {
  const Surface metal = DielectricModel::plasma(1e30);
  CHECK(rs_imag(1e6, 1e14, metal) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(rp_imag(1e6, 1e14, metal) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("large-k limit of r_p is (eps - 1)/(eps + 1)") {
  // eps(i omega_p) = 2 for the plasma model.
  const double xi = omega_p;
  const double k = 1e6 * xi / c;
  CHECK(rp_imag(k, xi, plasma()) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(std::fabs(rs_imag(k, xi, plasma())) < 1e-12);
}

TEST_CASE("Drude amplitudes against an extended-precision evaluation") {
  using big = boost::multiprecision::cpp_bin_float_50;
  const big xi = 1e14;
  const big k = 1e6;
  const big cc = c;
  const big wp = omega_p;
  const big g = gamma_drude;
  const big eps = 1 + wp * wp / (xi * (xi + g));
  const big k1 = sqrt(k * k + xi * xi / (cc * cc));
  const big k2 = sqrt(k * k + eps * xi * xi / (cc * cc));
  const double rs = static_cast<double>((k1 - k2) / (k1 + k2));
  const double rp = static_cast<double>((eps * k1 - k2) / (eps * k1 + k2));

  CHECK(rs_imag(1e6, 1e14, drude()) == doctest::Approx(rs).epsilon(1e-13));
  CHECK(rp_imag(1e6, 1e14, drude()) == doctest::Approx(rp).epsilon(1e-13));
  CHECK(r_s(1e6, ImaginaryFrequency{1e14}, drude()).imag() == 0.0);
}

TEST_CASE("reflection_imag agrees with the k parametrisation") {
  Gen gen(21);
  for (int i = 0; i < 200; ++i) {
    const double xi = gen.log_uniform(1e9, 1e17);
    const double k = gen.log_uniform(1e2, 1e9);
    const double kappa = std::hypot(k, xi / c);
    const auto pair = reflection_imag(kappa, xi, drude());
    CHECK(pair.s == doctest::Approx(rs_imag(k, xi, drude())).epsilon(1e-10));
    CHECK(pair.p == doctest::Approx(rp_imag(k, xi, drude())).epsilon(1e-10));
  }
}

TEST_CASE("property: imaginary-axis bounds") {
  Gen gen(22);
  for (int i = 0; i < 2000; ++i) {
    const double wp = gen.log_uniform(1e12, 1e17);
    const Surface s = i % 2 == 0 ? Surface(DielectricModel::plasma(wp))
                                 : Surface(DielectricModel::drude(wp, gen.log_uniform(1e-6, 1.0) * wp));
    const double xi = gen.log_uniform(1e6, 1e18);
    const double k = i % 17 == 0 ? 0.0 : gen.log_uniform(1e-2, 1e12);
    const double rs = rs_imag(k, xi, s);
    const double rp = rp_imag(k, xi, s);
    CHECK(rs >= -1.0);
    CHECK(rs <= 0.0);
    CHECK(rp >= 0.0);
    CHECK(rp <= 1.0);
    // Strict bounds hold whenever 1 - |r| ~ 1/eps is representable.
    const Surface::Kind kind = s.kind();
    REQUIRE(kind == Surface::Kind::Metal);
    if (permittivity_imag(s.metal(), xi) < 1e12) {
      CHECK(rs > -1.0);
      CHECK(rp < 1.0);
    }
  }
}

TEST_CASE("property: r_s vanishes as k grows") {
  Gen gen(23);
  for (int i = 0; i < 100; ++i) {
    const double xi = gen.log_uniform(1e9, 1e16);
    double prev = 1.0;
    for (double k = 1e5; k < 1e14; k *= 10.0) {
      const double mag = std::fabs(rs_imag(k, xi, drude()));
      CHECK(mag <= prev);
      prev = mag;
    }
    CHECK(prev < 1e-6);
  }
}

TEST_CASE("property: passivity in the propagating sector") {
  Gen gen(24);
  for (int i = 0; i < 2000; ++i) {
    const double wp = gen.log_uniform(1e12, 1e17);
    const Surface s = DielectricModel::drude(wp, gen.log_uniform(1e-6, 1.0) * wp);
    const double w = gen.log_uniform(1e6, 1e18);
    const double k = gen.uniform(0.0, 1.0) * w / c;
    CHECK(std::abs(r_s(k, RealFrequency{w}, s)) <= 1.0 + 1e-14);
    CHECK(std::abs(r_p(k, RealFrequency{w}, s)) <= 1.0 + 1e-14);
  }
}

TEST_CASE("property: Drude amplitudes converge to plasma values") {
  Gen gen(25);
  for (int i = 0; i < 200; ++i) {
    const double xi = gen.log_uniform(1e12, 1e17);
    const double k = gen.log_uniform(1e3, 1e9);
    const double rs_pl = rs_imag(k, xi, plasma());
    const double rp_pl = rp_imag(k, xi, plasma());
    double prev_s = INFINITY;
    double prev_p = INFINITY;
    for (double g : {1e-2, 1e-4, 1e-6, 1e-8}) {
      const Surface s = DielectricModel::drude(omega_p, g * omega_p);
      const double ds = std::fabs(rs_imag(k, xi, s) - rs_pl);
      const double dp = std::fabs(rp_imag(k, xi, s) - rp_pl);
      CHECK(ds <= prev_s + 1e-15);
      CHECK(dp <= prev_p + 1e-15);
      if (g == 1e-8) {
        // gamma << xi in the last step: the gap closes linearly.
        if (ds > 1e-13) CHECK(prev_s / ds == doctest::Approx(100.0).epsilon(0.03));
        if (dp > 1e-13) CHECK(prev_p / dp == doctest::Approx(100.0).epsilon(0.03));
      }
      prev_s = ds;
      prev_p = dp;
    }
  }
}

TEST_CASE("static_rs") {
  CHECK(static_rs(1e6, drude()) == 0.0);
  const double q = omega_p / c;
  // (k - sqrt(k^2 + q^2)) / (k + sqrt(k^2 + q^2)) at k = q
  CHECK(static_rs(q, plasma()) == doctest::Approx((1.0 - std::sqrt(2.0)) / (1.0 + std::sqrt(2.0))).epsilon(1e-14));
  CHECK(static_rs(1e-6 * q, plasma()) == doctest::Approx(-1.0).epsilon(1e-5));
}
