#include "kratzer/errors.hpp"
#include "kratzer/wavefunction.hpp"
#include "catch_amalgamated.hpp"
#include <cmath>
#include <random>

using namespace kratzer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

//! Explicit sum  sum_k (-1)^k binom(n+a, n-k) x^k / k!
double laguerre_series(int n, double a, double x) {
  double sum = 0.0;
  double x_pow_over_fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    double binom = 1.0;
    for (int j = 1; j <= n - k; ++j)
      binom *= (a + k + j) / j;
    const double term = binom * x_pow_over_fact;
    sum += (k % 2 ? -term : term);
    x_pow_over_fact *= x / (k + 1);
  }
  return sum;
}

//! Direct product formula, only usable while nothing overflows.
double naive_radial(int n, double beta, double xi, double r) {
  const double norm2 = std::pow(xi, 2 * beta + 3) / 2.0 * std::tgamma(n + 1.0) /
                       ((n + beta + 1.0) * std::tgamma(n + 2 * beta + 2.0));
  return std::sqrt(norm2) * std::exp(-xi * r / 2) * std::pow(r, beta) *
         laguerre_series(n, 2 * beta + 1, xi * r);
}

//! Composite Simpson on [0, r_max].
template <class F> double simpson(F f, double r_max, int intervals) {
  const double h = r_max / intervals;
  double s = f(0.0) + f(r_max);
  for (int i = 1; i < intervals; ++i)
    s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

const PhysicalConstants k{};

SpectralContext co_context(int n, int ell) {
  const auto m = builtin_molecules().at(0);
  return spectral_context(kratzer_params(m), mu_energy(m, k), n, ell, k);
}

} // namespace

TEST_CASE("Laguerre low orders", "[laguerre]") {
  for (double a : {0.0, 0.5, 3.0, 425.0})
    for (double x : {0.0, 0.3, 2.0, 17.5}) {
      CHECK(laguerre_value(0, a, x) == 1.0);
      CHECK_THAT(laguerre_value(1, a, x), WithinRel(1.0 + a - x, 1e-15));
      CHECK(laguerre(0, a, x).derivative_value == 0.0);
      CHECK_THAT(laguerre(1, a, x).derivative_value, WithinRel(-1.0, 1e-12));
    }
}

TEST_CASE("Laguerre against explicit series", "[laguerre]") {
  CHECK_THAT(laguerre_value(4, 2.5, 1.3),
             WithinRel(laguerre_series(4, 2.5, 1.3), 1e-13));
  for (int n = 0; n <= 8; ++n)
    for (double a : {0.0, 1.5, 5.0, 41.0})
      for (double x : {0.0, 0.7, 3.1, 12.0})
        CHECK_THAT(laguerre_value(n, a, x),
                   WithinAbs(laguerre_series(n, a, x),
                             1e-12 * std::max(1.0, std::abs(
                                                       laguerre_series(n, a, x)))));
}

TEST_CASE("Laguerre derivative at the origin", "[laguerre]") {
  // -binom(n+a, n-1)
  CHECK_THAT(laguerre(3, 2.0, 0.0).derivative_value, WithinRel(-10.0, 1e-14));
  CHECK_THAT(laguerre(2, 0.5, 0.0).derivative_value, WithinRel(-2.5, 1e-14));
}

TEST_CASE("Laguerre derivative recurrences agree", "[laguerre][property]") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> pick_n(1, 10);
  std::uniform_real_distribution<double> pick_a(-0.9, 500.0);
  std::uniform_real_distribution<double> pick_x(0.0, 50.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = pick_n(rng);
    const double a = pick_a(rng);
    const double x = pick_x(rng);
    const double via_shift = -laguerre_value(n - 1, a + 1, x);
    const double via_recurrence = laguerre(n, a, x).derivative_value;
    // Scale by the magnitude of the terms that cancel in x L' = n L_n - ...
    const double scale = std::max(
        {std::abs(via_shift), std::abs((n + a) * laguerre_value(n - 1, a, x)) /
                                  std::max(x, 1e-300) * 1e-4,
         1e-300});
    INFO("n=" << n << " a=" << a << " x=" << x);
    CHECK(std::abs(via_shift - via_recurrence) <= 1e-9 * scale);
  }
}

TEST_CASE("Laguerre higher derivatives", "[laguerre]") {
  const int n = 5;
  const double a = 3.5, x = 2.2, h = 1e-4;
  const auto d = laguerre_derivatives(n, a, x, 4);
  CHECK(d[0] == laguerre_value(n, a, x));
  const auto f = [&](double t) { return laguerre_value(n, a, t); };
  CHECK_THAT(d[1], WithinRel((f(x + h) - f(x - h)) / (2 * h), 1e-7));
  CHECK_THAT(d[2],
             WithinRel((f(x + h) - 2 * f(x) + f(x - h)) / (h * h), 1e-5));
  CHECK_THAT(d[3], WithinRel(laguerre_value(n - 3, a + 3, x) * -1.0, 1e-14));
  CHECK_THAT(d[4], WithinRel(laguerre_value(n - 4, a + 4, x), 1e-14));
  CHECK(laguerre_derivatives(2, a, x, 4)[3] == 0.0);
}

TEST_CASE("Laguerre domain", "[laguerre]") {
  CHECK_THROWS_AS(laguerre(-1, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, 1.0, -0.1), DomainError);
  CHECK_THROWS_AS(laguerre_derivatives(2, 1.0, 1.0, 5), DomainError);
}

TEST_CASE("log normalisation", "[wavefunction]") {
  CHECK_THAT(log_normalization(0, 0.0, 2.0), WithinAbs(0.5 * std::log(4.0), 1e-15));
  CHECK_THROWS_AS(log_normalization(0, 0.0, 0.0), DomainError);

  // Direct Gamma evaluation overflows where the log form does not.
  CHECK(std::isinf(std::tgamma(3 + 2 * 212.0 + 2)));
  const double ln = log_normalization(3, 212.0, 375.0);
  CHECK(std::isfinite(ln));
  const double expected =
      0.5 * ((2 * 212.0 + 3) * std::log(375.0) - std::log(2.0) +
             std::lgamma(4.0) - std::log(3 + 212.0 + 1) -
             std::lgamma(3 + 2 * 212.0 + 2));
  CHECK_THAT(ln, WithinRel(expected, 1e-14));
}

TEST_CASE("radial function at the origin", "[wavefunction]") {
  CHECK(eval_radial(make_radial(2, 1, 1.5, 1.0), 0.0) == 0.0);
  CHECK(eval_radial(make_radial(co_context(0, 0)), 0.0) == 0.0);
  // beta = 0: R(0) = N L_n^1(0) = N (n+1)
  const auto s = make_radial(1, 0, 0.0, 2.0);
  CHECK_THAT(eval_radial(s, 0.0), WithinRel(std::exp(s.log_norm) * 2.0, 1e-14));
  CHECK_THROWS_AS(eval_radial_derivative(s, 0.0), DomainError);
}

TEST_CASE("log-space evaluation matches the naive product", "[wavefunction]") {
  for (int n = 0; n <= 6; ++n)
    for (double beta : {0.0, 0.5, 1.0, 2.5, 5.0})
      for (double xi : {0.7, 2.0}) {
        const auto w = make_radial(n, 0, beta, xi);
        for (double r : {0.05, 0.8, 3.0, 9.0, 25.0}) {
          const double naive = naive_radial(n, beta, xi, r);
          INFO("n=" << n << " beta=" << beta << " r=" << r);
          CHECK_THAT(eval_radial(w, r),
                     WithinAbs(naive, 1e-12 * std::max(1.0, std::abs(naive))));
        }
      }
}

TEST_CASE("radial derivative against finite differences", "[wavefunction]") {
  const auto check_state = [](const RadialWavefunction &w, double r) {
    const double h = 1e-6 * r;
    const double fd = (eval_radial(w, r + h) - eval_radial(w, r - h)) / (2 * h);
    const double an = eval_radial_derivative(w, r);
    const double scale = std::max(std::abs(an), std::abs(eval_radial(w, r)) / r);
    INFO("n=" << w.n << " r=" << r);
    CHECK(std::abs(fd - an) <= 1e-6 * scale);
  };
  for (int n = 0; n <= 4; ++n)
    for (double r : {0.3, 1.0, 4.0, 11.0})
      check_state(make_radial(n, 0, 1.5, 1.2), r);
  for (int n = 0; n <= 3; ++n) {
    const auto ctx = co_context(n, 0);
    for (double r : {1.0, 1.1, 1.13, 1.2, 1.3})
      check_state(make_radial(ctx), r);
  }
}

TEST_CASE("derivative at the Laguerre root", "[wavefunction]") {
  // n = 1: L_1^(2b+1)(x) = 2b + 2 - x vanishes at x = 2b + 2, leaving
  // R' = -xi N exp(-xi r/2) r^b.
  const double beta = 3.0, xi = 1.7;
  const auto w = make_radial(1, 0, beta, xi);
  const double r = (2 * beta + 2) / xi;
  CHECK(std::abs(eval_radial(w, r)) < 1e-12);
  const double expected =
      -xi * std::exp(w.log_norm - xi * r / 2 + beta * std::log(r));
  CHECK_THAT(eval_radial_derivative(w, r), WithinRel(expected, 1e-12));
}

TEST_CASE("node count equals n", "[wavefunction][property]") {
  for (int n = 0; n <= 6; ++n) {
    const auto ctx = co_context(n, 0);
    const auto w = make_radial(ctx);
    // Nodes of L sit inside [0, (n + 2b + 1 + ...)/xi]; sample generously.
    const double r_max = (4.0 * n + 2 * ctx.beta + 200.0) / ctx.xi_physical;
    int changes = 0;
    double prev = 0.0;
    for (int i = 1; i <= 200000; ++i) {
      const double v = eval_radial(w, r_max * i / 200000.0);
      if (v != 0.0 && prev != 0.0 && (v > 0) != (prev > 0))
        ++changes;
      if (v != 0.0)
        prev = v;
    }
    CHECK(changes == n);
  }
}

TEST_CASE("fixed-xi overlaps", "[wavefunction]") {
  const double beta = 2.0, xi = 1.0;
  const auto overlap = [&](int m, int n) {
    const auto a = make_radial(m, 0, beta, xi);
    const auto b = make_radial(n, 0, beta, xi);
    return simpson(
        [&](double r) { return eval_radial(a, r) * eval_radial(b, r) * r * r; },
        200.0, 40000);
  };
  for (int n = 0; n <= 3; ++n)
    CHECK_THAT(overlap(n, n), WithinAbs(1.0, 1e-10));
  CHECK_THAT(overlap(0, 1), WithinAbs(-0.35355339, 1e-8));
  CHECK_THAT(overlap(1, 2), WithinAbs(-0.41833001, 1e-8));
  CHECK_THAT(overlap(2, 3), WithinAbs(-0.4472136, 1e-7));
  for (int n = 0; n <= 3; ++n) {
    const double expected =
        -0.5 * std::sqrt((n + 1) * (n + 2 * beta + 2) /
                         ((n + beta + 1) * (n + beta + 2)));
    CHECK_THAT(overlap(n, n + 1), WithinAbs(expected, 1e-10));
  }
  CHECK_THAT(overlap(0, 2), WithinAbs(0.0, 1e-10));
  CHECK_THAT(overlap(1, 3), WithinAbs(0.0, 1e-10));
  CHECK_THAT(overlap(0, 4), WithinAbs(0.0, 1e-10));
}

TEST_CASE("radial jet", "[wavefunction]") {
  const auto w = make_radial(3, 0, 2.5, 1.3);
  const double h = 1e-4;
  for (double r : {0.5, 2.0, 5.5, 9.0}) {
    const auto j = radial_jet(w, r, 4);
    const auto d1 = [&](double t) { return eval_radial_derivative(w, t); };
    CHECK_THAT(j[0], WithinRel(eval_radial(w, r), 1e-13));
    CHECK_THAT(j[1], WithinAbs(d1(r), 1e-12 * std::abs(d1(r)) + 1e-15));
    const double scale = std::max({std::abs(j[0]), std::abs(j[1]), 1e-3});
    const double fd2 = (d1(r + h) - d1(r - h)) / (2 * h);
    CHECK(std::abs(j[2] - fd2) <= 1e-6 * scale);
    const auto jp = radial_jet(w, r + h, 4);
    const auto jm = radial_jet(w, r - h, 4);
    CHECK(std::abs(j[3] - (jp[2] - jm[2]) / (2 * h)) <= 1e-6 * scale);
    CHECK(std::abs(j[4] - (jp[3] - jm[3]) / (2 * h)) <= 1e-5 * scale);
  }
}
