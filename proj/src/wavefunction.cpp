#include "kratzer/wavefunction.hpp"
#include "kratzer/errors.hpp"
#include <cmath>
#include <string>

namespace kratzer {

namespace {

void check_laguerre_domain(int n, double alpha, double x) {
  if (n < 0 || !(alpha > -1.0) || !(x >= 0.0))
    throw DomainError("laguerre: requires n >= 0, alpha > -1, x >= 0 (n=" +
                      std::to_string(n) + ", alpha=" + std::to_string(alpha) +
                      ", x=" + std::to_string(x) + ")");
}

// L_n and L_{n-1} (the latter 0 for n = 0).
std::pair<double, double> laguerre_pair(int n, double alpha, double x) {
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

double log_envelope(const RadialWavefunction &w, double r) {
  return w.log_norm + w.beta * std::log(r) - 0.5 * w.xi * r;
}

} // namespace

LaguerreEval laguerre(int n, double alpha, double x) {
  check_laguerre_domain(n, alpha, x);
  const auto [value, prev] = laguerre_pair(n, alpha, x);
  if (n == 0)
    return {value, 0.0};
  if (x == 0.0) {
    // L'_n(0) = -binom(n + alpha, n - 1)
    double binom = 1.0;
    for (int j = 1; j <= n - 1; ++j)
      binom *= (alpha + 1.0 + j) / j;
    return {value, -binom};
  }
  return {value, (n * value - (n + alpha) * prev) / x};
}

double laguerre_value(int n, double alpha, double x) {
  check_laguerre_domain(n, alpha, x);
  return laguerre_pair(n, alpha, x).first;
}

std::array<double, 5> laguerre_derivatives(int n, double alpha, double x,
                                           int order) {
  if (order < 0 || order > 4)
    throw DomainError("laguerre_derivatives: order must be in [0, 4]");
  std::array<double, 5> d{};
  const auto first = laguerre(n, alpha, x);
  d[0] = first.value;
  if (order >= 1)
    d[1] = first.derivative_value;
  for (int k = 2; k <= order && k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    d[k] = sign * laguerre_value(n - k, alpha + k, x);
  }
  return d;
}

double log_normalization(int n, double beta, double xi) {
  if (!(xi > 0.0))
    throw DomainError("log_normalization: xi must be positive");
  return 0.5 * ((2.0 * beta + 3.0) * std::log(xi) - std::log(2.0) +
                std::lgamma(n + 1.0) - std::log(n + beta + 1.0) -
                std::lgamma(n + 2.0 * beta + 2.0));
}

//==============================================================================
RadialWavefunction make_radial(int n, int ell, double beta, double xi) {
  if (n < 0)
    throw DomainError("make_radial: n must be non-negative");
  if (!(beta > -1.0))
    throw DomainError("make_radial: beta must exceed -1");
  return {n, ell, beta, xi, log_normalization(n, beta, xi)};
}

RadialWavefunction make_radial(const SpectralContext &ctx) {
  return make_radial(ctx.n, ctx.ell, ctx.beta, ctx.xi_physical);
}

double eval_radial(const RadialWavefunction &w, double r) {
  if (!(r >= 0.0))
    throw DomainError("eval_radial: r must be non-negative");
  const double alpha = 2.0 * w.beta + 1.0;
  if (r == 0.0) {
    if (w.beta > 0.0)
      return 0.0;
    const double lag = laguerre_value(w.n, alpha, 0.0);
    return w.beta == 0.0 ? std::exp(w.log_norm) * lag
                         : std::copysign(HUGE_VAL, lag);
  }
  const double lag = laguerre_value(w.n, alpha, w.xi * r);
  if (lag == 0.0)
    return 0.0;
  return std::copysign(std::exp(log_envelope(w, r) + std::log(std::abs(lag))),
                       lag);
}

double eval_radial_derivative(const RadialWavefunction &w, double r) {
  if (!(r > 0.0))
    throw DomainError("eval_radial_derivative: r must be positive, got " +
                      std::to_string(r));
  const auto lag = laguerre(w.n, 2.0 * w.beta + 1.0, w.xi * r);
  const double log_env = log_envelope(w, r);
  double result = 0.0;
  if (lag.value != 0.0)
    result = std::copysign(std::exp(log_env + std::log(std::abs(lag.value))),
                           lag.value) *
             (w.beta / r - 0.5 * w.xi);
  if (lag.derivative_value != 0.0)
    result += std::copysign(
        std::exp(log_env + std::log(w.xi * std::abs(lag.derivative_value))),
        lag.derivative_value);
  return result;
}

std::array<double, 5> radial_jet(const RadialWavefunction &w, double r,
                                 int order) {
  if (!(r > 0.0))
    throw DomainError("radial_jet: r must be positive");
  if (order < 0 || order > 4)
    throw DomainError("radial_jet: order must be in [0, 4]");

  // R = exp(G) L(xi r) with G = ln N + beta ln r - xi r / 2.
  // g[k] = G^(k); B[k] = exp(-G) d^k/dr^k exp(G) (complete Bell polynomials).
  std::array<double, 5> g{};
  g[1] = w.beta / r - 0.5 * w.xi;
  double factorial = 1.0;
  double rpow = r;
  for (int k = 2; k <= 4; ++k) {
    factorial *= (k - 1);
    rpow *= r;
    g[k] = ((k % 2 == 0) ? -1.0 : 1.0) * w.beta * factorial / rpow;
  }
  constexpr int binom[5][5] = {
      {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0},
      {1, 4, 6, 4, 1}};
  std::array<double, 5> bell{};
  bell[0] = 1.0;
  for (int k = 0; k < order; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j)
      s += binom[k][j] * g[j + 1] * bell[k - j];
    bell[k + 1] = s;
  }

  const auto lag =
      laguerre_derivatives(w.n, 2.0 * w.beta + 1.0, w.xi * r, order);
  const double envelope = std::exp(log_envelope(w, r));
  std::array<double, 5> out{};
  for (int k = 0; k <= order; ++k) {
    double s = 0.0;
    double xi_pow = 1.0; // xi^(k-j), built from j = k downwards
    for (int j = k; j >= 0; --j) {
      s += binom[k][j] * bell[j] * xi_pow * lag[k - j];
      xi_pow *= w.xi;
    }
    out[k] = envelope * s;
  }
  return out;
}

} // namespace kratzer
