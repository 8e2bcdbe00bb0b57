#pragma once
#include "kratzer/spectrum.hpp"
#include <array>
#include <vector>

namespace kratzer {

struct LaguerreEval {
  double value;
  double derivative_value; // d/dx L_n^alpha(x)
};

//! Generalised Laguerre polynomial L_n^alpha(x) by upward three-term
//! recurrence in n. The derivative comes from
//!   x L'_n = n L_n - (n + alpha) L_{n-1},
//! with L'_n(0) = -binom(n+alpha, n-1).
//! Requires n >= 0, alpha > -1, x >= 0 (DomainError otherwise).
LaguerreEval laguerre(int n, double alpha, double x);

//! L_n^alpha(x) only.
double laguerre_value(int n, double alpha, double x);

//! d^k/dx^k L_n^alpha(x) for k = 0..order (order <= 4). The first derivative
//! is the one from laguerre(); higher ones use
//! d^k/dx^k L_n^alpha = (-1)^k L_{n-k}^{alpha+k}.
std::array<double, 5> laguerre_derivatives(int n, double alpha, double x,
                                           int order);

//! ln N for the normalised radial function, with every Gamma via lgamma:
//!   N^2 = xi^(2b+3)/2 * n! / ((n+b+1) Gamma(n+2b+2))
//! Requires xi > 0.
double log_normalization(int n, double beta, double xi);

//==============================================================================
/*!
  R(r) = N exp(-xi r/2) r^beta L_n^(2beta+1)(xi r).

  For molecular parameters beta ~ 200, so N, r^beta and Gamma(n+2beta+2) are
  all far outside the double range. Only ln N is stored; evaluation sums the
  logs of every factor and exponentiates once.
*/
struct RadialWavefunction {
  int n = 0;
  int ell = 0;
  double beta = 0.0;
  double xi = 0.0; // > 0
  double log_norm = 0.0;
};

//! State with an explicit xi (fixed-xi basis member).
RadialWavefunction make_radial(int n, int ell, double beta, double xi);
//! Physical eigenstate: n, beta and xi_physical taken from ctx.
RadialWavefunction make_radial(const SpectralContext &ctx);

double eval_radial(const RadialWavefunction &w, double r);

//! dR/dr. Throws DomainError for r <= 0.
double eval_radial_derivative(const RadialWavefunction &w, double r);

//! R and its r-derivatives up to `order` (<= 4) at r > 0.
std::array<double, 5> radial_jet(const RadialWavefunction &w, double r,
                                 int order);

} // namespace kratzer
