#pragma once
#include "kratzer/model.hpp"

namespace kratzer {

//! Quantities shared by everything that works with a single (n, l) level.
struct SpectralContext {
  int n = 0;
  int ell = 0;
  double beta = 0.0;        // effective angular parameter
  double alpha_quant = 0.0; // n + beta + 1, on-shell only
  double xi_printed = 0.0;  // negative sign convention used by the ME tables
  double xi_physical = 0.0; // rho = xi r, > 0, 1/A
  double energy = 0.0;      // eV
  double gamma_scale = 0.0; // xi_physical^2, 1/A^2
};

//! Positive root of beta(beta+1) = 2 mu b / (hbar c)^2 + l(l+1).
//! Throws DomainError when the discriminant is negative.
double beta_ell(const PotentialParams &p, double mu_ev, int ell,
                const PhysicalConstants &k);

//! E = -mu a^2 / (2 (hbar c)^2 (n+beta+1)^2) + c.
//! Throws UnsupportedError for a >= 0 (no bound states).
double energy(const PotentialParams &p, double mu_ev, int n, int ell,
              const PhysicalConstants &k);

SpectralContext spectral_context(const PotentialParams &p, double mu_ev, int n,
                                 int ell, const PhysicalConstants &k);

} // namespace kratzer
