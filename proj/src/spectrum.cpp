#include "kratzer/spectrum.hpp"
#include "kratzer/errors.hpp"
#include <cmath>
#include <string>

namespace kratzer {

double beta_ell(const PotentialParams &p, double mu_ev, int ell,
                const PhysicalConstants &k) {
  if (ell < 0)
    throw DomainError("beta_ell: l must be non-negative");
  const double two_l1 = 2.0 * ell + 1.0;
  const double disc =
      two_l1 * two_l1 + 8.0 * mu_ev * p.b / (k.hbar_c * k.hbar_c);
  if (disc < 0.0)
    throw DomainError("beta_ell: negative discriminant for b = " +
                      std::to_string(p.b) + " eV.A^2, l = " +
                      std::to_string(ell));
  return 0.5 * (std::sqrt(disc) - 1.0);
}

double energy(const PotentialParams &p, double mu_ev, int n, int ell,
              const PhysicalConstants &k) {
  if (n < 0)
    throw DomainError("energy: n must be non-negative");
  if (!(p.a < 0.0))
    throw UnsupportedError("energy: a = " + std::to_string(p.a) +
                           " >= 0 has no bound states");
  const double beta = beta_ell(p, mu_ev, ell, k);
  const double nb1 = n + beta + 1.0;
  return -mu_ev * p.a * p.a / (2.0 * k.hbar_c * k.hbar_c * nb1 * nb1) + p.c;
}

SpectralContext spectral_context(const PotentialParams &p, double mu_ev, int n,
                                 int ell, const PhysicalConstants &k) {
  SpectralContext ctx;
  ctx.n = n;
  ctx.ell = ell;
  ctx.energy = energy(p, mu_ev, n, ell, k);
  ctx.beta = beta_ell(p, mu_ev, ell, k);
  ctx.alpha_quant = n + ctx.beta + 1.0;
  ctx.xi_physical = -2.0 * mu_ev * p.a / (k.hbar_c * k.hbar_c * ctx.alpha_quant);
  ctx.xi_printed = -ctx.xi_physical;
  ctx.gamma_scale = ctx.xi_physical * ctx.xi_physical;
  return ctx;
}

} // namespace kratzer
