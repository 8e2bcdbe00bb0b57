#include "kratzer/oracle.hpp"
#include "kratzer/errors.hpp"
#include "kratzer/ladder.hpp"
#include "kratzer/reference_data.hpp"
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace kratzer {

std::string_view to_string(CheckStatus status) {
  switch (status) {
  case CheckStatus::pass:
    return "pass";
  case CheckStatus::fail:
    return "fail";
  case CheckStatus::expected_divergence:
    return "expected-divergence";
  }
  return "unknown";
}

ValidationEntry make_entry(std::string name, double computed, double expected,
                           double tolerance, bool relative) {
  ValidationEntry e;
  e.name = std::move(name);
  e.computed = computed;
  e.expected = expected;
  e.abs_err = std::abs(computed - expected);
  e.rel_err = expected != 0.0 ? e.abs_err / std::abs(expected) : e.abs_err;
  e.tolerance = tolerance;
  e.relative = relative;
  const double err = relative ? e.rel_err : e.abs_err;
  e.status = (std::isfinite(err) && err <= tolerance) ? CheckStatus::pass
                                                      : CheckStatus::fail;
  return e;
}

ValidationEntry make_divergence(std::string name, double computed,
                                double expected) {
  auto e = make_entry(std::move(name), computed, expected, 0.0, true);
  e.status = CheckStatus::expected_divergence;
  return e;
}

void ValidationReport::append(const ValidationReport &other) {
  m_entries.insert(m_entries.end(), other.m_entries.begin(),
                   other.m_entries.end());
}

bool ValidationReport::all_pass() const {
  return count(CheckStatus::fail) == 0;
}

std::size_t ValidationReport::count(CheckStatus status) const {
  return std::size_t(std::count_if(m_entries.begin(), m_entries.end(),
                                   [&](const auto &e) { return e.status == status; }));
}

const ValidationEntry *ValidationReport::find(const std::string &name) const {
  for (const auto &e : m_entries)
    if (e.name == name)
      return &e;
  return nullptr;
}

//==============================================================================
GaussLegendreRule gauss_legendre(int points) {
  if (points < 1)
    throw std::invalid_argument("gauss_legendre: need at least one point");
  GaussLegendreRule rule;
  rule.nodes.resize(std::size_t(points));
  rule.weights.resize(std::size_t(points));
  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration from the Chebyshev-like initial guess
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16)
        break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[std::size_t(i)] = -x;
    rule.nodes[std::size_t(points - 1 - i)] = x;
    rule.weights[std::size_t(i)] = w;
    rule.weights[std::size_t(points - 1 - i)] = w;
  }
  if (points % 2 == 1)
    rule.nodes[std::size_t(points / 2)] = 0.0;
  return rule;
}

double integrate_to(const RadialFunction &f, const QuadratureSpec &spec,
                    double r_max) {
  if (spec.panels < 1 || spec.points_per_panel < 1 || !(r_max > 0.0))
    throw std::invalid_argument("integrate: invalid quadrature layout");
  const auto rule = gauss_legendre(spec.points_per_panel);
  const double width = r_max / spec.panels;
  double total = 0.0;
  for (int p = 0; p < spec.panels; ++p) {
    const double mid = (p + 0.5) * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double r = mid + 0.5 * width * rule.nodes[i];
      const double v = f(r);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "integrate: non-finite integrand at r = " << r;
        throw std::domain_error(msg.str());
      }
      panel += rule.weights[i] * v;
    }
    total += 0.5 * width * panel;
  }
  return total;
}

double integrate(const RadialFunction &f, const QuadratureSpec &spec,
                 double scale) {
  if (!(scale > 0.0))
    throw std::invalid_argument("integrate: scale must be positive");
  return integrate_to(f, spec, spec.r_max_scale / scale);
}

double integration_cutoff(int n, double beta, double xi,
                          const QuadratureSpec &spec) {
  const double x_peak_rule =
      spec.r_max_scale * std::max(1.0, (2.0 * beta + 3.0) / 20.0);
  // Tail of x^p e^-x with p the largest power met in R_n^2 r^3.
  const double p = 2.0 * beta + 3.0 + 2.0 * n;
  const double x_tail = spec.r_max_scale + p + 10.0 * std::sqrt(p + 1.0);
  return std::max(x_peak_rule, x_tail) / xi;
}

//==============================================================================
namespace {

std::string level_tag(int n, int ell) {
  return "n=" + std::to_string(n) + ",l=" + std::to_string(ell);
}

} // namespace

ValidationEntry check_normalization(const RadialWavefunction &w,
                                    const QuadratureSpec &spec,
                                    double tolerance) {
  const double value = integrate_to(
      [&](double r) {
        const double R = eval_radial(w, r);
        return R * R * r * r;
      },
      spec, integration_cutoff(w.n, w.beta, w.xi, spec));
  return make_entry("normalization/" + level_tag(w.n, w.ell), value, 1.0,
                    tolerance, false);
}

ValidationEntry check_normalization(int n, int ell, const SpectralContext &ctx,
                                    const QuadratureSpec &spec) {
  if (ctx.n != n || ctx.ell != ell)
    throw std::invalid_argument("check_normalization: context mismatch");
  return check_normalization(make_radial(ctx), spec);
}

ValidationEntry check_orthogonality(const RadialWavefunction &a,
                                    const RadialWavefunction &b,
                                    const QuadratureSpec &spec,
                                    double tolerance) {
  if (a.n == b.n && a.ell == b.ell && a.beta == b.beta && a.xi == b.xi)
    return check_normalization(a, spec, tolerance);
  const double cutoff =
      std::max(integration_cutoff(a.n, a.beta, a.xi, spec),
               integration_cutoff(b.n, b.beta, b.xi, spec));
  const double value = integrate_to(
      [&](double r) { return eval_radial(a, r) * eval_radial(b, r) * r * r; },
      spec, cutoff);
  return make_entry("orthogonality/l=" + std::to_string(a.ell) + ",m=" +
                        std::to_string(a.n) + ",n=" + std::to_string(b.n),
                    value, 0.0, tolerance, false);
}

namespace {

double apply_operator(RadialOperator op, const RadialWavefunction &w,
                      double r) {
  return op == RadialOperator::r ? r * eval_radial(w, r)
                                 : r * eval_radial_derivative(w, r);
}

} // namespace

double me_numeric(RadialOperator op, int m, int n, const SpectralContext &ctx,
                  const QuadratureSpec &spec) {
  if (m < 0 || n < 0)
    throw DomainError("me_numeric: indices must be non-negative");
  const double xi = ctx.xi_physical;
  const auto wm = make_radial(m, ctx.ell, ctx.beta, xi);
  const auto wn = make_radial(n, ctx.ell, ctx.beta, xi);
  const double cutoff = integration_cutoff(std::max(m, n), ctx.beta, xi, spec);
  const double projection = integrate_to(
      [&](double r) { return eval_radial(wm, r) * apply_operator(op, wn, r) * r; },
      spec, cutoff);
  const double weight = integrate_to(
      [&](double r) {
        const double R = eval_radial(wm, r);
        return R * R * r;
      },
      spec, cutoff);
  return projection / weight;
}

double expectation_value(RadialOperator op, const RadialWavefunction &w,
                         const QuadratureSpec &spec) {
  return integrate_to(
      [&](double r) { return eval_radial(w, r) * apply_operator(op, w, r) * r * r; },
      spec, integration_cutoff(w.n + 1, w.beta, w.xi, spec));
}

//==============================================================================
namespace {

constexpr double normalization_tol = 1e-8;
constexpr double orthogonality_tol = 1e-8;
constexpr double me_tol = 1e-6;
constexpr double identity_tol = 1e-12;
constexpr double energy_tol = 1e-5;
constexpr double r_elem_tol = 2e-4;
constexpr double table_rel_tol = 1e-4;

void add_spectral_checks(ValidationReport &report, const std::string &prefix,
                         const PotentialParams &params, double mu_ev,
                         int n_max, int ell_max, const PhysicalConstants &k) {
  for (int ell = 0; ell <= ell_max; ++ell) {
    for (int n = 0; n <= n_max; ++n) {
      const auto ctx = spectral_context(params, mu_ev, n, ell, k);
      const double xi_from_energy =
          std::sqrt(-8.0 * mu_ev * (ctx.energy - params.c)) / k.hbar_c;
      report.add(make_entry(prefix + "xi_energy_consistency/" +
                                level_tag(n, ell),
                            xi_from_energy, ctx.xi_physical, 1e-10, true));
      if (n > 0) {
        const double below = energy(params, mu_ev, n - 1, ell, k);
        report.add(make_entry(prefix + "energy_increases_with_n/" +
                                  level_tag(n, ell),
                              ctx.energy > below ? 1.0 : 0.0, 1.0, 0.0, false));
      }
    }
  }
}

void add_hydrogen_checks(ValidationReport &report, const std::string &prefix,
                         const PotentialParams &params, double mu_ev,
                         int n_max, int ell_max, const PhysicalConstants &k) {
  for (int ell = 0; ell <= ell_max; ++ell) {
    report.add(make_entry(prefix + "hydrogen_beta/l=" + std::to_string(ell),
                          beta_ell(params, mu_ev, ell, k), double(ell),
                          identity_tol, false));
    if (ell == 0)
      continue;
    for (int n = 0; n < n_max; ++n)
      report.add(make_entry(prefix + "hydrogen_degeneracy/" + level_tag(n, ell),
                            energy(params, mu_ev, n, ell, k),
                            energy(params, mu_ev, n + 1, ell - 1, k),
                            identity_tol, true));
  }
}

void add_oracle_checks(ValidationReport &report, const std::string &prefix,
                       const PotentialParams &params, double mu_ev, int n_max,
                       int ell_max, const QuadratureSpec &spec,
                       const PhysicalConstants &k) {
  for (int ell = 0; ell <= ell_max; ++ell) {
    std::vector<SpectralContext> ctxs;
    for (int n = 0; n <= n_max; ++n)
      ctxs.push_back(spectral_context(params, mu_ev, n, ell, k));

    for (const auto &ctx : ctxs) {
      auto e = check_normalization(ctx.n, ell, ctx, spec);
      e.name = prefix + e.name;
      report.add(std::move(e));
    }
    for (int m = 0; m <= n_max; ++m)
      for (int n = m + 1; n <= n_max; ++n) {
        auto e = check_orthogonality(make_radial(ctxs[std::size_t(m)]),
                                     make_radial(ctxs[std::size_t(n)]), spec,
                                     orthogonality_tol);
        e.name = prefix + e.name;
        report.add(std::move(e));
      }

    for (const auto &ctx : ctxs) {
      const int n = ctx.n;
      const double xi = ctx.xi_physical;
      const std::string tag = level_tag(n, ell);

      // r d/dr: diagonal and both neighbours
      report.add(make_entry(prefix + "me_rddr/diag/" + tag,
                            me_numeric(RadialOperator::r_ddr, n, n, ctx, spec),
                            me_rddr(n, n, ctx.beta).value, me_tol, false));
      report.add(make_entry(
          prefix + "me_rddr/up/" + tag,
          me_numeric(RadialOperator::r_ddr, n + 1, n, ctx, spec),
          me_rddr(n + 1, n, ctx.beta).value, me_tol, true));
      if (n > 0)
        report.add(make_entry(
            prefix + "me_rddr/down/" + tag,
            me_numeric(RadialOperator::r_ddr, n - 1, n, ctx, spec),
            me_rddr(n - 1, n, ctx.beta).value, me_tol, true));

      // r: off-diagonals with the positive xi
      report.add(make_entry(prefix + "me_r/up/" + tag,
                            me_numeric(RadialOperator::r, n + 1, n, ctx, spec),
                            me_r(n + 1, n, ctx.beta, xi).value, me_tol, true));
      if (n > 0)
        report.add(make_entry(
            prefix + "me_r/down/" + tag,
            me_numeric(RadialOperator::r, n - 1, n, ctx, spec),
            me_r(n - 1, n, ctx.beta, xi).value, me_tol, true));

      // r diagonal: the ladder identity r = (2 L0 - L+ - L-)/xi gives
      // 2(n+b+1)/xi; the tridiagonal closed form carries a single (n+b+1).
      const double diag = me_numeric(RadialOperator::r, n, n, ctx, spec);
      report.add(make_entry(prefix + "me_r/diag_ladder_identity/" + tag, diag,
                            2.0 * (n + ctx.beta + 1.0) / xi, me_tol, true));
      report.add(make_divergence(prefix + "me_r/diag_closed_form/" + tag, diag,
                                 me_r(n, n, ctx.beta, xi).value));

      // Gamma combinations against the tridiagonal elements
      for (int m = std::max(0, n - 1); m <= n + 1; ++m) {
        const double r_el = me_r(m, n, ctx).value;
        const double d_el = me_rddr(m, n, ctx).value;
        const std::string mt = "m=" + std::to_string(m) + "," + tag;
        report.add(make_entry(prefix + "gamma_sum/" + mt,
                              gamma_offdiagonal(GammaKind::sum, m, n, ctx),
                              ctx.xi_printed * r_el + d_el, identity_tol,
                              true));
        report.add(make_entry(prefix + "gamma_difference/" + mt,
                              gamma_offdiagonal(GammaKind::difference, m, n, ctx),
                              ctx.xi_printed * r_el - d_el, identity_tol,
                              true));
      }

      // Ladder action on the fixed-xi basis of this level.
      const auto w = make_radial(ctx);
      const auto grid = state_grid(n, ctx.beta, xi);
      report.add(make_entry(
          prefix + "ladder_raise/" + tag,
          ladder_action_residual(LadderDirection::raise, w, grid), 0.0, 1e-8,
          false));
      report.add(make_entry(
          prefix + "ladder_lower/" + tag,
          ladder_action_residual(LadderDirection::lower, w, grid), 0.0, 1e-8,
          false));

      if (n >= 1) {
        const auto algebra = verify_algebra(n, ctx);
        for (const auto &res : algebra.residuals)
          if (res.name.rfind("ladder_", 0) != 0)
            report.add(make_entry(prefix + "algebra/" + res.name + "/" + tag,
                                  res.residual, 0.0, res.tolerance, false));
        // Physical <R_n|r|R_n> next to the per-level closed form.
        const auto row = table_row(n, ell, ctx);
        report.add(make_divergence(
            prefix + "r_expectation_vs_table/" + tag,
            expectation_value(RadialOperator::r, w, spec), row.r_elem));
      }
    }
  }
}

} // namespace

ValidationReport full_validation(const std::string &label,
                                 const PotentialParams &params, double mu_ev,
                                 int n_max, int ell_max,
                                 const QuadratureSpec &spec,
                                 const PhysicalConstants &k) {
  if (n_max < 0 || ell_max < 0)
    throw std::invalid_argument("full_validation: n_max, ell_max must be >= 0");
  ValidationReport report;
  const std::string prefix = label.empty() ? std::string{} : label + "/";
  add_spectral_checks(report, prefix, params, mu_ev, n_max, ell_max, k);
  if (params.b == 0.0)
    add_hydrogen_checks(report, prefix, params, mu_ev, n_max, ell_max, k);
  add_oracle_checks(report, prefix, params, mu_ev, n_max, ell_max, spec, k);
  return report;
}

ValidationReport full_validation(const MoleculeSpec &molecule,
                                 PotentialKind kind, int n_max, int ell_max,
                                 const QuadratureSpec &spec,
                                 const PhysicalConstants &k) {
  const auto params = make_params(molecule, kind);
  const double mu_ev = mu_energy(molecule, k);
  const std::string prefix =
      molecule.name + "/" + std::string(to_string(kind)) + "/";

  ValidationReport report;
  const double v_min = evaluate_potential(params, molecule.r0);
  report.add(make_entry(prefix + "potential_minimum", v_min,
                        kind == PotentialKind::kratzer ? -molecule.d0 : 0.0,
                        1e-10, false));

  if (is_reference_molecule(molecule)) {
    for (const auto &ref : reference_energies(molecule.name, kind)) {
      if (ref.n > n_max || ref.ell > ell_max)
        continue;
      report.add(make_entry(prefix + "reference_energy/" +
                                level_tag(ref.n, ref.ell),
                            energy(params, mu_ev, ref.n, ref.ell, k),
                            ref.energy_ev, energy_tol, false));
    }
    for (const auto &ref : reference_matrix_elements(molecule.name)) {
      if (ref.n > n_max || ref.ell > ell_max)
        continue;
      const auto ctx = spectral_context(params, mu_ev, ref.n, ref.ell, k);
      const auto row = table_row(ref.n, ref.ell, ctx);
      const std::string tag = level_tag(ref.n, ref.ell);
      report.add(make_entry(prefix + "reference_r_elem/" + tag, row.r_elem,
                            ref.r_elem, r_elem_tol, false));
      report.add(make_entry(prefix + "reference_rddr_elem/" + tag,
                            row.rddr_elem, ref.rddr_elem, table_rel_tol, true));
      report.add(make_entry(prefix + "reference_gamma1/" + tag, row.gamma1,
                            ref.gamma1, table_rel_tol, true));
      report.add(make_entry(prefix + "reference_gamma2/" + tag, row.gamma2,
                            ref.gamma2, table_rel_tol, true));
    }
  }

  const auto rest = full_validation(molecule.name + "/" +
                                        std::string(to_string(kind)),
                                    params, mu_ev, n_max, ell_max, spec, k);
  report.append(rest);
  return report;
}

} // namespace kratzer
