#include "kratzer/ladder.hpp"
#include "kratzer/errors.hpp"
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kratzer {

LadderCoefficients ladder_coeffs(int n, double beta) {
  if (n < 0)
    throw DomainError("ladder_coeffs: n must be non-negative");
  const double denom = n + beta + 1.0;
  const double minus = n * (n + beta) * (n + 2.0 * beta + 1.0) / denom;
  const double plus =
      (n + 1.0) * (n + beta + 2.0) * (n + 2.0 * beta + 2.0) / denom;
  if (minus < 0.0 || plus < 0.0 || !(denom > 0.0))
    throw DomainError("ladder_coeffs: negative radicand for n = " +
                      std::to_string(n) + ", beta = " + std::to_string(beta));
  return {std::sqrt(minus), std::sqrt(plus)};
}

double casimir_eigenvalue(double beta) { return beta * (beta + 1.0); }

namespace {

void check_grid(std::span<const double> grid) {
  if (grid.empty())
    throw std::invalid_argument("ladder: empty grid");
  if (!std::all_of(grid.begin(), grid.end(), [](double r) { return r > 0.0; }))
    throw std::invalid_argument("ladder: grid radii must be positive");
}

double sup_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v)
    m = std::max(m, std::abs(x));
  return m;
}

} // namespace

OperatorAction apply_ladder(LadderDirection direction,
                            const RadialWavefunction &state,
                            std::span<const double> grid) {
  check_grid(grid);
  const bool raise = direction == LadderDirection::raise;
  const double sign = raise ? 1.0 : -1.0;
  const double constant = state.n + state.beta + (raise ? 2.0 : 0.0);

  OperatorAction out;
  out.grid.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  out.source_n = state.n;
  for (double r : grid) {
    const double value = eval_radial(state, r);
    const double deriv = eval_radial_derivative(state, r);
    out.values.push_back(sign * r * deriv +
                         (constant - 0.5 * state.xi * r) * value);
  }
  return out;
}

std::vector<double> state_grid(int n, double beta, double xi,
                               std::size_t points) {
  if (points < 2)
    throw std::invalid_argument("state_grid: need at least 2 points");
  // |R| ~ x^beta e^(-x/2) peaks near x = 2 beta; a +-24 sqrt(beta) window
  // keeps everything above ~1e-30 of the peak.
  const double width = 24.0 * std::sqrt(beta + n + 1.0);
  const double x_lo = std::max(2.0 * beta - width, 1e-2);
  const double x_hi = 2.0 * beta + 4.0 * n + width + 40.0;
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i)
    grid[i] = (x_lo + (x_hi - x_lo) * double(i) / double(points - 1)) / xi;
  return grid;
}

//==============================================================================
SampledState SampledState::from_wavefunction(const RadialWavefunction &w,
                                             std::vector<double> grid) {
  check_grid(grid);
  SampledState s;
  s.m_beta = w.beta;
  s.m_xi = w.xi;
  s.m_order = max_order;
  Component c{w.n, {}, {}};
  c.re.reserve(grid.size());
  for (double r : grid)
    c.re.push_back(radial_jet(w, r, max_order));
  c.im.assign(grid.size(), Jet{});
  s.m_components.push_back(std::move(c));
  s.m_grid = std::move(grid);
  return s;
}

SampledState SampledState::apply_first_order(int sign, double offset) const {
  if (m_order < 1)
    throw std::logic_error("SampledState: no derivative order left");
  SampledState out;
  out.m_grid = m_grid;
  out.m_beta = m_beta;
  out.m_xi = m_xi;
  out.m_order = m_order - 1;

  // h = s r f' + (c - xi r/2) f
  // h^(k) = s (r f^(k+1) + k f^(k)) + (c - xi r/2) f^(k) - k (xi/2) f^(k-1)
  const auto apply = [&](const Jet &f, double r, double c) {
    Jet h{};
    for (int k = 0; k <= out.m_order; ++k) {
      h[k] = sign * (r * f[k + 1] + k * f[k]) + (c - 0.5 * m_xi * r) * f[k];
      if (k > 0)
        h[k] -= k * 0.5 * m_xi * f[k - 1];
    }
    return h;
  };

  for (const auto &comp : m_components) {
    const double c = comp.n + m_beta + offset;
    Component next{comp.n + sign, {}, {}};
    next.re.reserve(m_grid.size());
    next.im.reserve(m_grid.size());
    for (std::size_t i = 0; i < m_grid.size(); ++i) {
      next.re.push_back(apply(comp.re[i], m_grid[i], c));
      next.im.push_back(apply(comp.im[i], m_grid[i], c));
    }
    out.m_components.push_back(std::move(next));
  }
  return out;
}

SampledState SampledState::raise() const { return apply_first_order(+1, 2.0); }
SampledState SampledState::lower() const { return apply_first_order(-1, 0.0); }

SampledState SampledState::number_shift() const {
  SampledState out = *this;
  for (auto &comp : out.m_components) {
    const double k = comp.n + m_beta + 1.0;
    for (auto *part : {&comp.re, &comp.im})
      for (auto &jet : *part)
        for (auto &v : jet)
          v *= k;
  }
  return out;
}

SampledState SampledState::scaled(double factor) const {
  SampledState out = *this;
  for (auto &comp : out.m_components)
    for (auto *part : {&comp.re, &comp.im})
      for (auto &jet : *part)
        for (auto &v : jet)
          v *= factor;
  return out;
}

SampledState SampledState::times_i() const {
  SampledState out = *this;
  for (auto &comp : out.m_components) {
    // (re + i im) i = -im + i re
    std::swap(comp.re, comp.im);
    for (auto &jet : comp.re)
      for (auto &v : jet)
        v = -v;
  }
  return out;
}

SampledState SampledState::combine(const SampledState &other,
                                   double factor) const {
  if (other.m_grid != m_grid)
    throw std::invalid_argument("SampledState: grids differ");
  SampledState out = *this;
  out.m_order = std::min(m_order, other.m_order);
  for (const auto &oc : other.m_components) {
    auto it = std::find_if(out.m_components.begin(), out.m_components.end(),
                           [&](const auto &c) { return c.n == oc.n; });
    if (it == out.m_components.end()) {
      out.m_components.push_back(
          {oc.n, std::vector<Jet>(m_grid.size()), std::vector<Jet>(m_grid.size())});
      it = std::prev(out.m_components.end());
    }
    for (std::size_t i = 0; i < m_grid.size(); ++i)
      for (int k = 0; k <= max_order; ++k) {
        it->re[i][k] += factor * oc.re[i][k];
        it->im[i][k] += factor * oc.im[i][k];
      }
  }
  std::sort(out.m_components.begin(), out.m_components.end(),
            [](const auto &a, const auto &b) { return a.n < b.n; });
  return out;
}

SampledState SampledState::operator+(const SampledState &other) const {
  return combine(other, 1.0);
}
SampledState SampledState::operator-(const SampledState &other) const {
  return combine(other, -1.0);
}

std::vector<double> SampledState::real_values() const {
  std::vector<double> v(m_grid.size(), 0.0);
  for (const auto &comp : m_components)
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] += comp.re[i][0];
  return v;
}

std::vector<double> SampledState::imag_values() const {
  std::vector<double> v(m_grid.size(), 0.0);
  for (const auto &comp : m_components)
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] += comp.im[i][0];
  return v;
}

//==============================================================================
double relative_sup_norm(std::span<const double> a, std::span<const double> b,
                         std::span<const double> scale) {
  if (a.size() != b.size())
    throw std::invalid_argument("relative_sup_norm: size mismatch");
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    diff = std::max(diff, std::abs(a[i] - b[i]));
  const double s = sup_abs(scale);
  return s > 0.0 ? diff / s : diff;
}

bool AlgebraReport::all_pass() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const auto &r) { return r.pass(); });
}

double AlgebraReport::residual(const std::string &name) const {
  for (const auto &r : residuals)
    if (r.name == name)
      return r.residual;
  throw std::out_of_range("AlgebraReport: no residual named " + name);
}

double ladder_action_residual(LadderDirection direction,
                              const RadialWavefunction &state,
                              std::span<const double> grid) {
  const auto action = apply_ladder(direction, state, grid);
  const bool raise = direction == LadderDirection::raise;
  if (!raise && state.n == 0) {
    std::vector<double> r0(grid.size());
    std::transform(grid.begin(), grid.end(), r0.begin(),
                   [&](double r) { return eval_radial(state, r); });
    return sup_abs(action.values) / sup_abs(r0);
  }
  const auto coeffs = ladder_coeffs(state.n, state.beta);
  const double coeff = raise ? coeffs.ell_plus : coeffs.ell_minus;
  const auto target =
      make_radial(state.n + (raise ? 1 : -1), state.ell, state.beta, state.xi);
  std::vector<double> expected(grid.size());
  std::transform(grid.begin(), grid.end(), expected.begin(),
                 [&](double r) { return coeff * eval_radial(target, r); });
  return relative_sup_norm(action.values, expected, expected);
}

namespace {

SampledState op_x(const SampledState &s) {
  return (s.raise() + s.lower()).scaled(0.5);
}
// (L+ - L-) / (2i) = -(i/2) (L+ - L-)
SampledState op_y(const SampledState &s) {
  return (s.raise() - s.lower()).times_i().scaled(-0.5);
}
SampledState op_z(const SampledState &s) { return s.number_shift(); }

// L0 (L0 + 1) - L- L+
SampledState casimir(const SampledState &s) {
  return op_z(op_z(s)) + op_z(s) - s.raise().lower();
}

std::vector<double> magnitude(const SampledState &s) {
  const auto re = s.real_values();
  const auto im = s.imag_values();
  std::vector<double> m(re.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = std::hypot(re[i], im[i]);
  return m;
}

// Relative sup-norm of a complex difference, real and imaginary parts checked
// separately against |rhs|.
double complex_residual(const SampledState &lhs, const SampledState &rhs) {
  const auto scale = magnitude(rhs);
  return std::max(
      relative_sup_norm(lhs.real_values(), rhs.real_values(), scale),
      relative_sup_norm(lhs.imag_values(), rhs.imag_values(), scale));
}

} // namespace

AlgebraReport verify_algebra(int state_n, const SpectralContext &ctx,
                             std::span<const double> grid) {
  if (state_n < 1)
    throw DomainError("verify_algebra: state_n must be >= 1");
  constexpr double algebra_tol = 1e-7;
  constexpr double action_tol = 1e-8;

  std::vector<double> points =
      grid.empty() ? state_grid(state_n, ctx.beta, ctx.xi_physical)
                   : std::vector<double>(grid.begin(), grid.end());
  check_grid(points);
  const auto w = make_radial(state_n, ctx.ell, ctx.beta, ctx.xi_physical);
  const auto s = SampledState::from_wavefunction(w, points);
  const double l0 = state_n + ctx.beta + 1.0;
  const double cas = casimir_eigenvalue(ctx.beta);

  AlgebraReport report;
  const auto add = [&](std::string name, double residual, double tol) {
    report.residuals.push_back({std::move(name), residual, tol});
  };

  add("ladder_raise",
      ladder_action_residual(LadderDirection::raise, w, points), action_tol);
  add("ladder_lower",
      ladder_action_residual(LadderDirection::lower, w, points), action_tol);

  const auto up = s.raise();
  const auto down = s.lower();

  add("commutator", complex_residual(up.lower() - down.raise(), s.scaled(2 * l0)),
      algebra_tol);
  add("l0_raise", complex_residual(up.number_shift(), up.scaled(l0 + 1.0)),
      algebra_tol);
  add("l0_lower", complex_residual(down.number_shift(), down.scaled(l0 - 1.0)),
      algebra_tol);
  // [L0, L+-] = +-L+-
  add("l0_commutator_raise",
      complex_residual(up.number_shift() - s.number_shift().raise(), up),
      algebra_tol);
  add("l0_commutator_lower",
      complex_residual(down.number_shift() - s.number_shift().lower(),
                       down.scaled(-1.0)),
      algebra_tol);
  add("casimir_minus_plus", complex_residual(casimir(s), s.scaled(cas)),
      algebra_tol);
  add("casimir_plus_minus",
      complex_residual(op_z(op_z(s)) - op_z(s) - down.raise(), s.scaled(cas)),
      algebra_tol);

  add("hermitian_xy",
      complex_residual(op_x(op_y(s)) - op_y(op_x(s)),
                       op_z(s).times_i().scaled(-1.0)),
      algebra_tol);
  add("hermitian_yz",
      complex_residual(op_y(op_z(s)) - op_z(op_y(s)), op_x(s).times_i()),
      algebra_tol);
  add("hermitian_zx",
      complex_residual(op_z(op_x(s)) - op_x(op_z(s)), op_y(s).times_i()),
      algebra_tol);

  // [C, L+-] R = 0, measured against beta(beta+1) L+- R
  add("casimir_commutes_raise",
      relative_sup_norm((casimir(up) - casimir(s).raise()).real_values(),
                        std::vector<double>(points.size(), 0.0),
                        up.scaled(cas).real_values()),
      algebra_tol);
  add("casimir_commutes_lower",
      relative_sup_norm((casimir(down) - casimir(s).lower()).real_values(),
                        std::vector<double>(points.size(), 0.0),
                        down.scaled(cas).real_values()),
      algebra_tol);
  return report;
}

} // namespace kratzer
