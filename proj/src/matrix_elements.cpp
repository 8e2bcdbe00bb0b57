#include "kratzer/matrix_elements.hpp"
#include "kratzer/errors.hpp"
#include "kratzer/ladder.hpp"
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kratzer {

std::string_view to_string(RadialOperator op) {
  return op == RadialOperator::r ? "r" : "r_ddr";
}

namespace {

// m = -1 yields zero.
void check_indices(int m, int n) {
  if (m < -1 || n < 0)
    throw DomainError("matrix element indices out of range");
}

} // namespace

TridiagonalElement me_r(int m, int n, double beta, double xi) {
  check_indices(m, n);
  double value = 0.0;
  if (m == n) {
    value = (n + beta + 1.0) / xi;
  } else if (m == n + 1) {
    value = -ladder_coeffs(n, beta).ell_plus / xi;
  } else if (m == n - 1 && m >= 0) {
    value = -ladder_coeffs(n, beta).ell_minus / xi;
  }
  return {m, n, value, RadialOperator::r};
}

TridiagonalElement me_r(int m, int n, const SpectralContext &ctx) {
  return me_r(m, n, ctx.beta, ctx.xi_printed);
}

TridiagonalElement me_rddr(int m, int n, double beta) {
  check_indices(m, n);
  double value = 0.0;
  if (m == n) {
    value = -1.0;
  } else if (m == n + 1) {
    value = 0.5 * ladder_coeffs(n, beta).ell_plus;
  } else if (m == n - 1 && m >= 0) {
    value = -0.5 * ladder_coeffs(n, beta).ell_minus;
  }
  return {m, n, value, RadialOperator::r_ddr};
}

TridiagonalElement me_rddr(int m, int n, const SpectralContext &ctx) {
  return me_rddr(m, n, ctx.beta);
}

double gamma_offdiagonal(GammaKind kind, int m, int n,
                         const SpectralContext &ctx) {
  check_indices(m, n);
  if (m < 0)
    return 0.0;
  if (std::abs(m - n) > 1)
    throw DomainError("gamma_offdiagonal: requires |m - n| <= 1");
  const bool sum = kind == GammaKind::sum;
  if (m == n)
    return n + ctx.beta + (sum ? 0.0 : 2.0);
  const auto l = ladder_coeffs(n, ctx.beta);
  if (m == n + 1)
    return -(sum ? 0.5 : 1.5) * l.ell_plus;
  return -(sum ? 1.5 : 0.5) * l.ell_minus;
}

MatrixElementRow table_row(int n, int ell, const SpectralContext &ctx) {
  if (n < 1)
    throw DomainError("table_row: requires n >= 1");
  if (ctx.n != n || ctx.ell != ell)
    throw std::invalid_argument("table_row: context is for (n=" +
                                std::to_string(ctx.n) + ", l=" +
                                std::to_string(ctx.ell) + ")");
  const double b = ctx.beta;
  // l+ at n+1 and l- at n-1
  const double p_plus = std::sqrt((n + 2.0) * (n + b + 3.0) *
                                  (n + 2.0 * b + 3.0) / (n + b + 2.0));
  const double p_minus =
      std::sqrt((n - 1.0) * (n + b - 1.0) * (n + 2.0 * b) / (n + b));

  MatrixElementRow row;
  row.n = n;
  row.ell = ell;
  row.r_elem = ((n + b + 1.0) - p_plus - p_minus) / ctx.xi_printed;
  row.rddr_elem = 0.5 * p_plus - 0.5 * p_minus - 1.0;
  row.gamma1 = (n + b) - 0.5 * p_plus - 1.5 * p_minus;
  row.gamma2 = (n + b + 2.0) - 1.5 * p_plus - 0.5 * p_minus;
  return row;
}

} // namespace kratzer
