#pragma once
#include "kratzer/spectrum.hpp"
#include <string_view>
#include <vector>

namespace kratzer {

enum class RadialOperator { r, r_ddr };
std::string_view to_string(RadialOperator op);

//! <R_m| op |R_n> in the ladder (tridiagonal) representation.
struct TridiagonalElement {
  int m;
  int n;
  double value;
  RadialOperator operator_tag;
};

//! (1/xi)[(n+b+1) d_mn - l+ d_m,n+1 - l- d_m,n-1], with the l+- of state n.
TridiagonalElement me_r(int m, int n, double beta, double xi);
//! As above with xi = ctx.xi_printed.
TridiagonalElement me_r(int m, int n, const SpectralContext &ctx);

//! (l+/2) d_m,n+1 - (l-/2) d_m,n-1 - d_mn
TridiagonalElement me_rddr(int m, int n, double beta);
TridiagonalElement me_rddr(int m, int n, const SpectralContext &ctx);

enum class GammaKind { sum, difference };

//! xi <r> +- <r d/dr> per entry:
//!   sum:        (n+b)   d_mn - 1/2 l+ d_m,n+1 - 3/2 l- d_m,n-1
//!   difference: (n+b+2) d_mn - 3/2 l+ d_m,n+1 - 1/2 l- d_m,n-1
//! Throws DomainError for |m-n| > 1.
double gamma_offdiagonal(GammaKind kind, int m, int n,
                         const SpectralContext &ctx);

struct MatrixElementRow {
  int n;
  int ell;
  double r_elem;    // A
  double rddr_elem;
  double gamma1;
  double gamma2;
};

/*!
  Per-level closed forms with radicals at shifted arguments,
    P+ = sqrt((n+2)(n+b+3)(n+2b+3)/(n+b+2))
    P- = sqrt((n-1)(n+b-1)(n+2b)/(n+b))
    r_elem    = ((n+b+1) - P+ - P-) / xi_printed
    rddr_elem = P+/2 - P-/2 - 1
    gamma1    = xi r_elem + rddr_elem = (n+b) - P+/2 - 3P-/2
    gamma2    = xi r_elem - rddr_elem = (n+b+2) - 3P+/2 - P-/2
  Requires n >= 1 (DomainError).
*/
MatrixElementRow table_row(int n, int ell, const SpectralContext &ctx);

} // namespace kratzer
