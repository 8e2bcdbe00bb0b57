#include "kratzer/errors.hpp"
#include "kratzer/ladder.hpp"
#include "kratzer/matrix_elements.hpp"
#include "kratzer/reference_data.hpp"
#include "catch_amalgamated.hpp"
#include <cmath>
#include <cstring>

using namespace kratzer;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const PhysicalConstants k{};

SpectralContext context(const std::string &name, PotentialKind kind, int n,
                        int ell) {
  MoleculeRegistry reg;
  const auto m = *reg.find(name);
  return spectral_context(make_params(m, kind), mu_energy(m, k), n, ell, k);
}

bool same_bits(double a, double b) {
  return std::memcmp(&a, &b, sizeof a) == 0;
}

} // namespace

TEST_CASE("tridiagonal structure", "[matrix_elements]") {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 8; ++m) {
      if (std::abs(m - n) <= 1)
        continue;
      CHECK(me_r(m, n, 2.0, 1.0).value == 0.0);
      CHECK(me_rddr(m, n, 2.0).value == 0.0);
    }
  CHECK(me_r(-1, 0, 2.0, 1.0).value == 0.0);
  CHECK(me_rddr(-1, 0, 2.0).value == 0.0);
  CHECK_THROWS_AS(me_r(0, -1, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(me_rddr(-2, 0, 2.0), DomainError);
}

TEST_CASE("closed-form entries", "[matrix_elements]") {
  const double beta = 2.0, xi = 1.0;
  for (int n = 0; n <= 5; ++n) {
    const auto c = ladder_coeffs(n, beta);
    const auto d = me_r(n, n, beta, xi);
    CHECK(d.m == n);
    CHECK(d.n == n);
    CHECK(d.operator_tag == RadialOperator::r);
    CHECK(d.value == (n + beta + 1) / xi);
    CHECK(me_r(n + 1, n, beta, xi).value == -c.ell_plus / xi);
    CHECK(me_rddr(n, n, beta).value == -1.0);
    CHECK(me_rddr(n + 1, n, beta).value == c.ell_plus / 2);
    CHECK(me_rddr(n + 1, n, beta).operator_tag == RadialOperator::r_ddr);
    if (n > 0) {
      CHECK(me_r(n - 1, n, beta, xi).value == -c.ell_minus / xi);
      CHECK(me_rddr(n - 1, n, beta).value == -c.ell_minus / 2);
    }
  }
  const auto ctx = context("CO", PotentialKind::kratzer, 2, 0);
  CHECK(me_r(2, 2, ctx).value == me_r(2, 2, ctx.beta, ctx.xi_printed).value);
  CHECK(me_r(2, 2, ctx).value < 0.0);
  CHECK(me_rddr(3, 2, ctx).value == me_rddr(3, 2, ctx.beta).value);
  CHECK(to_string(RadialOperator::r_ddr) == "r_ddr");
}

TEST_CASE("table rows", "[matrix_elements]") {
  const auto row = table_row(1, 0, context("CO", PotentialKind::kratzer, 1, 0));
  CHECK(row.n == 1);
  CHECK(row.ell == 0);
  CHECK_THAT(row.r_elem, WithinAbs(-0.476149095, 1e-8));
  CHECK_THAT(row.rddr_elem, WithinRel(16.9732351, 1e-8));
  CHECK_THAT(row.gamma1, WithinRel(195.389528, 1e-8));
  CHECK_THAT(row.gamma2, WithinRel(161.443058, 1e-8));

  CHECK_THAT(table_row(5, 5, context("NO", PotentialKind::kratzer, 5, 5)).r_elem,
             WithinAbs(-0.32820231, 2e-4));
  CHECK_THAT(table_row(1, 1, context("NO", PotentialKind::kratzer, 1, 1)).r_elem,
             WithinAbs(-0.48198188, 2e-4));

  const auto c0 = context("CO", PotentialKind::kratzer, 0, 0);
  CHECK_THROWS_AS(table_row(0, 0, c0), DomainError);
  const auto c1 = context("CO", PotentialKind::kratzer, 1, 0);
  CHECK_THROWS_AS(table_row(2, 0, c1), std::invalid_argument);
  CHECK_THROWS_AS(table_row(1, 1, c1), std::invalid_argument);
}

TEST_CASE("rows at n = 1 have no lower radical", "[matrix_elements]") {
  const auto ctx = context("NO", PotentialKind::kratzer, 1, 2);
  const double b = ctx.beta;
  const double p_plus = std::sqrt(3 * (b + 4) * (2 * b + 4) / (b + 3));
  const auto row = table_row(1, 2, ctx);
  CHECK_THAT(row.rddr_elem, WithinRel(p_plus / 2 - 1, 1e-14));
  CHECK_THAT(row.gamma1, WithinRel(1 + b - p_plus / 2, 1e-14));
  CHECK_THAT(row.gamma2, WithinRel(3 + b - 1.5 * p_plus, 1e-14));
  CHECK_THAT(row.r_elem, WithinRel((2 + b - p_plus) / ctx.xi_printed, 1e-14));
}

TEST_CASE("gamma combinations", "[matrix_elements][property]") {
  for (const char *name : {"CO", "NO"})
    for (int ell = 0; ell <= 3; ++ell)
      for (int n = 0; n <= 6; ++n) {
        const auto ctx = context(name, PotentialKind::kratzer, n, ell);
        const auto c = ladder_coeffs(n, ctx.beta);
        CHECK(gamma_offdiagonal(GammaKind::sum, n, n, ctx) == n + ctx.beta);
        CHECK(gamma_offdiagonal(GammaKind::difference, n, n, ctx) ==
              n + ctx.beta + 2);
        CHECK_THAT(gamma_offdiagonal(GammaKind::sum, n + 1, n, ctx),
                   WithinRel(-0.5 * c.ell_plus, 1e-14));
        CHECK_THAT(gamma_offdiagonal(GammaKind::difference, n + 1, n, ctx),
                   WithinRel(-1.5 * c.ell_plus, 1e-14));
        for (int m = std::max(0, n - 1); m <= n + 1; ++m) {
          const double r = me_r(m, n, ctx).value;
          const double d = me_rddr(m, n, ctx).value;
          const double scale = std::max(1.0, std::abs(ctx.xi_printed * r));
          CHECK_THAT(gamma_offdiagonal(GammaKind::sum, m, n, ctx),
                     WithinAbs(ctx.xi_printed * r + d, 1e-12 * scale));
          CHECK_THAT(gamma_offdiagonal(GammaKind::difference, m, n, ctx),
                     WithinAbs(ctx.xi_printed * r - d, 1e-12 * scale));
        }
        CHECK_THROWS_AS(gamma_offdiagonal(GammaKind::sum, n + 2, n, ctx),
                        DomainError);
      }
}

TEST_CASE("rows do not depend on the energy shift", "[matrix_elements]") {
  for (const char *name : {"CO", "NO"})
    for (int n = 1; n <= 5; ++n)
      for (int ell = 0; ell <= n; ++ell) {
        const auto a = table_row(n, ell, context(name, PotentialKind::kratzer, n, ell));
        const auto b = table_row(
            n, ell, context(name, PotentialKind::modified_kratzer, n, ell));
        CHECK(same_bits(a.r_elem, b.r_elem));
        CHECK(same_bits(a.rddr_elem, b.rddr_elem));
        CHECK(same_bits(a.gamma1, b.gamma1));
        CHECK(same_bits(a.gamma2, b.gamma2));
      }
}

TEST_CASE("all reference rows", "[matrix_elements][reference]") {
  std::size_t rows = 0;
  for (const char *name : {"CO", "NO"})
    for (const auto &ref : reference_matrix_elements(name)) {
      const auto row = table_row(
          ref.n, ref.ell, context(name, PotentialKind::kratzer, ref.n, ref.ell));
      INFO(name << " n=" << ref.n << " l=" << ref.ell);
      CHECK_THAT(row.r_elem, WithinAbs(ref.r_elem, 2e-4));
      CHECK_THAT(row.rddr_elem, WithinRel(ref.rddr_elem, 1e-4));
      CHECK_THAT(row.gamma1, WithinRel(ref.gamma1, 1e-4));
      CHECK_THAT(row.gamma2, WithinRel(ref.gamma2, 1e-4));
      ++rows;
    }
  CHECK(rows == 40);
  CHECK(reference_matrix_elements("HCl").empty());
}
