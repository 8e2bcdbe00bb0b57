#pragma once
#include "kratzer/wavefunction.hpp"
#include <array>
#include <span>
#include <string>
#include <vector>

namespace kratzer {

struct LadderCoefficients {
  double ell_minus;
  double ell_plus;
};

//! l- = sqrt(n(n+b)(n+2b+1)/(n+b+1)), l+ = sqrt((n+1)(n+b+2)(n+2b+2)/(n+b+1))
//! Throws DomainError on a negative radicand.
LadderCoefficients ladder_coeffs(int n, double beta);

enum class LadderDirection { raise, lower };

//! An operator expression sampled on a radial grid.
struct OperatorAction {
  std::vector<double> grid;
  std::vector<double> values;
  int source_n = 0;
};

/*!
  Applies
    L- = -r d/dr - xi r/2 + n + beta
    L+ =  r d/dr - xi r/2 + n + beta + 2
  to `state` on `grid`, with dR/dr from the analytic derivative and the
  number operator replaced by state.n. xi and beta are those of the state.
  Throws std::invalid_argument for an empty or non-positive grid.
*/
OperatorAction apply_ladder(LadderDirection direction,
                            const RadialWavefunction &state,
                            std::span<const double> grid);

//! beta (beta + 1)
double casimir_eigenvalue(double beta);

//! Radial grid covering the bulk of a fixed-xi state (|R| > ~1e-30 max|R|).
std::vector<double> state_grid(int n, double beta, double xi,
                               std::size_t points = 400);

//==============================================================================
/*!
  Linear combination of number-operator eigencomponents, sampled with
  r-derivatives on a fixed grid, so that ladder operators can be composed.

  Every component carries the n that the number operator sees. Applying L+/L-
  shifts it by +-1, so in L- L+ R_n the inner n-hat sees n and the outer one
  sees n+1. Each differential application consumes one derivative order.

  Values are complex, stored as separate real and imaginary arrays.
*/
class SampledState {
public:
  static constexpr int max_order = 4;
  using Jet = std::array<double, max_order + 1>;

  struct Component {
    int n;
    std::vector<Jet> re;
    std::vector<Jet> im;
  };

  //! R_n sampled with derivatives up to max_order.
  static SampledState from_wavefunction(const RadialWavefunction &w,
                                        std::vector<double> grid);

  SampledState raise() const;
  SampledState lower() const;
  //! L0 = n-hat + beta + 1
  SampledState number_shift() const;
  SampledState scaled(double factor) const;
  //! Multiplies by i.
  SampledState times_i() const;

  SampledState operator+(const SampledState &other) const;
  SampledState operator-(const SampledState &other) const;

  std::vector<double> real_values() const;
  std::vector<double> imag_values() const;

  int order() const { return m_order; }
  const std::vector<double> &grid() const { return m_grid; }
  const std::vector<Component> &components() const { return m_components; }

private:
  SampledState apply_first_order(int sign, double constant) const;
  SampledState combine(const SampledState &other, double factor) const;

  std::vector<double> m_grid;
  std::vector<Component> m_components;
  double m_beta = 0.0;
  double m_xi = 0.0;
  int m_order = 0;
};

//==============================================================================
struct AlgebraResidual {
  std::string name;
  double residual;  // relative sup-norm
  double tolerance;
  bool pass() const { return residual <= tolerance; }
};

struct AlgebraReport {
  std::vector<AlgebraResidual> residuals;
  bool all_pass() const;
  //! Throws std::out_of_range for an unknown name.
  double residual(const std::string &name) const;
};

//! sup|a - b| / sup|scale|
double relative_sup_norm(std::span<const double> a, std::span<const double> b,
                         std::span<const double> scale);

/*!
  Numerically checks the su(1,1) relations on R_n (n = state_n, beta and xi
  from ctx, xi held fixed across the ladder):
    commutator      (L-L+ - L+L-) R = 2(n+beta+1) R
    l0_raise/lower  L0 L+- R = (n+beta+1 +- 1) L+- R
    casimir_*       (L0(L0+-1) - L-+L+-) R = beta(beta+1) R
    hermitian_*     [Lx,Ly] = -i Lz, [Ly,Lz] = i Lx, [Lz,Lx] = i Ly
    casimir_commutes_*  [C, L+-] R = 0
  plus the direct ladder actions L+- R_n = l+- R_(n+-1).
  Residuals are relative sup-norms over `grid` (state_grid() when empty).
*/
AlgebraReport verify_algebra(int state_n, const SpectralContext &ctx,
                             std::span<const double> grid = {});

//! ||L+- R_n - l+- R_(n+-1)||_sup / ||l+- R_(n+-1)||_sup (ground-state
//! lowering is normalised by ||R_0||_sup instead).
double ladder_action_residual(LadderDirection direction,
                              const RadialWavefunction &state,
                              std::span<const double> grid);

} // namespace kratzer
