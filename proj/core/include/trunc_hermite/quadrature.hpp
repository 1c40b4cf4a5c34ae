#pragma once

#include <vector>

#include "trunc_hermite/recurrence.hpp"

namespace trunc_hermite {

/// n-point Gauss rule for L, nodes increasing.
///
/// zeta is the positive root of zeta_n^2 = z^2 + n + 1/2 - gamma_n - gamma_{n+1},
/// or NaN when the generating table stops at gamma_n.
struct QuadratureRule {
  int n = 0;
  Real z;
  std::vector<Real> nodes;
  std::vector<Real> weights;
  Real zeta;
  PrecisionConfig precision;

  /// Ordering, symmetry, node range and positive weights. Throws InvariantViolation.
  void validate() const;
};

/// Golub-Welsch: eigenvalues of the Jacobi matrix with zero diagonal and
/// off-diagonal sqrt(gamma_k), weights u0 times the squared first eigenvector
/// components. Implicit QL with a cap of 100 n sweeps, Sturm bisection when
/// that fails.
///
/// Throws EigenFailure when both solvers fail and InvariantViolation when a
/// node lands outside (-z, z).
QuadratureRule gauss_rule(int n, const GammaTable& table, const Real& u0);

/// Newton refinement of every node on P_n until |P_n| stops decreasing.
/// Throws NewtonStall when a node's residual stays above
/// 100 target_rel_tol |P_n(z)|.
QuadratureRule zeros_newton_refine(const QuadratureRule& rule, const GammaTable& table);

/// zeta_n(z). Throws InvariantViolation when zeta_n^2 <= z^2.
Real zeta(int n, const GammaTable& table);

struct ElectrostaticReport {
  /// dE/dx_k at each node divided by n.
  std::vector<Real> gradient;
  Real energy;
  /// (x, V_n(x)) pairs when samples were requested.
  std::vector<std::pair<Real, Real>> potential_samples;

  [[nodiscard]] Real max_gradient() const;
};

/// External field V_n(x) = x^2 - ln|x^2 - z^2| + ln|x^2 - zeta_n^2|.
Real external_potential(const Real& x, const Real& z, const Real& zeta_n);

/// Energy
///   E = -2 sum_{j<k} ln|x_k - x_j| + sum_k V_n(x_k)
/// and its gradient at the rule nodes. `samples` > 0 adds a uniform grid of
/// V_n on the open interval (-z, z).
ElectrostaticReport electrostatic_check(const QuadratureRule& rule, const GammaTable& table, int samples = 0);

/// Same report for arbitrary node positions (used for sensitivity probes).
ElectrostaticReport electrostatic_check(const std::vector<Real>& nodes, const Real& z, const Real& zeta_n,
                                        int samples = 0);

}  // namespace trunc_hermite
