#pragma once

#include <gmpxx.h>

#include <vector>

#include "trunc_hermite/recurrence.hpp"

namespace trunc_hermite {

/// P_n(x; z) with its first two x-derivatives and the values P_0..P_n.
struct PolyEval {
  int n = 0;
  Real x;
  Real z;
  Real value;
  Real dvalue;
  Real d2value;
  std::vector<Real> trace;
};

/// Runs x P_k = P_{k+1} + gamma_k P_{k-1} from P_0 = 1, P_1 = x, together with
/// its once and twice differentiated forms. Requires gamma up to n - 1.
PolyEval eval_poly(int n, const Real& x, const GammaTable& table);

/// phi = x^2 - z^2.
Real phi(const Real& x, const Real& z);

/// lambda_n = [2(gamma_n + gamma_{n+1} + gamma_{n+2} - z^2 - 1) - n] gamma_{n+1}.
Real lambda_coefficient(int n, const GammaTable& table);
/// tau_n = 2 gamma_{n+1} gamma_n gamma_{n-1}; zero for n <= 1.
Real tau_coefficient(int n, const GammaTable& table);

struct StructureCoeffs {
  Real phi;
  Real psi;
  Real lambda_n;
  Real tau_n;
  Real A_n;
  Real B_n;
  Real C_n;
};

/// All coefficient functions at (n, x). Needs n >= 1 and gamma up to n + 2.
StructureCoeffs structure_coeffs(int n, const Real& x, const GammaTable& table);

/// |phi dP_{n+1} - (n+1) P_{n+2} - lambda_n P_n - tau_n P_{n-2}| / (1 + |phi dP_{n+1}|).
Real structure_relation_residual(int n, const Real& x, const GammaTable& table);
/// Same residual with caller-supplied lambda_n and tau_n.
Real structure_relation_residual(int n, const Real& x, const GammaTable& table, const Real& lambda_n,
                                 const Real& tau_n);

/// A_n dP_n - B_n P_n, which equals P_{n-1}.
///
/// Throws SingularPoint when |C_n(x)| < 10^(-working_digits/2) (1 + x^2 + z^2).
Real apply_lowering(int n, const Real& x, const GammaTable& table);

/// The four terms of the reduced second-order equation for P_n:
///   phi C_n P'' ,  -2x[(phi - 1) C_n + phi] P' ,
///   (n - 2 gamma_n)[(2x^2 - 1) C_n + 2x^2] P ,  [4 gamma_n (C_n + l_{n-1}) - (n - 2 gamma_n)^2] C_n P.
struct OdeTerms {
  Real second;
  Real first;
  Real zeroth_a;
  Real zeroth_b;
};

OdeTerms holonomic_ode_terms(int n, const Real& x, const GammaTable& table);

/// |sum of the terms| divided by the largest term magnitude (0 when all vanish).
Real holonomic_ode_residual(int n, const Real& x, const GammaTable& table);

/// |4 gamma_n l_n l_{n-1} - z^2 (n - 2 gamma_n)^2| / max(1, z^2 (n - 2 gamma_n)^2).
Real lf_reduced_residual(int n, const GammaTable& table);

struct BoundaryResidual {
  Real r1;
  Real r2;
};

/// r1: P_n(z) P_{n-1}(z) e^{-z^2} against (n/2 - gamma_n) h_{n-1}, relative to the larger side.
/// r2: P_n(z)^2 e^{-z^2} against [(2n+1) h_n - 2(h_{n+1} + gamma_n^2 h_{n-1})] / (2z),
///     relative to the largest of |P_n(z)^2 e^{-z^2}|, (2n+1) h_n / (2z) and
///     (h_{n+1} + gamma_n^2 h_{n-1}) / z.
/// Needs n >= 1 and gamma, h up to n + 1.
BoundaryResidual boundary_identities_residual(int n, const GammaTable& table);

/// Large-n form: Phi_+^n + Phi_-^n with Phi_pm = (x pm sqrt(x^2 - z^2))/2 for |x| >= z,
/// 2 (z/2)^n cos(n arccos(x/z)) for |x| < z.
Real chebyshev_asymptotic(int n, const Real& x, const Real& z);

/// Maclaurin coefficients of P_n(x; z) = x^n + sum_k alpha_{n,k}(x) z^{2k}.
///
/// rational[n][k] / value[n][k] is the coefficient list of alpha_{n,k} in
/// increasing powers of x, of length max(0, n - 1). Column k = 0 is unused.
struct AlphaTable {
  int n_max = 0;
  int k_max = 0;
  bool exact = false;
  std::vector<std::vector<std::vector<mpq_class>>> rational;
  std::vector<std::vector<std::vector<Real>>> value;

  [[nodiscard]] const std::vector<Real>& at(int n, int k) const;
  [[nodiscard]] const std::vector<mpq_class>& exact_at(int n, int k) const;
};

/// alpha_{n+1,k} = x alpha_{n,k} - eta_{n,k} x^{n-1} - sum_{j<k} alpha_{n-1,j} eta_{n,k-j},
/// alpha_{0,k} = alpha_{1,k} = 0. Exact whenever eta is exact. Needs eta rows up to n_max - 1.
AlphaTable build_alpha_table(int n_max, int k_max, const EtaTable& eta);

/// alpha_{n,k}(x).
Real alpha_eval(int n, int k, const Real& x, const AlphaTable& table);

/// x^n + sum_{k=1}^{k_max} alpha_{n,k}(x) z^{2k}.
Real poly_series(int n, const Real& x, const Real& z, int k_max, const AlphaTable& table);

}  // namespace trunc_hermite
