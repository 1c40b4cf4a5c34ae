#pragma once

#include <gmpxx.h>

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "trunc_hermite/moments.hpp"
#include "trunc_hermite/precision.hpp"
#include "trunc_hermite/real.hpp"

namespace trunc_hermite {

/// Construction route of a GammaTable.
enum class GammaMethod { moments, laguerre_freud, series, asymptotic };

std::string_view to_string(GammaMethod method);
GammaMethod gamma_method_from_string(std::string_view text);

/// Recurrence coefficients of x P_n = P_{n+1} + gamma_n P_{n-1} and the
/// norms h_n = L[P_n^2].
///
/// gamma[0] holds the convention gamma_0 = 0, so gamma[n] is gamma_n for
/// n = 0..n_max; h[n] is h_n with h_0 = u_0.
struct GammaTable {
  Real z;
  std::vector<Real> gamma;
  std::vector<Real> h;
  GammaMethod method = GammaMethod::moments;
  PrecisionConfig precision;

  [[nodiscard]] int n_max() const { return static_cast<int>(gamma.size()) - 1; }

  /// gamma_n, with gamma_n = 0 for n <= 0. Throws DomainError past n_max.
  [[nodiscard]] Real gamma_at(int n) const;
  /// h_n. Throws DomainError outside 0..n_max.
  [[nodiscard]] const Real& h_at(int n) const;

  /// Checks 0 < gamma_n < n/2, h_0 > 0 and h_n = gamma_n h_{n-1}.
  /// Throws InvariantViolation naming the first failing index.
  void validate() const;
};

/// Table from given gamma_1..gamma_N and h_0 (norms follow by products).
GammaTable make_gamma_table(const Real& z, std::span<const Real> gamma_1_to_n, const Real& h0,
                            GammaMethod method, const PrecisionConfig& cfg);

/// Derived sequences of a GammaTable.
///   c_n = sum_{k=1}^{n-1} gamma_k,            n = 0..n_max
///   d_n = sum_{k=3}^{n-1} gamma_k c_{k-1},    n = 0..n_max
///   g_n = n/2 - gamma_n,                      n = 0..n_max
///   l_n = gamma_n + gamma_{n+1} - n - 1/2,    n = 0..n_max-1
///   zeta2_n = z^2 - l_n,                      n = 0..n_max-1
struct AuxSequences {
  std::vector<Real> c;
  std::vector<Real> d;
  std::vector<Real> g;
  std::vector<Real> l;
  std::vector<Real> zeta2;
};

AuxSequences compute_aux_sequences(const GammaTable& table);

/// gamma_1..gamma_{n_max} and h_0..h_{n_max} from the even moments
/// u_0..u_{n_max} by the Chebyshev algorithm specialised to a symmetric
/// functional (odd moments and all diagonal coefficients vanish).
///
/// Throws PrecisionExhausted naming the first index at which a norm loses its
/// sign or a coefficient leaves (0, n/2).
GammaTable gammas_from_moments(const MomentTable& table, int n_max);

/// Convenience: moment table plus Chebyshev algorithm at the given precision.
GammaTable build_gamma_table(int n_max, const Real& z, const PrecisionConfig& cfg);

/// Forward solution of
///   gamma_n (n + 1/2 - gamma_n - gamma_{n+1})(n - 1/2 - gamma_n - gamma_{n-1}) = z^2 (n/2 - gamma_n)^2
/// for gamma_{n+1}, seeded with gamma_0 = 0 and gamma_1. Runs at cfg
/// precision. Throws Blowup with the first index leaving (0, n/2).
GammaTable gammas_laguerre_freud(const Real& z, const Real& gamma1, int n_max, const PrecisionConfig& cfg);

/// max over n of |gamma_n l_n l_{n-1} - z^2 (n/2 - gamma_n)^2| / max(1, z^2 (n/2 - gamma_n)^2),
/// n = 1..n_max-1.
Real check_laguerre_freud(const GammaTable& table);

/// max over n = 0..n_max-2 of
///   |z^2/2 - gamma_n(gamma_{n-1} + gamma_n - z^2 + 1/2 - n)
///          + gamma_{n+1}(gamma_{n+1} + gamma_{n+2} - z^2 - n - 3/2)| / max(1, z^2).
Real check_laguerre_freud_order2(const GammaTable& table);

/// Same identity in g_n = n/2 - gamma_n:
///   (n/2 - g_n)(g_n + g_{n+1})(g_n + g_{n-1}) = z^2 g_n^2, n = 1..n_max-1,
/// scaled by max(1, z^2 g_n^2).
Real check_laguerre_freud_g(const GammaTable& table);

/// z^2/4 + (z^2/16) n^-2 + (z^4/16) n^-3 + (z^2/64)(1 + 3z^4) n^-4.
Real gamma_asymptotic(int n, const Real& z);
/// n/2 - gamma_asymptotic(n, z).
Real g_asymptotic(int n, const Real& z);

/// Coefficients xi_{-1}, xi_0, xi_1 of g_n ~ sum_k xi_k n^-k for large n.
struct LargeNCoefficients {
  Real xi_minus1;
  Real xi_0;
  Real xi_1;
};
LargeNCoefficients large_n_coefficients(const Real& z);

/// Maclaurin coefficients of gamma_n(z) = sum_{k>=1} eta_{n,k} z^{2k}.
///
/// eta_{n,1} = n^2/(4n^2 - 1),
/// eta_{n,k} = (k-1)^{-1} sum_{j=1}^{k-1} (eta_{n-1,j} - eta_{n+1,j}) eta_{n,k-j}.
/// Rows n = 0..n_max and columns k = 1..k_max are stored (column 0 unused);
/// eta_{0,k} = 0.
struct EtaTable {
  int n_max = 0;
  int k_max = 0;
  bool exact = false;
  std::vector<std::vector<mpq_class>> rational;  // filled only when exact
  std::vector<std::vector<Real>> value;

  [[nodiscard]] const Real& at(int n, int k) const;
  /// Throws DomainError when the table is not exact.
  [[nodiscard]] const mpq_class& exact_at(int n, int k) const;
};

enum class EtaArithmetic { automatic, exact, working_precision };

/// Exact rationals when n_max * k_max <= 10^4 (automatic), else cfg precision.
EtaTable build_eta_table(int n_max, int k_max, const PrecisionConfig& cfg,
                         EtaArithmetic arithmetic = EtaArithmetic::automatic);

/// sum_{k=1}^{k_max} eta_{n,k} z^{2k}.
Real gamma_series(int n, const Real& z, int k_max, const EtaTable& eta);

/// z-derivative identities checked with central differences, each residual
/// divided by max(1, |right-hand side|):
///   gamma_flow:   z gamma_n'/gamma_n = 2(gamma_{n-1} - gamma_{n+1} + 1)
///   norm_flow:    z h_n'/h_n = 2n + 1 - 2(gamma_{n+1} + gamma_n)
///   norm_product: h_n' h_{n-1}' = (n h_{n-1} - 2h_n)^2
struct TodaResidual {
  Real gamma_flow;
  Real norm_flow;
  Real norm_product;
  [[nodiscard]] Real max() const;
};

/// grid holds tables at z - delta, z, z + delta. gamma_flow runs over
/// n = 1..n_max-1, norm_flow over n = 0..n_max-1, norm_product over n = 1..n_max.
TodaResidual check_toda(std::span<const GammaTable> grid);

/// Residual of
///   z^2 [gamma'' + 2(6 gamma - n)(2 gamma - n)]^2 = 4 (z^2 + 2 gamma - n)^2 [(gamma')^2 + 4 gamma (2 gamma - n)^2]
/// with gamma' = (2 gamma_n / z)(gamma_{n-1} - gamma_{n+1} + 1) evaluated
/// analytically at each grid point and gamma'' its central difference;
/// scaled by the larger side. grid as for check_toda, covering n + 1.
Real check_nonlinear_ode(std::span<const GammaTable> grid, int n);

/// delta = z 10^(-working_digits/3), clamped to [1e-6, 1e-3].
Real finite_difference_step(const Real& z, const PrecisionConfig& cfg);

/// Moment-route tables at z - delta, z, z + delta.
std::vector<GammaTable> gamma_grid(const Real& z, const Real& delta, int n_max, const PrecisionConfig& cfg);

/// Result of evaluating a finite-difference residual at delta and delta/2.
struct StepProbe {
  Real residual;
  Real residual_half;
  /// residual / residual_half; about 4 when O(delta^2) truncation dominates.
  Real ratio;
};

/// Evaluates residual_at(delta) and residual_at(delta/2). Throws StepTooLarge
/// when the residual at delta exceeds `acceptable` while halving the step
/// still shrinks it by at least 3x, i.e. truncation error dominates.
StepProbe probe_step(const std::function<Real(const Real&)>& residual_at, const Real& delta,
                     const Real& acceptable);

}  // namespace trunc_hermite
