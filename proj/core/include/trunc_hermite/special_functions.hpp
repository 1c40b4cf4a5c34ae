#pragma once

#include "trunc_hermite/precision.hpp"
#include "trunc_hermite/real.hpp"

namespace trunc_hermite {

/// Error function at the working precision of cfg.
///
/// |x| <= 3 uses the positive-term series
///   erf(x) = 2/sqrt(pi) x e^{-x^2} sum_k (2x^2)^k / (1*3*...*(2k+1)),
/// larger |x| uses 1 - erfc(x) with erfc from its Laplace continued fraction.
/// Odd by construction: erf(-x) == -erf(x) bit for bit.
Real erf(const Real& x, const PrecisionConfig& cfg);

/// Unregularized lower incomplete gamma integral_0^x t^{a-1} e^{-t} dt.
///
/// Series for x < a + 1, Gamma(a) minus the Legendre continued fraction for
/// the upper function otherwise. Throws DomainError for a <= 0 or x < 0 and
/// PrecisionExhausted when the continued fraction fails to converge.
Real lower_incomplete_gamma(const Real& a, const Real& x, const PrecisionConfig& cfg);

/// 1F1(1; b; x) = sum_k x^k / (b)_k for b > 0, x >= 0.
///
/// Every term is positive; summation stops once a term falls below
/// target_rel_tol times the partial sum. Throws DomainError for b <= 0 or
/// x < 0, PrecisionExhausted past one million terms.
Real hyp1f1_1(const Real& b, const Real& x, const PrecisionConfig& cfg);

}  // namespace trunc_hermite
