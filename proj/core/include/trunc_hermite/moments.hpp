#pragma once

#include <string_view>
#include <vector>

#include "trunc_hermite/precision.hpp"
#include "trunc_hermite/real.hpp"

namespace trunc_hermite {

/// How an entry of a MomentTable was obtained.
enum class MomentMethod { series, forward_recurrence };

std::string_view to_string(MomentMethod method);
MomentMethod moment_method_from_string(std::string_view text);

/// Even moments u_n(z) = integral_{-z}^{z} x^{2n} e^{-x^2} dx for n = 0..n_max.
///
/// Odd moments vanish and are not stored.
struct MomentTable {
  Real z;
  std::vector<Real> u;
  std::vector<MomentMethod> tags;
  PrecisionConfig precision;

  [[nodiscard]] int n_max() const { return static_cast<int>(u.size()) - 1; }

  /// Checks u_n > 0, u_{n+1} < (n + 1/2) u_n and u_n < Gamma(n + 1/2).
  /// Throws InvariantViolation naming the first failing index.
  void validate() const;
};

/// u_0(z) = sqrt(pi) erf(z).
Real moment_zero(const Real& z, const PrecisionConfig& cfg);

/// u_n(z) = 2/(2n+1) z^{2n+1} e^{-z^2} 1F1(1; n + 3/2; z^2).
Real moment_series(int n, const Real& z, const PrecisionConfig& cfg);

/// Builds u_0..u_{n_max}. The step u_n -> u_{n+1} uses the forward recurrence
/// u_{n+1} = (n + 1/2) u_n - z^{2n+1} e^{-z^2} only when z^2 >= 2n + 3, where
/// the subtracted term is small; otherwise the entry comes from moment_series.
MomentTable build_moment_table(int n_max, const Real& z, const PrecisionConfig& cfg);

/// max_n |2u_{n+2} - (2n+3+2z^2) u_{n+1} + (2n+1) z^2 u_n| / ((2n+3+2z^2) u_{n+1}).
/// Requires at least three entries.
Real check_homogeneous_recurrence(const MomentTable& table);

/// Large-z approximation
///   Gamma(n+1/2) [1 - e^{-z^2} sum_{k=0}^{K} z^{2(n-k)-1} / Gamma(n+1/2-k)]
/// where K is k_max or the index of the smallest term, whichever comes first.
Real moment_ratio_asymptotic(int n, const Real& z, int k_max, const PrecisionConfig& cfg);

}  // namespace trunc_hermite
