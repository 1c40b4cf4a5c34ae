#pragma once

#include "trunc_hermite/real.hpp"

namespace trunc_hermite {

/// Environment variable that overrides the default working precision.
inline constexpr const char* kDigitsEnvVar = "TRUNC_HERMITE_DIGITS";

/// Working precision and output tolerance shared by every module.
///
/// Invariants: working_digits >= 16, guard_digits >= 0 and
/// target_rel_tol >= 10^(guard_digits - working_digits).
struct PrecisionConfig {
  int working_digits = 56;
  int guard_digits = 4;
  Real target_rel_tol;

  /// Config whose tolerance is exactly 10^(guard_digits - working_digits).
  static PrecisionConfig with_digits(int working_digits, int guard_digits = 4);

  /// Explicit tolerance; throws DomainError when the invariants fail.
  static PrecisionConfig with_tolerance(int working_digits, int guard_digits, const Real& target_rel_tol);

  /// Default for computing recurrence data up to index n_max: 16 + 2 n_max
  /// digits, overridable through TRUNC_HERMITE_DIGITS.
  static PrecisionConfig for_order(int n_max);

  [[nodiscard]] Digits digits() const { return Digits{working_digits}; }

  /// Same guard and relative slack at twice the working digits.
  [[nodiscard]] PrecisionConfig doubled() const;

  /// Constant at working precision.
  template <typename S>
  [[nodiscard]] Real real(S value) const {
    return Real(value, digits());
  }

  void validate() const;
};

/// 16 + 2 n_max digits unless TRUNC_HERMITE_DIGITS is set to an integer >= 16.
int default_working_digits(int n_max);

}  // namespace trunc_hermite
