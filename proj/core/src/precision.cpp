#include "trunc_hermite/precision.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "trunc_hermite/errors.hpp"

namespace trunc_hermite {

PrecisionConfig PrecisionConfig::with_digits(int working_digits, int guard_digits) {
  if (working_digits < 16) {
    throw DomainError("working precision must be at least 16 digits, got " + std::to_string(working_digits));
  }
  if (guard_digits < 0 || guard_digits >= working_digits) {
    throw DomainError("guard digits must lie in [0, working_digits)");
  }
  PrecisionConfig cfg;
  cfg.working_digits = working_digits;
  cfg.guard_digits = guard_digits;
  cfg.target_rel_tol = pow10_neg(working_digits - guard_digits, Digits{working_digits});
  return cfg;
}

PrecisionConfig PrecisionConfig::with_tolerance(int working_digits, int guard_digits, const Real& target_rel_tol) {
  PrecisionConfig cfg = with_digits(working_digits, guard_digits);
  cfg.target_rel_tol = target_rel_tol.at(cfg.digits());
  cfg.validate();
  return cfg;
}

PrecisionConfig PrecisionConfig::for_order(int n_max) { return with_digits(default_working_digits(n_max)); }

PrecisionConfig PrecisionConfig::doubled() const {
  PrecisionConfig cfg = with_digits(2 * working_digits, guard_digits);
  // keep any extra slack the caller granted relative to the floor
  const Real floor = pow10_neg(working_digits - guard_digits, digits());
  if (target_rel_tol.is_finite() && target_rel_tol > floor) {
    cfg.target_rel_tol *= (target_rel_tol / floor).at(cfg.digits());
  }
  return cfg;
}

void PrecisionConfig::validate() const {
  if (working_digits < 16) throw DomainError("working precision must be at least 16 digits");
  if (guard_digits < 0) throw DomainError("guard digits must be non-negative");
  if (!target_rel_tol.is_finite() || target_rel_tol <= 0.0) {
    throw DomainError("target relative tolerance must be positive");
  }
  const Real floor = pow10_neg(working_digits - guard_digits, digits());
  // compare at working precision; the floor itself is admissible
  if (target_rel_tol.at(digits()) < floor) {
    throw DomainError("target relative tolerance is finer than the working precision allows");
  }
}

int default_working_digits(int n_max) {
  if (const char* env = std::getenv(kDigitsEnvVar); env != nullptr && *env != '\0') {
    const std::string_view text(env);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 16) {
      throw DomainError(std::string(kDigitsEnvVar) + " must be an integer >= 16");
    }
    return value;
  }
  return std::max(16, 16 + 2 * std::max(0, n_max));
}

}  // namespace trunc_hermite
