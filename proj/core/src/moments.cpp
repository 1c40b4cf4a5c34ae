#include "trunc_hermite/moments.hpp"

#include <string>

#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/special_functions.hpp"

namespace trunc_hermite {

std::string_view to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::series:
      return "series";
    case MomentMethod::forward_recurrence:
      return "forward_recurrence";
  }
  return "unknown";
}

MomentMethod moment_method_from_string(std::string_view text) {
  if (text == "series") return MomentMethod::series;
  if (text == "forward_recurrence") return MomentMethod::forward_recurrence;
  throw DomainError("unknown moment method '" + std::string(text) + "'");
}

namespace {

void require_positive(const Real& z) {
  if (!(z > 0.0)) throw DomainError("z must be positive");
}

}  // namespace

void MomentTable::validate() const {
  if (!(z > 0.0)) throw InvariantViolation("moment table: z must be positive");
  if (u.empty()) throw InvariantViolation("moment table is empty");
  if (tags.size() != u.size()) throw InvariantViolation("moment table: tag count mismatch");
  const Digits d = precision.digits();
  for (int n = 0; n <= n_max(); ++n) {
    if (!(u[n] > 0.0)) {
      throw InvariantViolation("moment table: u[" + std::to_string(n) + "] is not positive");
    }
    if (!(u[n] < tgamma(Real(n, d) + 0.5))) {
      throw InvariantViolation("moment table: u[" + std::to_string(n) + "] exceeds Gamma(n + 1/2)");
    }
    if (n > 0 && !(u[n] < (n - 0.5) * u[n - 1])) {
      throw InvariantViolation("moment table: u[" + std::to_string(n) + "] violates u[n] < (n - 1/2) u[n-1]");
    }
  }
}

Real moment_zero(const Real& z, const PrecisionConfig& cfg) {
  require_positive(z);
  return sqrt(pi(cfg.digits())) * erf(z.at(cfg.digits()), cfg);
}

Real moment_series(int n, const Real& z, const PrecisionConfig& cfg) {
  require_positive(z);
  if (n < 0) throw DomainError("moment index must be non-negative");
  const Digits d = cfg.digits();
  const Real zd = z.at(d);
  const Real z2 = zd * zd;
  const Real b = Real(n, d) + 1.5;
  const Real f = hyp1f1_1(b, z2, cfg);
  return 2 * pow(zd, 2L * n + 1) * exp(-z2) * f / (2 * n + 1);
}

MomentTable build_moment_table(int n_max, const Real& z, const PrecisionConfig& cfg) {
  require_positive(z);
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  cfg.validate();
  const Digits d = cfg.digits();
  MomentTable table;
  table.z = z.at(d);
  table.precision = cfg;
  table.u.reserve(n_max + 1);
  table.tags.reserve(n_max + 1);

  const Real z2 = table.z * table.z;
  const Real ez2 = exp(-z2);
  table.u.push_back(moment_zero(table.z, cfg));
  table.tags.push_back(MomentMethod::series);
  // z^{2n+1} e^{-z^2}, advanced by z^2 per step
  Real boundary = table.z * ez2;
  for (int n = 0; n < n_max; ++n) {
    if (z2 >= 2.0 * n + 3.0) {
      table.u.push_back((n + 0.5) * table.u[n] - boundary);
      table.tags.push_back(MomentMethod::forward_recurrence);
    } else {
      table.u.push_back(moment_series(n + 1, table.z, cfg));
      table.tags.push_back(MomentMethod::series);
    }
    boundary *= z2;
  }
  table.validate();
  return table;
}

Real check_homogeneous_recurrence(const MomentTable& table) {
  if (table.u.size() < 3) throw DomainError("homogeneous recurrence check needs at least three moments");
  const Real z2 = table.z * table.z;
  Real worst(0, table.precision.digits());
  for (int n = 0; n + 2 <= table.n_max(); ++n) {
    const Real coeff = 2 * n + 3 + 2 * z2;
    const Real residual = 2 * table.u[n + 2] - coeff * table.u[n + 1] + (2 * n + 1) * z2 * table.u[n];
    worst = max(worst, abs(residual) / (coeff * table.u[n + 1]));
  }
  return worst;
}

Real moment_ratio_asymptotic(int n, const Real& z, int k_max, const PrecisionConfig& cfg) {
  require_positive(z);
  if (n < 0 || k_max < 0) throw DomainError("n and k_max must be non-negative");
  const Digits d = cfg.digits();
  const Real zd = z.at(d);
  const Real z2 = zd * zd;
  const Real a = Real(n, d) + 0.5;
  Real sum(0, d);
  Real previous_magnitude;
  for (int k = 0; k <= k_max; ++k) {
    const Real term = pow(zd, 2L * (n - k) - 1) * reciprocal_gamma(a - k);
    const Real magnitude = abs(term);
    // optimal truncation: stop before the terms start growing again
    if (k > 0 && magnitude > previous_magnitude) break;
    sum += term;
    previous_magnitude = magnitude;
  }
  return tgamma(a) * (1 - exp(-z2) * sum);
}

}  // namespace trunc_hermite
