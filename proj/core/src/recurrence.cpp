#include "trunc_hermite/recurrence.hpp"

#include <algorithm>
#include <string>

#include "trunc_hermite/errors.hpp"

namespace trunc_hermite {

std::string_view to_string(GammaMethod method) {
  switch (method) {
    case GammaMethod::moments:
      return "moments";
    case GammaMethod::laguerre_freud:
      return "laguerre_freud";
    case GammaMethod::series:
      return "series";
    case GammaMethod::asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

GammaMethod gamma_method_from_string(std::string_view text) {
  if (text == "moments") return GammaMethod::moments;
  if (text == "laguerre_freud") return GammaMethod::laguerre_freud;
  if (text == "series") return GammaMethod::series;
  if (text == "asymptotic") return GammaMethod::asymptotic;
  throw DomainError("unknown gamma method '" + std::string(text) + "'");
}

Real GammaTable::gamma_at(int n) const {
  if (n <= 0) return Real(0, precision.digits());
  if (n > n_max()) {
    throw DomainError("gamma_" + std::to_string(n) + " requested from a table covering n <= " +
                      std::to_string(n_max()));
  }
  return gamma[n];
}

const Real& GammaTable::h_at(int n) const {
  if (n < 0 || n >= static_cast<int>(h.size())) {
    throw DomainError("h_" + std::to_string(n) + " is outside the table");
  }
  return h[n];
}

void GammaTable::validate() const {
  if (!(z > 0.0)) throw InvariantViolation("gamma table: z must be positive");
  if (gamma.empty() || !gamma[0].is_zero()) throw InvariantViolation("gamma table: gamma_0 must be 0");
  if (h.size() != gamma.size()) throw InvariantViolation("gamma table: gamma and h lengths differ");
  if (!(h[0] > 0.0)) throw InvariantViolation("gamma table: h_0 must be positive");
  const Real slack = 100 * precision.target_rel_tol;
  for (int n = 1; n <= n_max(); ++n) {
    const std::string at = "gamma table: index " + std::to_string(n);
    if (!(gamma[n] > 0.0)) throw InvariantViolation(at + ": gamma_n must be positive");
    if (!(gamma[n] < 0.5 * n)) throw InvariantViolation(at + ": gamma_n must be below n/2");
    if (!(abs(h[n] - gamma[n] * h[n - 1]) <= slack * abs(h[n]))) {
      throw InvariantViolation(at + ": h_n != gamma_n h_{n-1}");
    }
  }
}

GammaTable make_gamma_table(const Real& z, std::span<const Real> gamma_1_to_n, const Real& h0, GammaMethod method,
                            const PrecisionConfig& cfg) {
  const Digits d = cfg.digits();
  GammaTable table;
  table.z = z.at(d);
  table.method = method;
  table.precision = cfg;
  table.gamma.reserve(gamma_1_to_n.size() + 1);
  table.h.reserve(gamma_1_to_n.size() + 1);
  table.gamma.emplace_back(0, d);
  table.h.push_back(h0.at(d));
  for (const Real& g : gamma_1_to_n) {
    table.gamma.push_back(g.at(d));
    table.h.push_back(table.h.back() * table.gamma.back());
  }
  return table;
}

AuxSequences compute_aux_sequences(const GammaTable& table) {
  const int n_max = table.n_max();
  const Digits d = table.precision.digits();
  const Real z2 = table.z * table.z;
  AuxSequences aux;
  aux.c.assign(n_max + 1, Real(0, d));
  aux.d.assign(n_max + 1, Real(0, d));
  aux.g.reserve(n_max + 1);
  for (int n = 2; n <= n_max; ++n) aux.c[n] = aux.c[n - 1] + table.gamma[n - 1];
  for (int n = 4; n <= n_max; ++n) aux.d[n] = aux.d[n - 1] + table.gamma[n - 1] * aux.c[n - 2];
  for (int n = 0; n <= n_max; ++n) aux.g.push_back(0.5 * n - table.gamma[n]);
  for (int n = 0; n < n_max; ++n) {
    aux.l.push_back(table.gamma[n] + table.gamma[n + 1] - n - 0.5);
    aux.zeta2.push_back(z2 - aux.l.back());
  }
  return aux;
}

GammaTable gammas_from_moments(const MomentTable& moments, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  if (n_max > moments.n_max()) {
    throw DomainError("gamma_1..gamma_" + std::to_string(n_max) + " need moments u_0..u_" + std::to_string(n_max));
  }
  const PrecisionConfig& cfg = moments.precision;
  const Digits d = cfg.digits();
  const int width = 2 * n_max + 1;

  // sigma_{k,l} = L[P_k x^l]; rows k-2, k-1 and k are kept.
  std::vector<Real> previous(width + 1, Real(0, d));
  std::vector<Real> current(width + 1, Real(0, d));
  for (int l = 0; l < width; ++l) {
    if (l % 2 == 0) current[l] = moments.u[l / 2].at(d);
  }
  std::vector<Real> next(width + 1, Real(0, d));

  GammaTable table;
  table.z = moments.z.at(d);
  table.method = GammaMethod::moments;
  table.precision = cfg;
  table.gamma.emplace_back(0, d);
  table.h.push_back(current[0]);

  for (int k = 1; k <= n_max; ++k) {
    const Real& beta = table.gamma[k - 1];  // gamma_0 = 0 kills the sigma_{-1} row
    for (int l = k; l <= 2 * n_max - k; ++l) {
      if ((k + l) % 2 != 0) {
        next[l] = Real(0, d);
        continue;
      }
      next[l] = current[l + 1] - beta * previous[l];
    }
    const Real& norm = next[k];
    if (!(norm > 0.0)) {
      throw PrecisionExhausted("moment route lost all significant digits at n = " + std::to_string(k) +
                                   " (norm h_n is not positive); raise the working precision",
                               k);
    }
    Real gamma = norm / table.h[k - 1];
    if (!(gamma < 0.5 * k)) {
      throw PrecisionExhausted("moment route produced gamma_" + std::to_string(k) +
                                   " outside (0, n/2); raise the working precision",
                               k);
    }
    table.gamma.push_back(std::move(gamma));
    table.h.push_back(norm);
    std::swap(previous, current);
    std::swap(current, next);
  }
  return table;
}

GammaTable build_gamma_table(int n_max, const Real& z, const PrecisionConfig& cfg) {
  return gammas_from_moments(build_moment_table(n_max, z, cfg), n_max);
}

GammaTable gammas_laguerre_freud(const Real& z, const Real& gamma1, int n_max, const PrecisionConfig& cfg) {
  if (!(z > 0.0)) throw DomainError("z must be positive");
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  const Digits d = cfg.digits();
  const Real zd = z.at(d);
  const Real z2 = zd * zd;

  std::vector<Real> gamma;
  gamma.reserve(n_max + 1);
  gamma.emplace_back(0, d);
  gamma.push_back(gamma1.at(d));
  if (!(gamma[1] > 0.0 && gamma[1] < 0.5)) {
    throw Blowup("Laguerre-Freud seed gamma_1 lies outside (0, 1/2)", 1);
  }
  for (int n = 1; n < n_max; ++n) {
    const Real g = 0.5 * n - gamma[n];
    const Real denominator = gamma[n] * (n - 0.5 - gamma[n] - gamma[n - 1]);
    Real next = n + 0.5 - gamma[n] - z2 * g * g / denominator;
    if (!(next > 0.0 && next < 0.5 * (n + 1))) {
      throw Blowup("Laguerre-Freud forward recursion left (0, n/2) at n = " + std::to_string(n + 1), n + 1);
    }
    gamma.push_back(std::move(next));
  }
  const std::span<const Real> tail(gamma.data() + 1, gamma.size() - 1);
  return make_gamma_table(zd, tail, moment_zero(zd, cfg), GammaMethod::laguerre_freud, cfg);
}

Real check_laguerre_freud(const GammaTable& table) {
  const Real z2 = table.z * table.z;
  Real worst(0, table.precision.digits());
  for (int n = 1; n + 1 <= table.n_max(); ++n) {
    const Real g = table.gamma_at(n);
    const Real ln = g + table.gamma_at(n + 1) - n - 0.5;
    const Real ln_prev = table.gamma_at(n - 1) + g - n + 0.5;
    const Real rhs = z2 * (0.5 * n - g) * (0.5 * n - g);
    const Real residual = abs(g * ln * ln_prev - rhs);
    worst = max(worst, residual / max(Real(1, table.precision.digits()), rhs));
  }
  return worst;
}

Real check_laguerre_freud_order2(const GammaTable& table) {
  const Digits d = table.precision.digits();
  const Real z2 = table.z * table.z;
  const Real scale = max(Real(1, d), z2);
  Real worst(0, d);
  for (int n = 0; n + 2 <= table.n_max(); ++n) {
    const Real gm = table.gamma_at(n - 1);
    const Real g0 = table.gamma_at(n);
    const Real g1 = table.gamma_at(n + 1);
    const Real g2 = table.gamma_at(n + 2);
    const Real residual = z2 / 2 - g0 * (gm + g0 - z2 + 0.5 - n) + g1 * (g1 + g2 - z2 - n - 1.5);
    worst = max(worst, abs(residual) / scale);
  }
  return worst;
}

Real check_laguerre_freud_g(const GammaTable& table) {
  const Digits d = table.precision.digits();
  const Real z2 = table.z * table.z;
  const auto g = [&](int n) { return 0.5 * n - table.gamma_at(n); };
  Real worst(0, d);
  for (int n = 1; n + 1 <= table.n_max(); ++n) {
    const Real gn = g(n);
    const Real rhs = z2 * gn * gn;
    const Real lhs = (0.5 * n - gn) * (gn + g(n + 1)) * (gn + g(n - 1));
    worst = max(worst, abs(lhs - rhs) / max(Real(1, d), rhs));
  }
  return worst;
}

Real gamma_asymptotic(int n, const Real& z) {
  if (n < 1) throw DomainError("gamma_asymptotic requires n >= 1");
  const Real z2 = z * z;
  const Real z4 = z2 * z2;
  const Real inv = 1 / Real(n, z.digits());
  const Real inv2 = inv * inv;
  return z2 / 4 + z2 / 16 * inv2 + z4 / 16 * inv2 * inv + z2 / 64 * (1 + 3 * z4) * inv2 * inv2;
}

Real g_asymptotic(int n, const Real& z) { return 0.5 * n - gamma_asymptotic(n, z); }

LargeNCoefficients large_n_coefficients(const Real& z) {
  const Digits d = z.digits();
  return {Real(0.5, d), -(z * z) / 4, Real(0, d)};
}

}  // namespace trunc_hermite
