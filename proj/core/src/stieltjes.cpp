#include "trunc_hermite/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>

#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/recurrence.hpp"

namespace trunc_hermite {

namespace {

Real largest(std::initializer_list<Real> terms) {
  Real out = abs(*terms.begin());
  for (const Real& t : terms) out = max(out, abs(t));
  return out;
}

Real scaled(const Real& sum, const Real& scale) { return scale.is_zero() ? scale : abs(sum) / scale; }

}  // namespace

int stieltjes_terms_needed(const Real& t, const Real& z, const PrecisionConfig& cfg) {
  const double rho = (z * z / (t * t)).to_double();
  if (!(rho < 1.0)) throw TooCloseToSupport("t lies on or inside the support [-z, z]");
  const double digits = static_cast<double>(cfg.working_digits - cfg.guard_digits) + 2.0;
  return static_cast<int>(std::ceil(digits * std::log(10.0) / -std::log(rho))) + 4;
}

StieltjesSample stieltjes_eval(const Real& t, const Real& z, const MomentTable& table) {
  if (!(z > 0.0)) throw DomainError("z must be positive");
  if (!(abs(t) > z * (1 + kSupportMargin))) {
    throw TooCloseToSupport("|t| = " + abs(t).str(12) + " is within 5% of the support edge z = " + z.str(12) +
                            "; the moment series is not used there");
  }
  const PrecisionConfig& cfg = table.precision;
  const Digits d = cfg.digits();
  const Real td = t.at(d);
  const Real zd = z.at(d);
  const Real inv = 1 / td;
  const Real inv2 = inv * inv;

  StieltjesSample out;
  out.t = td;
  out.z = zd;
  out.s = Real(0, d);
  out.ds = Real(0, d);
  out.d2s = Real(0, d);
  out.d3s = Real(0, d);
  Real power = inv;  // t^{-2n-1}
  Real last_term(0, d);
  Real last_d3(0, d);
  for (int n = 0; n <= table.n_max(); ++n) {
    const Real term = table.u[n] * power;
    const long a = 2L * n + 1;
    out.s += term;
    out.ds -= a * term * inv;
    out.d2s += a * (a + 1) * term * inv2;
    last_d3 = a * (a + 1) * (a + 2) * term * inv2 * inv;
    out.d3s -= last_d3;
    last_term = term;
    power *= inv2;
  }
  out.terms = table.n_max() + 1;

  const Real rho = zd * zd * inv2;
  const long a = 2L * table.n_max() + 1;
  // ratio of consecutive third-derivative terms past the last one
  const Real rho3 = rho * Real(a + 3, d) * (a + 4) / (Real(a, d) * (a + 1));
  if (!(rho3 < 1.0)) {
    throw TailNotConverged("moment table of " + std::to_string(out.terms) +
                           " terms is too short for the third derivative at this t");
  }
  out.tail_bound = abs(last_term) * rho / (1 - rho);
  const Real tail3 = abs(last_d3) * rho3 / (1 - rho3);
  const Real tol = cfg.target_rel_tol;
  if (out.tail_bound > tol * abs(out.s) || tail3 > tol * abs(out.d3s)) {
    throw TailNotConverged("moment series tail bound " + out.tail_bound.str(6) + " exceeds the tolerance; " +
                           std::to_string(stieltjes_terms_needed(td, zd, cfg)) + " moments are needed");
  }
  out.dzs = 2 * td * exp(-zd * zd) / (td * td - zd * zd);
  return out;
}

Real check_t_ode(const StieltjesSample& s, const Real& u0, const Real& u1) {
  const Real f = s.t * s.t - s.z * s.z;
  const Real a = f * s.ds;
  const Real b = 2 * s.t * f * s.s;
  const Real c = -(2 * f - 1) * u0;
  const Real e = -2 * u1;
  return scaled(a + b + c + e, largest({a, b, c, e}));
}

Real check_third_order_ode(const StieltjesSample& s) {
  const Real t2 = s.t * s.t;
  const Real z2 = s.z * s.z;
  const Real a = s.t * (t2 - z2) * s.d3s;
  const Real b = (2 * t2 * t2 - 2 * t2 * z2 + 3 * t2 + z2) * s.d2s;
  const Real c = 2 * s.t * (5 * t2 - z2) * s.ds;
  const Real e = 2 * (3 * t2 + z2) * s.s;
  return scaled(a + b + c + e, largest({a, b, c, e}));
}

Real check_t_ode_derivative(const StieltjesSample& s, const Real& u0) {
  const Real f = s.t * s.t - s.z * s.z;
  const Real a = 2 * s.t * (s.ds + 2 * s.t * s.s);
  const Real b = f * (s.d2s + 2 * s.s + 2 * s.t * s.ds);
  const Real c = -4 * s.t * u0;
  return scaled(a + b + c, largest({a, b, c}));
}

Real check_z_ode(const Real& t, const Real& z, const Real& delta, const std::pair<MomentTable, MomentTable>& tables) {
  const Real s_lo = stieltjes_eval(t, tables.first.z, tables.first).s;
  const Real s_hi = stieltjes_eval(t, tables.second.z, tables.second).s;
  const Real dz = (s_hi - s_lo) / (2 * delta);
  const Real rhs = 2 * t * exp(-z * z);
  return abs((t * t - z * z) * dz - rhs) / abs(rhs);
}

Real check_z_ode_probed(const Real& t, const Real& z, const Real& delta, int n_max, const PrecisionConfig& cfg,
                        const Real& acceptable) {
  const auto at_step = [&](const Real& h) {
    const int n = std::max(n_max, stieltjes_terms_needed(t, z + h, cfg));
    auto tables = std::make_pair(build_moment_table(n, z - h, cfg), build_moment_table(n, z + h, cfg));
    return check_z_ode(t, z, h, tables);
  };
  return probe_step(at_step, delta, acceptable).residual;
}

Real check_moment_flow(const Real& z, const std::pair<MomentTable, MomentTable>& tables) {
  const MomentTable& lo = tables.first;
  const MomentTable& hi = tables.second;
  const int n_max = std::min(lo.n_max(), hi.n_max());
  const Real two_delta = hi.z - lo.z;
  const Real z2 = z * z;
  Real worst(0, lo.precision.digits());
  for (int n = 0; n < n_max; ++n) {
    const Real du = (hi.u[n] - lo.u[n]) / two_delta;
    const Real du_next = (hi.u[n + 1] - lo.u[n + 1]) / two_delta;
    worst = max(worst, abs(du_next - z2 * du) / abs(z2 * du));
  }
  return worst;
}

}  // namespace trunc_hermite
