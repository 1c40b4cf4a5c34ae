#pragma once

#include <utility>

#include "trunc_hermite/moments.hpp"

namespace trunc_hermite {

/// Relative distance from the support below which evaluation is refused.
inline constexpr double kSupportMargin = 0.05;

/// S(t; z) = sum_n u_n t^{-2n-1} and its derivatives at one point.
struct StieltjesSample {
  Real t;
  Real z;
  Real s;
  Real ds;
  Real d2s;
  Real d3s;
  /// 2t e^{-z^2} / (t^2 - z^2).
  Real dzs;
  /// Upper bound on |S - partial sum| from u_{n+1} <= z^2 u_n.
  Real tail_bound;
  int terms = 0;
};

/// Term-wise summation over every moment in the table.
///
/// Throws TooCloseToSupport when |t| <= z (1 + kSupportMargin) and
/// TailNotConverged when the tail bound of S or of its third derivative
/// exceeds target_rel_tol relative to the computed value.
StieltjesSample stieltjes_eval(const Real& t, const Real& z, const MomentTable& table);

/// Number of moments needed so that the tail after them falls below
/// target_rel_tol at |t| (bounded ratio (z/t)^2).
int stieltjes_terms_needed(const Real& t, const Real& z, const PrecisionConfig& cfg);

/// phi S' + psi S - (2 phi - 1) u0 - 2 u1 with phi = t^2 - z^2, psi = 2t phi,
/// divided by the largest term magnitude.
Real check_t_ode(const StieltjesSample& sample, const Real& u0, const Real& u1);

/// t(t^2 - z^2) S''' + (2t^4 - 2t^2 z^2 + 3t^2 + z^2) S'' + 2t(5t^2 - z^2) S' + 2(3t^2 + z^2) S,
/// divided by the largest term magnitude.
Real check_third_order_ode(const StieltjesSample& sample);

/// d/dt[(t^2 - z^2)(S' + 2tS)] against 4t u0, relative to the largest term.
Real check_t_ode_derivative(const StieltjesSample& sample, const Real& u0);

/// (t^2 - z^2) [S(t; z+delta) - S(t; z-delta)] / (2 delta) against 2t e^{-z^2},
/// relative to 2|t| e^{-z^2}. tables = (moments at z - delta, moments at z + delta).
Real check_z_ode(const Real& t, const Real& z, const Real& delta,
                 const std::pair<MomentTable, MomentTable>& tables);

/// Builds the moment tables itself and applies the halving probe of
/// probe_step: throws StepTooLarge when the residual at delta exceeds
/// `acceptable` while truncation error dominates.
Real check_z_ode_probed(const Real& t, const Real& z, const Real& delta, int n_max, const PrecisionConfig& cfg,
                        const Real& acceptable);

/// max_n |u_{n+1}' - z^2 u_n'| / (z^2 |u_n'|) with central differences;
/// tables = (moments at z - delta, moments at z + delta).
Real check_moment_flow(const Real& z, const std::pair<MomentTable, MomentTable>& tables);

}  // namespace trunc_hermite
