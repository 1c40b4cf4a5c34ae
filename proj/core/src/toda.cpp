#include <algorithm>
#include <string>

#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/recurrence.hpp"

namespace trunc_hermite {

namespace {

struct Stencil {
  const GammaTable& lo;
  const GammaTable& mid;
  const GammaTable& hi;
  Real delta;
  int n_max;
};

Stencil make_stencil(std::span<const GammaTable> grid) {
  if (grid.size() != 3) throw DomainError("finite-difference checks need tables at z - delta, z, z + delta");
  const Real delta = (grid[2].z - grid[0].z) / 2;
  if (!(delta > 0.0)) throw DomainError("grid must be ordered z - delta, z, z + delta");
  const Real skew = abs(grid[1].z - grid[0].z - delta);
  if (!(skew <= delta * 1e-6)) throw DomainError("grid must be symmetric about its middle point");
  const int n_max = std::min({grid[0].n_max(), grid[1].n_max(), grid[2].n_max()});
  return {grid[0], grid[1], grid[2], delta, n_max};
}

// (2 gamma_n / z)(gamma_{n-1} - gamma_{n+1} + 1)
Real gamma_derivative(const GammaTable& t, int n) {
  return 2 * t.gamma_at(n) / t.z * (t.gamma_at(n - 1) - t.gamma_at(n + 1) + 1);
}

}  // namespace

Real TodaResidual::max() const { return trunc_hermite::max(gamma_flow, trunc_hermite::max(norm_flow, norm_product)); }

TodaResidual check_toda(std::span<const GammaTable> grid) {
  const Stencil s = make_stencil(grid);
  const Digits d = s.mid.precision.digits();
  const Real& z = s.mid.z;
  const Real two_delta = 2 * s.delta;
  const Real one(1, d);
  TodaResidual out{Real(0, d), Real(0, d), Real(0, d)};

  for (int n = 1; n + 1 <= s.n_max; ++n) {
    const Real dg = (s.hi.gamma_at(n) - s.lo.gamma_at(n)) / two_delta;
    const Real expected = 2 * (s.mid.gamma_at(n - 1) - s.mid.gamma_at(n + 1) + 1);
    out.gamma_flow = max(out.gamma_flow, abs(z * dg / s.mid.gamma_at(n) - expected) / max(one, abs(expected)));
  }
  for (int n = 0; n + 1 <= s.n_max; ++n) {
    const Real dh = (s.hi.h_at(n) - s.lo.h_at(n)) / two_delta;
    const Real expected = 2 * n + 1 - 2 * (s.mid.gamma_at(n + 1) + s.mid.gamma_at(n));
    out.norm_flow = max(out.norm_flow, abs(z * dh / s.mid.h_at(n) - expected) / max(one, abs(expected)));
  }
  for (int n = 1; n <= s.n_max; ++n) {
    const Real dh = (s.hi.h_at(n) - s.lo.h_at(n)) / two_delta;
    const Real dh_prev = (s.hi.h_at(n - 1) - s.lo.h_at(n - 1)) / two_delta;
    const Real base = n * s.mid.h_at(n - 1) - 2 * s.mid.h_at(n);
    const Real rhs = base * base;
    out.norm_product = max(out.norm_product, abs(dh * dh_prev - rhs) / rhs);
  }
  return out;
}

Real check_nonlinear_ode(std::span<const GammaTable> grid, int n) {
  const Stencil s = make_stencil(grid);
  if (n < 1 || n + 1 > s.n_max) {
    throw DomainError("nonlinear ODE check for n = " + std::to_string(n) + " needs gamma_{n+1} on every grid table");
  }
  const Real& z = s.mid.z;
  const Real z2 = z * z;
  const Real g = s.mid.gamma_at(n);
  const Real dg = gamma_derivative(s.mid, n);
  const Real d2g = (gamma_derivative(s.hi, n) - gamma_derivative(s.lo, n)) / (2 * s.delta);
  const Real a = 2 * g - n;
  const Real inner_l = d2g + 2 * (6 * g - n) * a;
  const Real lhs = z2 * inner_l * inner_l;
  const Real outer = z2 + a;
  const Real rhs = 4 * outer * outer * (dg * dg + 4 * g * a * a);
  const Real scale = max(abs(lhs), abs(rhs));
  if (scale.is_zero()) return Real(0, s.mid.precision.digits());
  return abs(lhs - rhs) / scale;
}

Real finite_difference_step(const Real& z, const PrecisionConfig& cfg) {
  const Digits d = cfg.digits();
  const Real raw = z.at(d) * pow(Real(10, d), Real(-cfg.working_digits, d) / 3);
  return min(max(raw, Real(1e-6, d)), Real(1e-3, d));
}

std::vector<GammaTable> gamma_grid(const Real& z, const Real& delta, int n_max, const PrecisionConfig& cfg) {
  if (!(delta > 0.0)) throw DomainError("finite-difference step must be positive");
  if (!(z > delta)) throw DomainError("finite-difference grid would reach z <= 0");
  const Digits d = cfg.digits();
  const Real zd = z.at(d);
  const Real dd = delta.at(d);
  std::vector<GammaTable> grid;
  grid.reserve(3);
  for (const Real& point : {zd - dd, zd, zd + dd}) grid.push_back(build_gamma_table(n_max, point, cfg));
  return grid;
}

StepProbe probe_step(const std::function<Real(const Real&)>& residual_at, const Real& delta, const Real& acceptable) {
  StepProbe probe;
  probe.residual = residual_at(delta);
  probe.residual_half = residual_at(delta / 2);
  probe.ratio = probe.residual_half.is_zero() ? Real(0, delta.digits()) : probe.residual / probe.residual_half;
  if (probe.residual > acceptable && probe.ratio >= 3.0) {
    throw StepTooLarge("finite-difference residual " + probe.residual.str(6) + " at step " + delta.str(6) +
                       " shrinks by " + probe.ratio.str(4) + "x on halving; truncation error dominates, reduce the step");
  }
  return probe;
}

}  // namespace trunc_hermite
