#include "trunc_hermite/polynomials.hpp"

#include <string>

#include "trunc_hermite/errors.hpp"

namespace trunc_hermite {

namespace {

void require_gamma(const GammaTable& table, int index, const char* what) {
  if (index > table.n_max()) {
    throw DomainError(std::string(what) + " needs gamma_" + std::to_string(index) + " but the table stops at n = " +
                      std::to_string(table.n_max()));
  }
}

Real p_at(const PolyEval& e, int k) {
  if (k < 0) return Real(0, e.x.digits());
  return e.trace[k];
}

Real singular_tolerance(const Real& x, const Real& z, const PrecisionConfig& cfg) {
  return pow10_neg(cfg.working_digits / 2, cfg.digits()) * (1 + x * x + z * z);
}

Real c_coefficient(int n, const Real& x, const GammaTable& table) {
  return phi(x, table.z) + table.gamma_at(n) + table.gamma_at(n + 1) - n - 0.5;
}

Real l_coefficient(int n, const GammaTable& table) {
  return table.gamma_at(n) + table.gamma_at(n + 1) - n - 0.5;
}

template <typename T>
using Poly = std::vector<T>;

template <typename T, typename Eta>
void fill_alpha(std::vector<std::vector<Poly<T>>>& alpha, int n_max, int k_max, const T& zero, Eta eta) {
  alpha.assign(n_max + 1, std::vector<Poly<T>>(k_max + 1));
  for (int n = 1; n < n_max; ++n) {
    for (int k = 1; k <= k_max; ++k) {
      Poly<T> next(n, zero);
      const Poly<T>& cur = alpha[n][k];
      for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
      next[n - 1] -= eta(n, k);
      for (int j = 1; j < k; ++j) {
        const Poly<T>& older = alpha[n - 1][j];
        const T& e = eta(n, k - j);
        for (std::size_t i = 0; i < older.size(); ++i) {
          T term = older[i];
          term *= e;
          next[i] -= term;
        }
      }
      alpha[n + 1][k] = std::move(next);
    }
  }
}

}  // namespace

PolyEval eval_poly(int n, const Real& x, const GammaTable& table) {
  if (n < 0) throw DomainError("polynomial degree must be non-negative");
  require_gamma(table, n - 1, "eval_poly");
  const Digits d = table.precision.digits();
  PolyEval e;
  e.n = n;
  e.x = x.at(d);
  e.z = table.z;
  e.trace.reserve(n + 1);
  e.trace.emplace_back(1, d);
  Real prev(0, d), cur(1, d);
  Real dprev(0, d), dcur(0, d);
  Real d2prev(0, d), d2cur(0, d);
  for (int k = 0; k < n; ++k) {
    const Real& g = table.gamma[k];
    Real next = e.x * cur - g * prev;
    Real dnext = cur + e.x * dcur - g * dprev;
    Real d2next = 2 * dcur + e.x * d2cur - g * d2prev;
    prev = std::move(cur);
    cur = std::move(next);
    dprev = std::move(dcur);
    dcur = std::move(dnext);
    d2prev = std::move(d2cur);
    d2cur = std::move(d2next);
    e.trace.push_back(cur);
  }
  e.value = std::move(cur);
  e.dvalue = std::move(dcur);
  e.d2value = std::move(d2cur);
  return e;
}

Real phi(const Real& x, const Real& z) { return x * x - z * z; }

Real lambda_coefficient(int n, const GammaTable& table) {
  require_gamma(table, n + 2, "lambda_n");
  const Real z2 = table.z * table.z;
  return (2 * (table.gamma_at(n) + table.gamma_at(n + 1) + table.gamma_at(n + 2) - z2 - 1) - n) *
         table.gamma_at(n + 1);
}

Real tau_coefficient(int n, const GammaTable& table) {
  require_gamma(table, n + 1, "tau_n");
  return 2 * table.gamma_at(n + 1) * table.gamma_at(n) * table.gamma_at(n - 1);
}

StructureCoeffs structure_coeffs(int n, const Real& x, const GammaTable& table) {
  if (n < 1) throw DomainError("structure coefficients need n >= 1");
  require_gamma(table, n + 2, "structure_coeffs");
  const Real xd = x.at(table.precision.digits());
  StructureCoeffs s;
  s.phi = phi(xd, table.z);
  s.psi = 2 * xd * s.phi;
  s.lambda_n = lambda_coefficient(n, table);
  s.tau_n = tau_coefficient(n, table);
  s.C_n = c_coefficient(n, xd, table);
  const Real g = table.gamma_at(n);
  s.A_n = s.phi / (2 * g * s.C_n);
  s.B_n = (n - 2 * g) * xd / (2 * g * s.C_n);
  return s;
}

Real structure_relation_residual(int n, const Real& x, const GammaTable& table) {
  return structure_relation_residual(n, x, table, lambda_coefficient(n, table), tau_coefficient(n, table));
}

Real structure_relation_residual(int n, const Real& x, const GammaTable& table, const Real& lambda_n,
                                 const Real& tau_n) {
  if (n < 0) throw DomainError("structure relation needs n >= 0");
  const PolyEval e = eval_poly(n + 2, x, table);
  const Real lhs = phi(e.x, table.z) * eval_poly(n + 1, x, table).dvalue;
  const Real rhs = (n + 1) * e.value + lambda_n * p_at(e, n) + tau_n * p_at(e, n - 2);
  return abs(lhs - rhs) / (1 + abs(lhs));
}

Real apply_lowering(int n, const Real& x, const GammaTable& table) {
  if (n < 1) throw DomainError("the lowering operator needs n >= 1");
  require_gamma(table, n + 1, "apply_lowering");
  const Real xd = x.at(table.precision.digits());
  const Real c = c_coefficient(n, xd, table);
  if (abs(c) < singular_tolerance(xd, table.z, table.precision)) {
    throw SingularPoint("C_" + std::to_string(n) + "(x) vanishes at x = " + xd.str(20) +
                        "; the lowering representation has a removable singularity there");
  }
  const PolyEval e = eval_poly(n, xd, table);
  const Real g = table.gamma_at(n);
  const Real a = phi(xd, table.z) / (2 * g * c);
  const Real b = (n - 2 * g) * xd / (2 * g * c);
  return a * e.dvalue - b * e.value;
}

OdeTerms holonomic_ode_terms(int n, const Real& x, const GammaTable& table) {
  if (n < 1) throw DomainError("the reduced equation needs n >= 1");
  require_gamma(table, n + 1, "holonomic_ode_terms");
  const PolyEval e = eval_poly(n, x, table);
  const Real& xd = e.x;
  const Real f = phi(xd, table.z);
  const Real c = c_coefficient(n, xd, table);
  const Real g = table.gamma_at(n);
  const Real m = n - 2 * g;
  const Real x2 = xd * xd;
  OdeTerms t;
  t.second = f * c * e.d2value;
  t.first = -2 * xd * ((f - 1) * c + f) * e.dvalue;
  t.zeroth_a = m * ((2 * x2 - 1) * c + 2 * x2) * e.value;
  t.zeroth_b = (4 * g * (c + l_coefficient(n - 1, table)) - m * m) * c * e.value;
  return t;
}

Real holonomic_ode_residual(int n, const Real& x, const GammaTable& table) {
  const OdeTerms t = holonomic_ode_terms(n, x, table);
  const Real scale = max(max(abs(t.second), abs(t.first)), max(abs(t.zeroth_a), abs(t.zeroth_b)));
  if (scale.is_zero()) return scale;
  return abs(t.second + t.first + t.zeroth_a + t.zeroth_b) / scale;
}

Real lf_reduced_residual(int n, const GammaTable& table) {
  if (n < 1) throw DomainError("reduced Laguerre-Freud form needs n >= 1");
  require_gamma(table, n + 1, "lf_reduced_residual");
  const Real g = table.gamma_at(n);
  const Real m = n - 2 * g;
  const Real rhs = table.z * table.z * m * m;
  const Real lhs = 4 * g * l_coefficient(n, table) * l_coefficient(n - 1, table);
  return abs(lhs - rhs) / max(Real(1, table.precision.digits()), rhs);
}

BoundaryResidual boundary_identities_residual(int n, const GammaTable& table) {
  if (n < 1) throw DomainError("boundary identities need n >= 1");
  require_gamma(table, n + 1, "boundary_identities_residual");
  const Real& z = table.z;
  const Real weight = exp(-z * z);
  const PolyEval e = eval_poly(n, z, table);
  const Real g = table.gamma_at(n);

  const Real lhs1 = e.value * p_at(e, n - 1) * weight;
  const Real rhs1 = (0.5 * n - g) * table.h_at(n - 1);
  const Real scale1 = max(abs(lhs1), abs(rhs1));

  const Real lhs2 = e.value * e.value * weight;
  const Real lead = (2 * n + 1) * table.h_at(n) / (2 * z);
  const Real tail = (table.h_at(n + 1) + g * g * table.h_at(n - 1)) / z;
  const Real rhs2 = lead - tail;
  const Real scale2 = max(abs(lhs2), max(lead, tail));

  BoundaryResidual r;
  r.r1 = scale1.is_zero() ? scale1 : abs(lhs1 - rhs1) / scale1;
  r.r2 = scale2.is_zero() ? scale2 : abs(lhs2 - rhs2) / scale2;
  return r;
}

Real chebyshev_asymptotic(int n, const Real& x, const Real& z) {
  if (n < 0) throw DomainError("degree must be non-negative");
  if (!(z > 0.0)) throw DomainError("z must be positive");
  if (abs(x) >= z) {
    const Real root = sqrt(max(x * x - z * z, Real(0, x.digits())));
    const Real plus = (x + root) / 2;
    const Real minus = (x - root) / 2;
    return pow(plus, n) + pow(minus, n);
  }
  return 2 * pow(z / 2, n) * cos(n * acos(x / z));
}

const std::vector<Real>& AlphaTable::at(int n, int k) const {
  if (n < 0 || n > n_max || k < 1 || k > k_max) throw DomainError("alpha index outside the table");
  return value[n][k];
}

const std::vector<mpq_class>& AlphaTable::exact_at(int n, int k) const {
  if (!exact) throw DomainError("alpha table was built in working precision");
  if (n < 0 || n > n_max || k < 1 || k > k_max) throw DomainError("alpha index outside the table");
  return rational[n][k];
}

AlphaTable build_alpha_table(int n_max, int k_max, const EtaTable& eta) {
  if (n_max < 0 || k_max < 1) throw DomainError("alpha table needs n_max >= 0 and k_max >= 1");
  if (n_max - 1 > eta.n_max || k_max > eta.k_max) {
    throw DomainError("alpha table up to n = " + std::to_string(n_max) + ", k = " + std::to_string(k_max) +
                      " needs eta rows up to n - 1 and columns up to k");
  }
  AlphaTable table;
  table.n_max = n_max;
  table.k_max = k_max;
  table.exact = eta.exact;
  if (eta.exact) {
    fill_alpha(table.rational, n_max, k_max, mpq_class(0), [&](int n, int k) -> const mpq_class& {
      return eta.exact_at(n, k);
    });
    const Digits d = eta.value[0][0].digits();
    table.value.assign(n_max + 1, std::vector<std::vector<Real>>(k_max + 1));
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 1; k <= k_max; ++k) {
        for (const mpq_class& q : table.rational[n][k]) {
          Real r(0, d);
          mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
          table.value[n][k].push_back(std::move(r));
        }
      }
    }
  } else {
    const Digits d = eta.value[0][0].digits();
    fill_alpha(table.value, n_max, k_max, Real(0, d), [&](int n, int k) -> const Real& { return eta.at(n, k); });
  }
  return table;
}

Real alpha_eval(int n, int k, const Real& x, const AlphaTable& table) {
  const std::vector<Real>& coeffs = table.at(n, k);
  Real sum(0, x.digits());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * x + *it;
  return sum;
}

Real poly_series(int n, const Real& x, const Real& z, int k_max, const AlphaTable& table) {
  if (k_max < 0 || k_max > table.k_max) throw DomainError("series order outside the alpha table");
  const Real z2 = z * z;
  Real power = z2;
  Real sum = pow(x, n);
  for (int k = 1; k <= k_max; ++k) {
    sum += alpha_eval(n, k, x, table) * power;
    power *= z2;
  }
  return sum;
}

}  // namespace trunc_hermite
