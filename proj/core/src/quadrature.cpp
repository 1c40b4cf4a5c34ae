#include "trunc_hermite/quadrature.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/polynomials.hpp"

namespace trunc_hermite {

namespace {

constexpr int kSweepsPerPoint = 100;
constexpr int kNewtonIterations = 60;

Real epsilon(Digits d) { return ldexp(Real(1, d), -static_cast<long>(digits_to_bits(d))); }

Real hypot(const Real& a, const Real& b) { return sqrt(a * a + b * b); }

struct Eigen {
  std::vector<Real> values;
  std::vector<Real> first;  // first components of the normalized eigenvectors
};

// Implicit QL with Wilkinson-style shift on a symmetric tridiagonal matrix,
// rotating only the first row of the eigenvector matrix.
std::optional<Eigen> tridiagonal_ql(std::vector<Real> d, std::vector<Real> e, Digits digits) {
  const int n = static_cast<int>(d.size());
  const Real eps = epsilon(digits);
  std::vector<Real> q(n, Real(0, digits));
  q[0] = Real(1, digits);
  int budget = kSweepsPerPoint * n;
  for (int l = 0; l < n; ++l) {
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const Real dd = abs(d[m]) + abs(d[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (--budget < 0) return std::nullopt;
      Real g = (d[l + 1] - d[l]) / (2 * e[l]);
      Real r = hypot(g, Real(1, digits));
      g = d[m] - d[l] + e[l] / (g + (g.sign() >= 0 ? abs(r) : -abs(r)));
      Real s(1, digits), c(1, digits), p(0, digits);
      bool underflow = false;
      int i = m - 1;
      for (; i >= l; --i) {
        Real f = s * e[i];
        const Real b = c * e[i];
        r = hypot(f, g);
        e[i + 1] = r;
        if (r.is_zero()) {
          d[i + 1] -= p;
          e[m] = Real(0, digits);
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = q[i + 1];
        q[i + 1] = s * q[i] + c * f;
        q[i] = c * q[i] - s * f;
      }
      if (underflow && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = Real(0, digits);
    } while (m != l);
  }
  return Eigen{std::move(d), std::move(q)};
}

// Number of eigenvalues below x (Sturm sequence of the zero-diagonal Jacobi matrix).
int sturm_count(const std::vector<Real>& off2, const Real& x, const Real& tiny) {
  int count = 0;
  Real q = x;
  if (q < 0.0) ++count;
  for (std::size_t i = 0; i < off2.size(); ++i) {
    if (abs(q) < tiny) q = tiny;
    q = x - off2[i] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

Eigen bisection_solve(int n, const GammaTable& table, const Real& u0, const Real& bound) {
  const Digits d = table.precision.digits();
  std::vector<Real> off2;
  for (int k = 1; k < n; ++k) off2.push_back(table.gamma[k]);
  const Real tiny = ldexp(Real(1, d), -static_cast<long>(2 * digits_to_bits(d)));
  const Real eps = epsilon(d);
  Eigen out;
  for (int k = 0; k < n; ++k) {
    Real lo = -bound, hi = bound;
    for (int it = 0; it < 4 * static_cast<int>(digits_to_bits(d)); ++it) {
      const Real mid = (lo + hi) / 2;
      if (sturm_count(off2, mid, tiny) > k) {
        hi = mid;
      } else {
        lo = mid;
      }
      if (hi - lo <= eps * (1 + abs(mid))) break;
    }
    out.values.push_back((lo + hi) / 2);
  }
  // Christoffel numbers 1 / sum_j P_j(x)^2 / h_j, expressed as squared first components.
  for (const Real& x : out.values) {
    const PolyEval e = eval_poly(n - 1, x, table);
    Real sum(0, d);
    for (int j = 0; j < n; ++j) sum += e.trace[j] * e.trace[j] / table.h[j];
    out.first.push_back(sqrt(1 / (sum * u0)));
  }
  return out;
}

void symmetrize(std::vector<Real>& nodes, std::vector<Real>& weights) {
  const int n = static_cast<int>(nodes.size());
  for (int k = 0; k < n / 2; ++k) {
    const int j = n - 1 - k;
    const Real x = (nodes[j] - nodes[k]) / 2;
    const Real w = (weights[j] + weights[k]) / 2;
    nodes[k] = -x;
    nodes[j] = x;
    weights[k] = w;
    weights[j] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = Real(0, nodes[n / 2].digits());
}

Real zeta_or_nan(int n, const GammaTable& table) {
  if (n + 1 > table.n_max()) return Real();
  return zeta(n, table);
}

}  // namespace

void QuadratureRule::validate() const {
  if (static_cast<int>(nodes.size()) != n || static_cast<int>(weights.size()) != n) {
    throw InvariantViolation("quadrature rule: node/weight count differs from n");
  }
  for (int k = 0; k < n; ++k) {
    const std::string at = "quadrature rule: node " + std::to_string(k);
    if (!(nodes[k] > -z && nodes[k] < z)) throw InvariantViolation(at + " lies outside (-z, z)");
    if (k > 0 && !(nodes[k] > nodes[k - 1])) throw InvariantViolation(at + " breaks strict ordering");
    if (!(weights[k] > 0.0)) throw InvariantViolation(at + " has a non-positive weight");
    if (nodes[k] != -nodes[n - 1 - k] || weights[k] != weights[n - 1 - k]) {
      throw InvariantViolation(at + " is not paired with its mirror image");
    }
  }
  if (!zeta.is_nan() && !(zeta > z)) throw InvariantViolation("quadrature rule: zeta_n must exceed z");
}

QuadratureRule gauss_rule(int n, const GammaTable& table, const Real& u0) {
  if (n < 1) throw DomainError("a Gauss rule needs at least one point");
  if (n - 1 > table.n_max()) {
    throw DomainError("an " + std::to_string(n) + "-point rule needs gamma_1..gamma_" + std::to_string(n - 1));
  }
  const Digits d = table.precision.digits();
  const Real mass = u0.at(d);
  std::vector<Real> diag(n, Real(0, d));
  std::vector<Real> off(n, Real(0, d));
  for (int k = 1; k < n; ++k) {
    if (!(table.gamma[k] > 0.0)) throw DomainError("Jacobi matrix needs gamma_k > 0");
    off[k - 1] = sqrt(table.gamma[k]);
  }

  std::optional<Eigen> eig = tridiagonal_ql(diag, off, d);
  if (!eig) {
    // Gershgorin bound for the bisection bracket
    Real bound(0, d);
    for (int k = 0; k < n; ++k) {
      const Real left = k > 0 ? off[k - 1] : Real(0, d);
      bound = max(bound, left + off[k]);
    }
    try {
      eig = bisection_solve(n, table, mass, bound + 1);
    } catch (const Error& err) {
      throw EigenFailure(std::string("tridiagonal eigensolver failed after ") + std::to_string(kSweepsPerPoint * n) +
                         " sweeps and bisection fallback failed: " + err.what());
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return eig->values[a] < eig->values[b]; });

  QuadratureRule rule;
  rule.n = n;
  rule.z = table.z;
  rule.precision = table.precision;
  for (int k : order) {
    rule.nodes.push_back(eig->values[k]);
    rule.weights.push_back(mass * eig->first[k] * eig->first[k]);
  }
  symmetrize(rule.nodes, rule.weights);
  for (int k = 0; k < n; ++k) {
    if (!(rule.nodes[k] > -rule.z && rule.nodes[k] < rule.z)) {
      throw InvariantViolation("Gauss node " + rule.nodes[k].str(20) + " lies outside (-z, z)");
    }
  }
  rule.zeta = zeta_or_nan(n, table);
  rule.validate();
  return rule;
}

QuadratureRule zeros_newton_refine(const QuadratureRule& rule, const GammaTable& table) {
  const int n = rule.n;
  const Real scale = abs(eval_poly(n, table.z, table).value);
  const Real limit = 100 * table.precision.target_rel_tol * scale;
  QuadratureRule out = rule;
  for (int k = n / 2; k < n; ++k) {
    Real x = rule.nodes[k];
    PolyEval e = eval_poly(n, x, table);
    Real best = abs(e.value);
    for (int it = 0; it < kNewtonIterations && !best.is_zero(); ++it) {
      const Real trial = x - e.value / e.dvalue;
      const PolyEval te = eval_poly(n, trial, table);
      const Real r = abs(te.value);
      if (!(r < best)) break;
      x = trial;
      e = te;
      best = r;
    }
    if (best > limit) {
      throw NewtonStall("Newton refinement of node " + std::to_string(k) + " stalled at |P_n| = " + best.str(6) +
                        " above " + limit.str(6));
    }
    out.nodes[k] = x;
  }
  for (int k = 0; k < n / 2; ++k) out.nodes[k] = -out.nodes[n - 1 - k];
  if (n % 2 == 1) out.nodes[n / 2] = Real(0, table.precision.digits());
  out.validate();
  return out;
}

Real zeta(int n, const GammaTable& table) {
  if (n < 0) throw DomainError("zeta_n needs n >= 0");
  if (n + 1 > table.n_max()) throw DomainError("zeta_n needs gamma_{n+1}");
  const Real z2 = table.z * table.z;
  const Real zeta2 = z2 + n + 0.5 - table.gamma_at(n) - table.gamma_at(n + 1);
  if (!(zeta2 > z2)) {
    throw InvariantViolation("zeta_" + std::to_string(n) + "^2 <= z^2; the gamma table is corrupt");
  }
  return sqrt(zeta2);
}

Real ElectrostaticReport::max_gradient() const {
  Real worst = gradient.empty() ? Real(0, Digits{16}) : abs(gradient.front());
  for (const Real& g : gradient) worst = max(worst, abs(g));
  return worst;
}

Real external_potential(const Real& x, const Real& z, const Real& zeta_n) {
  const Real x2 = x * x;
  return x2 - log(abs(x2 - z * z)) + log(abs(x2 - zeta_n * zeta_n));
}

ElectrostaticReport electrostatic_check(const QuadratureRule& rule, const GammaTable& table, int samples) {
  const Real zn = rule.zeta.is_nan() ? zeta(rule.n, table) : rule.zeta;
  return electrostatic_check(rule.nodes, rule.z, zn, samples);
}

ElectrostaticReport electrostatic_check(const std::vector<Real>& nodes, const Real& z, const Real& zeta_n,
                                        int samples) {
  const int n = static_cast<int>(nodes.size());
  if (n < 1) throw DomainError("electrostatic check needs at least one charge");
  const Digits d = z.digits();
  ElectrostaticReport report;
  report.energy = Real(0, d);
  for (int k = 0; k < n; ++k) {
    const Real& x = nodes[k];
    Real grad(0, d);
    for (int j = 0; j < n; ++j) {
      if (j != k) grad += 2 / (nodes[j] - x);
    }
    grad += 2 * x - 1 / (x - z) - 1 / (x + z) + 1 / (x - zeta_n) + 1 / (x + zeta_n);
    report.gradient.push_back(grad / n);
    report.energy += external_potential(x, z, zeta_n);
    for (int j = 0; j < k; ++j) report.energy -= 2 * log(abs(x - nodes[j]));
  }
  for (int i = 1; i <= samples; ++i) {
    const Real x = -z + 2 * z * i / (samples + 1);
    report.potential_samples.emplace_back(x, external_potential(x, z, zeta_n));
  }
  return report;
}

}  // namespace trunc_hermite
