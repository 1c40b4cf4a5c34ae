#include "verify.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <functional>
#include <sstream>

#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/moments.hpp"
#include "trunc_hermite/polynomials.hpp"
#include "trunc_hermite/quadrature.hpp"
#include "trunc_hermite/stieltjes.hpp"

namespace trunc_hermite::cli {

namespace {

constexpr int kGridPoints = 9;
constexpr int kMaclaurinOrder = 60;
constexpr int kForwardSteps = 8;

class Suite {
 public:
  explicit Suite(VerifyReport& report) : report_(report) {}

  void run(const std::string& name, double tolerance, const std::function<Real()>& check) {
    CheckRecord record;
    record.name = name;
    std::ostringstream tol;
    tol << tolerance;
    record.tolerance = tol.str();
    const auto start = std::chrono::steady_clock::now();
    try {
      const Real residual = check();
      record.max_residual = residual.str(6);
      record.pass = residual.is_finite() && residual <= tolerance;
    } catch (const Error& e) {
      record.max_residual = std::string("error: ") + e.what();
      record.pass = false;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    record.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    report_.checks.push_back(std::move(record));
  }

 private:
  VerifyReport& report_;
};

std::vector<Real> x_grid(const Real& z) {
  std::vector<Real> xs;
  for (int i = 0; i < kGridPoints; ++i) xs.push_back(-2 * z + 4 * z * i / (kGridPoints - 1) + z / 7);
  return xs;
}

}  // namespace

VerifyReport run_verify(const std::string& z_text, const Real& z, int n_max, const PrecisionConfig& cfg,
                        const GammaTable& table) {
  VerifyReport report;
  report.z = z_text;
  report.n_max = n_max;
  report.digits = cfg.working_digits;
  Suite suite(report);
  const Digits d = cfg.digits();
  const std::vector<Real> xs = x_grid(z);
  const MomentTable moments = build_moment_table(n_max + 2, z, cfg);
  const Real zero(0, d);

  suite.run("moment_recurrence", 1e-10, [&] { return check_homogeneous_recurrence(moments); });
  suite.run("laguerre_freud", 1e-10, [&] { return check_laguerre_freud(table); });
  suite.run("laguerre_freud_order2", 1e-10, [&] { return check_laguerre_freud_order2(table); });
  suite.run("laguerre_freud_g", 1e-10, [&] { return check_laguerre_freud_g(table); });
  suite.run("laguerre_freud_forward", 1e-10, [&] {
    const int steps = std::min(n_max + 1, kForwardSteps);
    if (steps < 1) return zero;
    const GammaTable forward = gammas_laguerre_freud(z, table.gamma[1], steps, cfg);
    Real worst = zero;
    for (int n = 1; n <= steps; ++n) worst = max(worst, abs(forward.gamma[n] - table.gamma[n]) / table.gamma[n]);
    return worst;
  });
  suite.run("structure_relation", 1e-10, [&] {
    Real worst = zero;
    for (int n = 0; n + 1 <= n_max; ++n) {
      for (const Real& x : xs) worst = max(worst, structure_relation_residual(n, x, table));
    }
    return worst;
  });
  suite.run("lowering_operator", 1e-10, [&] {
    Real worst = zero;
    for (int n = 1; n <= n_max; ++n) {
      for (const Real& x : xs) {
        Real lowered;
        try {
          lowered = apply_lowering(n, x, table);
        } catch (const SingularPoint&) {
          continue;
        }
        const Real expected = eval_poly(n - 1, x, table).value;
        worst = max(worst, abs(lowered - expected) / (1 + abs(expected)));
      }
    }
    return worst;
  });
  suite.run("holonomic_ode", 1e-9, [&] {
    Real worst = zero;
    for (int n = 1; n <= n_max; ++n) {
      for (const Real& x : xs) worst = max(worst, holonomic_ode_residual(n, x, table));
    }
    return worst;
  });
  suite.run("lf_reduced", 1e-10, [&] {
    Real worst = zero;
    for (int n = 1; n <= n_max; ++n) worst = max(worst, lf_reduced_residual(n, table));
    return worst;
  });
  suite.run("boundary_identities", 1e-9, [&] {
    Real worst = zero;
    for (int n = 1; n <= n_max; ++n) {
      const BoundaryResidual r = boundary_identities_residual(n, table);
      worst = max(worst, max(r.r1, r.r2));
    }
    return worst;
  });
  suite.run("quadrature_exactness", 1e-9, [&] {
    if (n_max < 1) return zero;
    const QuadratureRule rule = gauss_rule(n_max, table, moments.u[0]);
    Real worst = zero;
    for (int m = 0; m < n_max; ++m) {
      Real sum = zero;
      for (int k = 0; k < n_max; ++k) sum += rule.weights[k] * pow(rule.nodes[k], 2L * m);
      worst = max(worst, abs(sum - moments.u[m]) / moments.u[m]);
    }
    return worst;
  });
  suite.run("electrostatic", 1e-8, [&] {
    Real worst = zero;
    for (int n = 1; n <= n_max; ++n) {
      const QuadratureRule rule = zeros_newton_refine(gauss_rule(n, table, moments.u[0]), table);
      worst = max(worst, electrostatic_check(rule, table).max_gradient());
    }
    return worst;
  });

  const Real delta = finite_difference_step(z, cfg);
  std::vector<GammaTable> grid;
  suite.run("toda", 1e-6, [&] {
    grid = gamma_grid(z, delta, n_max + 1, cfg);
    return check_toda(grid).max();
  });
  suite.run("nonlinear_ode", 1e-6, [&] {
    if (grid.empty()) grid = gamma_grid(z, delta, n_max + 1, cfg);
    Real worst = zero;
    for (int n = 1; n <= n_max; ++n) worst = max(worst, check_nonlinear_ode(grid, n));
    return worst;
  });
  if (z <= 1.0) {
    suite.run("maclaurin_series", 1e-10, [&] {
      const EtaTable eta = build_eta_table(n_max, kMaclaurinOrder, cfg);
      Real worst = zero;
      for (int n = 1; n <= n_max; ++n) {
        worst = max(worst, abs(gamma_series(n, z, kMaclaurinOrder, eta) - table.gamma[n]) / table.gamma[n]);
      }
      return worst;
    });
  }

  const Real t = 3 * z;
  const int terms = stieltjes_terms_needed(t, z + delta, cfg);
  const MomentTable long_moments = build_moment_table(std::max(terms, n_max + 2), z, cfg);
  suite.run("stieltjes_t_ode", 1e-9, [&] {
    const StieltjesSample s = stieltjes_eval(t, z, long_moments);
    return max(check_t_ode(s, long_moments.u[0], long_moments.u[1]), check_t_ode_derivative(s, long_moments.u[0]));
  });
  suite.run("stieltjes_third_order", 1e-8, [&] {
    return max(check_third_order_ode(stieltjes_eval(t, z, long_moments)),
               check_third_order_ode(stieltjes_eval(-t, z, long_moments)));
  });
  suite.run("stieltjes_z_ode", 1e-6, [&] {
    const auto tables =
        std::make_pair(build_moment_table(terms, z - delta, cfg), build_moment_table(terms, z + delta, cfg));
    return max(check_z_ode(t, z, delta, tables), check_moment_flow(z, tables));
  });

  report.overall = true;
  for (const CheckRecord& c : report.checks) report.overall = report.overall && c.pass;
  return report;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRecord& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"runtime_ms", c.runtime_ms}});
  }
  nlohmann::ordered_json doc{{"kind", "verify_report"},
                             {"z", report.z},
                             {"n_max", report.n_max},
                             {"digits", report.digits},
                             {"checks", checks},
                             {"overall", report.overall}};
  return doc.dump(2);
}

std::string report_to_csv(const VerifyReport& report) {
  std::ostringstream os;
  os << "name,max_residual,tolerance,pass,runtime_ms\n";
  for (const CheckRecord& c : report.checks) {
    os << c.name << ',' << '"' << c.max_residual << '"' << ',' << c.tolerance << ',' << (c.pass ? "true" : "false")
       << ',' << c.runtime_ms << '\n';
  }
  os << "overall,,," << (report.overall ? "true" : "false") << ",\n";
  return os.str();
}

}  // namespace trunc_hermite::cli
