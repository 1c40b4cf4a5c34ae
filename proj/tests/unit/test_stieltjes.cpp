#include <gtest/gtest.h>

#include "oracle.hpp"
#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/stieltjes.hpp"

namespace th = trunc_hermite;
namespace oracle = trunc_hermite::oracle;
using oracle::Float50;
using th::MomentTable;
using th::PrecisionConfig;
using th::Real;

namespace {

const PrecisionConfig kCfg = PrecisionConfig::with_digits(56);

Real at(double v, const PrecisionConfig& cfg = kCfg) { return Real(v, cfg.digits()); }

MomentTable table_for(double t, double z, const PrecisionConfig& cfg = kCfg) {
  return th::build_moment_table(th::stieltjes_terms_needed(at(t, cfg), at(z, cfg), cfg), at(z, cfg), cfg);
}

// 2t integral_0^z e^{-x^2} / (t^2 - x^2) dx
Float50 integral_form(const Float50& t, const Float50& z) {
  return 2 * t * oracle::integrate([&](const Float50& x) { return exp(-x * x) / (t * t - x * x); }, Float50(0), z);
}

}  // namespace

TEST(StieltjesEval, AgreesWithIntegralForm) {
  const auto u = table_for(3, 1);
  const auto s = th::stieltjes_eval(at(3), at(1), u);
  const Real ref = oracle::from_float50(integral_form(3, 1), kCfg.digits());
  EXPECT_LT(oracle::relative_error(s.s, ref), 1e-10);
}

TEST(StieltjesEval, IntegralFormAwayFromSupport) {
  for (double z : {0.5, 1.0, 2.0}) {
    for (double ratio : {2.0, 3.5, 10.0}) {
      const double t = ratio * z;
      const auto s = th::stieltjes_eval(at(t), at(z), table_for(t, z));
      const Real ref = oracle::from_float50(integral_form(t, z), kCfg.digits());
      EXPECT_LT(oracle::relative_error(s.s, ref), 1e-10) << "z = " << z << ", t = " << t;
    }
  }
}

TEST(StieltjesEval, LeadingTermForLargeT) {
  const auto u = table_for(1e6, 1);
  const auto s = th::stieltjes_eval(at(1e6), at(1), u);
  EXPECT_LT(oracle::relative_error(s.s, u.u[0] / 1e6), 1e-12);
}

TEST(StieltjesEval, OddAndPositive) {
  const auto u = table_for(2.5, 1);
  const auto plus = th::stieltjes_eval(at(2.5), at(1), u);
  const auto minus = th::stieltjes_eval(at(-2.5), at(1), u);
  EXPECT_TRUE(minus.s == -plus.s);
  EXPECT_TRUE(minus.ds == plus.ds);
  EXPECT_TRUE(minus.d2s == -plus.d2s);
  EXPECT_TRUE(minus.d3s == plus.d3s);
  EXPECT_GT(plus.t * plus.s, 0.0);
  EXPECT_GT(minus.t * minus.s, 0.0);
}

TEST(StieltjesEval, RejectsPointsNearSupport) {
  const auto u = table_for(3, 1);
  EXPECT_THROW(th::stieltjes_eval(at(1.04), at(1), u), th::TooCloseToSupport);
  EXPECT_THROW(th::stieltjes_eval(at(-0.5), at(1), u), th::TooCloseToSupport);
  EXPECT_THROW(th::stieltjes_terms_needed(at(0.9), at(1), kCfg), th::TooCloseToSupport);
}

TEST(StieltjesEval, RejectsShortTables) {
  const auto u = th::build_moment_table(5, at(1), kCfg);
  EXPECT_THROW(th::stieltjes_eval(at(3), at(1), u), th::TailNotConverged);
}

TEST(StieltjesEval, DerivativesMatchFiniteDifferences) {
  const auto u = table_for(2.8, 1);
  const Real h = at(1e-12);
  const auto s = th::stieltjes_eval(at(3), at(1), u);
  const auto lo = th::stieltjes_eval(at(3) - h, at(1), u);
  const auto hi = th::stieltjes_eval(at(3) + h, at(1), u);
  EXPECT_LT(oracle::relative_error((hi.s - lo.s) / (2 * h), s.ds), 1e-20);
  EXPECT_LT(oracle::relative_error((hi.ds - lo.ds) / (2 * h), s.d2s), 1e-20);
  EXPECT_LT(oracle::relative_error((hi.d2s - lo.d2s) / (2 * h), s.d3s), 1e-20);
}

TEST(TOde, HoldsAtThree) {
  const auto u = table_for(3, 1);
  const auto s = th::stieltjes_eval(at(3), at(1), u);
  EXPECT_LE(th::check_t_ode(s, u.u[0], u.u[1]), 1e-9);
  EXPECT_LE(th::check_t_ode_derivative(s, u.u[0]), 1e-8);
}

TEST(TOde, DetectsPerturbedMoment) {
  const auto u = table_for(3, 1);
  const auto s = th::stieltjes_eval(at(3), at(1), u);
  EXPECT_GE(th::check_t_ode(s, u.u[0], u.u[1] * 1.01), 1e-4);
}

TEST(TOde, ResidualTracksTailAtLargeT) {
  for (double t : {5.0, 50.0, 5000.0}) {
    const auto u = table_for(t, 1);
    const auto s = th::stieltjes_eval(at(t), at(1), u);
    EXPECT_LE(th::check_t_ode(s, u.u[0], u.u[1]), 100 * kCfg.target_rel_tol) << "t = " << t;
  }
}

TEST(ThirdOrderOde, HoldsAtThreeWithParity) {
  const auto u = table_for(3, 1);
  const Real plus = th::check_third_order_ode(th::stieltjes_eval(at(3), at(1), u));
  const Real minus = th::check_third_order_ode(th::stieltjes_eval(at(-3), at(1), u));
  EXPECT_LE(plus, 1e-8);
  EXPECT_TRUE(plus == minus);
}

TEST(ThirdOrderOde, ResidualShrinksWithLongerSeries) {
  const auto coarse_cfg = PrecisionConfig::with_digits(20);
  const auto coarse = table_for(3, 1, coarse_cfg);
  const auto fine = table_for(3, 1);
  const Real r_coarse = th::check_third_order_ode(th::stieltjes_eval(at(3, coarse_cfg), at(1, coarse_cfg), coarse));
  const Real r_fine = th::check_third_order_ode(th::stieltjes_eval(at(3), at(1), fine));
  EXPECT_GT(fine.n_max(), coarse.n_max());
  EXPECT_LT(r_fine, r_coarse);
}

TEST(ZOde, CentralDifferenceAtUnitZ) {
  const Real t = at(3);
  const Real z = at(1);
  const Real delta = at(1e-4);
  const int n = th::stieltjes_terms_needed(t, z + delta, kCfg);
  const auto tables = std::make_pair(th::build_moment_table(n, z - delta, kCfg), th::build_moment_table(n, z + delta, kCfg));
  EXPECT_LE(th::check_z_ode(t, z, delta, tables), 1e-6);
}

TEST(ZOde, SmallZDerivative) {
  const auto s = th::stieltjes_eval(at(3), at(1e-3), table_for(3, 1e-3));
  EXPECT_LT(oracle::relative_error(s.dzs, at(2.0 / 3)), 1e-6);
}

TEST(ZOde, HoldsAcrossT) {
  const Real z = at(1);
  const Real delta = at(1e-4);
  for (double tv : {2.0, 4.0, 8.0, 50.0}) {
    const Real t = at(tv);
    const int n = th::stieltjes_terms_needed(t, z + delta, kCfg);
    const auto tables =
        std::make_pair(th::build_moment_table(n, z - delta, kCfg), th::build_moment_table(n, z + delta, kCfg));
    const Real r = th::check_z_ode(t, z, delta, tables);
    EXPECT_LE(r, 1e-6) << "t = " << tv;
  }
}

TEST(ZOde, ProbedStepRejectsLargeDelta) {
  EXPECT_THROW(th::check_z_ode_probed(at(3), at(1), at(0.1), 20, kCfg, at(1e-6)), th::StepTooLarge);
  EXPECT_LE(th::check_z_ode_probed(at(3), at(1), at(1e-4), 20, kCfg, at(1e-6)), 1e-6);
}

TEST(MomentFlow, DerivativeRecurrence) {
  for (double zv : {1.0, 2.0}) {
    const Real z = at(zv);
    const Real delta = at(1e-4);
    const auto tables =
        std::make_pair(th::build_moment_table(20, z - delta, kCfg), th::build_moment_table(20, z + delta, kCfg));
    EXPECT_LE(th::check_moment_flow(z, tables), 1e-6) << "z = " << zv;
  }
}

TEST(MomentFlow, QuadraticConvergenceAtSmallZ) {
  const Real z = at(0.5);
  const auto flow = [&](double d) {
    const Real delta = at(d);
    return th::check_moment_flow(
        z, std::make_pair(th::build_moment_table(20, z - delta, kCfg), th::build_moment_table(20, z + delta, kCfg)));
  };
  const Real coarse = flow(1e-4);
  const Real fine = flow(5e-5);
  EXPECT_LE(coarse, 1e-5);
  EXPECT_NEAR((coarse / fine).to_double(), 4.0, 0.05);
}
