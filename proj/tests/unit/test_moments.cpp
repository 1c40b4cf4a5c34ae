#include <gtest/gtest.h>

#include "oracle.hpp"
#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/moments.hpp"
#include "trunc_hermite/special_functions.hpp"

namespace th = trunc_hermite;
namespace oracle = trunc_hermite::oracle;
using th::MomentMethod;
using th::PrecisionConfig;
using th::Real;

namespace {

const PrecisionConfig kCfg = PrecisionConfig::with_digits(56);
// coarse enough that the 50-digit quadrature oracle resolves 10 * target_rel_tol
const PrecisionConfig kOracleCfg = PrecisionConfig::with_digits(36);

Real at(double v, const PrecisionConfig& cfg = kCfg) { return Real(v, cfg.digits()); }

}  // namespace

TEST(MomentZero, LargeZGivesSqrtPi) {
  const Real u0 = th::moment_zero(at(12), kCfg);
  EXPECT_LT(oracle::relative_error(u0, th::sqrt(th::pi(kCfg.digits()))), kCfg.target_rel_tol);
}

TEST(MomentZero, SmallZIsTwoZ) {
  const Real z = at(1e-8);
  EXPECT_LT(oracle::relative_error(th::moment_zero(z, kCfg), 2 * z), 1e-15);
}

TEST(MomentZero, MatchesQuadratureAtOne) {
  const Real u0 = th::moment_zero(at(1, kOracleCfg), kOracleCfg);
  const Real ref = oracle::from_float50(oracle::even_moment(0, 1), kOracleCfg.digits());
  EXPECT_LT(oracle::relative_error(u0, ref), 10 * kOracleCfg.target_rel_tol);
}

TEST(MomentZero, RejectsNonPositiveZ) {
  EXPECT_THROW(th::moment_zero(at(0), kCfg), th::DomainError);
  EXPECT_THROW(th::moment_series(2, at(-1), kCfg), th::DomainError);
  EXPECT_THROW(th::build_moment_table(3, at(-0.5), kCfg), th::DomainError);
}

TEST(MomentSeries, IndexZeroAgreesWithErf) {
  for (double z : {0.1, 1.0, 3.0, 6.0}) {
    EXPECT_LT(oracle::relative_error(th::moment_series(0, at(z), kCfg), th::moment_zero(at(z), kCfg)),
              10 * kCfg.target_rel_tol)
        << "z = " << z;
  }
}

TEST(MomentSeries, SmallZLeadingTerm) {
  const Real z = at(1e-6);
  for (int n = 0; n <= 5; ++n) {
    const Real lead = 2 * th::pow(z, 2L * n + 1) / (2 * n + 1);
    EXPECT_LT(oracle::relative_error(th::moment_series(n, z, kCfg), lead), 1e-11) << "n = " << n;
  }
}

TEST(MomentSeries, ThreeAtTwoMatchesQuadrature) {
  const Real u3 = th::moment_series(3, at(2, kOracleCfg), kOracleCfg);
  const Real ref = oracle::from_float50(oracle::even_moment(3, 2), kOracleCfg.digits());
  EXPECT_LT(oracle::relative_error(u3, ref), 10 * kOracleCfg.target_rel_tol);
}

TEST(MomentTable, SingleEntryTable) {
  const auto table = th::build_moment_table(0, at(1.5), kCfg);
  ASSERT_EQ(table.n_max(), 0);
  EXPECT_LT(oracle::relative_error(table.u[0], th::sqrt(th::pi(kCfg.digits())) * th::erf(at(1.5), kCfg)),
            kCfg.target_rel_tol);
}

TEST(MomentTable, FirstMomentClosedForm) {
  for (double zv : {0.5, 1.0, 2.0}) {
    const Real z = at(zv);
    const auto table = th::build_moment_table(3, z, kCfg);
    const Real expected = th::sqrt(th::pi(kCfg.digits())) / 2 * th::erf(z, kCfg) - z * th::exp(-z * z);
    EXPECT_LT(oracle::relative_error(table.u[1], expected), 10 * kCfg.target_rel_tol) << "z = " << zv;
  }
}

TEST(MomentTable, EveryEntryMatchesQuadrature) {
  for (double zv : {0.5, 1.0, 2.0, 4.5}) {
    const auto table = th::build_moment_table(14, at(zv, kOracleCfg), kOracleCfg);
    for (int n = 0; n <= 14; ++n) {
      const Real ref = oracle::from_float50(oracle::even_moment(n, zv), kOracleCfg.digits());
      EXPECT_LT(oracle::relative_error(table.u[n], ref), 10 * kOracleCfg.target_rel_tol)
          << "z = " << zv << ", n = " << n;
    }
  }
}

TEST(MomentTable, ExactDecompositionOracle) {
  // z^2 = 9/4: u_n = p_n u_0 + q_n z e^{-z^2} with rational p_n, q_n
  // evaluated at doubled precision because p_n u_0 and q_n z e^{-z^2} cancel
  const auto big = kCfg.doubled();
  const Real zb = at(1.5, big);
  const auto exact = oracle::exact_moments(20, mpq_class(9, 4));
  const auto table = th::build_moment_table(20, at(1.5), kCfg);
  const Real u0 = th::moment_zero(zb, big);
  const Real e = zb * th::exp(-zb * zb);
  for (int n = 0; n <= 20; ++n) {
    const Real value = oracle::from_rational(exact[n].p, big.digits()) * u0 + oracle::from_rational(exact[n].q, big.digits()) * e;
    EXPECT_LT(oracle::relative_error(table.u[n], value.at(kCfg.digits())), 1e-45) << "n = " << n;
  }
}

TEST(MomentTable, ExactDecompositionSatisfiesRecurrence) {
  const mpq_class z2(1, 3);
  const auto u = oracle::exact_moments(12, z2);
  for (int n = 0; n + 2 <= 12; ++n) {
    const mpq_class a = 2 * n + 3 + 2 * z2;
    const mpq_class b = (2 * n + 1) * z2;
    EXPECT_EQ(2 * u[n + 2].p - a * u[n + 1].p + b * u[n].p, 0) << "n = " << n;
    EXPECT_EQ(2 * u[n + 2].q - a * u[n + 1].q + b * u[n].q, 0) << "n = " << n;
  }
}

TEST(MomentTable, ForwardAndSeriesPathsAgree) {
  int compared = 0;
  for (double zv : {2.5, 4.0, 6.0}) {
    const auto table = th::build_moment_table(14, at(zv), kCfg);
    for (int n = 0; n <= 14; ++n) {
      if (table.tags[n] != MomentMethod::forward_recurrence) continue;
      ++compared;
      EXPECT_LT(oracle::relative_error(table.u[n], th::moment_series(n, at(zv), kCfg)), 100 * kCfg.target_rel_tol)
          << "z = " << zv << ", n = " << n;
    }
  }
  EXPECT_GT(compared, 10);
}

TEST(MomentTable, RegimeSelection) {
  const auto small = th::build_moment_table(8, at(0.5), kCfg);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(small.tags[n], MomentMethod::series);
  const auto large = th::build_moment_table(8, at(5), kCfg);
  EXPECT_EQ(large.tags[1], MomentMethod::forward_recurrence);
}

TEST(MomentTable, InvariantsHoldAndDetectDefects) {
  for (double zv : {0.05, 0.5, 1.0, 2.0, 8.0}) {
    const auto table = th::build_moment_table(20, at(zv), kCfg);
    EXPECT_NO_THROW(table.validate()) << "z = " << zv;
  }
  auto table = th::build_moment_table(6, at(1), kCfg);
  table.u[3] = -table.u[3];
  EXPECT_THROW(table.validate(), th::InvariantViolation);
}

TEST(HomogeneousRecurrence, ConstructedTablesSatisfyIt) {
  for (double zv : {0.5, 1.0, 2.0, 6.0}) {
    const auto table = th::build_moment_table(20, at(zv), kCfg);
    EXPECT_LE(th::check_homogeneous_recurrence(table), 100 * kCfg.target_rel_tol) << "z = " << zv;
  }
}

TEST(HomogeneousRecurrence, DetectsPerturbedEntry) {
  auto table = th::build_moment_table(6, at(1), kCfg);
  table.u[2] *= 1.01;
  EXPECT_GE(th::check_homogeneous_recurrence(table), 1e-3);
}

TEST(MomentAsymptotic, TruncationOrderAtFour) {
  const Real z = at(4);
  const Real approx = th::moment_ratio_asymptotic(0, z, 0, kCfg);
  const Real closed = th::sqrt(th::pi(kCfg.digits())) - th::exp(-z * z) / 4;
  EXPECT_LT(oracle::relative_error(approx, closed), 1e-50);
  const Real truth = th::build_moment_table(0, z, kCfg).u[0];
  EXPECT_LE(oracle::relative_error(approx, truth), th::exp(-z * z) * th::pow(z, -3L));
}

TEST(MomentAsymptotic, ImprovesWithOrder) {
  const Real z = at(5);
  const Real truth = th::build_moment_table(2, z, kCfg).u[2];
  Real prev = oracle::relative_error(th::moment_ratio_asymptotic(2, z, 0, kCfg), truth);
  for (int k = 1; k <= 3; ++k) {
    const Real err = oracle::relative_error(th::moment_ratio_asymptotic(2, z, k, kCfg), truth);
    EXPECT_LT(err, prev) << "k_max = " << k;
    prev = err;
  }
}

TEST(MomentAsymptotic, HermiteLimit) {
  for (int n = 0; n <= 4; ++n) {
    const Real v = th::moment_ratio_asymptotic(n, at(40), 6, kCfg);
    EXPECT_LT(oracle::relative_error(v, th::tgamma(at(n + 0.5))), kCfg.target_rel_tol) << "n = " << n;
  }
}
