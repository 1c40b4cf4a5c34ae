#include <gtest/gtest.h>

#include "oracle.hpp"
#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/special_functions.hpp"

namespace th = trunc_hermite;
namespace oracle = trunc_hermite::oracle;
using th::PrecisionConfig;
using th::Real;

namespace {

const PrecisionConfig kCfg = PrecisionConfig::with_digits(56);

Real at(double v) { return Real(v, kCfg.digits()); }

}  // namespace

TEST(Erf, ZeroAndLimit) {
  EXPECT_TRUE(th::erf(at(0), kCfg).is_zero());
  EXPECT_LT(th::abs(th::erf(at(30), kCfg) - 1).to_double(), 1e-52);
  EXPECT_LT(th::erf(at(6), kCfg), 1.0);
}

TEST(Erf, MatchesMpfrAtDoubledPrecision) {
  const auto big = kCfg.doubled();
  for (double x : {1.0, 0.01, 0.5, 2.9, 3.1, 4.5, 9.0}) {
    const Real ours = th::erf(at(x), kCfg);
    const Real ref = th::erf_reference(Real(x, big.digits()));
    EXPECT_LT(oracle::relative_error(ours, ref), kCfg.target_rel_tol) << "x = " << x;
  }
}

TEST(Erf, OddBitForBit) {
  for (double x : {0.3, 1.7, 3.5, 7.0}) {
    EXPECT_TRUE(th::erf(at(-x), kCfg) == -th::erf(at(x), kCfg)) << "x = " << x;
  }
}

TEST(LowerIncompleteGamma, EmptyIntegral) {
  EXPECT_TRUE(th::lower_incomplete_gamma(at(2.5), at(0), kCfg).is_zero());
}

TEST(LowerIncompleteGamma, HalfTendsToSqrtPi) {
  const Real v = th::lower_incomplete_gamma(at(0.5), at(200), kCfg);
  EXPECT_LT(oracle::relative_error(v, th::sqrt(th::pi(kCfg.digits()))), kCfg.target_rel_tol);
}

TEST(LowerIncompleteGamma, ThreeHalvesAtOneMatchesQuadrature) {
  using oracle::Float50;
  const Float50 ref =
      oracle::integrate([](const Float50& t) { return sqrt(t) * exp(-t); }, Float50(0), Float50(1));
  const Real v = th::lower_incomplete_gamma(at(1.5), at(1), kCfg);
  EXPECT_LT(oracle::relative_error(v, oracle::from_float50(ref, kCfg.digits())), 1e-40);
}

TEST(LowerIncompleteGamma, BothBranchesAgreeWithQuadrature) {
  using oracle::Float50;
  for (double a : {0.5, 2.5, 6.5}) {
    for (double x : {0.2, 3.0, 9.0, 25.0}) {
      const Float50 fa(a);
      const Float50 ref = oracle::integrate([&](const Float50& t) { return pow(t, fa - 1) * exp(-t); }, Float50(0),
                                            Float50(x));
      const Real v = th::lower_incomplete_gamma(at(a), at(x), kCfg);
      EXPECT_LT(oracle::relative_error(v, oracle::from_float50(ref, kCfg.digits())), 1e-30)
          << "a = " << a << ", x = " << x;
    }
  }
}

TEST(LowerIncompleteGamma, StrictlyIncreasing) {
  Real prev = th::lower_incomplete_gamma(at(1.5), at(0.1), kCfg);
  for (double x = 0.6; x < 40; x += 0.5) {
    const Real next = th::lower_incomplete_gamma(at(1.5), at(x), kCfg);
    EXPECT_GT(next, prev) << "x = " << x;
    prev = next;
  }
}

TEST(LowerIncompleteGamma, DomainErrors) {
  EXPECT_THROW(th::lower_incomplete_gamma(at(0), at(1), kCfg), th::DomainError);
  EXPECT_THROW(th::lower_incomplete_gamma(at(1), at(-1), kCfg), th::DomainError);
}

TEST(Hyp1F1, ZeroArgumentIsOne) { EXPECT_TRUE(th::hyp1f1_1(at(1.5), at(0), kCfg) == 1.0); }

TEST(Hyp1F1, DirectPartialSumAtDoubledPrecision) {
  const th::Digits d2 = kCfg.doubled().digits();
  Real term(1, d2);
  Real sum(1, d2);
  const Real b(2.5, d2);
  for (int k = 0; k < 200; ++k) {
    term /= b + k;
    sum += term;
  }
  EXPECT_LT(oracle::relative_error(th::hyp1f1_1(at(2.5), at(1), kCfg), sum), kCfg.target_rel_tol);
}

TEST(Hyp1F1, IncompleteGammaIdentity) {
  for (double a : {0.5, 1.5, 3.5, 10.5}) {
    for (double x : {0.01, 0.7, 4.0, 16.0, 40.0}) {
      const Real ra = at(a);
      const Real rx = at(x);
      const Real lhs = th::lower_incomplete_gamma(ra, rx, kCfg);
      const Real rhs = th::pow(rx, ra) * th::exp(-rx) * th::hyp1f1_1(ra + 1, rx, kCfg) / ra;
      EXPECT_LE(th::abs(lhs - rhs), 10 * kCfg.target_rel_tol * lhs) << "a = " << a << ", x = " << x;
    }
  }
}

TEST(Hyp1F1, DomainErrors) {
  EXPECT_THROW(th::hyp1f1_1(at(0), at(1), kCfg), th::DomainError);
  EXPECT_THROW(th::hyp1f1_1(at(1), at(-0.5), kCfg), th::DomainError);
}
