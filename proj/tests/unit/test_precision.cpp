#include <gtest/gtest.h>

#include <cstdlib>

#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/precision.hpp"

namespace th = trunc_hermite;
using th::PrecisionConfig;
using th::Real;

TEST(PrecisionConfig, ToleranceFloorFollowsDigits) {
  const auto cfg = PrecisionConfig::with_digits(40, 5);
  EXPECT_EQ(cfg.working_digits, 40);
  EXPECT_EQ(cfg.guard_digits, 5);
  EXPECT_LT(th::abs(cfg.target_rel_tol / th::pow10_neg(35, cfg.digits()) - 1).to_double(), 1e-30);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(PrecisionConfig, RejectsInvalidSettings) {
  EXPECT_THROW(PrecisionConfig::with_digits(15), th::DomainError);
  EXPECT_THROW(PrecisionConfig::with_digits(30, -1), th::DomainError);
  const th::Digits d{30};
  EXPECT_THROW(PrecisionConfig::with_tolerance(30, 4, th::pow10_neg(28, d)), th::DomainError);
  EXPECT_THROW(PrecisionConfig::with_tolerance(30, 4, Real(0, d)), th::DomainError);
  EXPECT_NO_THROW(PrecisionConfig::with_tolerance(30, 4, Real(1e-12, d)));
}

TEST(PrecisionConfig, DoubledKeepsGuardAndSlack) {
  const auto cfg = PrecisionConfig::with_tolerance(30, 4, Real::parse("1e-20", th::Digits{30}));
  const auto big = cfg.doubled();
  EXPECT_EQ(big.working_digits, 60);
  EXPECT_EQ(big.guard_digits, 4);
  // 1e-20 is 10^6 above the 30-digit floor 1e-26, so the doubled tolerance is 1e-50
  EXPECT_LT(th::abs(big.target_rel_tol / th::pow10_neg(50, big.digits()) - 1).to_double(), 1e-20);
}

TEST(PrecisionConfig, DefaultDigitsGrowWithOrder) {
  ::unsetenv(th::kDigitsEnvVar);
  EXPECT_EQ(th::default_working_digits(0), 16);
  EXPECT_EQ(th::default_working_digits(20), 56);
  EXPECT_EQ(PrecisionConfig::for_order(12).working_digits, 40);
}

TEST(PrecisionConfig, EnvironmentOverride) {
  ::setenv(th::kDigitsEnvVar, "77", 1);
  EXPECT_EQ(th::default_working_digits(3), 77);
  ::setenv(th::kDigitsEnvVar, "12", 1);
  EXPECT_THROW(th::default_working_digits(3), th::DomainError);
  ::setenv(th::kDigitsEnvVar, "4x", 1);
  EXPECT_THROW(th::default_working_digits(3), th::DomainError);
  ::unsetenv(th::kDigitsEnvVar);
}

TEST(PrecisionConfig, RealHelperUsesWorkingDigits) {
  const auto cfg = PrecisionConfig::with_digits(45);
  EXPECT_EQ(cfg.real(2).bits(), Real(2, cfg.digits()).bits());
}
