#include <gtest/gtest.h>

#include "oracle.hpp"
#include "trunc_hermite/errors.hpp"
#include "trunc_hermite/polynomials.hpp"
#include "trunc_hermite/quadrature.hpp"
#include "trunc_hermite/special_functions.hpp"

namespace th = trunc_hermite;
namespace oracle = trunc_hermite::oracle;
using th::GammaTable;
using th::PrecisionConfig;
using th::QuadratureRule;
using th::Real;

namespace {

const PrecisionConfig kCfg = PrecisionConfig::with_digits(56);

Real at(double v) { return Real(v, kCfg.digits()); }

struct Fixture {
  GammaTable table;
  th::MomentTable moments;
};

const Fixture& fixture(double z) {
  static const Fixture half{th::build_gamma_table(13, at(0.5), kCfg), th::build_moment_table(13, at(0.5), kCfg)};
  static const Fixture one{th::build_gamma_table(13, at(1), kCfg), th::build_moment_table(13, at(1), kCfg)};
  static const Fixture two{th::build_gamma_table(13, at(2), kCfg), th::build_moment_table(13, at(2), kCfg)};
  return z == 0.5 ? half : z == 1.0 ? one : two;
}

QuadratureRule refined(int n, double z) {
  const auto& f = fixture(z);
  return th::zeros_newton_refine(th::gauss_rule(n, f.table, f.moments.u[0]), f.table);
}

}  // namespace

TEST(GaussRule, OnePoint) {
  const auto& f = fixture(1.0);
  const QuadratureRule r = th::gauss_rule(1, f.table, f.moments.u[0]);
  ASSERT_EQ(r.nodes.size(), 1u);
  EXPECT_TRUE(r.nodes[0].is_zero());
  EXPECT_TRUE(r.weights[0] == f.moments.u[0]);
}

TEST(GaussRule, TwoPointsByHand) {
  const auto& f = fixture(1.0);
  const QuadratureRule r = th::gauss_rule(2, f.table, f.moments.u[0]);
  const Real s = th::sqrt(f.table.gamma[1]);
  EXPECT_LT(th::abs(r.nodes[1] - s).to_double(), 1e-50);
  EXPECT_TRUE(r.nodes[0] == -r.nodes[1]);
  EXPECT_LT(th::abs(r.weights[0] - f.moments.u[0] / 2).to_double(), 1e-50);
  const QuadratureRule polished = th::zeros_newton_refine(r, f.table);
  EXPECT_LT(th::abs(polished.nodes[1] - s), 10 * kCfg.target_rel_tol);
}

TEST(GaussRule, ReproducesMoments) {
  for (double z : {0.5, 1.0, 2.0}) {
    const auto& f = fixture(z);
    for (int n = 1; n <= 12; ++n) {
      const QuadratureRule r = th::gauss_rule(n, f.table, f.moments.u[0]);
      EXPECT_NO_THROW(r.validate());
      Real mass(0, kCfg.digits());
      for (const Real& w : r.weights) {
        EXPECT_GT(w, 0.0);
        mass += w;
      }
      EXPECT_LT(oracle::relative_error(mass, f.moments.u[0]), 1e-9) << "z = " << z << ", n = " << n;
      for (int m = 0; m < n; ++m) {
        Real sum(0, kCfg.digits());
        for (int k = 0; k < n; ++k) sum += r.weights[k] * th::pow(r.nodes[k], 2L * m);
        EXPECT_LT(oracle::relative_error(sum, f.moments.u[m]), 1e-9) << "z = " << z << ", n = " << n << ", m = " << m;
      }
      Real odd(0, kCfg.digits());
      for (int k = 0; k < n; ++k) odd += r.weights[k] * th::pow(r.nodes[k], 2L * n - 1);
      EXPECT_LE(th::abs(odd), 1e-50 * f.moments.u[0]);
      for (int k = 0; k < n; ++k) {
        EXPECT_GT(r.nodes[k], -f.table.z);
        EXPECT_LT(r.nodes[k], f.table.z);
      }
    }
  }
}

TEST(GaussRule, NeedsCoefficients) {
  const auto& f = fixture(1.0);
  EXPECT_THROW(th::gauss_rule(0, f.table, f.moments.u[0]), th::DomainError);
  EXPECT_THROW(th::gauss_rule(15, f.table, f.moments.u[0]), th::DomainError);
}

TEST(QuadratureRule, ValidateDetectsBrokenSymmetry) {
  QuadratureRule r = refined(6, 1.0);
  r.nodes[0] = r.nodes[0] * (1 + at(1e-30));
  EXPECT_THROW(r.validate(), th::InvariantViolation);
  QuadratureRule w = refined(6, 1.0);
  w.weights[2] = -w.weights[2];
  EXPECT_THROW(w.validate(), th::InvariantViolation);
}

TEST(NewtonRefine, ResidualsAreSmall) {
  for (double z : {0.5, 1.0, 2.0}) {
    const auto& f = fixture(z);
    for (int n = 1; n <= 12; ++n) {
      const QuadratureRule r = refined(n, z);
      Real peak(0, kCfg.digits());
      for (int i = 0; i <= 400; ++i) {
        peak = th::max(peak, th::abs(th::eval_poly(n, -f.table.z + 2 * f.table.z * i / 400, f.table).value));
      }
      for (const Real& x : r.nodes) {
        EXPECT_LE(th::abs(th::eval_poly(n, x, f.table).value), 1e-12 * peak) << "z = " << z << ", n = " << n;
      }
    }
  }
}

TEST(NewtonRefine, AgreesWithBisection) {
  for (double z : {0.5, 1.0, 2.0}) {
    const auto& f = fixture(z);
    for (int n = 1; n <= 12; ++n) {
      const QuadratureRule r = refined(n, z);
      const auto zeros = oracle::bisection_zeros(n, f.table);
      ASSERT_EQ(static_cast<int>(zeros.size()), n) << "z = " << z << ", n = " << n;
      for (int k = 0; k < n; ++k) {
        const Real b = oracle::from_float50(zeros[k], kCfg.digits());
        EXPECT_LT(th::abs(r.nodes[k] - b).to_double(), 1e-10) << "z = " << z << ", n = " << n << ", k = " << k;
      }
    }
  }
}

TEST(NewtonRefine, ZerosInterlace) {
  for (double z : {0.5, 1.0, 2.0}) {
    for (int n = 2; n <= 12; ++n) {
      const QuadratureRule hi = refined(n, z);
      const QuadratureRule lo = refined(n - 1, z);
      for (int k = 0; k < n - 1; ++k) {
        EXPECT_LT(hi.nodes[k], lo.nodes[k]) << "z = " << z << ", n = " << n;
        EXPECT_LT(lo.nodes[k], hi.nodes[k + 1]) << "z = " << z << ", n = " << n;
      }
    }
  }
}

TEST(Zeta, IndexZeroClosedForm) {
  for (double zv : {0.5, 1.0, 2.0}) {
    const auto& f = fixture(zv);
    const Real z = f.table.z;
    const Real zeta0 = th::zeta(0, f.table);
    const Real expected = z * th::exp(-z * z) / (th::sqrt(th::pi(kCfg.digits())) * th::erf(z, kCfg));
    EXPECT_LT(oracle::relative_error(zeta0 * zeta0 - z * z, expected), 1e-45) << "z = " << zv;
  }
}

TEST(Zeta, SmallZLimit) {
  const Real z = at(1e-4);
  const GammaTable t = th::build_gamma_table(6, z, kCfg);
  for (int n = 0; n <= 5; ++n) {
    const Real zn = th::zeta(n, t);
    EXPECT_LT(th::abs(zn * zn - (n + 0.5)).to_double(), 1e-7) << "n = " << n;
  }
}

TEST(Zeta, LargeNExpansion) {
  const auto cfg = PrecisionConfig::for_order(81);
  const Real z(1, cfg.digits());
  const GammaTable t = th::build_gamma_table(81, z, cfg);
  for (int n : {20, 40, 80}) {
    const Real zn = th::zeta(n, t);
    const Real diff = th::abs(zn * zn - (n + (z * z + 1) / 2));
    EXPECT_LE(diff * n * n, 1.0) << "n = " << n;
  }
}

TEST(Zeta, CorruptTableRejected) {
  GammaTable t = fixture(1.0).table;
  t.gamma[4] = at(5);
  EXPECT_THROW(th::zeta(3, t), th::InvariantViolation);
}

TEST(Electrostatics, SingleChargeAtOrigin) {
  const QuadratureRule r = refined(1, 1.0);
  const auto report = th::electrostatic_check(r, fixture(1.0).table);
  ASSERT_EQ(report.gradient.size(), 1u);
  EXPECT_TRUE(report.gradient[0].is_zero());
}

TEST(Electrostatics, StationaryAtRefinedZeros) {
  for (double z : {0.5, 1.0, 2.0}) {
    for (int n = 1; n <= 12; ++n) {
      const QuadratureRule r = refined(n, z);
      EXPECT_LE(th::electrostatic_check(r, fixture(z).table).max_gradient(), 1e-8) << "z = " << z << ", n = " << n;
    }
  }
}

TEST(Electrostatics, SensitiveToDisplacedCharge) {
  const auto& f = fixture(1.0);
  const QuadratureRule r = refined(8, 1.0);
  std::vector<Real> nodes = r.nodes;
  nodes[3] += 1e-3;
  const auto report = th::electrostatic_check(nodes, f.table.z, th::zeta(8, f.table));
  EXPECT_GT(th::abs(report.gradient[3]), 1e-3);
}

TEST(Electrostatics, PotentialSamplesAndEnergy) {
  const auto& f = fixture(1.0);
  const QuadratureRule r = refined(5, 1.0);
  const auto report = th::electrostatic_check(r, f.table, 9);
  ASSERT_EQ(report.potential_samples.size(), 9u);
  EXPECT_TRUE(report.energy.is_finite());
  const Real zn = th::zeta(5, f.table);
  for (const auto& [x, v] : report.potential_samples) {
    EXPECT_GT(x, -f.table.z);
    EXPECT_LT(x, f.table.z);
    EXPECT_TRUE(v == th::external_potential(x, f.table.z, zn));
  }
}
