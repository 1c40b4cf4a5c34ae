#include "trunc_hermite/special_functions.hpp"

#include "trunc_hermite/errors.hpp"

namespace trunc_hermite {

namespace {

constexpr int kInternalGuard = 10;  // extra digits carried inside series loops
constexpr long kMaxTerms = 1'000'000;
constexpr double kSeriesCutoff = 3.0;

Digits internal_digits(const PrecisionConfig& cfg) { return Digits{cfg.working_digits + kInternalGuard}; }

Real machine_epsilon(Digits d) { return ldexp(Real(1, d), -static_cast<long>(digits_to_bits(d))); }

// x >= 0
Real erf_series(const Real& x, Digits d, const Real& tol) {
  const Real x2 = x * x;
  Real term(1, d);
  Real sum(1, d);
  for (long k = 1; k < kMaxTerms; ++k) {
    term *= 2 * x2;
    term /= 2 * k + 1;
    sum += term;
    if (term < tol * sum) break;
  }
  return 2 * x * exp(-x2) * sum / sqrt(pi(d));
}

// x > 0, modified Lentz on erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
Real erfc_continued_fraction(const Real& x, Digits d) {
  const Real eps = machine_epsilon(d);
  const Real tiny = ldexp(Real(1, d), -static_cast<long>(4 * digits_to_bits(d)));
  Real f = x;
  Real c = x;
  Real dd(0, d);
  for (long k = 1; k < kMaxTerms; ++k) {
    const double a = 0.5 * static_cast<double>(k);
    dd = x + a * dd;
    if (abs(dd) < tiny) dd = tiny;
    c = x + a / c;
    if (abs(c) < tiny) c = tiny;
    dd = 1 / dd;
    const Real delta = c * dd;
    f *= delta;
    if (abs(delta - 1) < eps) {
      return exp(-x * x) / (sqrt(pi(d)) * f);
    }
  }
  throw PrecisionExhausted("erfc continued fraction did not converge", 0);
}

// x^a e^{-x} sum_k x^k / (a (a+1) ... (a+k))
Real lower_gamma_series(const Real& a, const Real& x, const Real& tol) {
  Real term = 1 / a;
  Real sum = term;
  Real denom = a;
  for (long k = 1; k < kMaxTerms; ++k) {
    denom += 1;
    term *= x / denom;
    sum += term;
    if (term < tol * sum) {
      return sum * exp(a * log(x) - x);
    }
  }
  throw PrecisionExhausted("incomplete gamma series did not converge", 0);
}

// Gamma(a, x) = e^{-x} x^a / (x + 1 - a - 1(1-a)/(x + 3 - a - 2(2-a)/(x + 5 - a - ...)))
Real upper_gamma_continued_fraction(const Real& a, const Real& x, Digits d) {
  const Real eps = machine_epsilon(d);
  const Real tiny = ldexp(Real(1, d), -static_cast<long>(4 * digits_to_bits(d)));
  Real b = x + 1 - a;
  Real c = 1 / tiny;
  Real dd = 1 / b;
  Real h = dd;
  for (long i = 1; i < kMaxTerms; ++i) {
    const Real an = -i * (i - a);
    b += 2;
    dd = an * dd + b;
    if (abs(dd) < tiny) dd = tiny;
    c = b + an / c;
    if (abs(c) < tiny) c = tiny;
    dd = 1 / dd;
    const Real delta = dd * c;
    h *= delta;
    if (abs(delta - 1) < eps) {
      return exp(a * log(x) - x) * h;
    }
  }
  throw PrecisionExhausted("upper incomplete gamma continued fraction did not converge", 0);
}

}  // namespace

Real erf(const Real& x, const PrecisionConfig& cfg) {
  const Digits d = internal_digits(cfg);
  if (x.is_nan()) throw DomainError("erf of NaN");
  if (x.is_zero()) return Real(0, cfg.digits());
  const Real ax = abs(x).at(d);
  Real value;
  if (ax <= kSeriesCutoff) {
    value = erf_series(ax, d, cfg.target_rel_tol.at(d) * 1e-3);
  } else {
    value = 1 - erfc_continued_fraction(ax, d);
  }
  value = value.at(cfg.digits());
  return x.sign() < 0 ? -value : value;
}

Real lower_incomplete_gamma(const Real& a, const Real& x, const PrecisionConfig& cfg) {
  if (!(a > 0.0)) throw DomainError("incomplete gamma requires a > 0");
  if (!(x >= 0.0)) throw DomainError("incomplete gamma requires x >= 0");
  if (x.is_zero()) return Real(0, cfg.digits());
  const Digits d = internal_digits(cfg);
  const Real ad = a.at(d);
  const Real xd = x.at(d);
  Real value;
  if (xd < ad + 1) {
    value = lower_gamma_series(ad, xd, cfg.target_rel_tol.at(d) * 1e-3);
  } else {
    value = tgamma(ad) - upper_gamma_continued_fraction(ad, xd, d);
  }
  return value.at(cfg.digits());
}

Real hyp1f1_1(const Real& b, const Real& x, const PrecisionConfig& cfg) {
  if (!(b > 0.0)) throw DomainError("1F1(1; b; x) requires b > 0");
  if (!(x >= 0.0)) throw DomainError("1F1(1; b; x) requires x >= 0");
  const Digits d = internal_digits(cfg);
  const Real tol = cfg.target_rel_tol.at(d);
  const Real xd = x.at(d);
  Real denom = b.at(d);
  Real term(1, d);
  Real sum(1, d);
  if (xd.is_zero()) return sum.at(cfg.digits());
  for (long k = 1; k <= kMaxTerms; ++k) {
    term *= xd / denom;
    denom += 1;
    sum += term;
    // terms only shrink once b + k exceeds x
    if (denom > xd && term < tol * sum) {
      return sum.at(cfg.digits());
    }
  }
  throw PrecisionExhausted("1F1(1; b; x) series needs more than 10^6 terms", 0);
}

}  // namespace trunc_hermite
