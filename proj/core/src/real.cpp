#include "trunc_hermite/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>

#include "trunc_hermite/errors.hpp"

namespace trunc_hermite {

namespace {

constexpr double kBitsPerDigit = 3.3219280948873623;  // log2(10)
constexpr mpfr_prec_t kPlaceholderBits = 2;

}  // namespace

mpfr_prec_t digits_to_bits(Digits digits) {
  if (digits.count <= 0) {
    throw DomainError("precision must be a positive number of digits");
  }
  return static_cast<mpfr_prec_t>(std::ceil(digits.count * kBitsPerDigit)) + 1;
}

Digits bits_to_digits(mpfr_prec_t bits) {
  return Digits{static_cast<int>(std::floor(static_cast<double>(bits - 1) / kBitsPerDigit))};
}

Real::Real() {
  mpfr_init2(value_, kPlaceholderBits);
  mpfr_set_nan(value_);
}

Real::Real(uninitialized_tag, mpfr_prec_t bits) { mpfr_init2(value_, bits); }

Real::Real(double value, Digits digits) : Real(uninitialized_tag{}, digits_to_bits(digits)) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real Real::with_bits(double value, mpfr_prec_t bits) {
  Real r(uninitialized_tag{}, bits);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

Real Real::parse(std::string_view text, Digits digits) {
  Real r(uninitialized_tag{}, digits_to_bits(digits));
  const std::string owned(text);
  char* end = nullptr;
  if (!owned.empty()) mpfr_strtofr(r.value_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (owned.empty() || end != owned.c_str() + owned.size() || !r.is_finite()) {
    throw DomainError("not a decimal number: '" + owned + "'");
  }
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, kPlaceholderBits);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::at(Digits digits) const { return at_bits(digits_to_bits(digits)); }

Real Real::at_bits(mpfr_prec_t bits) const {
  Real r(uninitialized_tag{}, bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

long Real::exponent() const {
  if (!mpfr_regular_p(value_)) return 0;
  return mpfr_get_exp(value_);
}

std::string Real::str(int significant) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value_)) return mpfr_signbit(value_) ? "-0" : "0";
  const size_t n = significant > 0 ? static_cast<size_t>(significant) : 0;
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> digits(mpfr_get_str(nullptr, &exp10, 10, n, value_, MPFR_RNDN),
                                               [](char* p) { mpfr_free_str(p); });
  std::string mantissa(digits.get());
  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // value = 0.d1d2d3... * 10^exp10 = d1.d2d3... * 10^(exp10-1)
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  std::string out = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  const long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

Real Real::operator-() const {
  Real r(uninitialized_tag{}, bits());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

namespace {

template <typename Op>
void apply_inplace(mpfr_ptr lhs, mpfr_srcptr rhs, Op op) {
  const mpfr_prec_t target = std::max(mpfr_get_prec(lhs), mpfr_get_prec(rhs));
  if (target > mpfr_get_prec(lhs)) mpfr_prec_round(lhs, target, MPFR_RNDN);
  op(lhs, lhs, rhs, MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  apply_inplace(value_, rhs.value_, mpfr_add);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  apply_inplace(value_, rhs.value_, mpfr_sub);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  apply_inplace(value_, rhs.value_, mpfr_mul);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  apply_inplace(value_, rhs.value_, mpfr_div);
  return *this;
}

Real& Real::operator+=(double rhs) {
  mpfr_add_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(double rhs) {
  mpfr_sub_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(double rhs) {
  mpfr_mul_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(double rhs) {
  mpfr_div_d(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

namespace {

template <typename Op>
Real binary(const Real& a, const Real& b, Op op) {
  Real r = a.bits() >= b.bits() ? a : a.at_bits(b.bits());
  op(r.raw(), r.raw(), b.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real Real::scalar_minus(double a, const Real& b) {
  Real r(uninitialized_tag{}, b.bits());
  mpfr_d_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

Real Real::scalar_over(double a, const Real& b) {
  Real r(uninitialized_tag{}, b.bits());
  mpfr_d_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (a.is_nan() || b.is_nan()) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, double b) {
  if (a.is_nan() || std::isnan(b)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const Real& a, double b) { return !a.is_nan() && mpfr_cmp_d(a.value_, b) == 0; }

std::ostream& operator<<(std::ostream& os, const Real& x) {
  const auto p = os.precision();
  return os << x.str(p > 0 ? static_cast<int>(p) : 0);
}

namespace {

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real r = x;
  fn(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real acos(const Real& x) { return unary(x, mpfr_acos); }
Real tgamma(const Real& x) { return unary(x, mpfr_gamma); }
Real erf_reference(const Real& x) { return unary(x, mpfr_erf); }

Real reciprocal_gamma(const Real& x) {
  if (mpfr_integer_p(x.raw()) && x <= 0.0) {
    Real r = x;
    mpfr_set_zero(r.raw(), 1);
    return r;
  }
  Real g = tgamma(x);
  Real one = x;
  mpfr_set_ui(one.raw(), 1, MPFR_RNDN);
  return one / g;
}

Real pow(const Real& base, long exponent) {
  Real r = base;
  mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) { return binary(base, exponent, mpfr_pow); }

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real ldexp(const Real& x, long e) {
  Real r = x;
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real pi(Digits digits) {
  Real r(0, digits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real pow10_neg(int exponent, Digits digits) {
  Real ten(10, digits);
  return pow(ten, -static_cast<long>(exponent));
}

}  // namespace trunc_hermite
