#pragma once

// Extended-precision real number with per-value precision.
//
// A Real owns an MPFR number. Its precision is fixed when it is created and
// travels with the value: the result of a binary operation carries the larger
// of the two operand precisions, and mixed operations with built-in scalars
// carry the precision of the Real operand. There is no process-wide default
// precision, so independent computations at different precisions never
// interfere with each other.

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace trunc_hermite {

/// Decimal digits of working precision.
struct Digits {
  int count = 0;
  friend constexpr auto operator<=>(Digits, Digits) = default;
};

mpfr_prec_t digits_to_bits(Digits digits);
Digits bits_to_digits(mpfr_prec_t bits);

class Real {
 public:
  /// NaN with minimal precision; placeholder until assigned.
  Real();

  template <std::integral I>
  Real(I value, Digits digits) : Real(uninitialized_tag{}, digits_to_bits(digits)) {
    if constexpr (std::is_signed_v<I>) {
      mpfr_set_si(value_, static_cast<long>(value), MPFR_RNDN);
    } else {
      mpfr_set_ui(value_, static_cast<unsigned long>(value), MPFR_RNDN);
    }
  }

  Real(double value, Digits digits);

  /// Parses a decimal string such as "1.25" or "-3.5e-12". Throws DomainError
  /// when the text is not a complete number.
  static Real parse(std::string_view text, Digits digits);

  /// Value with the given precision in bits.
  static Real with_bits(double value, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  [[nodiscard]] mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  [[nodiscard]] Digits digits() const { return bits_to_digits(bits()); }

  /// Same value rounded (or exactly widened) to a new precision.
  [[nodiscard]] Real at(Digits digits) const;
  [[nodiscard]] Real at_bits(mpfr_prec_t bits) const;

  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  [[nodiscard]] long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }

  /// Scientific decimal string. With significant == 0 the string has enough
  /// digits to parse back to the identical value at the same precision.
  [[nodiscard]] std::string str(int significant = 0) const;

  [[nodiscard]] bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(value_) != 0; }
  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with |x| in [2^(e-1), 2^e); 0 for zero.
  [[nodiscard]] long exponent() const;

  [[nodiscard]] mpfr_srcptr raw() const { return value_; }
  [[nodiscard]] mpfr_ptr raw() { return value_; }

  Real operator-() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  template <std::integral I>
  Real& operator+=(I rhs) {
    mpfr_add_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  Real& operator-=(I rhs) {
    mpfr_sub_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  Real& operator*=(I rhs) {
    mpfr_mul_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  template <std::integral I>
  Real& operator/=(I rhs) {
    mpfr_div_si(value_, value_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
  }
  Real& operator+=(double rhs);
  Real& operator-=(double rhs);
  Real& operator*=(double rhs);
  Real& operator/=(double rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  template <typename S>
    requires std::integral<S> || std::floating_point<S>
  friend Real operator+(Real a, S b) { return a += b; }
  template <typename S>
    requires std::integral<S> || std::floating_point<S>
  friend Real operator+(S a, Real b) { return b += a; }
  template <typename S>
    requires std::integral<S> || std::floating_point<S>
  friend Real operator-(Real a, S b) { return a -= b; }
  template <typename S>
    requires std::integral<S> || std::floating_point<S>
  friend Real operator-(S a, const Real& b) { return scalar_minus(static_cast<double>(a), b); }
  template <typename S>
    requires std::integral<S> || std::floating_point<S>
  friend Real operator*(Real a, S b) { return a *= b; }
  template <typename S>
    requires std::integral<S> || std::floating_point<S>
  friend Real operator*(S a, Real b) { return b *= a; }
  template <typename S>
    requires std::integral<S> || std::floating_point<S>
  friend Real operator/(Real a, S b) { return a /= b; }
  template <typename S>
    requires std::integral<S> || std::floating_point<S>
  friend Real operator/(S a, const Real& b) { return scalar_over(static_cast<double>(a), b); }

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, double b);
  friend bool operator==(const Real& a, double b);

 private:
  struct uninitialized_tag {};
  Real(uninitialized_tag, mpfr_prec_t bits);

  static Real scalar_minus(double a, const Real& b);
  static Real scalar_over(double a, const Real& b);

  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real cos(const Real& x);
Real acos(const Real& x);
Real pow(const Real& base, long exponent);
Real pow(const Real& base, const Real& exponent);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);

/// Γ(x) via MPFR, correctly rounded.
Real tgamma(const Real& x);
/// 1/Γ(x), zero at the poles x = 0, -1, -2, ...
Real reciprocal_gamma(const Real& x);
/// MPFR's own error function. Used as an independent reference only.
Real erf_reference(const Real& x);

Real pi(Digits digits);
/// 10^(-exponent) at the given precision.
Real pow10_neg(int exponent, Digits digits);

}  // namespace trunc_hermite
