#pragma once

#include <cstdint>
#define MPFR_USE_INTMAX_T 1
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace pzeta {

// Decimal precision requested by a caller plus the guard digits carried
// internally. Every Real produced under a policy has working_bits() bits.
class PrecisionPolicy {
 public:
  static constexpr int kDefaultGuardDigits = 15;
  static constexpr int kMinGuardDigits = 10;

  PrecisionPolicy() : PrecisionPolicy(30) {}
  explicit PrecisionPolicy(int target_digits, int guard_digits = kDefaultGuardDigits);

  int target_digits() const { return target_; }
  int guard_digits() const { return guard_; }
  int working_digits() const { return target_ + guard_; }
  mpfr_prec_t working_bits() const;

  // Same policy with a different target, guard unchanged.
  PrecisionPolicy with_target(int target_digits) const {
    return PrecisionPolicy(target_digits, guard_);
  }

  friend bool operator==(const PrecisionPolicy&, const PrecisionPolicy&) = default;

 private:
  int target_;
  int guard_;
};

// RAII owner of an mpfr_t. Rounding is always round-to-nearest-even.
// Binary operations produce a result at the larger operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(double value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real zero(const PrecisionPolicy& p) { return Real(p.working_bits()); }
  static Real from_int(long value, const PrecisionPolicy& p) { return Real(value, p.working_bits()); }
  static Real from_uint(std::uint64_t value, mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  // Copy rounded to a new precision.
  Real rounded_to(mpfr_prec_t bits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  // Base-2 exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long exponent2() const { return mpfr_get_exp(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long k);
  Real& operator/=(long k);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long k) { return a *= k; }
  friend Real operator*(long k, Real a) { return a *= k; }
  friend Real operator/(Real a, long k) { return a /= k; }
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t v_;
};

// Parses a signed decimal literal ("-1.25", "1e-40", ".5") at the policy's
// working precision. Anything else throws ParseError.
Real make_real(std::string_view text, const PrecisionPolicy& policy);

Real abs(Real x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real max(const Real& a, const Real& b);

Real euler_gamma(const PrecisionPolicy& policy);
Real pi(const PrecisionPolicy& policy);
Real factorial(unsigned n, mpfr_prec_t bits);
// 10^e at the given precision.
Real pow10(long e, mpfr_prec_t bits);

// Round-to-nearest decimal string with exactly `significant_digits` digits;
// fixed notation for moderate magnitudes, d.ddd...e±N otherwise. Trailing
// zeros are kept.
std::string to_decimal(const Real& x, int significant_digits);
// Shortest digit count that parses back to the identical binary value.
std::string to_decimal(const Real& x);
// Short scientific form for error estimates, e.g. "3.1e-46".
std::string to_sci(const Real& x, int significant_digits = 2);

// Number of decimal places written after the point in a literal such as
// "-0.3157"; 0 if there is no point. Exponent markers are not allowed.
int decimal_places(std::string_view literal);

}  // namespace pzeta
