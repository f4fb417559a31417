#include "pzeta/precision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <regex>
#include <utility>

#include "pzeta/errors.hpp"

namespace pzeta {

PrecisionPolicy::PrecisionPolicy(int target_digits, int guard_digits)
    : target_(target_digits), guard_(guard_digits) {
  if (target_digits < 1) throw DomainError("target_digits must be positive");
  if (guard_digits < kMinGuardDigits) throw DomainError("guard_digits must be at least 10");
}

mpfr_prec_t PrecisionPolicy::working_bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.321928094887362)) + 4;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real Real::from_uint(std::uint64_t value, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_uj(r.v_, value, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::rounded_to(mpfr_prec_t bits) const {
  Real r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {

// Widen `a` in place so that a binary result keeps the larger precision.
void widen(mpfr_ptr a, mpfr_srcptr b) {
  if (mpfr_get_prec(b) > mpfr_get_prec(a)) mpfr_prec_round(a, mpfr_get_prec(b), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(v_, o.v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(v_, o.v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(v_, o.v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(v_, o.v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long k) {
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real make_real(std::string_view text, const PrecisionPolicy& policy) {
  static const std::regex kLiteral(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  const std::string s(text);
  if (!std::regex_match(s, kLiteral)) throw ParseError("malformed decimal literal: '" + s + "'");
  Real r(policy.working_bits());
  // mpfr_set_str does not accept a leading '+'.
  const char* start = s.c_str() + (s.front() == '+' ? 1 : 0);
  if (mpfr_set_str(r.get(), start, 10, MPFR_RNDN) != 0) {
    throw ParseError("malformed decimal literal: '" + s + "'");
  }
  return r;
}

Real abs(Real x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log1p(const Real& x) {
  Real r(x.precision());
  mpfr_log1p(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real euler_gamma(const PrecisionPolicy& policy) {
  Real r(policy.working_bits());
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Real pi(const PrecisionPolicy& policy) {
  Real r(policy.working_bits());
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real factorial(unsigned n, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_fac_ui(r.get(), n, MPFR_RNDN);
  return r;
}

Real pow10(long e, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

namespace {

struct MpfrString {
  char* s = nullptr;
  ~MpfrString() {
    if (s) mpfr_free_str(s);
  }
};

std::string format_digits(const Real& x, int n) {
  if (!x.is_finite()) {
    if (mpfr_nan_p(x.get())) return "nan";
    return x.sign() < 0 ? "-inf" : "inf";
  }
  if (x.is_zero()) {
    if (n <= 1) return "0";
    return "0." + std::string(static_cast<std::size_t>(n - 1), '0');
  }
  mpfr_exp_t e = 0;
  MpfrString raw;
  raw.s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(n), x.get(), MPFR_RNDN);
  std::string digits(raw.s);
  std::string sign;
  if (!digits.empty() && digits.front() == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  const long nd = static_cast<long>(digits.size());
  // value = 0.DIGITS x 10^e
  std::string out;
  if (e > nd || e < -4) {
    out = digits.substr(0, 1);
    if (nd > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e - 1);
  } else if (e <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
  } else if (e == nd) {
    out = digits;
  } else {
    out = digits.substr(0, static_cast<std::size_t>(e)) + "." + digits.substr(static_cast<std::size_t>(e));
  }
  return sign + out;
}

}  // namespace

std::string to_decimal(const Real& x, int significant_digits) {
  return format_digits(x, std::max(significant_digits, 1));
}

std::string to_decimal(const Real& x) {
  // Enough digits for an exact round trip (matches mpfr_get_str with n = 0).
  const int n = 1 + static_cast<int>(std::ceil(static_cast<double>(x.precision()) * 0.30102999566398120));
  return format_digits(x, n);
}

std::string to_sci(const Real& x, int significant_digits) {
  if (x.is_zero()) return "0";
  if (!x.is_finite()) return format_digits(x, 1);
  mpfr_exp_t e = 0;
  MpfrString raw;
  raw.s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(std::max(significant_digits, 1)), x.get(),
                       MPFR_RNDN);
  std::string digits(raw.s);
  std::string sign;
  if (digits.front() == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  std::string out = digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  return sign + out + "e" + std::to_string(e - 1);
}

int decimal_places(std::string_view literal) {
  const auto dot = literal.find('.');
  if (dot == std::string_view::npos) return 0;
  return static_cast<int>(literal.size() - dot - 1);
}

}  // namespace pzeta
