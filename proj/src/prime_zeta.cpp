#include "pzeta/prime_zeta.hpp"

#include <cmath>
#include <string>

#include "pzeta/errors.hpp"
#include "pzeta/log_integral.hpp"
#include "pzeta/prime_sums.hpp"
#include "pzeta/zeta.hpp"

namespace pzeta {

std::string_view to_string(PrimeZetaMethod m) {
  switch (m) {
    case PrimeZetaMethod::direct:
      return "direct";
    case PrimeZetaMethod::mobius:
      return "mobius";
    case PrimeZetaMethod::series:
      return "series";
    case PrimeZetaMethod::remainder_integral:
      return "remainder_integral";
  }
  return "?";
}

PrimeZetaMethod parse_prime_zeta_method(std::string_view text) {
  if (text == "direct") return PrimeZetaMethod::direct;
  if (text == "mobius") return PrimeZetaMethod::mobius;
  if (text == "series") return PrimeZetaMethod::series;
  if (text == "integral" || text == "remainder_integral") return PrimeZetaMethod::remainder_integral;
  throw ParseError("unknown prime zeta method '" + std::string(text) + "'");
}

namespace {

void require_above_one(const Real& s, const char* what) {
  if (!(s > Real(1L, s.precision()))) {
    throw DomainError(std::string(what) + ": s must exceed 1 (pole of log zeta at s = 1, branch cut (1/2, 1])");
  }
}

Real from_ld(long double v, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ld(r.get(), v, MPFR_RNDN);
  return r;
}

// E_1(z) for z > 0; MPFR's eint returns -E_1(-x) for negative x.
Real exp_integral_e1(const Real& z) {
  Real r(z.precision());
  const Real neg = -z;
  mpfr_eint(r.get(), neg.get(), MPFR_RNDN);
  return -r;
}

// int_N^inf log^q t * t^-s dt = N^{1-s} sum_{i<=q} q!/(q-i)! L^{q-i} / (s-1)^{i+1}
Real log_power_tail(std::size_t q, const Real& s, const Real& L) {
  const mpfr_prec_t bits = s.precision();
  const Real c = s - Real(1L, bits);
  Real sum(bits), falling(1L, bits);
  for (std::size_t i = 0; i <= q; ++i) {
    sum += falling * pow(L, static_cast<long>(q - i)) / pow(c, static_cast<long>(i + 1));
    falling *= static_cast<long>(q - i);
  }
  return sum * exp(-(c * L));
}

}  // namespace

PrimeZetaValue prime_zeta_direct(const Real& s_in, const PrimeSieve& sieve, const PrecisionPolicy& policy) {
  require_above_one(s_in, "prime_zeta_direct");
  const mpfr_prec_t bits = policy.working_bits();
  const Real s = s_in.rounded_to(bits);
  const std::uint64_t N = sieve.limit();
  const auto sums = prime_power_sums(sieve, s.to_long_double(), 0, {N});
  const Real LN = log(Real::from_uint(N, bits));
  const Real c = s - Real(1L, bits);
  Real value = from_ld(sums.sums[0][0], bits) + exp_integral_e1(c * LN);
  Real err = exp(-(c * LN)) / c;
  return {s, std::move(value), PrimeZetaMethod::direct, std::move(err)};
}

PrimeZetaValue prime_zeta_mobius(const Real& s_in, const PrecisionPolicy& policy) {
  require_above_one(s_in, "prime_zeta_mobius");
  const mpfr_prec_t bits = policy.working_bits();
  const Real s = s_in.rounded_to(bits);
  const double sd = s.to_double();
  const auto K = static_cast<std::uint64_t>(std::ceil(policy.working_digits() * std::log2(10.0) / sd)) + 1;
  const auto mu = MobiusTable::build(static_cast<std::uint32_t>(K));

  Real sum(bits);
  for (std::uint64_t k = 1; k <= K; ++k) {
    const int m = mu(static_cast<std::uint32_t>(k));
    if (m == 0) continue;
    const Real ks = s * static_cast<long>(k);
    Real term = log(zeta_value(ks, policy)) / static_cast<long>(k);
    if (m < 0) term = -term;
    sum += term;
  }
  // sum_{k>K} |log zeta(ks)|/k <= sum_{k>K} 2^{1-ks} <= 4 * 2^{-(K+1)s}
  Real tail = exp(-(s * static_cast<long>(K + 1)) * log(Real(2L, bits))) * 4L;
  Real rounding = pow10(-(policy.working_digits() - 3), bits);
  return {s, std::move(sum), PrimeZetaMethod::mobius, tail + rounding};
}

PrimeZetaValue prime_zeta_series(const Real& s, const std::vector<Real>& alpha, std::size_t terms) {
  const mpfr_prec_t bits = s.precision();
  const Real one(1L, bits);
  if (!(s > one)) throw DomainError("prime_zeta_series: s must exceed 1 (branch cut (1/2, 1] of the log term)");
  const Real h = s - one;
  if (!(h < Real(0.5, bits))) throw DomainError("prime_zeta_series: |s - 1| must be below 1/2 (disk of convergence)");
  if (alpha.size() < terms + 2) {
    throw UnsupportedOrder("prime_zeta_series: need alpha_0..alpha_" + std::to_string(terms + 1));
  }
  Real value = -log(h);
  Real hp = one;  // h^n / n!
  for (std::size_t n = 0; n <= terms; ++n) {
    value += alpha[n] * hp;
    hp = hp * h / static_cast<long>(n + 1);
  }
  Real err = abs(alpha[terms + 1]) * hp;
  return {s, std::move(value), PrimeZetaMethod::series, std::move(err)};
}

Real prime_zeta_derivative(std::size_t m, const Real& s_in, const PrimeSieve& sieve, const PrecisionPolicy& policy) {
  require_above_one(s_in, "prime_zeta_derivative");
  if (m == 0) return prime_zeta_direct(s_in, sieve, policy).value;
  const mpfr_prec_t bits = policy.working_bits();
  const Real s = s_in.rounded_to(bits);
  const std::uint64_t N = sieve.limit();
  const auto sums = prime_power_sums(sieve, s.to_long_double(), m, {N});
  const Real LN = log(Real::from_uint(N, bits));
  // m-th s-derivative of E_1((s-1) log N) is (-1)^m int_N^inf log^{m-1} t t^-s dt.
  return from_ld(sums.sums[0][m], bits) + log_power_tail(m - 1, s, LN);
}

PrimeZetaValue prime_zeta_remainder_integral(const Real& s_in, const Real& T_in, const PrimeSieve& sieve,
                                             const PrecisionPolicy& policy) {
  require_above_one(s_in, "prime_zeta_remainder_integral");
  const mpfr_prec_t bits = policy.working_bits();
  const Real s = s_in.rounded_to(bits);
  const Real T = T_in.rounded_to(bits);
  if (T < Real(2L, bits)) throw DomainError("remainder integral needs T >= 2");
  if (T > Real::from_uint(sieve.limit(), bits)) throw DomainError("T beyond sieve limit");
  Real fl(bits);
  mpfr_floor(fl.get(), T.get());
  const std::uint64_t ft = mpfr_get_uj(fl.get(), MPFR_RNDZ);

  const Real one(1L, bits);
  const Real c = s - one;
  const Real LT = log(T);
  const Real t_pow = exp(-(s * LT));  // T^-s
  const auto sums = prime_power_sums(sieve, s.to_long_double(), 0, {ft});

  // s int_1^T t^{-s-1} pi(t) dt = sum_{p<=T} p^-s - pi(T) T^-s
  const Real pi_part = from_ld(sums.sums[0][0], bits) - Real::from_uint(sieve.count_upto(ft), bits) * t_pow;
  // s int_{1+d}^T t^{-s-1} li(t) dt -> -T^-s li(T) - log(s-1) - E_1((s-1) log T) as d -> 0+;
  // li(1+d) ~ gamma + log log(1+d) cancels the E_1 divergence at the lower end.
  const Real li_part = -(t_pow * log_integral(T, policy)) - log(c) - exp_integral_e1(c * LT);

  Real value = -log(c) + pi_part - li_part;
  // T^{1/2-s} log T
  Real tail = exp((Real(0.5, bits) - s) * LT) * LT;
  return {s, std::move(value), PrimeZetaMethod::remainder_integral, std::move(tail)};
}

}  // namespace pzeta
