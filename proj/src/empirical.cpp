#include "pzeta/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pzeta/errors.hpp"
#include "pzeta/log_integral.hpp"
#include "pzeta/prime_sums.hpp"

namespace pzeta {

namespace {

Real from_ld(long double v, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ld(r.get(), v, MPFR_RNDN);
  return r;
}

void check_range(std::uint64_t x, const PrimeSieve& sieve) {
  if (x < 2) throw DomainError("prime sums need x >= 2");
  if (x > sieve.limit()) throw DomainError("x beyond sieve limit");
}

std::uint64_t floor_u64(const Real& T) {
  Real fl(T.precision());
  mpfr_floor(fl.get(), T.get());
  return mpfr_get_uj(fl.get(), MPFR_RNDZ);
}

Real mertens_from_sum(std::size_t n, long double sum, std::uint64_t x, const PrecisionPolicy& policy) {
  const mpfr_prec_t bits = policy.working_bits();
  const Real lx = log(Real::from_uint(x, bits));
  if (n == 0) return from_ld(sum, bits) - log(lx);
  return from_ld(sum, bits) - pow(lx, static_cast<long>(n)) / static_cast<long>(n);
}

Real signed_estimate(std::size_t n, const Real& partial, const PrecisionPolicy& policy) {
  if (n == 0) return partial - euler_gamma(policy);
  return n % 2 == 0 ? partial : -partial;
}

// pi(T) - li(T) with pi counted right-closed, consistent with sum_{p<=T}.
Real remainder_at(const Real& T, std::uint64_t floor_t, const PrimeSieve& sieve, const PrecisionPolicy& policy) {
  return Real::from_uint(sieve.count_upto(floor_t), policy.working_bits()) - log_integral(T, policy);
}

void check_integral_range(const Real& T, const PrimeSieve& sieve) {
  if (T < Real(2L, 64)) throw DomainError("integral route needs T >= 2");
  if (T > Real::from_uint(sieve.limit(), 64)) throw DomainError("T beyond sieve limit");
}

}  // namespace

Real tail_model(std::size_t n, const Real& x) {
  return pow(log(x), static_cast<long>(n + 1)) / sqrt(x);
}

Real mertens_partial(std::size_t n, std::uint64_t x, const PrimeSieve& sieve, const PrecisionPolicy& policy) {
  check_range(x, sieve);
  const auto sums = prime_power_sums(sieve, 1.0L, n, {x});
  return mertens_from_sum(n, sums.sums[0][n], x, policy);
}

LimitEstimate limit_estimate(std::size_t n, std::uint64_t x_max, const PrimeSieve& sieve,
                             const PrecisionPolicy& policy) {
  const Real partial = mertens_partial(n, x_max, sieve, policy);
  return {signed_estimate(n, partial, policy), tail_model(n, Real::from_uint(x_max, policy.working_bits()))};
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t x_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 100; x <= 100000000 && x < x_max; x *= 10) out.push_back(x);
  out.push_back(x_max);
  return out;
}

std::vector<PrimeSumSeries> convergence_series(std::size_t n_max, const std::vector<std::uint64_t>& checkpoints,
                                               const PrimeSieve& sieve, const PrecisionPolicy& policy,
                                               unsigned threads) {
  for (auto x : checkpoints) check_range(x, sieve);
  const auto sums = prime_power_sums(sieve, 1.0L, n_max, checkpoints, threads);
  std::vector<PrimeSumSeries> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    PrimeSumSeries s{n, {}};
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
      const std::uint64_t x = checkpoints[c];
      Real partial = mertens_from_sum(n, sums.sums[c][n], x, policy);
      Real est = signed_estimate(n, partial, policy);
      s.checkpoints.push_back(
          {x, std::move(partial), std::move(est), tail_model(n, Real::from_uint(x, policy.working_bits()))});
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string convergence_csv(const std::vector<PrimeSumSeries>& series, int digits) {
  std::ostringstream os;
  os << "x,n,partial,estimate,tolerance\n";
  for (const auto& s : series) {
    for (const auto& c : s.checkpoints) {
      os << c.x << ',' << s.n << ',' << to_decimal(c.partial, digits) << ',' << to_decimal(c.estimate, digits) << ','
         << to_sci(c.tolerance, 3) << '\n';
    }
  }
  return os.str();
}

IntegralEstimate alpha_integral(std::size_t n, const Real& T_in, const PrimeSieve& sieve,
                                const PrecisionPolicy& policy) {
  check_integral_range(T_in, sieve);
  const mpfr_prec_t bits = policy.working_bits();
  const Real T = T_in.rounded_to(bits);
  const std::uint64_t ft = floor_u64(T);
  const auto sums = prime_power_sums(sieve, 1.0L, n, {ft});
  const Real S = from_ld(sums.sums[0][n], bits);
  const Real L = log(T);
  const Real f = remainder_at(T, ft, sieve, policy);

  // pi part: sum_p log^n p / p - pi(T) log^n T / T
  // li part: -li(T) log^n T / T + log^n T / n        (n >= 1)
  //          -li(T) / T + gamma + log log T          (n = 0)
  Real value(bits);
  if (n == 0) {
    value = S - log(L) - euler_gamma(policy) - f / T;
  } else {
    const Real Ln = pow(L, static_cast<long>(n));
    value = S - Ln / static_cast<long>(n) - f * Ln / T;
    if (n % 2 == 1) value = -value;
  }
  return {n, T, std::move(value), tail_model(n, T)};
}

IntegralEstimate c_integral(std::size_t j, const Real& T_in, const PrimeSieve& sieve, const PrecisionPolicy& policy) {
  check_integral_range(T_in, sieve);
  const mpfr_prec_t bits = policy.working_bits();
  const Real T = T_in.rounded_to(bits);
  const std::uint64_t ft = floor_u64(T);
  const auto sums = prime_power_sums(sieve, 1.0L, j, {ft});
  const Real L = log(T);
  const Real f = remainder_at(T, ft, sieve, policy);
  const Real jfact = factorial(static_cast<unsigned>(j), bits);

  // Antiderivative of log^j t / t^2: G(t) = -(1/t) sum_{r<=j} j!/r! log^r t.
  Real g_T(bits), prime_part(bits), li_poly(bits);
  Real lpow(1L, bits);
  for (std::size_t r = 0; r <= j; ++r) {
    const Real w = jfact / factorial(static_cast<unsigned>(r), bits);
    g_T -= w * lpow;
    prime_part += w * from_ld(sums.sums[0][r], bits);  // -sum_p G(p)
    if (r >= 1) li_poly += w * lpow / static_cast<long>(r);
    lpow *= L;
  }
  g_T /= T;

  // pi part: pi(T) G(T) - sum_p G(p); li part: G(T) li(T) + j! (gamma + log log T) + sum_{r>=1} j!/(r! r) L^r
  Real value = f * g_T + prime_part - jfact * (euler_gamma(policy) + log(L)) - li_poly;
  if (j % 2 == 1) value = -value;
  return {j, T, std::move(value), tail_model(j, T)};
}

std::vector<RemainderSample> remainder_samples(const std::vector<double>& ts, const PrimeSieve& sieve,
                                               const PrecisionPolicy& policy) {
  std::vector<RemainderSample> out;
  for (double t : ts) {
    if (!(t > 1.0)) throw DomainError("remainder samples need t > 1");
    const HalfInteger pi = prime_count(t, sieve);
    const Real tr(t, policy.working_bits());
    Real f = Real(pi.twice, policy.working_bits()) / 2L - log_integral(tr, policy);
    out.push_back({t, std::move(f)});
  }
  return out;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  std::vector<double> out;
  if (count == 0) return out;
  if (count == 1) return {lo};
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1)));
  }
  out.back() = hi;
  return out;
}

double remainder_shape_constant(const std::vector<RemainderSample>& samples) {
  double worst = 0.0;
  for (const auto& s : samples) {
    worst = std::max(worst, std::fabs(s.f_value.to_double()) / (std::sqrt(s.t) * std::log(s.t)));
  }
  return worst;
}

}  // namespace pzeta
