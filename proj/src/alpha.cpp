#include "pzeta/alpha.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "pzeta/errors.hpp"
#include "pzeta/power_series.hpp"
#include "pzeta/sieve.hpp"

namespace pzeta {

std::string_view to_string(AlphaMethod m) {
  switch (m) {
    case AlphaMethod::mobius:
      return "mobius";
    case AlphaMethod::limit:
      return "limit";
    case AlphaMethod::integral:
      return "integral";
  }
  return "?";
}

AlphaMethod parse_alpha_method(std::string_view text) {
  if (text == "mobius") return AlphaMethod::mobius;
  if (text == "limit") return AlphaMethod::limit;
  if (text == "integral") return AlphaMethod::integral;
  throw ParseError("unknown alpha method '" + std::string(text) + "'");
}

int certified_digits(const Real& value, const Real& tolerance, int cap) {
  if (value.is_zero()) return 0;
  if (tolerance.is_zero()) return cap;
  const double d = (log(abs(value)) - log(abs(tolerance))).to_double() / std::log(10.0);
  return std::clamp(static_cast<int>(std::floor(d)), 0, cap);
}

void AlphaTable::insert(AlphaEntry e) {
  if (find(e.n, e.method)) {
    throw std::invalid_argument("alpha table already holds n=" + std::to_string(e.n) + " for method " +
                                std::string(to_string(e.method)));
  }
  entries_.push_back(std::move(e));
}

const AlphaEntry* AlphaTable::find(std::size_t n, AlphaMethod method) const {
  for (const auto& e : entries_) {
    if (e.n == n && e.method == method) return &e;
  }
  return nullptr;
}

std::vector<Real> AlphaTable::values(AlphaMethod method) const {
  std::vector<Real> out;
  for (std::size_t n = 0;; ++n) {
    const auto* e = find(n, method);
    if (!e) break;
    out.push_back(e->value);
  }
  return out;
}

bool agree(const AlphaEntry& a, const AlphaEntry& b) {
  return abs(a.value - b.value) <= max(a.tolerance, b.tolerance);
}

namespace {

bool squarefree(std::uint64_t k) {
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % (p * p) == 0) return false;
  }
  return true;
}

// k^n exactly, then rounded once.
Real int_power(std::uint64_t k, std::size_t n, mpfr_prec_t bits) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
  Real r(bits);
  mpfr_set_z(r.get(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real tail_bound(std::uint64_t K, std::size_t n, mpfr_prec_t bits) {
  // 4 K^n 2^-K
  Real t = int_power(K, n, bits) * 4L;
  mpfr_div_2ui(t.get(), t.get(), static_cast<unsigned long>(K), MPFR_RNDN);
  return t;
}

// Linearised error of g_n from rounding in the Stieltjes data:
// delta log c = delta c / c as power series.
std::vector<Real> g_error_bounds(std::size_t n_max, const StieltjesTable& table, mpfr_prec_t bits) {
  std::vector<Real> c(n_max + 1, Real(bits)), dc(n_max + 1, Real(bits));
  c[0] = Real(1L, bits);
  const Real rel = pow10(-table.source_digits, bits) * 5L;
  for (std::size_t n = 0; n < n_max; ++n) {
    const Real f = factorial(static_cast<unsigned>(n), bits);
    const Real v = table.at(n).rounded_to(bits) / f;
    c[n + 1] = n % 2 == 0 ? v : -v;
    dc[n + 1] = abs(v) * rel;
  }
  std::vector<Real> inv(n_max + 1, Real(bits));
  inv[0] = Real(1L, bits);
  for (std::size_t j = 1; j <= n_max; ++j) {
    Real acc(bits);
    for (std::size_t i = 1; i <= j; ++i) acc -= c[i] * inv[j - i];
    inv[j] = acc;
  }
  std::vector<Real> out(n_max + 1, Real(bits));
  for (std::size_t n = 0; n <= n_max; ++n) {
    Real acc(bits);
    for (std::size_t m = 1; m <= n; ++m) acc += dc[m] * abs(inv[n - m]);
    out[n] = acc * factorial(static_cast<unsigned>(n), bits);
  }
  return out;
}

}  // namespace

std::uint64_t mobius_cutoff(std::size_t n, int digits) {
  const double lg2 = std::log10(2.0);
  for (std::uint64_t k = 2;; ++k) {
    const double lg = static_cast<double>(n) * std::log10(static_cast<double>(k)) - static_cast<double>(k) * lg2;
    if (lg < -digits && squarefree(k)) return k;
  }
}

MobiusSeries::MobiusSeries(std::size_t max_order, const PrecisionPolicy& policy, unsigned threads)
    : MobiusSeries(max_order, policy, bundled_stieltjes(policy), threads) {}

MobiusSeries::MobiusSeries(std::size_t max_order, const PrecisionPolicy& policy, StieltjesTable stieltjes,
                           unsigned threads)
    : max_order_(max_order), policy_(policy), stieltjes_(std::move(stieltjes)) {
  if (max_order > kMaxZetaOrder) throw UnsupportedOrder("alpha: order above 64 is not supported");
  g_ = g_coefficients(max_order, policy_, stieltjes_);

  const std::uint64_t K = mobius_cutoff(max_order, policy_.working_digits());
  const auto mu = MobiusTable::build(static_cast<std::uint32_t>(K));
  mu_.assign(K + 1, 0);
  for (std::uint64_t k = 1; k <= K; ++k) mu_[k] = static_cast<std::int8_t>(mu(static_cast<std::uint32_t>(k)));

  const std::size_t count = K - 1;
  std::vector<std::optional<ZetaDerivatives>> zeta(count);
  std::vector<std::optional<LogZetaTaylor>> logz(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const Real a(static_cast<long>(i + 2), policy_.working_bits());
      zeta[i] = zeta_derivatives(a, max_order, policy_);
      logz[i] = LogZetaTaylor{a, series_log(zeta_taylor(*zeta[i]))};
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (std::size_t i = 0; i < count; ++i) {
    zeta_.push_back(std::move(*zeta[i]));
    log_zeta_.push_back(std::move(*logz[i]));
  }
}

const LogZetaTaylor& MobiusSeries::log_zeta_at(std::uint64_t k) const {
  if (k < 2 || k - 2 >= log_zeta_.size()) throw DomainError("log zeta Taylor data not prepared for this k");
  return log_zeta_[k - 2];
}

const ZetaDerivatives& MobiusSeries::zeta_at(std::uint64_t k) const {
  if (k < 2 || k - 2 >= zeta_.size()) throw DomainError("zeta derivative data not prepared for this k");
  return zeta_[k - 2];
}

AlphaEntry MobiusSeries::alpha(std::size_t n) const {
  if (n > max_order_) throw UnsupportedOrder("alpha: n exceeds the prepared order");
  const mpfr_prec_t bits = policy_.working_bits();
  const std::uint64_t K = mobius_cutoff(n, policy_.working_digits());
  const Real nfact = factorial(static_cast<unsigned>(n), bits);

  Real sum(bits), abs_sum(bits), last(bits);
  for (std::uint64_t k = 2; k <= K; ++k) {
    if (mu_[k] == 0) continue;
    // mu(k)/k * k^n * n! * [(log zeta)^(n)(k) / n!]
    Real term = int_power(k, n, bits) * nfact * log_zeta_at(k)[n] / static_cast<long>(k);
    if (mu_[k] < 0) term = -term;
    abs_sum += abs(term);
    sum += term;
    if (k == K) last = abs(term);
  }

  AlphaEntry e;
  e.n = n;
  e.method = AlphaMethod::mobius;
  e.value = g_[n] + sum;
  TruncationReport tr{K, last, tail_bound(K, n, bits)};

  Real rounding = (abs_sum + abs(g_[n]) * static_cast<long>(n + 1)) * static_cast<long>(K + n * n + 16);
  mpfr_div_2si(rounding.get(), rounding.get(), bits, MPFR_RNDN);
  const auto g_err = g_error_bounds(n, stieltjes_, bits);
  e.tolerance = tr.tail_bound + rounding + g_err[n];
  e.certified_digits = certified_digits(e.value, e.tolerance, policy_.target_digits());
  e.truncation = std::move(tr);
  return e;
}

AlphaEntry alpha_mobius(std::size_t n, const PrecisionPolicy& policy) {
  return MobiusSeries(n, policy).alpha(n);
}

SeriesResult alpha0_series(const PrecisionPolicy& policy) {
  const mpfr_prec_t bits = policy.working_bits();
  const std::uint64_t K = mobius_cutoff(0, policy.working_digits());
  const auto mu = MobiusTable::build(static_cast<std::uint32_t>(K));
  Real sum(bits), last(bits);
  for (std::uint64_t k = 2; k <= K; ++k) {
    const int m = mu(static_cast<std::uint32_t>(k));
    if (m == 0) continue;
    Real term = log(zeta_value(Real(static_cast<long>(k), bits), policy)) / static_cast<long>(k);
    if (m < 0) term = -term;
    sum += term;
    if (k == K) last = abs(term);
  }
  return {sum, TruncationReport{K, last, tail_bound(K, 0, bits)}};
}

SpecialCase special_case_residual(std::size_t n, const MobiusSeries& series) {
  if (n < 1 || n > 3) throw UnsupportedOrder("special_case_residual: closed forms exist for n = 1, 2, 3 only");
  if (series.max_order() < n) throw UnsupportedOrder("special_case_residual: series prepared below order n");
  const auto& policy = series.policy();
  const mpfr_prec_t bits = policy.working_bits();
  const Real g0 = series.stieltjes().at(0).rounded_to(bits);
  const std::uint64_t K = mobius_cutoff(n, policy.working_digits());
  const auto mu = MobiusTable::build(static_cast<std::uint32_t>(K));

  Real closed(bits);
  if (n == 1) {
    closed = g0;
  } else if (n == 2) {
    const Real g1 = series.stieltjes().at(1).rounded_to(bits);
    closed = -(g0 * g0) - g1 * 2L;
  } else {
    const Real g1 = series.stieltjes().at(1).rounded_to(bits);
    const Real g2 = series.stieltjes().at(2).rounded_to(bits);
    closed = g0 * g0 * g0 * 2L + g0 * g1 * 6L + g2 * 3L;
  }

  for (std::uint64_t k = 2; k <= K; ++k) {
    const int m = mu(static_cast<std::uint32_t>(k));
    if (m == 0) continue;
    const auto& d = series.zeta_at(k).values;
    const Real r1 = d[1] / d[0];
    Real bracket(bits);
    if (n == 1) {
      bracket = r1;
    } else if (n == 2) {
      bracket = -(r1 * r1) + d[2] / d[0];
    } else {
      const Real r2 = d[2] / d[0];
      bracket = r1 * r1 * r1 * 2L - r1 * r2 * 3L + d[3] / d[0];
    }
    Real term = bracket * int_power(k, n - 1, bits);
    if (m < 0) term = -term;
    closed += term;
  }
  const auto generic = series.alpha(n);
  return {n, closed, generic.value, closed - generic.value};
}

SpecialCase special_case_residual(std::size_t n, const PrecisionPolicy& policy) {
  return special_case_residual(n, MobiusSeries(std::max<std::size_t>(n, 1), policy));
}

}  // namespace pzeta
