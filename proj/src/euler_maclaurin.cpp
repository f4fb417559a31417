#include "pzeta/euler_maclaurin.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <mutex>

#include "pzeta/errors.hpp"

namespace pzeta {

namespace {

// Akiyama-Tanigawa; returns B_0..B_n with B_1 = +1/2 (even entries are the
// usual Bernoulli numbers).
std::vector<mpq_class> akiyama_tanigawa(unsigned n) {
  std::vector<mpq_class> a(n + 1), out(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out[m] = a[0];
  }
  return out;
}

// Shared cache; entries are never modified once published.
std::vector<mpq_class> bernoulli_rationals(unsigned n) {
  static std::mutex mutex;
  static std::vector<mpq_class> cache;
  std::lock_guard lock(mutex);
  if (cache.size() < n + 1) cache = akiyama_tanigawa(std::max(n, 2 * static_cast<unsigned>(cache.size())));
  return std::vector<mpq_class>(cache.begin(), cache.begin() + n + 1);
}

using Poly = std::vector<Real>;

// Q_{k+1} = Q_k' - (b + k) Q_k for f^{(k)}(t) = t^{-b-k} Q_k(log t).
Poly next_derivative(const Poly& q, const Real& b_plus_k) {
  Poly out(q.size(), Real(q[0].precision()));
  for (std::size_t i = 0; i < q.size(); ++i) {
    out[i] = -(q[i] * b_plus_k);
    if (i + 1 < q.size()) out[i] += q[i + 1] * static_cast<long>(i + 1);
  }
  return out;
}

Real eval_poly(const Poly& q, const Real& x) {
  Real acc(q.back());
  for (std::size_t i = q.size() - 1; i-- > 0;) acc = acc * x + q[i];
  return acc;
}

}  // namespace

std::vector<Real> bernoulli_even(unsigned p, mpfr_prec_t bits) {
  const auto rat = bernoulli_rationals(2 * p);
  std::vector<Real> out;
  out.reserve(p);
  for (unsigned i = 1; i <= p; ++i) {
    Real r(bits);
    mpfr_set_q(r.get(), rat[2 * i].get_mpq_t(), MPFR_RNDN);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Real> em_boundary_terms(const Real& b, std::size_t max_degree, std::uint64_t cut, unsigned p,
                                    mpfr_prec_t bits) {
  if (cut < 1) throw DomainError("Euler-Maclaurin cut must be positive");
  const auto bern = bernoulli_even(p, bits);
  // B_{2i} / (2i)!
  std::vector<Real> weights;
  for (unsigned i = 1; i <= p; ++i) weights.push_back(bern[i - 1] / factorial(2 * i, bits));

  const Real J = Real::from_uint(cut, bits);
  const Real L = log(J);
  const Real bb = b.rounded_to(bits);
  const Real one(1L, bits);

  // t^{-b-k} at t = J for k = 0..2p-1.
  std::vector<Real> jpow;
  jpow.push_back(exp(-(bb * L)));
  const Real inv_j = one / J;
  for (unsigned k = 1; k < 2 * p; ++k) jpow.push_back(jpow.back() * inv_j);

  std::vector<Real> out;
  out.reserve(max_degree + 1);
  for (std::size_t m = 0; m <= max_degree; ++m) {
    Poly q(m + 1, Real(bits));
    q[m] = one;
    Real acc = eval_poly(q, L) * jpow[0] / 2L;
    for (unsigned k = 0; k + 1 < 2 * p; ++k) {
      q = next_derivative(q, bb + Real(static_cast<long>(k), bits));
      if (k % 2 == 0) {  // q now holds Q_{k+1}, an odd derivative
        const unsigned i = k / 2;
        acc -= weights[i] * eval_poly(q, L) * jpow[k + 1];
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

// Absolute-coefficient majorants of Q_{2p-1} for each degree m.
std::vector<Poly> remainder_majorants(const Real& b, std::size_t max_degree, unsigned p) {
  constexpr mpfr_prec_t bits = 64;
  const Real bb = b.rounded_to(bits);
  std::vector<Poly> out;
  for (std::size_t m = 0; m <= max_degree; ++m) {
    Poly q(m + 1, Real(bits));
    q[m] = Real(1L, bits);
    for (unsigned k = 0; k + 1 < 2 * p; ++k) q = next_derivative(q, bb + Real(static_cast<long>(k), bits));
    for (auto& c : q) c = abs(c);
    out.push_back(std::move(q));
  }
  return out;
}

double remainder_log10(const std::vector<Poly>& majorants, const Real& b, std::uint64_t cut, unsigned p) {
  constexpr mpfr_prec_t bits = 64;
  const Real L = log(Real::from_uint(cut, bits));
  const Real ln10 = log(Real(10L, bits));
  // log10 of 2 (2pi)^{-2p} J^{-(b+2p-1)}
  const double base = std::log10(2.0) - 2.0 * p * std::log10(2.0 * M_PI) -
                      ((b.rounded_to(bits) + Real(2L * p - 1, bits)) * L / ln10).to_double();
  double worst = -1e300;
  for (const auto& q : majorants) {
    const Real major = eval_poly(q, L);
    if (major.is_zero()) continue;
    worst = std::max(worst, base + (log(major) / ln10).to_double());
  }
  return worst;
}

}  // namespace

double em_remainder_log10(const Real& b, std::size_t max_degree, std::uint64_t cut, unsigned p) {
  return remainder_log10(remainder_majorants(b, max_degree, p), b, cut, p);
}

std::uint64_t em_choose_cut(const Real& b, std::size_t max_degree, unsigned p, int digits,
                            std::uint64_t min_cut) {
  const auto majorants = remainder_majorants(b, max_degree, p);
  std::uint64_t j = std::max<std::uint64_t>(min_cut, 2);
  // One extra order of magnitude of margin over the estimate.
  while (remainder_log10(majorants, b, j, p) > -(digits + 1)) {
    j = std::max(j + 1, j + j / 4);
    if (j > (std::uint64_t{1} << 40)) throw DomainError("Euler-Maclaurin cut search diverged");
  }
  return j;
}

}  // namespace pzeta
