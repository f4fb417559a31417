#include "pzeta/zeta.hpp"

#include <cmath>
#include <string>

#include "pzeta/errors.hpp"
#include "pzeta/euler_maclaurin.hpp"

namespace pzeta {

namespace {

// Extra bits carried through the summation before the final rounding.
constexpr mpfr_prec_t kInternalGuardBits = 32;
constexpr unsigned kDefaultBernoulliTerms = 8;

struct Plan {
  std::uint64_t cut;
  unsigned p;
};

// Direct terms cost about J (order + 1) multiplications, the boundary
// corrections about p (order + 1)^2.
Plan plan_summation(const Real& a, std::size_t order, int digits, const ZetaOptions& options) {
  if (options.cut) return {*options.cut, options.bernoulli_terms.value_or(kDefaultBernoulliTerms)};
  if (options.bernoulli_terms) return {em_choose_cut(a, order, *options.bernoulli_terms, digits), *options.bernoulli_terms};
  const double width = static_cast<double>(order + 1);
  Plan best{em_choose_cut(a, order, kDefaultBernoulliTerms, digits), kDefaultBernoulliTerms};
  if (best.cut <= 4096) return best;
  double best_cost = static_cast<double>(best.cut) * width + kDefaultBernoulliTerms * width * width;
  for (unsigned p : {16u, 24u, 32u, 48u, 64u}) {
    const std::uint64_t j = em_choose_cut(a, order, p, digits);
    const double cost = static_cast<double>(j) * width + p * width * width;
    if (cost < best_cost) {
      best = {j, p};
      best_cost = cost;
    }
  }
  return best;
}

ZetaDerivatives compute_derivatives(const Real& a_in, std::size_t order, const PrecisionPolicy& policy,
                                    const ZetaOptions& options) {
  const mpfr_prec_t out_bits = policy.working_bits();
  const mpfr_prec_t bits = out_bits + kInternalGuardBits;
  const Real a = a_in.rounded_to(bits);
  // zeta^(m)(a) - [m = 0] is of size 2^-a, so the cut is chosen for that
  // relative accuracy rather than an absolute one.
  const int scale_digits = static_cast<int>(std::ceil(a.to_double() * 0.30102999566398120));
  const Plan plan = plan_summation(a, order, policy.working_digits() + 2 + scale_digits, options);
  const unsigned p = plan.p;
  const std::uint64_t cut = plan.cut;
  if (cut < 2) throw DomainError("zeta: Euler-Maclaurin cut must be at least 2");

  std::vector<Real> acc(order + 1, Real(bits));
  acc[0] = Real(1L, bits);  // j = 1 contributes only to m = 0
  for (std::uint64_t j = 2; j < cut; ++j) {
    const Real lj = log(Real::from_uint(j, bits));
    Real term = exp(-(a * lj));
    const Real neg_l = -lj;
    for (std::size_t m = 0; m <= order; ++m) {
      acc[m] += term;
      term *= neg_l;
    }
  }

  // int_J^inf (log t)^m t^-a dt = J^{1-a} sum_{i<=m} m!/(m-i)! L^{m-i} / (a-1)^{i+1}
  const Real one(1L, bits);
  const Real J = Real::from_uint(cut, bits);
  const Real L = log(J);
  const Real c = a - one;
  const Real inv_c = one / c;
  const Real jfac = exp(-(c * L));
  std::vector<Real> lpow(order + 1, one), cpow(order + 2, one);
  for (std::size_t k = 1; k <= order; ++k) lpow[k] = lpow[k - 1] * L;
  for (std::size_t k = 1; k <= order + 1; ++k) cpow[k] = cpow[k - 1] * inv_c;
  const auto boundary = em_boundary_terms(a, order, cut, p, bits);

  ZetaDerivatives out{a_in.rounded_to(out_bits), {}, cut, p};
  out.values.reserve(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    Real integral(bits);
    Real falling = one;  // m!/(m-i)!
    for (std::size_t i = 0; i <= m; ++i) {
      integral += falling * lpow[m - i] * cpow[i + 1];
      falling *= static_cast<long>(m - i);
    }
    Real tail = integral * jfac + boundary[m];
    if (m % 2 == 1) tail = -tail;
    out.values.push_back((acc[m] + tail).rounded_to(out_bits));
  }
  return out;
}

}  // namespace

ZetaDerivatives zeta_derivatives(const Real& a, std::size_t order, const PrecisionPolicy& policy,
                                 const ZetaOptions& options) {
  if (a < Real(2L, a.precision())) throw DomainError("zeta_derivatives: argument must be >= 2");
  if (order > kMaxZetaOrder) throw UnsupportedOrder("zeta_derivatives: order above " + std::to_string(kMaxZetaOrder));
  return compute_derivatives(a, order, policy, options);
}

Real zeta_value(const Real& a, const PrecisionPolicy& policy, const ZetaOptions& options) {
  if (!(a > Real(1L, a.precision()))) throw DomainError("zeta_value: argument must exceed 1 (pole at s = 1)");
  return compute_derivatives(a, 0, policy, options).values[0];
}

PowerSeries zeta_taylor(const ZetaDerivatives& d) {
  std::vector<Real> c;
  c.reserve(d.values.size());
  const mpfr_prec_t bits = d.values[0].precision();
  for (std::size_t m = 0; m < d.values.size(); ++m) c.push_back(d.values[m] / factorial(static_cast<unsigned>(m), bits));
  return PowerSeries(d.point, std::move(c));
}

LogZetaTaylor log_zeta_taylor(const Real& a, std::size_t order, const PrecisionPolicy& policy,
                              const ZetaOptions& options) {
  auto d = zeta_derivatives(a, order, policy, options);
  return LogZetaTaylor{d.point, series_log(zeta_taylor(d))};
}

}  // namespace pzeta
