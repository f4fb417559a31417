#include "pzeta/log_integral.hpp"

#include "pzeta/errors.hpp"

namespace pzeta {

Real log_integral(const Real& x, const PrecisionPolicy& policy) {
  const mpfr_prec_t bits = policy.working_bits();
  const Real one(1L, bits);
  if (!(x > one)) throw DomainError("log_integral: x must exceed 1");

  const Real lx = log(x.rounded_to(bits));
  const Real eps = pow10(-policy.working_digits(), bits);
  const Real half(0.5, bits);

  Real sum = euler_gamma(policy) + log(lx);
  // power_k = (log x)^k / k!; term_k = power_k / k.
  Real power = one;
  Real prev_term(bits);
  for (long k = 1;; ++k) {
    power = power * lx / k;
    Real term = power / k;
    sum += term;
    if (k > 1 && term < eps && term / prev_term < half) break;
    prev_term = std::move(term);
  }
  return sum;
}

}  // namespace pzeta
