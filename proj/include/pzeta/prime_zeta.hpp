#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pzeta/alpha.hpp"
#include "pzeta/precision.hpp"
#include "pzeta/sieve.hpp"

namespace pzeta {

enum class PrimeZetaMethod { direct, mobius, series, remainder_integral };

std::string_view to_string(PrimeZetaMethod m);
// Accepts "direct", "mobius", "series", "integral" / "remainder_integral".
PrimeZetaMethod parse_prime_zeta_method(std::string_view text);

struct PrimeZetaValue {
  Real s;
  Real value;
  PrimeZetaMethod method = PrimeZetaMethod::direct;
  Real error_estimate;
};

// sum_{p<=N} p^-s plus the prime-number-theorem tail int_N^inf t^-s / log t dt,
// N = sieve.limit(). error_estimate is the tail model N^{1-s}/(s-1).
// Throws DomainError for s <= 1.
PrimeZetaValue prime_zeta_direct(const Real& s, const PrimeSieve& sieve, const PrecisionPolicy& policy);

// sum_{k>=1} mu(k)/k log zeta(ks), truncated once 2^{-ks} < 10^-working.
// Throws DomainError for s <= 1.
PrimeZetaValue prime_zeta_mobius(const Real& s, const PrecisionPolicy& policy);

// log(1/(s-1)) + sum_{n<=N} alpha_n (s-1)^n / n!  for 1 < s < 3/2, with error
// model |alpha_{N+1}| |s-1|^{N+1} / (N+1)!. `alpha` must hold alpha_0..alpha_{N+1}
// (values in ascending n).
PrimeZetaValue prime_zeta_series(const Real& s, const std::vector<Real>& alpha, std::size_t terms);

// sum_p log^m p / p^s over the sieve, plus the matching derivative of the
// direct route's tail term. P^(m)(s) = (-1)^m times this value.
Real prime_zeta_derivative(std::size_t m, const Real& s, const PrimeSieve& sieve, const PrecisionPolicy& policy);

// log(1/(s-1)) + s int_1^T t^{-s-1} (pi(t) - li(t)) dt with exact inter-prime
// integration and the t -> 1 divergences cancelled analytically; tail model
// T^{1/2-s} log T. Throws DomainError for s <= 1.
PrimeZetaValue prime_zeta_remainder_integral(const Real& s, const Real& T, const PrimeSieve& sieve,
                                             const PrecisionPolicy& policy);

}  // namespace pzeta
