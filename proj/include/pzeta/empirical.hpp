#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pzeta/precision.hpp"
#include "pzeta/sieve.hpp"

namespace pzeta {

// Error model log^{n+1}(x) / sqrt(x) with unit constant.
Real tail_model(std::size_t n, const Real& x);

// n = 0: sum_{p<=x} 1/p - log log x
// n >= 1: sum_{p<=x} log^n p / p - log^n x / n
// Primes are counted right-closed (p <= x). Requires 2 <= x <= sieve.limit().
Real mertens_partial(std::size_t n, std::uint64_t x, const PrimeSieve& sieve, const PrecisionPolicy& policy);

struct LimitEstimate {
  Real estimate;
  Real tolerance;
};

// (-1)^n mertens_partial(n, x_max), minus gamma when n = 0, with the
// log^{n+1}(x)/sqrt(x) tolerance.
LimitEstimate limit_estimate(std::size_t n, std::uint64_t x_max, const PrimeSieve& sieve,
                             const PrecisionPolicy& policy);

struct Checkpoint {
  std::uint64_t x = 0;
  Real partial;
  Real estimate;
  Real tolerance;
};

struct PrimeSumSeries {
  std::size_t n = 0;
  std::vector<Checkpoint> checkpoints;
};

// Default checkpoints 10^2, ..., 10^8 clipped to x_max (x_max itself is
// always the final checkpoint).
std::vector<std::uint64_t> default_checkpoints(std::uint64_t x_max);

// Partial sums and limit estimates for n = 0..n_max at every checkpoint,
// from one pass over the sieve.
std::vector<PrimeSumSeries> convergence_series(std::size_t n_max, const std::vector<std::uint64_t>& checkpoints,
                                               const PrimeSieve& sieve, const PrecisionPolicy& policy,
                                               unsigned threads = 1);

// CSV with header "x,n,partial,estimate,tolerance".
std::string convergence_csv(const std::vector<PrimeSumSeries>& series, int digits);

struct IntegralEstimate {
  std::size_t n = 0;
  Real T;
  Real value;
  Real tail_model;
};

// (-1)^n int_1^T (log^n t - n log^{n-1} t) / t^2 (pi(t) - li(t)) dt.
// The pi part is exact between prime jumps (antiderivative -log^n t / t);
// the li part is integrated by parts with the t -> 1 divergences cancelled
// in closed form. Requires 2 <= T <= sieve.limit().
IntegralEstimate alpha_integral(std::size_t n, const Real& T, const PrimeSieve& sieve,
                                const PrecisionPolicy& policy);

// c_j(T) = (-1)^j int_1^T log^j t / t^2 (pi(t) - li(t)) dt, same technique.
IntegralEstimate c_integral(std::size_t j, const Real& T, const PrimeSieve& sieve, const PrecisionPolicy& policy);

struct RemainderSample {
  double t = 0.0;
  Real f_value;  // pi(t) - li(t)
};

std::vector<RemainderSample> remainder_samples(const std::vector<double>& ts, const PrimeSieve& sieve,
                                               const PrecisionPolicy& policy);
// Log-spaced sample points on [lo, hi].
std::vector<double> log_spaced(double lo, double hi, std::size_t count);
// max |f(t)| / (sqrt(t) log t) over the samples.
double remainder_shape_constant(const std::vector<RemainderSample>& samples);

}  // namespace pzeta
