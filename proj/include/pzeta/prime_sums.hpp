#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pzeta/sieve.hpp"

namespace pzeta {

// Neumaier-compensated accumulator in extended precision.
class CompensatedSum {
 public:
  void add(long double x);
  void add(const CompensatedSum& other);
  long double value() const { return sum_ + carry_; }

 private:
  long double sum_ = 0.0L;
  long double carry_ = 0.0L;
};

// sums[c][n] = sum_{p <= checkpoints[c]} (log p)^n p^-s for n = 0..max_power.
struct PrimePowerSums {
  long double s = 1.0L;
  std::vector<std::uint64_t> checkpoints;
  std::vector<std::vector<long double>> sums;
};

// One pass over the sieve. Checkpoints must be ascending and <= limit.
// Segments are summed independently (optionally on several threads) and
// combined in ascending segment order, so the result does not depend on
// the thread count.
PrimePowerSums prime_power_sums(const PrimeSieve& sieve, long double s, std::size_t max_power,
                                std::vector<std::uint64_t> checkpoints, unsigned threads = 1);

}  // namespace pzeta
