#include "pzeta/prime_sums.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "pzeta/errors.hpp"

namespace pzeta {

void CompensatedSum::add(long double x) {
  const long double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

void CompensatedSum::add(const CompensatedSum& other) {
  add(other.sum_);
  add(other.carry_);
}

PrimePowerSums prime_power_sums(const PrimeSieve& sieve, long double s, std::size_t max_power,
                                std::vector<std::uint64_t> checkpoints, unsigned threads) {
  if (checkpoints.empty()) throw DomainError("prime_power_sums: no checkpoints");
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
    throw DomainError("prime_power_sums: checkpoints must be ascending");
  }
  if (checkpoints.back() > sieve.limit()) throw DomainError("prime_power_sums: checkpoint beyond sieve limit");

  const std::size_t nbuckets = checkpoints.size();
  const std::size_t nseg = sieve.segment_count();
  const std::size_t width = max_power + 1;
  // partial[seg][bucket * width + n]; bucket b holds primes in (x_{b-1}, x_b].
  std::vector<std::vector<CompensatedSum>> partial(nseg);

  const bool unit = s == 1.0L;
  const std::uint64_t last = checkpoints.back();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<long double> powers(width);
    for (std::size_t seg = next++; seg < nseg; seg = next++) {
      auto& acc = partial[seg];
      acc.assign(nbuckets * width, CompensatedSum{});
      if (seg > 0 && 2 * std::uint64_t{seg} * sieve.segment_bits() + 1 > last) continue;
      std::size_t bucket = 0;
      sieve.for_each_prime_in_segment(seg, [&](std::uint64_t p) {
        if (p > last) return;
        while (p > checkpoints[bucket]) ++bucket;
        const long double pd = static_cast<long double>(p);
        const long double lp = std::log(pd);
        long double w = unit ? 1.0L / pd : std::exp(-s * lp);
        for (std::size_t n = 0; n < width; ++n) {
          acc[bucket * width + n].add(w);
          w *= lp;
        }
      });
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, nseg));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  PrimePowerSums out;
  out.s = s;
  out.checkpoints = std::move(checkpoints);
  std::vector<CompensatedSum> running(width);
  for (std::size_t b = 0; b < nbuckets; ++b) {
    for (std::size_t seg = 0; seg < nseg; ++seg) {
      for (std::size_t n = 0; n < width; ++n) running[n].add(partial[seg][b * width + n]);
    }
    std::vector<long double> row(width);
    for (std::size_t n = 0; n < width; ++n) row[n] = running[n].value();
    out.sums.push_back(std::move(row));
  }
  return out;
}

}  // namespace pzeta
