#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "pzeta/precision.hpp"

namespace pzeta {

// Bit-packed primality over odd numbers: bit i of the table stands for
// 2i + 1. The prime 2 is implicit. Segments are contiguous runs of
// segment_bits() bits, aligned to 64-bit words.
class PrimeSieve {
 public:
  static constexpr std::size_t kDefaultSegmentBits = std::size_t{1} << 20;

  // threads == 0 picks std::thread::hardware_concurrency().
  static PrimeSieve build(std::uint64_t limit, std::size_t segment_bits = kDefaultSegmentBits,
                          unsigned threads = 1);

  std::uint64_t limit() const { return limit_; }
  std::size_t segment_bits() const { return segment_bits_; }
  std::size_t segment_count() const { return segment_counts_.size(); }

  bool is_prime(std::uint64_t n) const;
  // Number of primes p <= n (right-closed), n <= limit.
  std::uint64_t count_upto(std::uint64_t n) const;
  std::uint64_t total_count() const { return count_upto(limit_); }

  // Primes p with lo <= p <= hi, ascending.
  void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& f) const;
  // Primes belonging to segment s (2 is reported by segment 0), ascending.
  void for_each_prime_in_segment(std::size_t s, const std::function<void(std::uint64_t)>& f) const;

  // Cumulative prime counts strictly before each segment start.
  const std::vector<std::uint64_t>& segment_offsets() const { return segment_offsets_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  // Binary cache: "MSRV1", limit (u64 LE), segment bits (u64 LE), then the
  // packed words (u64 LE each).
  void save(const std::filesystem::path& path) const;
  // Throws ParseError on a malformed or inconsistent file.
  static PrimeSieve load(const std::filesystem::path& path);

  friend bool operator==(const PrimeSieve& a, const PrimeSieve& b) {
    return a.limit_ == b.limit_ && a.words_ == b.words_;
  }

 private:
  PrimeSieve() = default;
  void index();
  std::uint64_t odd_count_upto(std::uint64_t bit_end) const;

  std::uint64_t limit_ = 0;
  std::size_t segment_bits_ = kDefaultSegmentBits;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> segment_counts_;
  std::vector<std::uint64_t> segment_offsets_;
  // Odd-prime count before every 8-word block.
  std::vector<std::uint64_t> block_rank_;
};

// Streams the odd-only primality bits of [1, limit] one segment at a time.
// Memory use is one segment plus the base primes up to sqrt(limit).
// The callback receives the bit offset of the segment start and its words;
// bits past `limit` in the last word are zero.
void segmented_sieve(std::uint64_t limit, std::size_t segment_bits,
                     const std::function<void(std::uint64_t, std::span<const std::uint64_t>)>& on_segment);

// Value of the form k/2 with integer k, stored exactly.
struct HalfInteger {
  std::int64_t twice = 0;
  double value() const { return static_cast<double>(twice) / 2.0; }
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

// pi(x) with the averaged jump convention: at a prime x the result is
// (pi(x-) + pi(x)) / 2, elsewhere the ordinary count of p <= x.
// Requires 0 < x <= sieve.limit(), otherwise DomainError.
HalfInteger prime_count(double x, const PrimeSieve& sieve);
HalfInteger prime_count(const Real& x, const PrimeSieve& sieve);

class MobiusTable {
 public:
  // Linear sieve over [1, limit].
  static MobiusTable build(std::uint32_t limit);

  std::uint32_t limit() const { return static_cast<std::uint32_t>(mu_.size() - 1); }
  int operator()(std::uint32_t n) const { return mu_.at(n); }

 private:
  std::vector<std::int8_t> mu_;
};

}  // namespace pzeta
