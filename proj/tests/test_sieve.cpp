#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <vector>

#include "pzeta/errors.hpp"
#include "pzeta/sieve.hpp"

using namespace pzeta;

namespace {

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int mobius_by_factoring(std::uint32_t n) {
  int sign = 1;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::filesystem::path temp_file(const char* tag) {
  return std::filesystem::temp_directory_path() / (std::string("pzeta_sieve_test_") + tag + ".bin");
}

}  // namespace

TEST_CASE("small limits by inspection") {
  const auto s10 = PrimeSieve::build(10);
  CHECK(s10.total_count() == 4);
  std::vector<std::uint64_t> primes;
  s10.for_each_prime(0, 10, [&](std::uint64_t p) { primes.push_back(p); });
  CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(PrimeSieve::build(2).total_count() == 1);
  CHECK(PrimeSieve::build(3).total_count() == 2);
  CHECK(PrimeSieve::build(100).total_count() == 25);
  CHECK_THROWS_AS(PrimeSieve::build(1), DomainError);
  CHECK_THROWS_AS(PrimeSieve::build(0), DomainError);
}

TEST_CASE("membership and counts agree with trial division to 1e5") {
  const std::uint64_t limit = 100000;
  const auto sieve = PrimeSieve::build(limit, 1 << 12);
  std::uint64_t count = 0;
  bool all = true;
  for (std::uint64_t n = 0; n <= limit; ++n) {
    const bool p = trial_division(n);
    count += p;
    if (sieve.is_prime(n) != p || sieve.count_upto(n) != count) {
      all = false;
      CAPTURE(n);
      CHECK(sieve.is_prime(n) == p);
      break;
    }
  }
  CHECK(all);
  CHECK(count == 9592);
}

TEST_CASE("pi(1e6) and pi(1e8)") {
  CHECK(PrimeSieve::build(1000000).total_count() == 78498);
  const auto big = PrimeSieve::build(100000000, PrimeSieve::kDefaultSegmentBits, 2);
  CHECK(big.total_count() == 5761455);
  CHECK(big.count_upto(10000000) == 664579);
}

TEST_CASE("segment bookkeeping") {
  const auto sieve = PrimeSieve::build(3000000, 1 << 14);
  std::uint64_t running = 0;
  for (std::size_t s = 0; s < sieve.segment_count(); ++s) {
    CHECK(sieve.segment_offsets()[s] == running);
    std::uint64_t in_segment = 0;
    std::uint64_t last = 0;
    sieve.for_each_prime_in_segment(s, [&](std::uint64_t p) {
      CHECK(p > last);
      last = p;
      ++in_segment;
    });
    running += in_segment;
  }
  CHECK(running == sieve.total_count());
}

TEST_CASE("segmented and single-block sieves agree") {
  const std::uint64_t limit = 2000003;
  const auto single = PrimeSieve::build(limit, std::size_t{1} << 22);
  CHECK(single.segment_count() == 1);
  for (std::size_t bits : {std::size_t{64}, std::size_t{1} << 10, std::size_t{1} << 16, std::size_t{1} << 20}) {
    const auto seg = PrimeSieve::build(limit, bits);
    CAPTURE(bits);
    CHECK(seg.words() == single.words());
    CHECK(seg.total_count() == single.total_count());
  }
  CHECK(PrimeSieve::build(limit, 1 << 12, 3) == single);

  std::vector<std::uint64_t> streamed;
  segmented_sieve(limit, 1 << 12, [&](std::uint64_t offset, std::span<const std::uint64_t> words) {
    CHECK(offset == streamed.size() * 64);
    streamed.insert(streamed.end(), words.begin(), words.end());
  });
  CHECK(streamed == single.words());
}

TEST_CASE("prime_count half jumps") {
  const auto sieve = PrimeSieve::build(1000);
  CHECK(prime_count(10.0, sieve) == HalfInteger{8});
  CHECK(prime_count(7.0, sieve).value() == 3.5);
  CHECK(prime_count(7.5, sieve).value() == 4.0);
  CHECK(prime_count(6.999, sieve).value() == 3.0);
  CHECK(prime_count(1.5, sieve).value() == 0.0);
  CHECK(prime_count(2.0, sieve).value() == 0.5);
  const PrecisionPolicy p(30);
  CHECK(prime_count(make_real("997", p), sieve).value() == 167.5);
  CHECK_THROWS_AS(prime_count(1000.5, sieve), DomainError);
  CHECK_THROWS_AS(prime_count(0.0, sieve), DomainError);

  // Non-decreasing, and the jump across each integer is 1 exactly at primes.
  double last = 0.0;
  for (int i = 2; i <= 999; ++i) {
    const double left = prime_count(i - 0.25, sieve).value();
    const double right = prime_count(i + 0.25, sieve).value();
    const double at = prime_count(static_cast<double>(i), sieve).value();
    CHECK(left >= last);
    CHECK(right - left == (sieve.is_prime(i) ? 1.0 : 0.0));
    CHECK(at == (left + right) / 2);
    last = right;
  }
}

TEST_CASE("cache round trip") {
  const auto path = temp_file("roundtrip");
  const auto sieve = PrimeSieve::build(1234567, 1 << 13);
  sieve.save(path);
  const auto loaded = PrimeSieve::load(path);
  CHECK(loaded == sieve);
  CHECK(loaded.segment_bits() == sieve.segment_bits());
  CHECK(loaded.total_count() == sieve.total_count());
  CHECK(loaded.count_upto(1000000) == 78498);
  std::filesystem::remove(path);
}

TEST_CASE("damaged cache files are rejected") {
  const auto path = temp_file("damaged");
  PrimeSieve::build(200000).save(path);
  std::string bytes;
  {
    std::ifstream in(path, std::ios::binary);
    bytes.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto write = [&](const std::string& b) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << b;
  };

  std::string bad = bytes;
  bad[0] = 'X';
  write(bad);
  CHECK_THROWS_AS(PrimeSieve::load(path), ParseError);

  write(bytes.substr(0, bytes.size() - 8));
  CHECK_THROWS_AS(PrimeSieve::load(path), ParseError);

  write(bytes.substr(0, 10));
  CHECK_THROWS_AS(PrimeSieve::load(path), ParseError);

  // Flip the bit for 9 (composite) in the first word.
  bad = bytes;
  bad[21] = static_cast<char>(bad[21] ^ 0x10);
  write(bad);
  CHECK_THROWS_AS(PrimeSieve::load(path), ParseError);

  std::filesystem::remove(path);
  CHECK_THROWS(PrimeSieve::load(path));
}

TEST_CASE("Mobius table") {
  const auto mu = MobiusTable::build(100000);
  CHECK(mu.limit() == 100000);
  CHECK(mu(1) == 1);
  CHECK(mu(2) == -1);
  CHECK(mu(6) == 1);
  CHECK(mu(12) == 0);
  CHECK(mu(30) == -1);
  int sum30 = 0;
  for (std::uint32_t d = 1; d <= 30; ++d) sum30 += 30 % d == 0 ? mu(d) : 0;
  CHECK(sum30 == 0);

  bool factor_ok = true;
  for (std::uint32_t n = 1; n <= 100000 && factor_ok; ++n) {
    if (mu(n) != mobius_by_factoring(n)) {
      factor_ok = false;
      CAPTURE(n);
      CHECK(mu(n) == mobius_by_factoring(n));
    }
  }
  CHECK(factor_ok);

  bool convolution_ok = true;
  for (std::uint32_t n = 1; n <= 10000 && convolution_ok; ++n) {
    int sum = 0;
    for (std::uint32_t d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      sum += mu(d);
      if (d * d != n) sum += mu(n / d);
    }
    if (sum != (n == 1 ? 1 : 0)) {
      convolution_ok = false;
      CAPTURE(n);
      CHECK(sum == (n == 1 ? 1 : 0));
    }
  }
  CHECK(convolution_ok);
}
