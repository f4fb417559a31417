#include "pzeta/sieve.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <fstream>
#include <string>
#include <thread>

#include "pzeta/errors.hpp"

namespace pzeta {

namespace {

constexpr std::size_t kBlockWords = 8;
constexpr std::array<char, 5> kMagic = {'M', 'S', 'R', 'V', '1'};

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t odd_bits_for(std::uint64_t limit) { return (limit + 1) / 2; }

// Odd primes up to n by a plain sieve; only used for the base primes.
std::vector<std::uint32_t> small_odd_primes(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  if (n < 3) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 3; i <= n; i += 2) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += 2 * i) composite[j] = true;
  }
  return out;
}

// Sieves bits [bit_lo, bit_lo + nbits) into `words` (nbits <= 64 * words.size()).
void sieve_segment(std::span<const std::uint32_t> base, std::uint64_t bit_lo, std::uint64_t nbits,
                   std::span<std::uint64_t> words) {
  std::fill(words.begin(), words.end(), ~std::uint64_t{0});
  const std::uint64_t full = nbits / 64;
  const std::uint64_t rem = nbits % 64;
  if (rem != 0) words[full] = (std::uint64_t{1} << rem) - 1;
  for (std::size_t w = full + (rem != 0 ? 1 : 0); w < words.size(); ++w) words[w] = 0;
  if (bit_lo == 0 && nbits > 0) words[0] &= ~std::uint64_t{1};  // 1 is not prime

  const std::uint64_t lo = 2 * bit_lo + 1;
  const std::uint64_t hi = 2 * (bit_lo + nbits) - 1;
  for (std::uint32_t p : base) {
    const std::uint64_t pp = std::uint64_t{p} * p;
    if (pp > hi) break;
    std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
    if (start % 2 == 0) start += p;
    for (std::uint64_t b = (start - 1) / 2 - bit_lo; b < nbits; b += p) {
      words[b / 64] &= ~(std::uint64_t{1} << (b % 64));
    }
  }
}

std::size_t word_popcount(std::span<const std::uint64_t> w) {
  std::size_t c = 0;
  for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

void put_u64(std::ostream& os, std::uint64_t v) {
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b.data(), 8);
}

std::uint64_t get_u64(std::istream& is) {
  std::array<unsigned char, 8> b{};
  is.read(reinterpret_cast<char*>(b.data()), 8);
  if (!is) throw ParseError("sieve cache: truncated file");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

void segmented_sieve(std::uint64_t limit, std::size_t segment_bits,
                     const std::function<void(std::uint64_t, std::span<const std::uint64_t>)>& on_segment) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  if (segment_bits == 0 || segment_bits % 64 != 0) throw DomainError("segment size must be a multiple of 64");
  const auto base = small_odd_primes(isqrt(limit));
  const std::uint64_t total = odd_bits_for(limit);
  std::vector<std::uint64_t> buf(segment_bits / 64);
  for (std::uint64_t b0 = 0; b0 < total; b0 += segment_bits) {
    const std::uint64_t n = std::min<std::uint64_t>(segment_bits, total - b0);
    const std::size_t nw = static_cast<std::size_t>((n + 63) / 64);
    sieve_segment(base, b0, n, std::span(buf.data(), nw));
    on_segment(b0, std::span<const std::uint64_t>(buf.data(), nw));
  }
}

PrimeSieve PrimeSieve::build(std::uint64_t limit, std::size_t segment_bits, unsigned threads) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  if (segment_bits == 0 || segment_bits % 64 != 0) throw DomainError("segment size must be a multiple of 64");
  PrimeSieve s;
  s.limit_ = limit;
  s.segment_bits_ = segment_bits;
  const std::uint64_t total = odd_bits_for(limit);
  s.words_.assign(static_cast<std::size_t>((total + 63) / 64), 0);
  const std::size_t nseg = static_cast<std::size_t>((total + segment_bits - 1) / segment_bits);

  const auto base = small_odd_primes(isqrt(limit));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, nseg));

  // Segments write disjoint word ranges, so workers need no locking.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t seg = next++; seg < nseg; seg = next++) {
      const std::uint64_t b0 = std::uint64_t{seg} * segment_bits;
      const std::uint64_t n = std::min<std::uint64_t>(segment_bits, total - b0);
      const std::size_t w0 = static_cast<std::size_t>(b0 / 64);
      const std::size_t nw = static_cast<std::size_t>((n + 63) / 64);
      sieve_segment(base, b0, n, std::span(s.words_.data() + w0, nw));
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  s.index();
  return s;
}

void PrimeSieve::index() {
  const std::uint64_t total = odd_bits_for(limit_);
  const std::size_t nseg = static_cast<std::size_t>((total + segment_bits_ - 1) / segment_bits_);
  const std::size_t seg_words = segment_bits_ / 64;
  segment_counts_.assign(nseg, 0);
  segment_offsets_.assign(nseg, 0);
  std::uint64_t running = 0;
  for (std::size_t seg = 0; seg < nseg; ++seg) {
    const std::size_t w0 = seg * seg_words;
    const std::size_t w1 = std::min(words_.size(), w0 + seg_words);
    std::uint64_t c = word_popcount(std::span(words_.data() + w0, w1 - w0));
    if (seg == 0) ++c;  // the prime 2
    segment_counts_[seg] = c;
    segment_offsets_[seg] = running;
    running += c;
  }
  block_rank_.assign(words_.size() / kBlockWords + 1, 0);
  std::uint64_t acc = 0;
  for (std::size_t blk = 0; blk < block_rank_.size(); ++blk) {
    block_rank_[blk] = acc;
    const std::size_t w0 = blk * kBlockWords;
    const std::size_t w1 = std::min(words_.size(), w0 + kBlockWords);
    if (w0 < w1) acc += word_popcount(std::span(words_.data() + w0, w1 - w0));
  }
}

std::uint64_t PrimeSieve::odd_count_upto(std::uint64_t bit_end) const {
  const std::size_t w = static_cast<std::size_t>(bit_end / 64);
  const std::size_t blk = w / kBlockWords;
  std::uint64_t c = block_rank_[blk];
  for (std::size_t i = blk * kBlockWords; i < w; ++i) c += static_cast<std::uint64_t>(std::popcount(words_[i]));
  const unsigned r = static_cast<unsigned>(bit_end % 64);
  if (r != 0) c += static_cast<std::uint64_t>(std::popcount(words_[w] & ((std::uint64_t{1} << r) - 1)));
  return c;
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) throw DomainError("is_prime: argument beyond sieve limit");
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  const std::uint64_t b = (n - 1) / 2;
  return (words_[b / 64] >> (b % 64)) & 1U;
}

std::uint64_t PrimeSieve::count_upto(std::uint64_t n) const {
  if (n > limit_) throw DomainError("count_upto: argument beyond sieve limit");
  if (n < 2) return 0;
  return 1 + odd_count_upto((n - 1) / 2 + 1);
}

void PrimeSieve::for_each_prime(std::uint64_t lo, std::uint64_t hi,
                                const std::function<void(std::uint64_t)>& f) const {
  hi = std::min(hi, limit_);
  if (lo > hi) return;
  if (lo <= 2 && 2 <= hi) f(2);
  const std::uint64_t b_lo = lo <= 1 ? 0 : (lo - 1 + 1) / 2;  // first odd >= lo
  const std::uint64_t b_hi = (hi - 1) / 2;                     // last odd <= hi
  if (hi < 3 || b_lo > b_hi) return;
  for (std::uint64_t w = b_lo / 64; w <= b_hi / 64; ++w) {
    std::uint64_t word = words_[static_cast<std::size_t>(w)];
    if (w == b_lo / 64) word &= ~std::uint64_t{0} << (b_lo % 64);
    if (w == b_hi / 64 && b_hi % 64 != 63) word &= (std::uint64_t{1} << (b_hi % 64 + 1)) - 1;
    while (word != 0) {
      const auto bit = static_cast<std::uint64_t>(std::countr_zero(word));
      f(2 * (w * 64 + bit) + 1);
      word &= word - 1;
    }
  }
}

void PrimeSieve::for_each_prime_in_segment(std::size_t s, const std::function<void(std::uint64_t)>& f) const {
  const std::uint64_t b0 = std::uint64_t{s} * segment_bits_;
  const std::uint64_t lo = s == 0 ? 2 : 2 * b0 + 1;
  const std::uint64_t hi = std::min(limit_, 2 * (b0 + segment_bits_) - 1);
  for_each_prime(lo, hi, f);
}

void PrimeSieve::save(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write sieve cache: " + path.string());
  os.write(kMagic.data(), kMagic.size());
  put_u64(os, limit_);
  put_u64(os, segment_bits_);
  for (auto w : words_) put_u64(os, w);
  if (!os) throw std::runtime_error("failed writing sieve cache: " + path.string());
}

PrimeSieve PrimeSieve::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParseError("cannot open sieve cache: " + path.string());
  std::array<char, 5> magic{};
  is.read(magic.data(), magic.size());
  if (!is || magic != kMagic) throw ParseError("sieve cache: bad magic");
  PrimeSieve s;
  s.limit_ = get_u64(is);
  s.segment_bits_ = static_cast<std::size_t>(get_u64(is));
  if (s.limit_ < 2 || s.segment_bits_ == 0 || s.segment_bits_ % 64 != 0) {
    throw ParseError("sieve cache: bad header");
  }
  s.words_.resize(static_cast<std::size_t>((odd_bits_for(s.limit_) + 63) / 64));
  for (auto& w : s.words_) w = get_u64(is);
  if (is.peek() != std::char_traits<char>::eof()) throw ParseError("sieve cache: trailing bytes");
  s.index();

  // Spot-check the low range against a fresh sieve; the cache is never trusted blindly.
  const std::uint64_t check = std::min<std::uint64_t>(s.limit_, 1u << 16);
  const auto fresh = PrimeSieve::build(check, 1u << 16);
  for (std::size_t i = 0; i < fresh.words_.size(); ++i) {
    std::uint64_t mask = ~std::uint64_t{0};
    if (i + 1 == fresh.words_.size() && odd_bits_for(check) % 64 != 0) {
      mask = (std::uint64_t{1} << (odd_bits_for(check) % 64)) - 1;
    }
    if ((s.words_[i] & mask) != fresh.words_[i]) throw ParseError("sieve cache: contents fail verification");
  }
  return s;
}

HalfInteger prime_count(double x, const PrimeSieve& sieve) {
  if (!(x > 0.0)) throw DomainError("prime_count: x must be positive");
  if (x > static_cast<double>(sieve.limit())) throw DomainError("prime_count: x beyond sieve limit");
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  const auto c = static_cast<std::int64_t>(sieve.count_upto(n));
  if (static_cast<double>(n) == x && sieve.is_prime(n)) return {2 * c - 1};
  return {2 * c};
}

HalfInteger prime_count(const Real& x, const PrimeSieve& sieve) {
  if (x.sign() <= 0) throw DomainError("prime_count: x must be positive");
  if (x > Real::from_uint(sieve.limit(), 64)) throw DomainError("prime_count: x beyond sieve limit");
  Real fl(x.precision());
  mpfr_floor(fl.get(), x.get());
  const std::uint64_t n = mpfr_get_uj(fl.get(), MPFR_RNDZ);
  const auto c = static_cast<std::int64_t>(sieve.count_upto(n));
  if (fl == x && sieve.is_prime(n)) return {2 * c - 1};
  return {2 * c};
}

MobiusTable MobiusTable::build(std::uint32_t limit) {
  if (limit < 1) throw DomainError("mobius_table: limit must be positive");
  MobiusTable t;
  t.mu_.assign(std::size_t{limit} + 1, 0);
  t.mu_[1] = 1;
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(std::size_t{limit} + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      t.mu_[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t ip = i * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        t.mu_[ip] = 0;
        break;
      }
      t.mu_[ip] = static_cast<std::int8_t>(-t.mu_[i]);
    }
  }
  return t;
}

}  // namespace pzeta
