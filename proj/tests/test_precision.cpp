#include <doctest.h>

#include <random>
#include <string>
#include <thread>
#include <vector>

#include "pzeta/errors.hpp"
#include "pzeta/precision.hpp"

using namespace pzeta;

TEST_CASE("policy bookkeeping") {
  const PrecisionPolicy p(30);
  CHECK(p.target_digits() == 30);
  CHECK(p.guard_digits() == 15);
  CHECK(p.working_digits() == 45);
  CHECK(p.working_bits() >= 150);
  CHECK(PrecisionPolicy(30, 10).working_digits() == 40);
  CHECK(p.with_target(50).working_digits() == 65);
  CHECK_THROWS_AS(PrecisionPolicy(30, 9), DomainError);
  CHECK_THROWS_AS(PrecisionPolicy(0), DomainError);
}

TEST_CASE("make_real literals") {
  const PrecisionPolicy p(30);
  CHECK(to_decimal(make_real("0.5772156649015328606", p), 19) == "0.5772156649015328606");
  CHECK(make_real("0", p).is_zero());
  CHECK(make_real("-0.0", p).is_zero());

  const Real tiny = make_real("1e-40", PrecisionPolicy(30, 10));
  CHECK_FALSE(tiny.is_zero());
  CHECK(to_decimal(tiny, 5) == "1.0000e-40");

  CHECK(make_real("+2.5", p) == make_real("2.5", p));
  CHECK(make_real(".5", p) == make_real("0.5", p));
  CHECK(make_real("5.", p) == Real(5L, p.working_bits()));
  CHECK(make_real("-1.25E+2", p) == Real(-125L, p.working_bits()));

  for (const char* bad : {"", " 1", "1 ", "abc", "1.2.3", "1e", "--1", "0x10", "1e+", "nan", "inf", ".", "+"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(make_real(bad, p), ParseError);
  }
}

TEST_CASE("decimal formatting") {
  const PrecisionPolicy p(30);
  const mpfr_prec_t bits = p.working_bits();
  CHECK(to_decimal(Real(2L, bits) / 3L, 5) == "0.66667");
  CHECK(to_decimal(make_real("1234.5678", p), 6) == "1234.57");
  CHECK(to_decimal(make_real("0.5", p), 5) == "0.50000");
  CHECK(to_decimal(make_real("-12", p), 2) == "-12");
  CHECK(to_decimal(make_real("120", p), 2) == "1.2e2");
  CHECK(to_decimal(make_real("0.00001234", p), 3) == "0.0000123");
  CHECK(to_decimal(make_real("0.000001234", p), 3) == "1.23e-6");
  CHECK(to_decimal(Real(bits), 3) == "0.00");
  CHECK(to_sci(make_real("0.000314159", p)) == "3.1e-4");
  CHECK(to_sci(Real(bits)) == "0");
  CHECK(decimal_places("-0.3157") == 4);
  CHECK(decimal_places("10") == 0);
  CHECK(decimal_places("453.624590860932484915158069802") == 27);
}

TEST_CASE("round trip through the exact decimal form") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> digit(0, 9), expo(-60, 60), len(1, 60);
  for (int target : {10, 30, 60}) {
    const PrecisionPolicy p(target);
    for (int i = 0; i < 300; ++i) {
      std::string lit = (i % 2 ? "-" : "") + std::to_string(digit(rng) + 1) + ".";
      const int n = len(rng);
      for (int k = 0; k < n; ++k) lit += static_cast<char>('0' + digit(rng));
      lit += "e" + std::to_string(expo(rng));
      const Real x = make_real(lit, p);
      const Real y = make_real(to_decimal(x), p);
      CAPTURE(lit);
      CHECK(x == y);
    }
    // Values produced by arithmetic rather than parsing.
    Real x = log(Real(3L, p.working_bits()));
    for (int i = 0; i < 50; ++i) {
      CHECK(make_real(to_decimal(x), p) == x);
      x = log(x * x + Real(2L, p.working_bits())) + sqrt(x) / 7L;
    }
  }
}

TEST_CASE("comparison is exact at working precision") {
  const PrecisionPolicy p(30);
  const Real a = make_real("1", p);
  Real b = a + pow10(-44, p.working_bits());
  CHECK(b > a);
  CHECK(a < b);
  CHECK(a != b);
  CHECK(a == make_real("1.000", p));
}

TEST_CASE("arithmetic is deterministic across threads") {
  const PrecisionPolicy p(40);
  auto work = [&] {
    Real acc(p.working_bits());
    for (long k = 1; k <= 200; ++k) acc += log(Real(k, p.working_bits())) / pow(Real(k, p.working_bits()), 2L);
    return to_decimal(acc, 40) + "|" + to_decimal(euler_gamma(p), 40) + "|" + to_decimal(pi(p), 40);
  };
  const std::string reference = work();
  CHECK(work() == reference);
  std::vector<std::string> out(4);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) pool.emplace_back([&, t] { out[t] = work(); });
  }
  for (const auto& s : out) CHECK(s == reference);
}

TEST_CASE("constants and helpers") {
  const PrecisionPolicy p(30);
  const mpfr_prec_t bits = p.working_bits();
  CHECK(to_decimal(euler_gamma(p), 30) == "0.577215664901532860606512090082");
  CHECK(to_decimal(pi(p), 30) == "3.14159265358979323846264338328");
  CHECK(factorial(10, bits) == Real(3628800L, bits));
  CHECK(factorial(0, bits) == Real(1L, bits));
  CHECK(pow10(3, bits) == Real(1000L, bits));
  CHECK(pow(Real(2L, bits), 10L) == Real(1024L, bits));
  CHECK(Real::from_uint(18446744073709551615ULL, 128) > Real::from_uint(18446744073709551614ULL, 128));
  CHECK(abs(Real(-3L, bits)) == Real(3L, bits));
  CHECK(max(Real(-3L, bits), Real(2L, bits)) == Real(2L, bits));
  CHECK((Real(7L, bits) <=> Real(7L, bits)) == std::partial_ordering::equivalent);
}
