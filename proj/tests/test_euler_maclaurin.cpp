#include <doctest.h>

#include <cmath>

#include "pzeta/euler_maclaurin.hpp"

using namespace pzeta;

TEST_CASE("even Bernoulli numbers") {
  const mpfr_prec_t bits = 200;
  const auto b = bernoulli_even(6, bits);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == Real(1L, bits) / 6L);
  CHECK(b[1] == Real(-1L, bits) / 30L);
  CHECK(b[2] == Real(1L, bits) / 42L);
  CHECK(b[3] == Real(-1L, bits) / 30L);
  CHECK(b[4] == Real(5L, bits) / 66L);
  CHECK(b[5] == Real(-691L, bits) / 2730L);
  // B_40 = -261082718496449122051/13530
  const auto big = bernoulli_even(20, bits);
  const PrecisionPolicy p(55);
  CHECK(abs(big[19] - make_real("-261082718496449122051", p) / 13530L) < pow10(-40, bits));
}

TEST_CASE("boundary terms close the zeta(2) tail") {
  const PrecisionPolicy p(40);
  const mpfr_prec_t bits = p.working_bits();
  const Real two(2L, bits);
  const Real zeta2 = pi(p) * pi(p) / 6L;
  for (std::uint64_t J : {5ULL, 10ULL, 40ULL}) {
    const auto terms = em_boundary_terms(two, 1, J, 8, bits);
    Real head(bits);
    for (std::uint64_t j = 1; j < J; ++j) head += Real(1L, bits) / pow(Real::from_uint(j, bits), 2L);
    const Real integral = Real(1L, bits) / Real::from_uint(J, bits);
    const Real residual = zeta2 - head - integral - terms[0];
    const double estimate = em_remainder_log10(two, 1, J, 8);
    CAPTURE(J);
    CHECK(std::log10(std::fabs(residual.to_double())) <= estimate + 0.5);
  }
}

TEST_CASE("cut search meets the requested accuracy") {
  const PrecisionPolicy p(30);
  const Real a(3L, p.working_bits());
  for (int digits : {20, 45, 80}) {
    const std::uint64_t J = em_choose_cut(a, 6, 8, digits);
    CAPTURE(digits);
    CHECK(em_remainder_log10(a, 6, J, 8) < -digits);
    if (J > 3) CHECK(em_remainder_log10(a, 6, J * 4 / 5, 8) >= -digits - 1);
  }
  // Larger degree never needs a smaller cut.
  CHECK(em_choose_cut(a, 20, 8, 45) >= em_choose_cut(a, 0, 8, 45));
}
