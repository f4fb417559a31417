#include <doctest.h>

#include "pzeta/errors.hpp"
#include "pzeta/log_integral.hpp"

using namespace pzeta;

namespace {

// gamma + log log x + sum_{k<=terms} L^k/(k k!) with a fixed term count.
Real li_fixed_terms(const Real& x, const PrecisionPolicy& p, int terms) {
  const Real L = log(x);
  Real sum = euler_gamma(p) + log(L);
  Real t(1L, p.working_bits());
  for (int k = 1; k <= terms; ++k) {
    t = t * L / static_cast<long>(k);
    sum += t / static_cast<long>(k);
  }
  return sum;
}

}  // namespace

TEST_CASE("li(2) against an independent summation") {
  const PrecisionPolicy p(30);
  const PrecisionPolicy wide(50);
  const Real li2 = log_integral(Real(2L, p.working_bits()), p);
  const Real ref = li_fixed_terms(Real(2L, wide.working_bits()), wide, 300);
  CHECK(abs(li2 - ref) < pow10(-40, wide.working_bits()));
  CHECK(to_decimal(li2, 18) == "1.04516378011749278");
}

TEST_CASE("li at larger arguments") {
  const PrecisionPolicy p(30);
  const PrecisionPolicy wide(50);
  for (long x : {10L, 1000L, 1000000L}) {
    const Real v = log_integral(Real(x, p.working_bits()), p);
    const Real ref = li_fixed_terms(Real(x, wide.working_bits()), wide, 400);
    CAPTURE(x);
    CHECK(abs(v - ref) / ref < pow10(-40, wide.working_bits()));
  }
  // Offline mpmath value.
  CHECK(to_decimal(log_integral(Real(1000000L, p.working_bits()), p), 25) == "78627.54915946218191986291");
}

TEST_CASE("li(1 + d) - log log(1 + d) - gamma -> 0") {
  const PrecisionPolicy p(30);
  const mpfr_prec_t bits = p.working_bits();
  Real previous(1L, bits);
  for (const char* d : {"1e-2", "1e-4", "1e-6", "1e-9", "1e-12", "1e-20"}) {
    const Real x = Real(1L, bits) + make_real(d, p);
    const Real gap = log_integral(x, p) - log(log(x)) - euler_gamma(p);
    CAPTURE(d);
    CHECK(gap.sign() > 0);
    CHECK(gap < previous);
    CHECK(gap < make_real(d, p) * 2L);
    previous = gap;
  }
}

TEST_CASE("derivative is 1/log x") {
  const PrecisionPolicy p(30);
  const mpfr_prec_t bits = p.working_bits();
  const Real h = make_real("1e-8", p);
  for (long x : {2L, 5L, 10L}) {
    const Real xv(x, bits);
    const Real fd = (log_integral(xv + h, p) - log_integral(xv - h, p)) / (2L * h);
    const Real exact = Real(1L, bits) / log(xv);
    CAPTURE(x);
    CHECK(abs(fd - exact) < make_real("1e-6", p));
    // Central differences are O(h^2), so much tighter agreement is available.
    CHECK(abs(fd - exact) < make_real("1e-14", p));
  }
}

TEST_CASE("li is increasing on (1, inf)") {
  const PrecisionPolicy p(20);
  Real last = log_integral(make_real("1.001", p), p);
  for (int i = 1; i <= 40; ++i) {
    const Real x = make_real("1.001", p) + Real(static_cast<long>(i * i), p.working_bits()) / 4L;
    const Real v = log_integral(x, p);
    CHECK(v > last);
    last = v;
  }
}

TEST_CASE("li rejects x <= 1") {
  const PrecisionPolicy p(30);
  for (const char* x : {"1", "0.5", "0", "-3"}) {
    CAPTURE(x);
    CHECK_THROWS_AS(log_integral(make_real(x, p), p), DomainError);
  }
}
