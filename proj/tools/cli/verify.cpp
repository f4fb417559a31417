#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pzeta/alpha.hpp"
#include "pzeta/empirical.hpp"
#include "pzeta/log_integral.hpp"
#include "pzeta/prime_zeta.hpp"
#include "pzeta/reference_values.hpp"
#include "stieltjes_polynomials.hpp"

namespace pzeta::cli {

namespace {

class Battery {
 public:
  explicit Battery(const PrecisionPolicy& policy) : policy_(policy) {}

  void add(std::string name, std::string expected, const Real& actual, const Real& residual, const Real& tol) {
    const bool pass = residual.is_finite() && abs(residual) <= tol;
    checks_.push_back({std::move(name), std::move(expected), text(actual), abs(residual), tol, pass});
  }

  void compare(std::string name, const Real& expected, const Real& actual, const Real& tol) {
    add(std::move(name), text(expected), actual, actual - expected, tol);
  }

  // Against a printed literal: one unit in its last place, or the requested
  // digits if those are coarser.
  void compare_literal(std::string name, std::string_view literal, const Real& actual) {
    const mpfr_prec_t bits = policy_.working_bits();
    const Real lit = make_real(literal, policy_);
    Real tol = pow10(-decimal_places(literal), bits);
    if (!lit.is_zero()) {
      const long e = static_cast<long>(std::floor(std::log10(std::fabs(lit.to_double()))));
      tol = max(tol, pow10(e - policy_.target_digits() + 1, bits));
    }
    add(std::move(name), std::string(literal), actual, actual - lit, tol);
  }

  std::string text(const Real& x) const { return to_decimal(x, std::min(policy_.target_digits(), 40)); }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  PrecisionPolicy policy_;
  std::vector<Check> checks_;
};

std::string idx(std::string base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace

std::vector<Check> run_verify(const VerifyInputs& in) {
  const PrecisionPolicy& policy = in.policy;
  const mpfr_prec_t bits = policy.working_bits();
  const int target = policy.target_digits();
  Battery b(policy);
  auto R = [&](std::string_view lit) { return make_real(lit, policy); };
  auto tenpow = [&](long e) { return pow10(e, bits); };
  const Real zero(bits);

  std::vector<Check> out;
  if (in.bundled) {
    const std::string got = sha256_hex(in.data_text);
    const bool ok = got == bundled_stieltjes_sha256();
    out.push_back({"stieltjes.sha256", std::string(bundled_stieltjes_sha256()), got, ok ? zero : Real(1L, bits), zero,
                   ok});
  }

  // Loaded constants against the independent Euler-Maclaurin evaluation.
  const StieltjesTable oracle = stieltjes_oracle(in.stieltjes.order(), policy);
  const int src = std::min(in.stieltjes.source_digits, policy.working_digits());
  for (std::size_t n = 0; n <= in.stieltjes.order(); ++n) {
    const Real& ref = oracle.at(n);
    b.compare(idx("stieltjes.gamma", n), ref, in.stieltjes.at(n), abs(ref) * tenpow(1 - src) + tenpow(-policy.working_digits() + 3));
  }

  // g_n by the series-log route (loaded data) against the explicit polynomials (oracle data).
  {
    const auto g = g_coefficients(6, policy, in.stieltjes);
    const auto poly = checks::g_polynomials(oracle.values);
    for (std::size_t n = 0; n <= 6; ++n) b.compare(idx("g.polynomial", n), poly[n], g[n], tenpow(-(target - 5)));
  }

  const MobiusSeries series(11, policy, in.stieltjes, in.threads);
  std::vector<Real> alpha;
  for (std::size_t n = 0; n <= 11; ++n) alpha.push_back(series.alpha(n).value);
  for (std::size_t n = 0; n < reference::kAlpha.size(); ++n) {
    b.compare_literal(idx("alpha.table", n), reference::kAlpha[n], alpha[n]);
  }

  {
    const SeriesResult a0 = alpha0_series(policy);
    b.compare_literal("mertens.M", reference::kMeisselMertens, a0.value + euler_gamma(policy));
    b.compare_literal("mertens.gamma", reference::kEulerGamma, euler_gamma(policy));
    b.compare_literal("mertens.alpha0", reference::kAlpha0Short, a0.value);
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const SpecialCase sc = special_case_residual(n, series);
    b.compare_literal(idx("mertens.alpha", n), reference::kMertensCases[n - 1], sc.closed_form);
    b.add(idx("mertens.closed_form_residual", n), "0", sc.residual, sc.residual, tenpow(-(target - 5)));
  }

  const PrimeSieve& sieve = *in.sieve;
  {
    // Unit-constant tail model with x10 slack; at x >= 10^8 also the fixed bounds.
    const std::uint64_t x = sieve.limit();
    const Real bound[2] = {R("1e-2"), R("1e-1")};
    for (std::size_t n = 0; n <= 1; ++n) {
      const LimitEstimate est = limit_estimate(n, x, sieve, policy);
      Real tol = est.tolerance * 10L;
      if (x >= 100000000 && bound[n] < tol) tol = bound[n];
      b.compare(idx("limit.alpha", n), alpha[n], est.estimate, tol);
    }
  }

  const Real T = Real::from_uint(std::min<std::uint64_t>(1000000, sieve.limit()), bits);
  {
    const Real bound[2] = {R("5e-2"), R("1e-1")};
    for (std::size_t n = 0; n <= 1; ++n) {
      const IntegralEstimate est = alpha_integral(n, T, sieve, policy);
      Real tol = est.tail_model * 10L;
      if (bound[n] < tol) tol = bound[n];
      b.compare(idx("integral.alpha", n), alpha[n], est.value, tol);
    }
    std::vector<IntegralEstimate> c;
    for (std::size_t j = 0; j <= 2; ++j) c.push_back(c_integral(j, T, sieve, policy));
    for (std::size_t m = 1; m <= 2; ++m) {
      const Real lhs = c[m - 1].value * static_cast<long>(m) + c[m].value;
      const Real tol = c[m - 1].tail_model * static_cast<long>(m) + c[m].tail_model;
      b.compare(idx("recombination", m), alpha[m], lhs, tol);
    }
  }

  {
    const Real s2 = R("2");
    const PrimeZetaValue direct = prime_zeta_direct(s2, sieve, policy);
    const PrimeZetaValue mob = prime_zeta_mobius(s2, policy);
    b.compare("primezeta.direct_vs_mobius(2)", mob.value, direct.value, R("1e-10"));
    const PrimeZetaValue integral = prime_zeta_remainder_integral(s2, T, sieve, policy);
    b.compare("primezeta.integral_vs_direct(2)", direct.value, integral.value, R("1e-5"));
    const Real s12 = R("1.2");
    b.compare("primezeta.series_vs_mobius(1.2)", prime_zeta_mobius(s12, policy).value,
              prime_zeta_series(s12, alpha, 10).value, R("1e-3"));
    for (const char* s : {"1.05", "1.1", "1.2", "1.3", "1.4"}) {
      const Real sv = R(s);
      const PrimeZetaValue ser = prime_zeta_series(sv, alpha, 10);
      b.compare(std::string("primezeta.series_grid(") + s + ")", prime_zeta_mobius(sv, policy).value, ser.value,
                ser.error_estimate * 10L);
    }
  }

  {
    const Real h = R("1e-8");
    for (long x : {2L, 5L, 10L}) {
      const Real xv(x, bits);
      const Real fd = (log_integral(xv + h, policy) - log_integral(xv - h, policy)) / (2L * h);
      b.compare("li.derivative(" + std::to_string(x) + ")", Real(1L, bits) / log(xv), fd, R("1e-12"));
    }
  }

  auto rest = b.take();
  out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return out;
}

std::string verify_csv(const std::vector<Check>& checks) {
  std::ostringstream os;
  os << "check,expected,actual,residual,tolerance,pass\n";
  for (const auto& c : checks) {
    os << c.name << ',' << c.expected << ',' << c.actual << ',' << to_sci(c.residual, 3) << ','
       << to_sci(c.tolerance, 3) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace pzeta::cli
