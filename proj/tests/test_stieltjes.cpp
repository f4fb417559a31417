#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "pzeta/errors.hpp"
#include "pzeta/stieltjes.hpp"
#include "stieltjes_polynomials.hpp"

using namespace pzeta;

namespace {

const PrecisionPolicy kPolicy(30);
const mpfr_prec_t kBits = kPolicy.working_bits();

std::string slurp(const char* path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("bundled table basics") {
  const auto t = bundled_stieltjes(kPolicy);
  CHECK(t.provenance == Provenance::bundled);
  CHECK(t.order() == 64);
  CHECK(t.source_digits == 50);
  CHECK(abs(t.at(0) - euler_gamma(kPolicy)) < pow10(-44, kBits));
  CHECK(to_decimal(t.at(0), 19) == "0.5772156649015328606");
  CHECK(to_decimal(t.at(1), 15) == "-0.0728158454836767");
  CHECK(to_decimal(t.at(2), 14) == "-0.0096903631928723");
  CHECK_THROWS_AS(t.at(65), UnsupportedOrder);
  CHECK_THROWS_AS(stieltjes(65, kPolicy), UnsupportedOrder);
  CHECK(stieltjes(3, kPolicy) == t.at(3));
}

TEST_CASE("data file, bundled copy and pinned checksum agree") {
  const std::string text = slurp(PZETA_DATA_FILE);
  std::string pinned = slurp(PZETA_SHA_FILE);
  while (!pinned.empty() && (pinned.back() == '\n' || pinned.back() == ' ')) pinned.pop_back();
  CHECK(text == bundled_stieltjes_text());
  CHECK(sha256_hex(text) == pinned);
  CHECK(bundled_stieltjes_sha256() == pinned);
  const auto loaded = load_stieltjes(PZETA_DATA_FILE, kPolicy);
  CHECK(loaded.provenance == Provenance::file);
  CHECK(loaded.values == bundled_stieltjes(kPolicy).values);
}

TEST_CASE("sha256 test vectors") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("parser") {
  const auto t = parse_stieltjes("# header\n\n0 0.5\n1   -1.25e-2\n2\t3\n", kPolicy);
  CHECK(t.order() == 2);
  CHECK(t.provenance == Provenance::file);
  CHECK(t.at(1) == make_real("-0.0125", kPolicy));
  CHECK(t.source_digits == 1);
  CHECK_THROWS_AS(parse_stieltjes("1 0.5\n", kPolicy), ParseError);
  CHECK_THROWS_AS(parse_stieltjes("0 0.5\n2 0.1\n", kPolicy), ParseError);
  CHECK_THROWS_AS(parse_stieltjes("0 abc\n", kPolicy), ParseError);
  CHECK_THROWS_AS(parse_stieltjes("0 0.5 7\n", kPolicy), ParseError);
  CHECK_THROWS_AS(parse_stieltjes("# nothing\n", kPolicy), ParseError);
  CHECK_THROWS_AS(load_stieltjes("/nonexistent/stieltjes.txt", kPolicy), ParseError);
}

TEST_CASE("oracle agrees with the bundled table") {
  const auto oracle = stieltjes_oracle(64, kPolicy);
  CHECK(oracle.provenance == Provenance::oracle);
  const auto bundled = bundled_stieltjes(kPolicy);
  for (std::size_t n = 0; n <= 64; ++n) {
    CAPTURE(n);
    CHECK(abs(oracle.at(n) - bundled.at(n)) <= abs(bundled.at(n)) * pow10(-(kPolicy.working_digits() - 3), kBits));
  }
}

TEST_CASE("partial sums at m = 1e7 reproduce gamma_n") {
  // gamma_n = sum_{k<=m} L_k^n/k - L_m^{n+1}/(n+1) - f(m)/2 - f'(m)/12 + O(m^-4 L^n)
  // with f(t) = log^n t / t; compensated long double accumulation.
  const long m = 10000000;
  const int n_max = 5;
  std::vector<long double> sum(n_max + 1, 0.0L), carry(n_max + 1, 0.0L);
  for (long k = 2; k <= m; ++k) {
    const long double kd = static_cast<long double>(k);
    const long double L = std::log(kd);
    long double term = 1.0L / kd;
    for (int n = 0; n <= n_max; ++n) {
      const long double y = term - carry[n];
      const long double t = sum[n] + y;
      carry[n] = (t - sum[n]) - y;
      sum[n] = t;
      term *= L;
    }
  }
  sum[0] += 1.0L;  // k = 1
  const long double md = static_cast<long double>(m);
  const long double Lm = std::log(md);
  const auto table = bundled_stieltjes(kPolicy);
  for (int n = 0; n <= n_max; ++n) {
    const long double f = std::pow(Lm, n) / md;
    const long double fp = (n * std::pow(Lm, n - 1) - std::pow(Lm, n)) / (md * md);
    const long double est = sum[n] - std::pow(Lm, n + 1) / (n + 1) - f / 2 - fp / 12;
    CAPTURE(n);
    CHECK(std::fabs(est - table.at(n).to_long_double()) < 1e-12L);
  }
}

TEST_CASE("g coefficients by series log") {
  const auto g = g_coefficients(12, kPolicy);
  CHECK(g.size() == 13);
  CHECK(g[0].is_zero());
  CHECK(abs(g[1] - euler_gamma(kPolicy)) < pow10(-44, kBits));
  const auto t = bundled_stieltjes(kPolicy);
  CHECK(abs(g[2] - (-(t.at(0) * t.at(0)) - 2L * t.at(1))) < pow10(-(kPolicy.target_digits() - 5), kBits));

  const auto poly = checks::g_polynomials(t.values);
  for (std::size_t n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(abs(g[n] - poly[n]) < pow10(-25, kBits));
    CHECK(abs(g[n] - poly[n]) < pow10(-40, kBits));
  }

  // g_{N+1} needs only gamma_0..gamma_N.
  StieltjesTable small = t;
  small.values.resize(4);
  CHECK(g_coefficients(4, kPolicy, small)[4] == g_coefficients(4, kPolicy)[4]);
  CHECK_THROWS_AS(g_coefficients(5, kPolicy, small), UnsupportedOrder);
}

TEST_CASE("g coefficients at 50 digits") {
  const PrecisionPolicy wide(50);
  const auto g = g_coefficients(6, wide);
  const auto poly = checks::g_polynomials(stieltjes_oracle(5, wide).values);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(abs(g[n] - poly[n]) < pow10(-45, wide.working_bits()));
}
