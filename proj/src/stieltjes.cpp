#include "pzeta/stieltjes.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pzeta/errors.hpp"
#include "pzeta/euler_maclaurin.hpp"
#include "pzeta/power_series.hpp"

namespace pzeta {

namespace detail {
extern const char* const kBundledStieltjes;
extern const char* const kBundledStieltjesSha256;
}  // namespace detail

const Real& StieltjesTable::at(std::size_t n) const {
  if (n >= values.size()) {
    throw UnsupportedOrder("Stieltjes constant gamma_" + std::to_string(n) + " beyond table order " +
                           std::to_string(order()));
  }
  return values[n];
}

namespace {

int significant_digits(std::string_view lit) {
  int n = 0;
  bool leading = true;
  for (char ch : lit) {
    if (ch == 'e' || ch == 'E') break;
    if (ch < '0' || ch > '9') continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++n;
  }
  return n;
}

}  // namespace

StieltjesTable parse_stieltjes(std::string_view text, const PrecisionPolicy& policy, Provenance provenance) {
  StieltjesTable t;
  t.provenance = provenance;
  t.source_digits = 1 << 20;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::size_t index = 0;
    std::string literal, extra;
    if (!(fields >> index >> literal) || (fields >> extra)) {
      throw ParseError("Stieltjes data line " + std::to_string(lineno) + ": expected 'index value'");
    }
    if (index != t.values.size()) {
      throw ParseError("Stieltjes data line " + std::to_string(lineno) + ": index out of sequence");
    }
    t.values.push_back(make_real(literal, policy));
    t.source_digits = std::min(t.source_digits, significant_digits(literal));
  }
  if (t.values.empty()) throw ParseError("Stieltjes data: no entries");
  return t;
}

StieltjesTable load_stieltjes(const std::filesystem::path& path, const PrecisionPolicy& policy) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open Stieltjes data file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_stieltjes(buf.str(), policy, Provenance::file);
}

std::string_view bundled_stieltjes_text() { return detail::kBundledStieltjes; }
std::string_view bundled_stieltjes_sha256() { return detail::kBundledStieltjesSha256; }

StieltjesTable bundled_stieltjes(const PrecisionPolicy& policy) {
  return parse_stieltjes(bundled_stieltjes_text(), policy, Provenance::bundled);
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

Real stieltjes(std::size_t n, const PrecisionPolicy& policy) { return bundled_stieltjes(policy).at(n); }

StieltjesTable stieltjes_oracle(std::size_t order, const PrecisionPolicy& policy) {
  const int digits = policy.working_digits();
  const unsigned p = static_cast<unsigned>(std::max(16, digits / 2));
  const Real b_est(1L, 64);
  const std::uint64_t cut = em_choose_cut(b_est, order, p, digits + 2, 32);

  // (log N)^{n+1}/(n+1) cancels against the partial sum; carry its size as guard bits.
  const double lg_cancel = (order + 1) * std::log2(std::max(1.0, std::log(static_cast<double>(cut))));
  const mpfr_prec_t bits = policy.working_bits() + static_cast<mpfr_prec_t>(lg_cancel) + 64;

  const Real one(1L, bits);
  std::vector<Real> acc(order + 1, Real(bits));
  for (std::uint64_t k = 1; k < cut; ++k) {
    const Real lk = log(Real::from_uint(k, bits));
    Real term = one / Real::from_uint(k, bits);
    for (std::size_t n = 0; n <= order; ++n) {
      acc[n] += term;
      term *= lk;
    }
  }
  const Real L = log(Real::from_uint(cut, bits));
  const auto boundary = em_boundary_terms(one, order, cut, p, bits);

  StieltjesTable t;
  t.provenance = Provenance::oracle;
  t.source_digits = digits;
  Real lp = L;  // L^{n+1}
  for (std::size_t n = 0; n <= order; ++n) {
    Real g = acc[n] - lp / static_cast<long>(n + 1) + boundary[n];
    t.values.push_back(g.rounded_to(policy.working_bits()));
    lp *= L;
  }
  return t;
}

std::vector<Real> g_coefficients(std::size_t n_max, const PrecisionPolicy& policy, const StieltjesTable& table) {
  if (n_max > table.order() + 1) {
    throw UnsupportedOrder("g_coefficients: g_" + std::to_string(n_max) + " needs gamma_" +
                           std::to_string(n_max - 1) + ", table order is " + std::to_string(table.order()));
  }
  const mpfr_prec_t bits = policy.working_bits();
  // (s-1) zeta(s) = 1 + sum_{n>=0} (-1)^n gamma_n / n! (s-1)^{n+1}
  std::vector<Real> c(n_max + 1, Real(bits));
  c[0] = Real(1L, bits);
  for (std::size_t n = 0; n < n_max; ++n) {
    Real v = table.at(n).rounded_to(bits) / factorial(static_cast<unsigned>(n), bits);
    c[n + 1] = n % 2 == 0 ? v : -v;
  }
  const auto lg = series_log(PowerSeries(Real(1L, bits), std::move(c)));
  std::vector<Real> g;
  g.reserve(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) g.push_back(lg[m] * factorial(static_cast<unsigned>(m), bits));
  return g;
}

std::vector<Real> g_coefficients(std::size_t n_max, const PrecisionPolicy& policy) {
  return g_coefficients(n_max, policy, bundled_stieltjes(policy));
}

}  // namespace pzeta
