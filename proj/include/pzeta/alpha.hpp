#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pzeta/precision.hpp"
#include "pzeta/stieltjes.hpp"
#include "pzeta/zeta.hpp"

namespace pzeta {

enum class AlphaMethod { mobius, limit, integral };

std::string_view to_string(AlphaMethod m);
// Throws ParseError for anything but "mobius", "limit", "integral".
AlphaMethod parse_alpha_method(std::string_view text);

struct TruncationReport {
  std::uint64_t terms_used = 0;  // last k included in sum_{k>=2}
  Real last_term_magnitude;
  Real tail_bound;
};

struct AlphaEntry {
  std::size_t n = 0;
  Real value;
  AlphaMethod method = AlphaMethod::mobius;
  // Absolute error estimate: certified bound (mobius) or tail model (limit, integral).
  Real tolerance;
  int certified_digits = 0;
  std::optional<TruncationReport> truncation;
};

// Significant digits of `value` covered by an absolute error `tolerance`,
// clamped to [0, cap].
int certified_digits(const Real& value, const Real& tolerance, int cap);

class AlphaTable {
 public:
  // Throws std::invalid_argument if (n, method) is already present.
  void insert(AlphaEntry e);
  const AlphaEntry* find(std::size_t n, AlphaMethod method) const;
  const std::vector<AlphaEntry>& entries() const { return entries_; }
  // Entry values for a method ordered by n, requiring n = 0..max present.
  std::vector<Real> values(AlphaMethod method) const;

 private:
  std::vector<AlphaEntry> entries_;
};

// Two estimates agree when their difference is within the weaker certificate.
bool agree(const AlphaEntry& a, const AlphaEntry& b);

// Smallest squarefree K >= 2 with K^n 2^-K < 10^-digits.
std::uint64_t mobius_cutoff(std::size_t n, int digits);

// Evaluates alpha_n = g_n + sum_{k>=2} mu(k)/k k^n (log zeta)^(n)(k) for all
// n up to max_order. The log zeta Taylor series at each k is computed once
// (to max_order) and shared by every n; construction can spread the k's
// over worker threads, summation is sequential in ascending k.
class MobiusSeries {
 public:
  MobiusSeries(std::size_t max_order, const PrecisionPolicy& policy, StieltjesTable stieltjes,
               unsigned threads = 1);
  MobiusSeries(std::size_t max_order, const PrecisionPolicy& policy, unsigned threads = 1);

  std::size_t max_order() const { return max_order_; }
  const PrecisionPolicy& policy() const { return policy_; }
  const std::vector<Real>& g() const { return g_; }
  const StieltjesTable& stieltjes() const { return stieltjes_; }

  AlphaEntry alpha(std::size_t n) const;
  // (log zeta)^(m)(k) / m! for 2 <= k <= cutoff(max_order).
  const LogZetaTaylor& log_zeta_at(std::uint64_t k) const;
  const ZetaDerivatives& zeta_at(std::uint64_t k) const;

 private:
  std::size_t max_order_;
  PrecisionPolicy policy_;
  StieltjesTable stieltjes_;
  std::vector<Real> g_;
  std::vector<ZetaDerivatives> zeta_;    // index k - 2
  std::vector<LogZetaTaylor> log_zeta_;  // index k - 2
  std::vector<std::int8_t> mu_;          // index k
};

AlphaEntry alpha_mobius(std::size_t n, const PrecisionPolicy& policy);

struct SeriesResult {
  Real value;
  TruncationReport truncation;
};

// sum_{k>=2} mu(k)/k log zeta(k), the n = 0 Mobius series on its own.
SeriesResult alpha0_series(const PrecisionPolicy& policy);

struct SpecialCase {
  std::size_t n = 0;
  Real closed_form;  // explicit zeta'/zeta, zeta''/zeta, ... expression
  Real mobius;       // generic series_log route
  Real residual;     // closed_form - mobius
};

// Closed forms for n = 1, 2, 3 in terms of gamma, gamma_1, gamma_2 and
// zeta', zeta'', zeta''' at the integers. Throws UnsupportedOrder otherwise.
SpecialCase special_case_residual(std::size_t n, const MobiusSeries& series);
SpecialCase special_case_residual(std::size_t n, const PrecisionPolicy& policy);

}  // namespace pzeta
