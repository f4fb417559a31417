#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pzeta/power_series.hpp"
#include "pzeta/precision.hpp"

namespace pzeta {

// zeta(a), zeta'(a), ..., zeta^(M)(a) at a real point.
struct ZetaDerivatives {
  Real point;
  std::vector<Real> values;
  std::uint64_t cut = 0;          // Euler-Maclaurin cut J actually used
  unsigned bernoulli_terms = 0;   // and the number of Bernoulli corrections
  std::size_t order() const { return values.size() - 1; }
};

struct ZetaOptions {
  // Bernoulli correction terms in the Euler-Maclaurin tail. Unset: 8, or
  // more when high orders would otherwise push the cut J past a few thousand.
  std::optional<unsigned> bernoulli_terms;
  // Force a specific cut J instead of choosing it from the remainder estimate
  // (with 8 Bernoulli terms unless given).
  std::optional<std::uint64_t> cut;
};

inline constexpr std::size_t kMaxZetaOrder = 64;

// zeta^(m)(a) = sum_j (-log j)^m j^-a for m = 0..order, a >= 2.
// Throws DomainError for a < 2, UnsupportedOrder for order > 64.
ZetaDerivatives zeta_derivatives(const Real& a, std::size_t order, const PrecisionPolicy& policy,
                                 const ZetaOptions& options = {});

// zeta(a) alone for any real a > 1 (same machinery, order 0).
Real zeta_value(const Real& a, const PrecisionPolicy& policy, const ZetaOptions& options = {});

// Taylor coefficients of log zeta about a: coeffs[m] = (log zeta)^(m)(a) / m!.
struct LogZetaTaylor {
  Real point;
  PowerSeries series;
  const Real& operator[](std::size_t m) const { return series[m]; }
  std::size_t order() const { return series.order(); }
};

// Taylor series of zeta about a: coeffs[m] = zeta^(m)(a) / m!.
PowerSeries zeta_taylor(const ZetaDerivatives& d);

LogZetaTaylor log_zeta_taylor(const Real& a, std::size_t order, const PrecisionPolicy& policy,
                              const ZetaOptions& options = {});

}  // namespace pzeta
