#pragma once

// g_0..g_6 written out as polynomials in gamma, gamma_1..gamma_5. Used only
// as an independent check on the series-log route.

#include <stdexcept>
#include <vector>

#include "pzeta/precision.hpp"

namespace pzeta::checks {

// gamma[k] = gamma_k for k = 0..5.
inline std::vector<Real> g_polynomials(const std::vector<Real>& gamma) {
  if (gamma.size() < 6) throw std::invalid_argument("g_polynomials needs gamma_0..gamma_5");
  const Real& g = gamma[0];
  const Real& g1 = gamma[1];
  const Real& g2 = gamma[2];
  const Real& g3 = gamma[3];
  const Real& g4 = gamma[4];
  const Real& g5 = gamma[5];
  auto p = [](const Real& x, long e) { return pow(x, e); };

  std::vector<Real> out;
  out.push_back(Real(g.precision()));
  out.push_back(g);
  out.push_back(-p(g, 2) - 2L * g1);
  out.push_back(2L * p(g, 3) + 6L * g * g1 + 3L * g2);
  out.push_back(-6L * p(g, 4) - 12L * p(g1, 2) - 24L * p(g, 2) * g1 - 12L * g * g2 - 4L * g3);
  out.push_back(120L * p(g, 3) * g1 + 120L * g * p(g1, 2) + 60L * p(g, 2) * g2 + 60L * g1 * g2 + 20L * g * g3 +
                5L * g4 + 24L * p(g, 5));
  out.push_back(-720L * p(g, 4) * g1 - 1080L * p(g, 2) * p(g1, 2) - 240L * p(g1, 3) - 360L * p(g, 3) * g2 -
                720L * g * g1 * g2 - 90L * p(g2, 2) - 120L * p(g, 2) * g3 - 120L * g1 * g3 - 30L * g * g4 - 6L * g5 -
                120L * p(g, 6));
  return out;
}

}  // namespace pzeta::checks
