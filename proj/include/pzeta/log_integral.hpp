#pragma once

#include "pzeta/precision.hpp"

namespace pzeta {

// li(x) for x > 1 from gamma + log log x + sum_{k>=1} (log x)^k / (k k!).
// All series terms are positive for x > 1. Summation stops once a term is
// below 10^-working_digits and the term ratio has dropped under 1/2.
// Throws DomainError for x <= 1.
Real log_integral(const Real& x, const PrecisionPolicy& policy);

}  // namespace pzeta
