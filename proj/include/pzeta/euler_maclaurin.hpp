#pragma once

#include <cstddef>
#include <vector>

#include "pzeta/precision.hpp"

namespace pzeta {

// Even Bernoulli numbers B_2, B_4, ..., B_{2p}, exact rationals rounded to
// `bits`. Element i holds B_{2(i+1)}.
std::vector<Real> bernoulli_even(unsigned p, mpfr_prec_t bits);

// Boundary corrections of Euler-Maclaurin summation for the family
// f_m(t) = t^-b (log t)^m, m = 0..max_degree, at the cut point J:
//
//   f_m(J)/2 - sum_{i=1}^{p} B_{2i}/(2i)! f_m^{(2i-1)}(J)
//
// so that sum_{j>=J} f_m(j) = int_J^inf f_m + result[m] + R_p.
std::vector<Real> em_boundary_terms(const Real& b, std::size_t max_degree, std::uint64_t cut, unsigned p,
                                    mpfr_prec_t bits);

// Magnitude estimate of the remainder R_p for the same family, the largest
// over m: 2 (2pi)^-2p |f_m^{(2p-1)}(J)| with the derivative's log-polynomial
// replaced by its absolute-coefficient majorant. Evaluated at low precision.
double em_remainder_log10(const Real& b, std::size_t max_degree, std::uint64_t cut, unsigned p);

// Smallest cut J >= min_cut (grown geometrically) whose remainder estimate is
// below 10^-digits.
std::uint64_t em_choose_cut(const Real& b, std::size_t max_degree, unsigned p, int digits,
                            std::uint64_t min_cut = 2);

}  // namespace pzeta
