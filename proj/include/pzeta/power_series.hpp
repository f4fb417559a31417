#pragma once

#include <cstddef>
#include <vector>

#include "pzeta/precision.hpp"

namespace pzeta {

// Truncated Taylor series sum_{i<=N} c_i (x - center)^i. Binary operations
// truncate to the smaller order of the two operands; centers must match.
class PowerSeries {
 public:
  PowerSeries(Real center, std::vector<Real> coeffs);

  // Constant series c_0 = value of the given order.
  static PowerSeries constant(const Real& center, const Real& value, std::size_t order);

  const Real& center() const { return center_; }
  const std::vector<Real>& coeffs() const { return coeffs_; }
  const Real& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t order() const { return coeffs_.size() - 1; }

  PowerSeries truncated(std::size_t order) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Real& scalar);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Real& s) { return a *= s; }

 private:
  Real center_;
  std::vector<Real> coeffs_;
};

// Taylor coefficients of log f about f's center. Requires c_0 > 0; the
// recurrence uses ring operations and a single reciprocal of c_0.
PowerSeries series_log(const PowerSeries& f);

// Taylor coefficients of exp f.
PowerSeries series_exp(const PowerSeries& f);

}  // namespace pzeta
