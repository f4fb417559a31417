#include "pzeta/power_series.hpp"

#include <algorithm>
#include <utility>

#include "pzeta/errors.hpp"

namespace pzeta {

PowerSeries::PowerSeries(Real center, std::vector<Real> coeffs)
    : center_(std::move(center)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("power series needs at least one coefficient");
}

PowerSeries PowerSeries::constant(const Real& center, const Real& value, std::size_t order) {
  std::vector<Real> c(order + 1, Real(value.precision()));
  c[0] = value;
  return PowerSeries(center, std::move(c));
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  const std::size_t n = std::min(order, this->order()) + 1;
  return PowerSeries(center_, std::vector<Real>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

namespace {

void check_centers(const PowerSeries& a, const PowerSeries& b) {
  if (a.center() != b.center()) throw DomainError("power series centers differ");
}

}  // namespace

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  check_centers(*this, o);
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), Real(center_.precision()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  check_centers(*this, o);
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), Real(center_.precision()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Real& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  check_centers(a, b);
  const std::size_t n = std::min(a.order(), b.order());
  const mpfr_prec_t bits = std::max(a.coeffs_[0].precision(), b.coeffs_[0].precision());
  std::vector<Real> c(n + 1, Real(bits));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) c[i] += a.coeffs_[j] * b.coeffs_[i - j];
  }
  return PowerSeries(a.center_, std::move(c));
}

PowerSeries series_log(const PowerSeries& f) {
  const auto& c = f.coeffs();
  if (c[0].sign() <= 0) throw DomainError("series_log: constant coefficient must be positive");
  const std::size_t n = f.order();
  const mpfr_prec_t bits = c[0].precision();
  const Real inv_c0 = Real(1L, bits) / c[0];

  // From f * L' = f': m c_0 L_m = m c_m - sum_{j=1}^{m-1} j L_j c_{m-j}.
  std::vector<Real> out(n + 1, Real(bits));
  out[0] = log(c[0]);
  for (std::size_t m = 1; m <= n; ++m) {
    Real acc = c[m] * static_cast<long>(m);
    for (std::size_t j = 1; j < m; ++j) acc -= out[j] * c[m - j] * static_cast<long>(j);
    out[m] = acc * inv_c0 / static_cast<long>(m);
  }
  return PowerSeries(f.center(), std::move(out));
}

PowerSeries series_exp(const PowerSeries& f) {
  const auto& c = f.coeffs();
  const std::size_t n = f.order();
  const mpfr_prec_t bits = c[0].precision();

  // E' = f' E: m E_m = sum_{j=1}^{m} j c_j E_{m-j}.
  std::vector<Real> out(n + 1, Real(bits));
  out[0] = exp(c[0]);
  for (std::size_t m = 1; m <= n; ++m) {
    Real acc(bits);
    for (std::size_t j = 1; j <= m; ++j) acc += c[j] * out[m - j] * static_cast<long>(j);
    out[m] = acc / static_cast<long>(m);
  }
  return PowerSeries(f.center(), std::move(out));
}

}  // namespace pzeta
