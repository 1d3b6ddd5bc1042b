#include "hlab/power_series.hpp"

#include <algorithm>

namespace hlab {

PowerSeries::PowerSeries(std::vector<Polynomial> coeffs, std::size_t order)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::constant(const Polynomial& c, std::size_t order) { return monomial(c, 0, order); }

PowerSeries PowerSeries::monomial(const Polynomial& c, std::size_t k, std::size_t order) {
  PowerSeries s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order_, b.order_);
  PowerSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order_, b.order_);
  PowerSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

PowerSeries operator*(const Polynomial& c, const PowerSeries& a) {
  PowerSeries r = a;
  for (auto& x : r.coeffs_) x = c * x;
  return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order_, b.order_);
  for (std::size_t i = 0; i <= n; ++i) {
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  }
  return true;
}

PowerSeries PowerSeries::times_z(std::size_t k) const {
  PowerSeries r(order_);
  for (std::size_t i = 0; i + k <= order_; ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

PowerSeries PowerSeries::div_z(std::size_t k) const {
  if (k > order_) throw DomainError("div_z beyond the truncation order");
  for (std::size_t i = 0; i < k; ++i) {
    if (!coeffs_[i].is_zero()) throw DomainError("div_z: series not divisible by z^" + std::to_string(k));
  }
  return PowerSeries(std::vector<Polynomial>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()), order_ - k);
}

PowerSeries PowerSeries::substitute(const Polynomial& c, std::size_t k) const {
  if (k == 0) throw DomainError("substitute needs a positive power of z");
  PowerSeries r(order_);
  Polynomial cp = hlab::constant(Rational(1), c.var());
  for (std::size_t i = 0; i * k <= order_; ++i) {
    r.coeffs_[i * k] = cp * coeffs_[i];
    cp = cp * c;
  }
  return r;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > order_) throw DomainError("cannot extend a truncated series");
  return PowerSeries(std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1), order);
}

PowerSeries series_pow(const PowerSeries& a, unsigned long k) {
  PowerSeries result = PowerSeries::constant(constant(Rational(1)), a.order());
  PowerSeries base = a;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  return result;
}

PowerSeries series_invert(const PowerSeries& a) {
  const Polynomial& a0 = a[0];
  if (a0.is_zero() || a0.degree() > 0) {
    throw DomainError("series_invert: constant term must be a nonzero constant");
  }
  const Rational inv = 1 / a0.constant_term();
  std::vector<Polynomial> b(a.order() + 1);
  b[0] = constant(inv, a0.var());
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Polynomial acc;
    for (std::size_t i = 1; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      acc += a[i] * b[n - i];
    }
    b[n] = (-inv) * acc;
  }
  return PowerSeries(std::move(b), a.order());
}

}  // namespace hlab
