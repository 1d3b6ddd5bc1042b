#pragma once

#include <cstddef>
#include <vector>

#include "hlab/polynomial.hpp"

namespace hlab {

/// Truncated formal power series in z with Polynomial coefficients.
///
/// Coefficients of z^0..z^order are known; results of binary operations carry
/// the smaller of the two orders.
class PowerSeries {
 public:
  static constexpr std::size_t kDefaultOrder = 32;

  explicit PowerSeries(std::size_t order = kDefaultOrder) : order_(order), coeffs_(order + 1, Polynomial()) {}
  /// Missing coefficients are zero; extra ones are dropped.
  PowerSeries(std::vector<Polynomial> coeffs, std::size_t order);

  static PowerSeries constant(const Polynomial& c, std::size_t order = kDefaultOrder);
  /// c*z^k.
  static PowerSeries monomial(const Polynomial& c, std::size_t k, std::size_t order = kDefaultOrder);

  std::size_t order() const { return order_; }
  const Polynomial& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Polynomial& c, const PowerSeries& a);

  /// Compares the coefficients both operands know.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

  /// Multiplication by z^k (order unchanged, top terms fall off).
  PowerSeries times_z(std::size_t k) const;
  /// Division by z^k; the k lowest coefficients must vanish. Order drops by k.
  PowerSeries div_z(std::size_t k) const;
  /// A(c * z^k).
  PowerSeries substitute(const Polynomial& c, std::size_t k) const;
  /// Same series with a smaller order.
  PowerSeries truncated(std::size_t order) const;

 private:
  std::size_t order_;
  std::vector<Polynomial> coeffs_;
};

/// A^k through the order of A.
PowerSeries series_pow(const PowerSeries& a, unsigned long k);

/// B with A*B = 1. The constant term must be a nonzero constant polynomial.
PowerSeries series_invert(const PowerSeries& a);

}  // namespace hlab
