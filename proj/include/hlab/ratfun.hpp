#pragma once

#include <string>
#include <string_view>

#include "hlab/polynomial.hpp"

namespace hlab {

/// Element of Q(t): num/den in lowest terms with a monic denominator.
class RatFun {
 public:
  RatFun() : num_('t'), den_(Rational(1), 't') {}
  RatFun(int c) : RatFun(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : num_(c, 't'), den_(Rational(1), 't') {}  // NOLINT
  RatFun(const Polynomial& p)  // NOLINT(google-explicit-constructor)
      : num_(p), den_(Rational(1), p.var()) {}

  /// Reduces to lowest terms. Throws DomainError on a zero denominator.
  static RatFun normalize(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Throws DomainError unless the denominator is 1.
  Polynomial as_polynomial() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Value at a rational point; throws DomainError at a pole.
  Rational evaluate(const Rational& x) const;

 private:
  RatFun(Polynomial num, Polynomial den, bool /*already_reduced*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RatFun& r) { return r.is_zero(); }

/// "num" when the denominator is 1, otherwise "num / den" with multi-term
/// sides parenthesized, e.g. "(1 + t^2) / (1 + t^2 + t^4)".
std::string to_string(const RatFun& r);

RatFun parse_ratfun(std::string_view text, char default_var = 't');

inline RatFun exact_div(const RatFun& a, const RatFun& b) { return a / b; }

/// Polynomial in x with rational-function coefficients.
using RatFunPoly = Poly<RatFun>;

std::string to_string(const RatFunPoly& p);

}  // namespace hlab
