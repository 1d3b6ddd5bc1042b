#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlab/errors.hpp"
#include "hlab/number.hpp"

namespace hlab {

namespace detail {
template <class K>
bool coeff_is_zero(const K& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial with coefficients in a field K, ascending degree.
///
/// The zero polynomial has an empty coefficient list; otherwise the top
/// coefficient is nonzero. Every polynomial carries a one-letter variable tag.
/// Binary operations require equal tags, except that a constant adopts the tag
/// of the other operand.
template <class K>
class Poly {
 public:
  using coeff_type = K;

  Poly() = default;
  explicit Poly(char var) : var_(var) {}
  Poly(K constant, char var) : var_(var) {
    if (!detail::coeff_is_zero(constant)) coeffs_.push_back(std::move(constant));
  }
  Poly(std::vector<K> coeffs, char var) : var_(var), coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(K c, std::size_t degree, char var) {
    if (detail::coeff_is_zero(c)) return Poly(var);
    std::vector<K> v(degree + 1, K(0));
    v[degree] = std::move(c);
    return Poly(std::move(v), var);
  }

  char var() const { return var_; }
  /// Same polynomial with a different variable name.
  Poly renamed(char var) const {
    Poly p = *this;
    p.var_ = var;
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<K>& coeffs() const { return coeffs_; }
  K coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }
  K leading() const { return coeffs_.empty() ? K(0) : coeffs_.back(); }
  K constant_term() const { return coeff(0); }

  /// Horner evaluation at a point of K.
  K operator()(const K& x) const {
    K acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const char v = merged_var(a, b);
    std::vector<K> out(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] + b.coeffs_[i];
    return Poly(std::move(out), v);
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    const char v = merged_var(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(v);
    std::vector<K> out(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out), v);
  }

  friend Poly operator*(const K& c, const Poly& p) {
    if (detail::coeff_is_zero(c)) return Poly(p.var_);
    Poly r = p;
    for (auto& x : r.coeffs_) x = c * x;
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Equality ignores the tag of constants.
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    if (a.degree() > 0 && a.var_ != b.var_) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
  }

  Poly pow(unsigned long e) const {
    Poly result(K(1), var_);
    Poly base = *this;
    while (e > 0) {
      if (e & 1UL) result = result * base;
      e >>= 1UL;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Multiplication by var^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<K> v(k, K(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v), var_);
  }

  static char merged_var(const Poly& a, const Poly& b) {
    if (a.var_ == b.var_) return a.var_;
    if (a.degree() <= 0) return b.var_;
    if (b.degree() <= 0) return a.var_;
    throw VariableMismatch(std::string("polynomials in different variables '") + a.var_ +
                           "' and '" + b.var_ + "'");
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  char var_ = 't';
  std::vector<K> coeffs_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

/// Quotient and remainder; b must be nonzero.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const char v = Poly<K>::merged_var(a, b);
  std::vector<K> rem = a.coeffs();
  const long db = b.degree();
  const long da = a.degree();
  if (da < db) return {Poly<K>(v), a.renamed(v)};
  std::vector<K> quot(static_cast<std::size_t>(da - db + 1), K(0));
  const K lead = b.leading();
  for (long i = da - db; i >= 0; --i) {
    const K q = rem[static_cast<std::size_t>(i + db)] / lead;
    quot[static_cast<std::size_t>(i)] = q;
    if (is_zero(q)) continue;
    for (long j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i + j)];
      slot = slot - q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {Poly<K>(std::move(quot), v), Poly<K>(std::move(rem), v)};
}

/// Division known to leave no remainder; a remainder is an InternalError.
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

/// f(g): substitute g for the variable of f. The result uses g's variable.
template <class K>
Poly<K> compose(const Poly<K>& f, const Poly<K>& g) {
  Poly<K> acc(g.var());
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * g + Poly<K>(*it, g.var());
  return acc;
}

template <class K>
Poly<K> make_monic(const Poly<K>& p) {
  if (p.is_zero()) return p;
  return (K(1) / p.leading()) * p;
}

/// Monic gcd (zero only when both inputs are zero).
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

using Polynomial = Poly<Rational>;

inline Rational exact_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw InternalError("division by zero");
  return a / b;
}

/// Polynomial in `var` equal to the constant c.
inline Polynomial constant(const Rational& c, char var = 't') { return Polynomial(c, var); }
/// The polynomial `var`.
inline Polynomial variable(char var = 't') { return Polynomial::monomial(Rational(1), 1, var); }

/// Ascending text form, e.g. "1 + 3*t + t^2", "-2/45*t^3", "0".
std::string to_string(const Polynomial& p);

/// Parses the text form produced by to_string (spaces optional). The variable
/// is read from the text; `default_var` is used when only constants appear.
Polynomial parse_polynomial(std::string_view text, char default_var = 't');

/// Exact value at a rational point.
inline Rational evaluate(const Polynomial& p, const Rational& x) { return p(x); }

/// Content-free check that all coefficients are integers.
bool has_integer_coeffs(const Polynomial& p);

}  // namespace hlab
