// Independent reference computations shared by the unit suites and the
// acceptance runner. Nothing here calls the elimination or fitting code.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "hlab/hankel.hpp"
#include "hlab/orthopoly.hpp"
#include "hlab/polynomial.hpp"
#include "hlab/power_series.hpp"
#include "hlab/ratfun.hpp"
#include "hlab/sequences.hpp"

namespace oracle {

using hlab::Polynomial;
using hlab::Rational;

inline Polynomial P(const std::string& text) { return hlab::parse_polynomial(text); }
inline Polynomial c(long v) { return hlab::constant(Rational(v)); }

/// Laplace expansion along the first row.
template <class K>
K cofactor_det(const std::vector<std::vector<K>>& m, const K& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  K sum = one - one;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<K>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<K> row;
      for (std::size_t l = 0; l < n; ++l) {
        if (l != j) row.push_back(m[i][l]);
      }
      minor.push_back(row);
    }
    const K term = m[0][j] * cofactor_det(minor, one);
    sum = j % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

template <class K>
hlab::SquareMatrix<K> to_square(const std::vector<std::vector<K>>& m) {
  hlab::SquareMatrix<K> s;
  s.n = m.size();
  for (const auto& row : m) s.cells.insert(s.cells.end(), row.begin(), row.end());
  return s;
}

inline Polynomial random_poly(std::mt19937& rng, int max_degree, int bound = 9, char var = 't') {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : cs) x = coef(rng);
  return Polynomial(std::move(cs), var);
}

inline std::vector<std::vector<Polynomial>> random_matrix(std::mt19937& rng, std::size_t n, int max_degree) {
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (auto& row : m) {
    for (auto& e : row) e = random_poly(rng, max_degree);
  }
  return m;
}

/// Specs whose Hankel determinants are nonzero through order 9, so fitting to
/// depth 8 succeeds.
inline const std::vector<std::string>& fittable_corpus() {
  static const std::vector<std::string> specs = {
      "catalan",
      "catalan|shift:1",
      "central-binomial",
      "u:r=2",
      "u:r=3",
      "catalan|double-signed",
      "central-binomial|double-signed",
      "u:r=3|double-signed",
      "catalan|aerate",
      "catalan|double-signed|aerate",
      "u:r=2|aerate",
      "catconv:r=4",
      "narayana",
      "narayana|shift:1",
      "narayana-b",
      "convpoly:m=4",
  };
  return specs;
}

/// Linear functional F(x^k) = a(k) applied to a polynomial in x.
inline hlab::RatFun apply_functional(const hlab::RatFunPoly& p, const hlab::TermList& a) {
  hlab::RatFun sum;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) sum += p.coeffs()[k] * hlab::RatFun(a[k]);
  return sum;
}

/// p(n, x) from the bordered determinant: rows a(i+j), i < n, and a last row
/// 1, x, ..., x^n; divided by det(a(i+j)). Scalar moments only.
inline Polynomial bordered_poly(const hlab::TermList& a, std::size_t n) {
  std::vector<std::vector<Polynomial>> m(n + 1, std::vector<Polynomial>(n + 1));
  std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) m[i][j] = hlab::constant(a[i + j].constant_term(), 'x');
    for (std::size_t j = 0; j < n; ++j) h[i][j] = m[i][j];
  }
  for (std::size_t j = 0; j <= n; ++j) m[n][j] = Polynomial::monomial(Rational(1), j, 'x');
  const Polynomial one = hlab::constant(Rational(1), 'x');
  const Rational d0 = cofactor_det(h, one).constant_term();
  return (Rational(1) / d0) * cofactor_det(m, one);
}

/// All compositions of `total` into a1, b1, ..., ak, bk, a_{k+1} with every
/// part >= 1 except a_{k+1} >= 0; returns coefficient of t^-s at index s.
inline std::vector<long> dual_compositions(long n, long k) {
  const long total = n + k - 1;
  std::vector<long> by_s(static_cast<std::size_t>(total) + 1, 0);
  std::vector<long> parts;
  auto rec = [&](auto&& self, long remaining, std::size_t slot) -> void {
    const std::size_t slots = static_cast<std::size_t>(2 * k + 1);
    if (slot + 1 == slots) {
      long s = 0;
      for (std::size_t i = 1; i < parts.size(); i += 2) s += parts[i];
      ++by_s[static_cast<std::size_t>(s)];
      return;
    }
    for (long v = 1; v <= remaining; ++v) {
      parts.push_back(v);
      self(self, remaining - v, slot + 1);
      parts.pop_back();
    }
  };
  rec(rec, total, 0);
  return by_s;
}

/// Fibonacci-type recurrence P_n = X P_{n-1} + S P_{n-2} over Q(t)[x].
inline hlab::RatFunPoly fl_ratfun(hlab::FLKind kind, long n, const hlab::RatFunPoly& X, const hlab::RatFunPoly& S) {
  hlab::RatFunPoly prev(kind == hlab::FLKind::Fibonacci ? hlab::RatFun() : hlab::RatFun(2), 'x');
  hlab::RatFunPoly cur = kind == hlab::FLKind::Fibonacci ? hlab::RatFunPoly(hlab::RatFun(1), 'x') : X;
  if (n == 0) return prev;
  for (long i = 1; i < n; ++i) {
    hlab::RatFunPoly next = X * cur + S * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace oracle
