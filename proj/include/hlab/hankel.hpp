#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hlab/polynomial.hpp"
#include "hlab/sequences.hpp"

namespace hlab {

/// Row-major square matrix over a commutative ring.
template <class K>
struct SquareMatrix {
  std::size_t n = 0;
  std::vector<K> cells;

  K& at(std::size_t i, std::size_t j) { return cells[i * n + j]; }
  const K& at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
};

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact in an
/// integral domain; `one` is the ring unit. An empty matrix has determinant one.
/// A column without a nonzero pivot makes the determinant zero.
template <class K>
K det_bareiss(SquareMatrix<K> m, const K& one) {
  const std::size_t n = m.n;
  if (n == 0) return one;
  bool negate = false;
  K prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m.at(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m.at(p, k))) ++p;
      if (p == n) return one - one;
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      negate = !negate;
    }
    const K& pivot = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = exact_div(m.at(i, j) * pivot - m.at(i, k) * m.at(k, j), prev);
      }
    }
    prev = pivot;
  }
  K d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

/// entry(i, j) = a(i + j + offset), 0 <= i, j < order.
struct HankelMatrix {
  std::size_t order = 0;
  std::size_t offset = 0;
  SquareMatrix<Polynomial> entries;

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries.at(i, j); }
};

HankelMatrix hankel_matrix(const TermList& terms, std::size_t order, std::size_t offset);
HankelMatrix hankel_matrix(const SequenceSpec& spec, std::size_t order, std::size_t offset);

Polynomial det_exact(const HankelMatrix& m);
Polynomial det_exact(const SquareMatrix<Polynomial>& m);

/// values[n] = det of the order-n Hankel matrix, n = 0..n_max.
struct DetSequence {
  SequenceSpec spec;
  std::size_t offset = 0;
  TermKind kind = TermKind::Scalar;
  std::vector<Polynomial> values;
};

/// Orders are evaluated concurrently; results are stored by index.
DetSequence det_sequence(const SequenceSpec& spec, std::size_t n_max, std::size_t offset);
DetSequence det_sequence(const TermList& terms, std::size_t n_max, std::size_t offset);

/// "n,value" rows with a header; polynomial cells are double-quoted.
std::string to_csv(const DetSequence& d);
/// JSON array of value strings.
std::string to_json(const DetSequence& d);

/// Quotes a CSV cell when it is not a plain rational.
std::string csv_cell(const std::string& value);

}  // namespace hlab
