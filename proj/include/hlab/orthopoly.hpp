#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hlab/ratfun.hpp"
#include "hlab/sequences.hpp"

namespace hlab {

/// Recurrence coefficients of p(n,x) = (x - s(n-1)) p(n-1,x) - t(n-2) p(n-2,x).
struct JacobiData {
  std::vector<RatFun> s;
  std::vector<RatFun> t;
  std::size_t depth = 0;

  friend bool operator==(const JacobiData&, const JacobiData&) = default;
};

/// a(n,k), 0 <= k <= n <= N, with
/// a(n,k) = a(n-1,k-1) + s(k) a(n-1,k) + t(k) a(n-1,k+1).
class Triangle {
 public:
  Triangle() = default;
  explicit Triangle(std::vector<std::vector<RatFun>> rows) : rows_(std::move(rows)) {}

  std::size_t size() const { return rows_.size(); }
  /// Zero outside 0 <= k <= n.
  RatFun at(long n, long k) const;
  std::vector<RatFun> column0() const;

 private:
  std::vector<std::vector<RatFun>> rows_;
};

/// Solves the triangle layer by layer for s(0..depth-1) and t(0..depth-1);
/// needs moments 0..2*depth. Throws ZeroHankelMinor(k+2) when t(k) = 0.
JacobiData fit_recurrence(const TermList& moments, std::size_t depth);

/// Rows 0..N. Needs s(0..N-1) and t(0..N-2).
Triangle triangle(const JacobiData& jd, std::size_t N);

/// Monic p(n, x) with coefficients in Q(t).
RatFunPoly poly_from_recurrence(const JacobiData& jd, std::size_t n);

/// prod_{i=1}^{n-1} prod_{j=0}^{i-1} t(j).
RatFun det_product_formula(const JacobiData& jd, std::size_t n);

/// (-1)^n p(n, 0) det0.
RatFun shifted_det(const JacobiData& jd, std::size_t n, const RatFun& det0);

/// Collapses aerated weights: s(0) = T(0), s(n) = T(2n-1) + T(2n),
/// t(n) = T(2n) T(2n+1). depth = (|T| - 1) / 2.
JacobiData aeration_collapse(const std::vector<RatFun>& T);

struct Lemma42Report {
  std::size_t n = 0;
  Polynomial x0;
  RatFun lhs;  // det(a(i+j) x0 - a(i+j+1))
  RatFun rhs;  // det(a(i+j)) p(n, x0)
  bool holds = false;
};

Lemma42Report lemma42_check(const TermList& moments, std::size_t n, const Polynomial& x0);

/// {"s": [...], "t": [...]} with rational-function strings.
std::string to_json(const JacobiData& jd);
/// "k,s,t" rows.
std::string to_csv(const JacobiData& jd);

}  // namespace hlab
