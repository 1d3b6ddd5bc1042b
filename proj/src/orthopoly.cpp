#include "hlab/orthopoly.hpp"

#include "hlab/hankel.hpp"
#include "json.hpp"

namespace hlab {

namespace {

const RatFun& coeff_or_zero(const std::vector<RatFun>& v, std::size_t k) {
  static const RatFun zero;
  return k < v.size() ? v[k] : zero;
}

// Rows 0..N of the triangle; coefficients beyond the given lists count as zero.
std::vector<std::vector<RatFun>> run_triangle(const std::vector<RatFun>& s, const std::vector<RatFun>& t,
                                              std::size_t N) {
  std::vector<std::vector<RatFun>> rows(N + 1);
  rows[0] = {RatFun(1)};
  for (std::size_t n = 1; n <= N; ++n) {
    const auto& prev = rows[n - 1];
    auto& row = rows[n];
    row.assign(n + 1, RatFun());
    for (std::size_t k = 0; k <= n; ++k) {
      RatFun v;
      if (k >= 1) v += prev[k - 1];
      if (k < prev.size() && !prev[k].is_zero()) v += coeff_or_zero(s, k) * prev[k];
      if (k + 1 < prev.size() && !prev[k + 1].is_zero()) v += coeff_or_zero(t, k) * prev[k + 1];
      row[k] = std::move(v);
    }
  }
  return rows;
}

// Fits s(0..n_s-1) and t(0..n_t-1), n_s in {n_t, n_t + 1}.
JacobiData fit_impl(const TermList& moments, std::size_t n_s, std::size_t n_t) {
  const std::size_t needed = n_s + n_t + 1;
  if (moments.size() < needed) {
    throw DomainError("fitting needs " + std::to_string(needed) + " moments, got " + std::to_string(moments.size()));
  }
  if (moments[0].is_zero()) throw ZeroHankelMinor(1);
  if (!(moments[0] == constant(Rational(1), moments[0].var()))) {
    throw DomainError("moment sequence must start with 1");
  }
  JacobiData jd;
  RatFun lead(1);  // prod_{j<k} t(j)
  for (std::size_t k = 0; k < n_s; ++k) {
    auto rows = run_triangle(jd.s, jd.t, 2 * k + 1);
    jd.s.push_back((RatFun(moments[2 * k + 1]) - rows[2 * k + 1][0]) / lead);
    if (k >= n_t) break;
    rows = run_triangle(jd.s, jd.t, 2 * k + 2);
    const RatFun tk = (RatFun(moments[2 * k + 2]) - rows[2 * k + 2][0]) / lead;
    if (tk.is_zero()) throw ZeroHankelMinor(k + 2);
    jd.t.push_back(tk);
    lead *= tk;
  }
  jd.depth = n_s;
  return jd;
}

}  // namespace

RatFun Triangle::at(long n, long k) const {
  if (n < 0 || k < 0 || k > n) return RatFun();
  return rows_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k));
}

std::vector<RatFun> Triangle::column0() const {
  std::vector<RatFun> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[0]);
  return out;
}

JacobiData fit_recurrence(const TermList& moments, std::size_t depth) {
  return fit_impl(moments, depth, depth);
}

Triangle triangle(const JacobiData& jd, std::size_t N) {
  if (N > 0 && (jd.s.size() < N || jd.t.size() + 1 < N)) {
    throw DomainError("recurrence data too short for triangle of size " + std::to_string(N));
  }
  return Triangle(run_triangle(jd.s, jd.t, N));
}

RatFunPoly poly_from_recurrence(const JacobiData& jd, std::size_t n) {
  if (n > 0 && (jd.s.size() < n || jd.t.size() + 1 < n)) {
    throw DomainError("recurrence data too short for p(" + std::to_string(n) + ")");
  }
  const RatFunPoly x = RatFunPoly::monomial(RatFun(1), 1, 'x');
  RatFunPoly prev(RatFun(), 'x');
  RatFunPoly cur(RatFun(1), 'x');
  for (std::size_t k = 1; k <= n; ++k) {
    RatFunPoly next = (x - RatFunPoly(jd.s[k - 1], 'x')) * cur;
    if (k >= 2) next -= jd.t[k - 2] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatFun det_product_formula(const JacobiData& jd, std::size_t n) {
  RatFun d(1);
  RatFun partial(1);  // prod_{j<i} t(j)
  for (std::size_t i = 1; i < n; ++i) {
    partial *= jd.t.at(i - 1);
    d *= partial;
  }
  return d;
}

RatFun shifted_det(const JacobiData& jd, std::size_t n, const RatFun& det0) {
  const RatFun p0 = poly_from_recurrence(jd, n)(RatFun());
  return n % 2 == 0 ? p0 * det0 : -(p0 * det0);
}

JacobiData aeration_collapse(const std::vector<RatFun>& T) {
  JacobiData jd;
  if (T.empty()) return jd;
  jd.depth = (T.size() - 1) / 2;
  for (std::size_t n = 0; n < jd.depth; ++n) {
    jd.s.push_back(n == 0 ? T[0] : T[2 * n - 1] + T[2 * n]);
    jd.t.push_back(T[2 * n] * T[2 * n + 1]);
  }
  return jd;
}

Lemma42Report lemma42_check(const TermList& moments, std::size_t n, const Polynomial& x0) {
  if (moments.size() < 2 * n + 1) throw DomainError("lemma check needs moments 0.." + std::to_string(2 * n));
  Lemma42Report rep;
  rep.n = n;
  rep.x0 = x0;
  TermList r;
  r.kind = TermKind::Polynomial;
  for (std::size_t i = 0; i < 2 * n; ++i) r.terms.push_back(moments[i] * x0 - moments[i + 1]);
  rep.lhs = RatFun(det_exact(hankel_matrix(r, n, 0)));
  const JacobiData jd = n == 0 ? JacobiData{} : fit_impl(moments, n, n - 1);
  const RatFun det0(det_exact(hankel_matrix(moments, n, 0)));
  rep.rhs = det0 * poly_from_recurrence(jd, n)(RatFun(x0));
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

std::string to_json(const JacobiData& jd) {
  nlohmann::json s = nlohmann::json::array();
  nlohmann::json t = nlohmann::json::array();
  for (const auto& v : jd.s) s.push_back(to_string(v));
  for (const auto& v : jd.t) t.push_back(to_string(v));
  nlohmann::ordered_json out;
  out["s"] = s;
  out["t"] = t;
  return out.dump();
}

std::string to_csv(const JacobiData& jd) {
  std::string out = "k,s,t\n";
  for (std::size_t k = 0; k < jd.s.size(); ++k) {
    out += std::to_string(k) + "," + csv_cell(to_string(jd.s[k])) + "," +
           (k < jd.t.size() ? csv_cell(to_string(jd.t[k])) : std::string()) + "\n";
  }
  return out;
}

}  // namespace hlab
