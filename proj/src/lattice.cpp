#include "hlab/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace hlab {

Polynomial weighted_triangle_entry(long n, long j) {
  if (n < 0 || j < 0) throw DomainError("weighted_triangle_entry needs n, j >= 0");
  const Polynomial t = variable('t');
  std::vector<Polynomial> row(static_cast<std::size_t>(n) + 2, Polynomial('t'));
  row[0] = constant(Rational(1));
  for (long step = 0; step < n; ++step) {
    std::vector<Polynomial> next(row.size(), Polynomial('t'));
    for (std::size_t h = 0; h + 1 < row.size(); ++h) {
      if (row[h].is_zero()) continue;
      next[h + 1] += row[h];
      if (h > 0) next[h - 1] += (h - 1) % 2 == 1 ? t * row[h] : row[h];
    }
    row = std::move(next);
  }
  return static_cast<std::size_t>(j) < row.size() ? row[static_cast<std::size_t>(j)] : Polynomial('t');
}

namespace {

struct Path {
  long x0;
  std::vector<long> heights;  // heights[i] at x = x0 + i
  long eo;
};

void extend(long x, long x_end, long h, long h_end, Path& cur, std::vector<Path>& out) {
  const long remaining = x_end - x;
  if (std::abs(h - h_end) > remaining) return;
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  cur.heights.push_back(h + 1);
  extend(x + 1, x_end, h + 1, h_end, cur, out);
  cur.heights.pop_back();
  if (h > 0) {
    const long down_eo = (h % 2 == 0) ? 1 : 0;
    cur.heights.push_back(h - 1);
    cur.eo += down_eo;
    extend(x + 1, x_end, h - 1, h_end, cur, out);
    cur.eo -= down_eo;
    cur.heights.pop_back();
  }
}

std::vector<Path> paths_between(long x_start, long x_end, long h_end) {
  std::vector<Path> out;
  Path cur{x_start, {0}, 0};
  extend(x_start, x_end, 0, h_end, cur, out);
  return out;
}

bool intersect(const Path& a, const Path& b) {
  const long lo = std::max(a.x0, b.x0);
  const long hi = std::min(a.x0 + static_cast<long>(a.heights.size()), b.x0 + static_cast<long>(b.heights.size()));
  for (long x = lo; x < hi; ++x) {
    if (a.heights[static_cast<std::size_t>(x - a.x0)] == b.heights[static_cast<std::size_t>(x - b.x0)]) return true;
  }
  return false;
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

void families(const std::vector<const std::vector<Path>*>& choices, std::size_t i, std::vector<const Path*>& picked,
              long eo, std::map<long, long>& eo_counts) {
  if (i == choices.size()) {
    ++eo_counts[eo];
    return;
  }
  for (const Path& p : *choices[i]) {
    bool ok = true;
    for (const Path* q : picked) {
      if (intersect(p, *q)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    picked.push_back(&p);
    families(choices, i + 1, picked, eo + p.eo, eo_counts);
    picked.pop_back();
  }
}

}  // namespace

Polynomial lgv_bruteforce(std::size_t n) {
  if (n > kLgvMaxN) {
    throw DomainError("lgv_bruteforce is limited to n <= " + std::to_string(kLgvMaxN));
  }
  std::vector<std::vector<std::vector<Path>>> table(n, std::vector<std::vector<Path>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = paths_between(-2 * static_cast<long>(i), 2 * static_cast<long>(j) + 2, 2);
    }
  }
  Polynomial total('t');
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<const std::vector<Path>*> choices;
    for (std::size_t i = 0; i < n; ++i) choices.push_back(&table[i][sigma[i]]);
    std::map<long, long> eo_counts;
    std::vector<const Path*> picked;
    families(choices, 0, picked, 0, eo_counts);
    const int sign = permutation_sign(sigma);
    for (const auto& [eo, count] : eo_counts) {
      total += Polynomial::monomial(Rational(sign * count), static_cast<std::size_t>(eo), 't');
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return n == 0 ? constant(Rational(1)) : total;
}

DualSum dual_sum(long n, long k) {
  if (k < 0 || n < 1 || k > n - 1) throw DomainError("dual_sum needs 0 <= k <= n-1");
  std::vector<Rational> by_s(static_cast<std::size_t>(n + k), Rational(0));
  long max_s = 0;
  for (long s = 0; s <= n + k - 1; ++s) {
    const Integer comp = k == 0 ? Integer(s == 0 ? 1 : 0) : binomial(s - 1, k - 1);
    const Integer c = comp * binomial(n + k - 1 - s, k);
    if (sgn(c) != 0) {
      by_s[static_cast<std::size_t>(s)] = Rational(c);
      max_s = s;
    }
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(max_s) + 1);
  for (long s = 0; s <= max_s; ++s) coeffs[static_cast<std::size_t>(max_s - s)] = by_s[static_cast<std::size_t>(s)];
  return {max_s, Polynomial(std::move(coeffs), 't')};
}

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

Polynomial shift_down(const Polynomial& p, long by) {
  if (by < 0) return p.shifted(static_cast<std::size_t>(-by));
  for (long i = 0; i < by && i <= p.degree(); ++i) {
    if (!is_zero(p.coeff(static_cast<std::size_t>(i)))) throw InternalError("negative power of t in dual-path sum");
  }
  if (p.degree() < by) return Polynomial('t');
  std::vector<Rational> c(p.coeffs().begin() + by, p.coeffs().end());
  return Polynomial(std::move(c), 't');
}

}  // namespace

Polynomial dual_path_total(long n) {
  if (n < 1) throw DomainError("dual_path_total needs n >= 1");
  Polynomial sum('t');
  for (long k = 0; k <= n - 1; ++k) {
    const DualSum d = dual_sum(n, k);
    const Polynomial term = d.poly.shifted(static_cast<std::size_t>(choose2(n)));
    sum += k % 2 == 0 ? shift_down(term, d.shift) : -shift_down(term, d.shift);
  }
  return sum;
}

Polynomial dual_path_closed_form(long n) {
  if (n < 1) throw DomainError("dual_path_closed_form needs n >= 1");
  Polynomial sum('t');
  for (long s = 0; s <= n / 2; ++s) {
    sum += Polynomial::monomial(Rational(neg_one_pow(s) * binomial(n - s, s)), static_cast<std::size_t>(choose2(n) - s), 't');
  }
  return sum;
}

}  // namespace hlab
