#include "hlab/ratfun.hpp"

#include <cctype>

namespace hlab {

RatFun RatFun::normalize(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  const char v = Polynomial::merged_var(num, den);
  if (num.is_zero()) return RatFun(Polynomial(v), Polynomial(Rational(1), v), true);
  Polynomial n = num;
  Polynomial d = den;
  if (d.degree() > 0) {
    Polynomial g = gcd(n, d);
    if (g.degree() > 0) {
      n = exact_div(n, g);
      d = exact_div(d, g);
    }
  }
  const Rational lead = d.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    n = inv * n;
    d = inv * d;
  }
  return RatFun(n.renamed(v), d.renamed(v), true);
}

Polynomial RatFun::as_polynomial() const {
  if (!is_polynomial()) throw DomainError("rational function " + to_string(*this) + " is not a polynomial");
  return num_;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, true); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    return RatFun(a.num_ + b.num_, Polynomial(Rational(1), Polynomial::merged_var(a.num_, b.num_)), true);
  }
  if (a.den_ == b.den_) return RatFun::normalize(a.num_ + b.num_, a.den_);
  return RatFun::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.is_polynomial() && b.is_polynomial()) {
    Polynomial n = a.num_ * b.num_;
    const char v = n.var();
    return RatFun(std::move(n), Polynomial(Rational(1), v), true);
  }
  return RatFun::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DomainError("rational function division by zero");
  return RatFun::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFun::evaluate(const Rational& x) const {
  const Rational d = den_(x);
  if (hlab::is_zero(d)) throw DomainError("rational function evaluated at a pole");
  return num_(x) / d;
}

namespace {

std::string wrap(const Polynomial& p) {
  std::size_t terms = 0;
  for (const auto& c : p.coeffs()) terms += hlab::is_zero(c) ? 0 : 1;
  const std::string s = to_string(p);
  return terms > 1 ? "(" + s + ")" : s;
}

// Splits at the rational-function slash: a '/' not flanked by digits on both sides.
std::size_t find_separator(std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch != '/' || depth != 0) continue;
    const bool digit_before = i > 0 && std::isdigit(static_cast<unsigned char>(text[i - 1]));
    const bool digit_after = i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]));
    if (!(digit_before && digit_after)) return i;
  }
  return std::string_view::npos;
}

Polynomial parse_side(std::string_view text, std::size_t offset, char default_var) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view inner = text.substr(b, e - b);
  if (!inner.empty() && inner.front() == '(') {
    if (inner.back() != ')') throw ParseError("unbalanced parenthesis", offset + e);
    inner = inner.substr(1, inner.size() - 2);
  }
  try {
    return parse_polynomial(inner, default_var);
  } catch (const ParseError& err) {
    throw ParseError(std::string("in rational function: ") + err.what(), offset + b + err.position());
  }
}

}  // namespace

std::string to_string(const RatFun& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return wrap(r.num()) + " / " + wrap(r.den());
}

RatFun parse_ratfun(std::string_view text, char default_var) {
  const std::size_t slash = find_separator(text);
  if (slash == std::string_view::npos) return RatFun(parse_side(text, 0, default_var));
  Polynomial num = parse_side(text.substr(0, slash), 0, default_var);
  Polynomial den = parse_side(text.substr(slash + 1), slash + 1, num.degree() > 0 ? num.var() : default_var);
  return RatFun::normalize(num, den);
}

std::string to_string(const RatFunPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const RatFun& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = to_string(c);
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += "(" + cs + ")*";
    out += p.var();
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace hlab
