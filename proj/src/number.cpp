#include "hlab/number.hpp"

#include <cctype>

#include "hlab/errors.hpp"

namespace hlab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer require_integral(const Rational& q, std::string_view what) {
  if (!is_integral(q)) {
    throw InternalError(std::string(what) + " is not an integer: " + to_string(q));
  }
  return q.get_num();
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw DomainError("zero raised to a negative power");
    return power(Rational(1) / base, -exponent);
  }
  Integer num, den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == from) throw ParseError("expected digits in rational '" + std::string(text) + "'", from);
    return j;
  };
  std::size_t end = digits(i);
  Integer num(std::string(text.substr(i, end - i)));
  Integer den = 1;
  if (end < text.size()) {
    if (text[end] != '/') {
      throw ParseError("unexpected character in rational '" + std::string(text) + "'", end);
    }
    std::size_t den_end = digits(end + 1);
    if (den_end != text.size()) {
      throw ParseError("trailing characters in rational '" + std::string(text) + "'", den_end);
    }
    den = Integer(std::string(text.substr(end + 1, den_end - end - 1)));
  }
  if (negative) num = -num;
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", end + 1);
  return make_rational(num, den);
}

}  // namespace hlab
