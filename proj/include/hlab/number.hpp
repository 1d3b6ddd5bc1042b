#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hlab {

/// Arbitrary precision integer; GMP keeps it canonical.
using Integer = mpz_class;
/// Arbitrary precision fraction with positive denominator and gcd(num, den) = 1.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

/// num/den in canonical form. Throws DomainError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// binom(n, k); 0 whenever k < 0 or k > n (so also for every n < 0).
Integer binomial(long n, long k);

bool is_integral(const Rational& q);

/// Asserts integrality; `what` names the value in the error message.
Integer require_integral(const Rational& q, std::string_view what);

/// (-1)^e for any integer e.
inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

Rational power(const Rational& base, long exponent);

/// "3", "-2/45".
std::string to_string(const Rational& q);

/// Accepts an optional sign, digits and an optional "/digits".
Rational parse_rational(std::string_view text);

}  // namespace hlab
