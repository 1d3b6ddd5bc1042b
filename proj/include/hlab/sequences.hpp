#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hlab/polynomial.hpp"
#include "hlab/power_series.hpp"

namespace hlab {

// ---------------------------------------------------------------------------
// Families

/// Catalan number binom(2n, n)/(n+1).
Rational catalan(long n);
/// binom(2n, n).
Rational central_binomial(long n);
/// Coefficient of z^n in C(z)^r, from r/(2n+r) * binom(2n+r, n).
Rational catalan_conv(long n, long r);
/// Coefficient of z^n in 1/(1 - r z C(z)).
Rational u_number(long n, long r);
/// Narayana polynomial sum_k binom(n,k) binom(n-1,k) t^k/(k+1); the 0-th one is 1.
Polynomial narayana(long n);
/// Type-B Narayana polynomial sum_k binom(n,k)^2 t^k.
Polynomial narayana_b(long n);
/// Coefficient of z^n in G^(m/2) (m even) or C(t,z) G^((m-1)/2) (m odd),
/// with G = (C(t,z) - 1)/z.
Polynomial conv_poly(long n, long m);

enum class FLKind { Fibonacci, Lucas };
/// F_n(x, s) or L_n(x, s) by the recurrence P_n = x P_{n-1} + s P_{n-2}.
Polynomial fl_poly(FLKind kind, long n, const Polynomial& x, const Polynomial& s);
Integer fibonacci(long n);
Integer lucas(long n);
/// f(0) = r, f(1) = 1, f(n) = f(n-1) + f(n-2).
Rational f_number(long n, long r);
/// [n]_q = 1 + q + ... + q^(n-1); n >= 1.
Polynomial q_integer(long n, const Polynomial& q);

/// C(z) = sum C_n z^n through `order`, as constant-polynomial coefficients.
PowerSeries catalan_series(std::size_t order);
/// C(t, z) from the functional equation C = 1 + zC - tzC + tzC^2, read as a
/// recurrence for the coefficients.
PowerSeries narayana_series(std::size_t order);

// ---------------------------------------------------------------------------
// Sequence specifications

enum class Family { Catalan, CentralBinomial, CatConv, U, Narayana, NarayanaB, ConvPoly, Fibonacci, Lucas, FNumber };

enum class TransformKind { Shift, DoubleSigned, Aerate, Abs, ConsecutiveSum, EvalAt, Scale };

struct Transform {
  TransformKind kind;
  long shift = 0;       // Shift
  Rational value = 0;   // EvalAt point or Scale factor

  friend bool operator==(const Transform&, const Transform&) = default;
};

/// family + integer parameter (r or m, when the family takes one) + transforms
/// applied left to right.
struct SequenceSpec {
  Family family = Family::Catalan;
  long param = 0;
  std::vector<Transform> transforms;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

enum class TermKind { Scalar, Polynomial };

/// Homogeneous list of terms starting at index 0. Scalars are stored as
/// constant polynomials.
struct TermList {
  TermKind kind = TermKind::Scalar;
  std::vector<Polynomial> terms;

  std::size_t size() const { return terms.size(); }
  const Polynomial& operator[](std::size_t i) const { return terms.at(i); }
};

TermKind base_kind(Family family);
/// Validates the transform chain and returns the kind of the final terms.
/// Throws DomainError for eval-at on scalars or abs on polynomials.
TermKind result_kind(const SequenceSpec& spec);

/// Untransformed family terms 0..count-1.
TermList family_terms(Family family, long param, std::size_t count);

/// Applies one transform to the longest output the input supports. When
/// `required` is given, the output is cut to that length and a shorter result
/// is a DomainError.
TermList apply_transform(const TermList& in, const Transform& tr, std::optional<std::size_t> required = {});

/// Terms 0..count-1 of the transformed sequence.
TermList generate(const SequenceSpec& spec, std::size_t count);
Polynomial term(const SequenceSpec& spec, long n);

/// Mini-language: family[:key=int]*("|"transform[:arg])*, e.g.
/// "catconv:r=3", "narayana|eval:t=-1", "u:r=2|double-signed".
SequenceSpec parse_spec(std::string_view text);
std::string to_string(const SequenceSpec& spec);

}  // namespace hlab
