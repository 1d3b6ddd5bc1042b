#include "hlab/sequences.hpp"

#include <algorithm>

namespace hlab {

namespace {

void require_index(long n) {
  if (n < 0) throw DomainError("negative sequence index " + std::to_string(n));
}

Polynomial scalar(const Rational& q) { return constant(q); }

}  // namespace

Rational catalan(long n) {
  require_index(n);
  return Rational(require_integral(make_rational(binomial(2 * n, n), n + 1), "Catalan number"));
}

Rational central_binomial(long n) {
  require_index(n);
  return Rational(binomial(2 * n, n));
}

Rational catalan_conv(long n, long r) {
  require_index(n);
  if (r < 1) throw DomainError("catalan_conv needs r >= 1");
  const Rational v = make_rational(Integer(r) * binomial(2 * n + r, n), 2 * n + r);
  return Rational(require_integral(v, "Catalan convolution coefficient"));
}

PowerSeries catalan_series(std::size_t order) {
  std::vector<Polynomial> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = scalar(catalan(static_cast<long>(n)));
  return PowerSeries(std::move(c), order);
}

namespace {

PowerSeries u_series(std::size_t order, long r) {
  // 1 - r z C(z)
  const PowerSeries zc = catalan_series(order).times_z(1);
  const PowerSeries one = PowerSeries::constant(constant(Rational(1)), order);
  return series_invert(one - scalar(Rational(r)) * zc);
}

PowerSeries conv_poly_series(std::size_t order, long m) {
  const PowerSeries c = narayana_series(order + 1);
  const PowerSeries g = (c - PowerSeries::constant(constant(Rational(1)), order + 1)).div_z(1);
  PowerSeries result = series_pow(g, static_cast<unsigned long>(m / 2));
  if (m % 2 == 1) result = c.truncated(order) * result;
  return result;
}

}  // namespace

Rational u_number(long n, long r) {
  require_index(n);
  if (r < 1) throw DomainError("u_number needs r >= 1");
  const Polynomial v = u_series(static_cast<std::size_t>(n), r)[static_cast<std::size_t>(n)];
  return Rational(require_integral(v.constant_term(), "U number"));
}

Polynomial narayana(long n) {
  require_index(n);
  if (n == 0) return constant(Rational(1));
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    const Rational v = make_rational(binomial(n, k) * binomial(n - 1, k), k + 1);
    c[static_cast<std::size_t>(k)] = Rational(require_integral(v, "Narayana coefficient"));
  }
  return Polynomial(std::move(c), 't');
}

Polynomial narayana_b(long n) {
  require_index(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    const Integer b = binomial(n, k);
    c[static_cast<std::size_t>(k)] = Rational(b * b);
  }
  return Polynomial(std::move(c), 't');
}

PowerSeries narayana_series(std::size_t order) {
  const Polynomial t = variable('t');
  const Polynomial one_minus_t = constant(Rational(1)) - t;
  std::vector<Polynomial> c(order + 1);
  c[0] = constant(Rational(1));
  for (std::size_t n = 1; n <= order; ++n) {
    Polynomial conv;
    for (std::size_t i = 0; i < n; ++i) conv += c[i] * c[n - 1 - i];
    c[n] = one_minus_t * c[n - 1] + t * conv;
  }
  return PowerSeries(std::move(c), order);
}

Polynomial conv_poly(long n, long m) {
  require_index(n);
  if (m < 1) throw DomainError("conv_poly needs m >= 1");
  return conv_poly_series(static_cast<std::size_t>(n), m)[static_cast<std::size_t>(n)];
}

Polynomial fl_poly(FLKind kind, long n, const Polynomial& x, const Polynomial& s) {
  require_index(n);
  Polynomial prev = kind == FLKind::Fibonacci ? constant(Rational(0), x.var()) : constant(Rational(2), x.var());
  Polynomial cur = kind == FLKind::Fibonacci ? constant(Rational(1), x.var()) : x;
  if (n == 0) return prev;
  for (long i = 1; i < n; ++i) {
    Polynomial next = x * cur + s * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer fibonacci(long n) {
  const Polynomial one = constant(Rational(1));
  return fl_poly(FLKind::Fibonacci, n, one, one).constant_term().get_num();
}

Integer lucas(long n) {
  const Polynomial one = constant(Rational(1));
  return fl_poly(FLKind::Lucas, n, one, one).constant_term().get_num();
}

Rational f_number(long n, long r) {
  require_index(n);
  Rational a(r);
  Rational b(1);
  if (n == 0) return a;
  for (long i = 1; i < n; ++i) {
    Rational c = a + b;
    a = b;
    b = c;
  }
  return b;
}

Polynomial q_integer(long n, const Polynomial& q) {
  if (n < 1) throw DomainError("q_integer needs n >= 1");
  Polynomial sum(q.var());
  Polynomial power = constant(Rational(1), q.var());
  for (long i = 0; i < n; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

// ---------------------------------------------------------------------------

TermKind base_kind(Family family) {
  switch (family) {
    case Family::Narayana:
    case Family::NarayanaB:
    case Family::ConvPoly:
      return TermKind::Polynomial;
    default:
      return TermKind::Scalar;
  }
}

TermKind result_kind(const SequenceSpec& spec) {
  TermKind kind = base_kind(spec.family);
  for (const Transform& tr : spec.transforms) {
    if (tr.kind == TransformKind::EvalAt) {
      if (kind != TermKind::Polynomial) throw DomainError("eval-at applied to an integer family");
      kind = TermKind::Scalar;
    } else if (tr.kind == TransformKind::Abs && kind != TermKind::Scalar) {
      throw DomainError("abs applied to polynomial terms");
    } else if (tr.kind == TransformKind::Shift && tr.shift < 0) {
      throw DomainError("negative shift");
    }
  }
  return kind;
}

TermList family_terms(Family family, long param, std::size_t count) {
  TermList out;
  out.kind = base_kind(family);
  out.terms.reserve(count);
  if (count == 0) return out;
  const std::size_t order = count - 1;
  switch (family) {
    case Family::U: {
      if (param < 1) throw DomainError("u needs r >= 1");
      const PowerSeries s = u_series(order, param);
      for (std::size_t n = 0; n < count; ++n) {
        require_integral(s[n].constant_term(), "U number");
        out.terms.push_back(s[n]);
      }
      return out;
    }
    case Family::ConvPoly: {
      if (param < 1) throw DomainError("convpoly needs m >= 1");
      const PowerSeries s = conv_poly_series(order, param);
      out.terms.assign(s.coeffs().begin(), s.coeffs().end());
      return out;
    }
    default:
      break;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const long n = static_cast<long>(i);
    switch (family) {
      case Family::Catalan: out.terms.push_back(scalar(catalan(n))); break;
      case Family::CentralBinomial: out.terms.push_back(scalar(central_binomial(n))); break;
      case Family::CatConv: out.terms.push_back(scalar(catalan_conv(n, param))); break;
      case Family::Narayana: out.terms.push_back(narayana(n)); break;
      case Family::NarayanaB: out.terms.push_back(narayana_b(n)); break;
      case Family::Fibonacci: out.terms.push_back(scalar(Rational(fibonacci(n)))); break;
      case Family::Lucas: out.terms.push_back(scalar(Rational(lucas(n)))); break;
      case Family::FNumber: out.terms.push_back(scalar(f_number(n, param))); break;
      default: throw InternalError("unhandled family");
    }
  }
  return out;
}

TermList apply_transform(const TermList& in, const Transform& tr, std::optional<std::size_t> required) {
  TermList out;
  out.kind = in.kind;
  const auto& a = in.terms;
  switch (tr.kind) {
    case TransformKind::Shift:
      if (tr.shift < 0) throw DomainError("negative shift");
      if (static_cast<std::size_t>(tr.shift) < a.size()) out.terms.assign(a.begin() + tr.shift, a.end());
      break;
    case TransformKind::DoubleSigned:
      // (a0, -a1, -a1, a2, a2, -a3, -a3, ...): index i takes a_{ceil(i/2)} with sign (-1)^{ceil(i/2)}.
      for (std::size_t i = 0; a.size() > 0 && i < 2 * a.size() - 1; ++i) {
        const std::size_t k = (i + 1) / 2;
        out.terms.push_back(k % 2 == 0 ? a[k] : -a[k]);
      }
      break;
    case TransformKind::Aerate:
      for (const auto& x : a) {
        out.terms.push_back(x);
        out.terms.push_back(Polynomial(x.var()));
      }
      break;
    case TransformKind::Abs:
      if (in.kind != TermKind::Scalar) throw DomainError("abs applied to polynomial terms");
      for (const auto& x : a) out.terms.push_back(sgn(x.constant_term()) < 0 ? -x : x);
      break;
    case TransformKind::ConsecutiveSum:
      for (std::size_t i = 0; i + 1 < a.size(); ++i) out.terms.push_back(a[i] + a[i + 1]);
      break;
    case TransformKind::EvalAt:
      if (in.kind != TermKind::Polynomial) throw DomainError("eval-at applied to an integer family");
      out.kind = TermKind::Scalar;
      for (const auto& x : a) out.terms.push_back(scalar(x(tr.value)));
      break;
    case TransformKind::Scale:
      for (const auto& x : a) out.terms.push_back(tr.value * x);
      break;
  }
  if (required) {
    if (out.terms.size() < *required) {
      throw DomainError("transform needs more input terms: produced " + std::to_string(out.terms.size()) +
                        ", required " + std::to_string(*required));
    }
    out.terms.resize(*required);
  }
  return out;
}

namespace {

// Input length a transform needs to produce `len` output terms.
std::size_t input_length(const Transform& tr, std::size_t len) {
  if (len == 0) return 0;
  switch (tr.kind) {
    case TransformKind::Shift: return len + static_cast<std::size_t>(tr.shift);
    case TransformKind::DoubleSigned: return len / 2 + 1;
    case TransformKind::Aerate: return (len + 1) / 2;
    case TransformKind::ConsecutiveSum: return len + 1;
    default: return len;
  }
}

}  // namespace

TermList generate(const SequenceSpec& spec, std::size_t count) {
  result_kind(spec);
  std::vector<std::size_t> lengths(spec.transforms.size() + 1);
  lengths.back() = count;
  for (std::size_t i = spec.transforms.size(); i-- > 0;) {
    lengths[i] = input_length(spec.transforms[i], lengths[i + 1]);
  }
  TermList terms = family_terms(spec.family, spec.param, lengths[0]);
  for (std::size_t i = 0; i < spec.transforms.size(); ++i) {
    terms = apply_transform(terms, spec.transforms[i], lengths[i + 1]);
  }
  return terms;
}

Polynomial term(const SequenceSpec& spec, long n) {
  require_index(n);
  return generate(spec, static_cast<std::size_t>(n) + 1)[static_cast<std::size_t>(n)];
}

}  // namespace hlab
