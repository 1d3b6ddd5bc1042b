#include "hlab/registry.hpp"

#include <algorithm>

namespace hlab {

namespace {

const Polynomial kT = variable('t');

Polynomial scalar(const Rational& q) { return constant(q); }

long choose2(long n) { return n * (n - 1) / 2; }
Rational sign(long e) { return Rational(neg_one_pow(e)); }
Rational pow_int(long base, long e) { return power(Rational(base), e); }

Rational F(long n) { return Rational(fibonacci(n)); }
Rational L(long n) { return Rational(lucas(n)); }
Rational f(long n, long r) { return f_number(n, r); }

// Polynomial t^e.
Polynomial tpow(long e) {
  if (e < 0) throw InternalError("negative power of t in a closed form");
  return Polynomial::monomial(Rational(1), static_cast<std::size_t>(e), 't');
}

// [n]_{t^k}
Polynomial qint_tk(long n, long k) { return q_integer(n, tpow(k)); }

long need(const Params& p, const char* key) {
  const auto it = p.find(key);
  if (it == p.end()) throw DomainError(std::string("missing parameter ") + key);
  return it->second;
}

void require_n(long n) {
  if (n < 0) throw DomainError("determinant order must be >= 0");
}

// -- theorems -----------------------------------------------------------------

Rational thm23_d0(long n) {
  const long m = n / 4;
  switch (n % 4) {
    case 0: return F(2 * m + 1) * F(2 * m + 2);
    case 1: return F(2 * m + 2) * F(2 * m + 2);
    case 2: return -F(2 * m + 2) * F(2 * m + 2);
    default: return F(2 * m + 2) * F(2 * m + 3);
  }
}

Rational thm23_d1(long n) {
  if (n % 2 == 1) return 0;
  const long m = n / 4;
  const Rational sq = F(2 * m + 2) * F(2 * m + 2);
  return n % 4 == 0 ? sq : Rational(-sq);
}

Rational thm24_D0(long n) {
  const long m = n / 4;
  switch (n % 4) {
    case 0: return pow_int(2, 4 * m - 1) * L(2 * m) * L(2 * m + 1);
    case 1: return pow_int(2, 4 * m) * L(2 * m + 1) * L(2 * m + 1);
    case 2: return -pow_int(2, 4 * m + 1) * L(2 * m + 1) * L(2 * m + 1);
    default: return pow_int(2, 4 * m + 2) * L(2 * m + 1) * L(2 * m + 2);
  }
}

Rational thm24_D1(long n) {
  if (n % 2 == 1) return 0;
  const long m = n / 4;
  const Rational sq = L(2 * m + 1) * L(2 * m + 1);
  return n % 4 == 0 ? Rational(pow_int(2, 4 * m) * sq) : Rational(-pow_int(2, 4 * m + 2) * sq);
}

Rational eq36(long n, long r) { return sign(choose2(n)) * pow_int(r, n - 1) * f(n, r); }

Rational eq37(long n, long r) { return sign(choose2(n + 1)) * pow_int(r, n) * f(2 * (n / 2) + 1, r); }

Rational eq310(long n, long r) {
  const long m = n / 4;
  switch (n % 4) {
    case 0: return pow_int(r, 4 * m - 1) * f(2 * m, r) * f(2 * m + 1, r);
    case 1: return pow_int(r, 4 * m) * f(2 * m + 1, r) * f(2 * m + 1, r);
    case 2: return -pow_int(r, 4 * m + 1) * f(2 * m + 1, r) * f(2 * m + 1, r);
    default: return pow_int(r, 4 * m + 2) * f(2 * m + 1, r) * f(2 * m + 2, r);
  }
}

Rational eq312(long n, long r) {
  if (n % 2 == 1) return 0;
  const long m = n / 4;
  const Rational sq = f(2 * m + 1, r) * f(2 * m + 1, r);
  return n % 4 == 0 ? Rational(pow_int(r, 4 * m) * sq) : Rational(-pow_int(r, 4 * m + 2) * sq);
}

Polynomial thm41(long n) {
  const Polynomial x = constant(Rational(-2)) - kT;
  const Polynomial s = -kT;
  const Polynomial v = tpow(choose2(n)) * fl_poly(FLKind::Fibonacci, n + 1, x, s);
  return n % 2 == 0 ? v : -v;
}

Rational cor43(long n) {
  return fl_poly(FLKind::Fibonacci, n + 1, constant(Rational(1)), constant(Rational(-1))).constant_term();
}

Rational eq410(long n) {
  return pow_int(2, n - 1) * fl_poly(FLKind::Lucas, n, constant(Rational(1)), constant(Rational(-1))).constant_term();
}

Rational thm51(long n) { return n % 3 == 2 ? Rational(0) : sign(n / 3); }

Polynomial thm52(long n) {
  Polynomial sum('t');
  for (long k = 0; k <= n / 2; ++k) sum += Rational(neg_one_pow(k) * binomial(n - k, k)) * tpow(choose2(n) - k);
  return sum;
}

Rational eq122(long n, long r) { return n == 0 ? Rational(1) : pow_int(r, n - 1); }

Rational eq123(long n, long r) { return n % 2 == 1 ? Rational(0) : Rational(sign(n / 2) * pow_int(r, n)); }

Rational thm73(long n) { return sign(n / 2) * Rational(n / 2 + 1); }

Polynomial thm74(long n) {
  const long m = n / 2;
  const Polynomial q = qint_tk(m + 1, 2);
  const Polynomial v = tpow(n % 2 == 0 ? 2 * (m * m - m) : 2 * m * m) * q;
  return m % 2 == 0 ? v : -v;
}

Rational dn5(long n) {
  const long m = n / 5;
  switch (n % 5) {
    case 0:
    case 1: return 1;
    case 2: return Rational(-5 * (m + 1));
    case 3: return 0;
    default: return Rational(5 * (m + 1));
  }
}

Rational dn6(long n) {
  const long m = n / 3;
  if (n % 3 != 2) return sign(m) * Rational((m + 1) * (m + 1));
  long squares = 0;
  for (long j = 0; j <= m + 1; ++j) squares += j * j;
  return Rational(9) * sign(m + 1) * Rational(squares);
}

Rational dn7(long n) {
  const long m = n / 7;
  const Rational s = sign(m);
  const Rational sq(49 * (m + 1) * (m + 1));
  switch (n % 7) {
    case 0:
    case 1: return s;
    case 2: return s * (make_rational(343 * m * (m + 1) * (2 * m + 1), 6) - Rational(14 * (m + 1)));
    case 3: return -s * sq;
    case 4: return 0;
    case 5: return s * sq;
    default: return s * (make_rational(343 * (m + 1) * (m + 2) * (2 * m + 3), 6) - Rational(14 * (m + 1)));
  }
}

Rational dn8(long n) {
  const long m = n / 4;
  switch (n % 4) {
    case 0:
    case 1: return Rational((m + 1) * (m + 1) * (m + 1));
    case 2:
      return make_rational(2, 45) * Rational((m + 1) * (m + 1) * (m + 2) * (2 * m + 3)) *
             Rational(64 * m * m + 32 * m - 75);
    default:
      return make_rational(-2, 45) * Rational((m + 1) * (m + 2) * (m + 2) * (2 * m + 3)) *
             Rational(64 * m * m + 352 * m + 405);
  }
}

// D(n, 6, t) pattern.
Polynomial conj76(long n) {
  const long m = n / 3;
  const Polynomial q = qint_tk(m + 1, 3);
  switch (n % 3) {
    case 0: return sign(m) * (tpow(9 * choose2(m)) * q * q);
    case 1: return sign(m) * (tpow(3 * m * (3 * m - 1) / 2) * q * q);
    default: {
      Polynomial rn('t');
      for (long j = 0; j <= 2 * m; ++j) {
        const long jj = j <= m ? j : 2 * m - j;
        rn += Rational(binomial(jj + 2, 2)) * tpow(3 * j);
      }
      return Rational(3) * sign(m + 1) * (tpow(3 * m * (3 * m + 1) / 2) * q_integer(3, kT) * rn);
    }
  }
}

std::string det_label(long index) { return "D(" + std::to_string(index) + ")"; }

Claim single(long n, long index, Polynomial expected, const std::string& prefix = "") {
  return {prefix + det_label(index), n, {{1, index}}, std::move(expected)};
}

Claim pair_sum(long n, long i, long j, Polynomial expected, const std::string& prefix) {
  return {prefix + det_label(i) + " + " + det_label(j), n, {{1, i}, {1, j}}, std::move(expected)};
}

using IndexForm = Polynomial (*)(long, const Params&);

struct IdInfo {
  RegistryEntry entry;
  std::string spec;  // R / K stand for the parameter, KK for 2k, KK1 for 2k+1
  IndexForm form;    // null for conjectures with multi-line claims
};

Polynomial wrap(const Rational& q) { return scalar(q); }

const std::vector<IdInfo>& table() {
  using C = Category;
  static const std::vector<IdInfo> t = {
      {{"thm2.1-d0", C::Theorem, 0, 10}, "catalan|double-signed",
       [](long n, const Params&) { return wrap(sign(choose2(n)) * F(n + 1)); }},
      {{"thm2.1-d1", C::Theorem, 1, 10}, "catalan|double-signed",
       [](long n, const Params&) { return wrap(sign(choose2(n + 1)) * F(2 * ((n + 2) / 2))); }},
      {{"thm2.2-D0", C::Theorem, 0, 10}, "central-binomial|double-signed",
       [](long n, const Params&) { return wrap(sign(choose2(n)) * pow_int(2, n - 1) * L(n)); }},
      {{"thm2.2-D1", C::Theorem, 1, 10}, "central-binomial|double-signed",
       [](long n, const Params&) { return wrap(sign(choose2(n + 1)) * pow_int(2, n) * L(2 * (n / 2) + 1)); }},
      {{"thm2.3-d0", C::Theorem, 0, 12}, "catalan|double-signed|aerate",
       [](long n, const Params&) { return wrap(thm23_d0(n)); }},
      {{"thm2.3-d1", C::Theorem, 1, 12}, "catalan|double-signed|aerate",
       [](long n, const Params&) { return wrap(thm23_d1(n)); }},
      {{"thm2.4-D0", C::Theorem, 0, 12}, "central-binomial|double-signed|aerate",
       [](long n, const Params&) { return wrap(thm24_D0(n)); }},
      {{"thm2.4-D1", C::Theorem, 1, 12}, "central-binomial|double-signed|aerate",
       [](long n, const Params&) { return wrap(thm24_D1(n)); }},
      {{"eq3.6", C::Theorem, 0, 10, "r", 2, 1, 3}, "u:r=R|double-signed",
       [](long n, const Params& p) { return wrap(eq36(n, need(p, "r"))); }},
      {{"eq3.7", C::Theorem, 1, 10, "r", 2, 1, 3}, "u:r=R|double-signed",
       [](long n, const Params& p) { return wrap(eq37(n, need(p, "r"))); }},
      {{"eq3.10", C::Theorem, 0, 9, "r", 2, 1, 2}, "u:r=R|double-signed|aerate",
       [](long n, const Params& p) { return wrap(eq310(n, need(p, "r"))); }},
      {{"eq3.12", C::Theorem, 1, 9, "r", 2, 1, 2}, "u:r=R|double-signed|aerate",
       [](long n, const Params& p) { return wrap(eq312(n, need(p, "r"))); }},
      {{"thm4.1", C::Theorem, 0, 6}, "narayana|shift:1|consecutive-sum",
       [](long n, const Params&) { return thm41(n); }},
      {{"cor4.3", C::Theorem, 0, 11}, "catalan|double-signed|abs",
       [](long n, const Params&) { return wrap(cor43(n)); }},
      {{"eq4.10", C::Theorem, 0, 10}, "central-binomial|double-signed|abs",
       [](long n, const Params&) { return wrap(eq410(n)); }},
      {{"thm5.1", C::Theorem, 0, 12}, "catconv:r=3", [](long n, const Params&) { return wrap(thm51(n)); }},
      {{"thm5.2", C::Theorem, 0, 8}, "convpoly:m=3", [](long n, const Params&) { return thm52(n); }},
      {{"eq1.22", C::Theorem, 0, 8, "r", 2, 1, 3}, "u:r=R|aerate",
       [](long n, const Params& p) { return wrap(eq122(n, need(p, "r"))); }},
      {{"eq1.23", C::Theorem, 1, 8, "r", 2, 1, 3}, "u:r=R|aerate",
       [](long n, const Params& p) { return wrap(eq123(n, need(p, "r"))); }},
      {{"u-d0", C::Theorem, 0, 10, "r", 2, 1, 3}, "u:r=R",
       [](long n, const Params& p) { return wrap(eq122(n, need(p, "r"))); }},
      {{"u-d1", C::Theorem, 1, 10, "r", 2, 1, 3}, "u:r=R",
       [](long n, const Params& p) { return wrap(pow_int(need(p, "r"), n)); }},
      {{"thm7.3", C::Theorem, 0, 10}, "catconv:r=4", [](long n, const Params&) { return wrap(thm73(n)); }},
      {{"thm7.4", C::Theorem, 0, 9}, "convpoly:m=4", [](long n, const Params&) { return thm74(n); }},
      {{"d-n-5", C::Observed, 0, 14}, "catconv:r=5", [](long n, const Params&) { return wrap(dn5(n)); }},
      {{"d-n-6", C::Observed, 0, 11}, "catconv:r=6", [](long n, const Params&) { return wrap(dn6(n)); }},
      {{"d-n-7", C::Observed, 0, 13}, "catconv:r=7", [](long n, const Params&) { return wrap(dn7(n)); }},
      {{"d-n-8", C::Observed, 0, 11}, "catconv:r=8", [](long n, const Params&) { return wrap(dn8(n)); }},
      {{"conj7.2", C::Conjecture, 0, 1, "k", 2, 1, 3}, "catconv:r=KK1", nullptr},
      {{"conj7.5", C::Conjecture, 0, 2, "k", 2, 1, 4}, "catconv:r=KK", nullptr},
      {{"conj7.6", C::Conjecture, 0, 8}, "convpoly:m=6", [](long n, const Params&) { return conj76(n); }},
      {{"conj7.7", C::Conjecture, 0, 2, "k", 2, 1, 3}, "convpoly:m=KK", nullptr},
  };
  return t;
}

const IdInfo& info(const std::string& id) {
  for (const auto& i : table()) {
    if (i.entry.id == id) return i;
  }
  throw DomainError("unknown closed-form id '" + id + "'");
}

std::vector<Claim> conj72(long k, long n_max) {
  const long P = 2 * k + 1;
  std::vector<Claim> out;
  for (long n = 0; n <= n_max; ++n) {
    const Rational s1 = sign(k * n);
    const Rational big = power(Rational(P * (n + 1)), k - 1);
    out.push_back(single(n, P * n, scalar(s1), "line 1: "));
    out.push_back(single(n, P * n + 1, scalar(s1), "line 1: "));
    out.push_back(single(n, P * n + k + 1, scalar(Rational(0)), "line 2: "));
    out.push_back(single(n, P * n + k, scalar(sign(n * k + choose2(k)) * big), "line 3: "));
    out.push_back(single(n, P * n + k + 2, scalar(sign(n * k + choose2(k) + 1) * big), "line 4: "));
    out.push_back(pair_sum(n, P * n - 1, P * n + 2, scalar(sign(k * n + 1) * Rational((k - 1) * P)), "line 5: "));
  }
  return out;
}

// The sign of the first line is (-1)^(n binom(k,2)); see the registry notes in
// the README.
std::vector<Claim> conj75(long k, long n_max) {
  std::vector<Claim> out;
  for (long n = 0; n <= n_max; ++n) {
    const Polynomial v = scalar(sign(n * choose2(k)) * power(Rational(n + 1), k - 1));
    out.push_back(single(n, k * n, v, "line 1: "));
    out.push_back(single(n, k * n + 1, v, "line 1: "));
    const Rational rhs = Rational(-k * (2 * k - 3)) * power(Rational(2 * n + 1), k - 1);
    out.push_back(pair_sum(n, 2 * k * n - 1, 2 * k * n + 2, scalar(rhs), "line 2: "));
  }
  return out;
}

std::vector<Claim> conj77(long k, long n_max) {
  std::vector<Claim> out;
  for (long n = 0; n <= n_max; ++n) {
    const Polynomial q = qint_tk(n + 1, k).pow(static_cast<unsigned long>(k - 1));
    const Rational s = sign(n * choose2(k));
    out.push_back(single(n, k * n, s * (tpow(k * k * choose2(n)) * q), "line 1: "));
    out.push_back(single(n, k * n + 1, s * (tpow(k * k * choose2(n) + k * n) * q), "line 2: "));
  }
  return out;
}

std::string substitute(std::string spec, long value) {
  auto replace = [&spec](const std::string& from, const std::string& to) {
    const auto pos = spec.find(from);
    if (pos != std::string::npos) spec.replace(pos, from.size(), to);
  };
  replace("KK1", std::to_string(2 * value + 1));
  replace("KK", std::to_string(2 * value));
  replace("R", std::to_string(value));
  return spec;
}

}  // namespace

std::string to_string(Category c) {
  switch (c) {
    case Category::Theorem: return "THEOREM";
    case Category::Observed: return "OBSERVED";
    default: return "CONJECTURE";
  }
}

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> out;
    for (const auto& i : table()) out.push_back(i.entry);
    return out;
  }();
  return entries;
}

const RegistryEntry& registry_entry(const std::string& id) { return info(id).entry; }

Params resolve_params(const RegistryEntry& e, const Params& given) {
  Params out;
  for (const auto& [key, value] : given) {
    if (key != e.param) throw DomainError("id '" + e.id + "' takes no parameter '" + key + "'");
    out[key] = value;
  }
  if (!e.param.empty()) {
    out.try_emplace(e.param, e.default_param);
    if (out[e.param] < 1) throw DomainError("parameter " + e.param + " must be >= 1");
  }
  return out;
}

SequenceSpec spec_for(const std::string& id, const Params& params) {
  const IdInfo& i = info(id);
  const Params p = resolve_params(i.entry, params);
  return parse_spec(i.entry.param.empty() ? i.spec : substitute(i.spec, p.at(i.entry.param)));
}

std::vector<Claim> claims(const std::string& id, std::size_t n_max, const Params& params) {
  const IdInfo& i = info(id);
  const Params p = resolve_params(i.entry, params);
  const long nm = static_cast<long>(n_max);
  if (i.form != nullptr) {
    std::vector<Claim> out;
    for (long n = 0; n <= nm; ++n) out.push_back(single(n, n, i.form(n, p)));
    return out;
  }
  const long k = p.at("k");
  if (id == "conj7.2") return conj72(k, nm);
  if (id == "conj7.5") return conj75(k, nm);
  return conj77(k, nm);
}

Polynomial closed_form(const std::string& id, long n, const Params& params) {
  require_n(n);
  const IdInfo& i = info(id);
  const Params p = resolve_params(i.entry, params);
  if (i.form != nullptr) return i.form(n, p);
  for (const Claim& c : claims(id, static_cast<std::size_t>(n) + 1, p)) {
    if (c.terms.size() == 1 && c.terms[0].second == n) return c.expected;
  }
  throw DomainError("'" + id + "' has no formula for order " + std::to_string(n));
}

// -----------------------------------------------------------------------------

std::pair<Rational, Rational> r_identity(long k, long n) {
  if (k < 1 || n < 0) throw DomainError("r_identity needs k >= 1, n >= 0");
  Rational lhs = 0;
  for (long j = 0; j <= k; ++j) {
    const Integer c = binomial(k + j, 2 * j + 1) + binomial(k + j + 1, 2 * j + 1);
    lhs += sign(k - j) * Rational(c) * catalan_conv(n + j, 2 * k + 1);
  }
  Rational rhs = 0;
  if (n - k - 1 >= 0) rhs = make_rational(Integer(2 * k + 1) * binomial(2 * n + 2 * k, n - k - 1), n + k);
  return {lhs, rhs};
}

Rational h_value(long n, long r) {
  if (n < 0 || r < 1) throw DomainError("h_value needs n >= 0, r >= 1");
  if (n % 2 == 1) return Rational(-r);
  return Rational(r) * f(n + 1, r) / f(n, r);
}

Polynomial btype_closed_form(long n) {
  require_n(n);
  if (n == 0) return constant(Rational(1));
  const Polynomial x = constant(Rational(-2)) - kT;
  const Polynomial v = pow_int(2, n - 1) * (tpow(choose2(n)) * fl_poly(FLKind::Lucas, n, x, -kT));
  return n % 2 == 0 ? v : -v;
}

SequenceSpec jacobi_spec(JacobiForm form, long r) {
  switch (form) {
    case JacobiForm::UFamily: return parse_spec("u:r=" + std::to_string(r));
    case JacobiForm::NarayanaShift: return parse_spec("narayana|shift:1");
    case JacobiForm::NarayanaB: return parse_spec("narayana-b");
    case JacobiForm::CatalanShift: return parse_spec("catalan|shift:1");
    case JacobiForm::DoubleSignedU: return parse_spec("u:r=" + std::to_string(r) + "|double-signed");
    case JacobiForm::AeratedDoubleSignedU: return parse_spec("u:r=" + std::to_string(r) + "|double-signed|aerate");
    case JacobiForm::CatConv4: return parse_spec("catconv:r=4");
    default: return parse_spec("convpoly:m=4");
  }
}

JacobiData expected_jacobi(JacobiForm form, std::size_t depth, long r) {
  JacobiData jd;
  jd.depth = depth;
  const RatFun t(kT);
  const RatFun one_plus_t(constant(Rational(1)) + kT);
  const Rational rr(r);
  for (std::size_t i = 0; i < depth; ++i) {
    const long k = static_cast<long>(i);
    RatFun s;
    RatFun tt;
    switch (form) {
      case JacobiForm::UFamily:
        s = k == 0 ? RatFun(rr) : RatFun(2);
        tt = k == 0 ? RatFun(rr) : RatFun(1);
        break;
      case JacobiForm::NarayanaShift:
        s = one_plus_t;
        tt = t;
        break;
      case JacobiForm::NarayanaB:
        s = one_plus_t;
        tt = k == 0 ? RatFun(2) * t : t;
        break;
      case JacobiForm::CatalanShift:
        s = RatFun(2);
        tt = RatFun(1);
        break;
      case JacobiForm::DoubleSignedU:
        s = k == 0 ? RatFun(-rr) : RatFun(sign(k - 1) * Rational(r * r + r - 1) / (f(k, r) * f(k + 1, r)));
        tt = RatFun(-f(k, r) * f(k + 2, r) / (f(k + 1, r) * f(k + 1, r)));
        break;
      case JacobiForm::AeratedDoubleSignedU: {
        const long m = k / 4;
        s = RatFun();
        switch (k % 4) {
          case 0: tt = RatFun(-f(2 * m, r) / f(2 * m + 1, r)); break;
          case 1: tt = RatFun(f(2 * m + 2, r) / f(2 * m + 1, r)); break;
          case 2: tt = RatFun(-f(2 * m + 3, r) / f(2 * m + 2, r)); break;
          default: tt = RatFun(f(2 * m + 1, r) / f(2 * m + 2, r)); break;
        }
        break;
      }
      case JacobiForm::CatConv4: {
        const long m = k / 2;
        s = k % 2 == 0 ? RatFun(4) : RatFun();
        tt = k % 2 == 0 ? RatFun(make_rational(-(m + 2), m + 1)) : RatFun(make_rational(-(m + 1), m + 2));
        break;
      }
      case JacobiForm::ConvPoly4: {
        const long m = k / 2;
        s = k % 2 == 0 ? RatFun(2) * one_plus_t : RatFun();
        const RatFun q1(qint_tk(m + 1, 2));
        const RatFun q2(qint_tk(m + 2, 2));
        tt = k % 2 == 0 ? -(q2 / q1) : -(RatFun(tpow(2)) * q1 / q2);
        break;
      }
    }
    jd.s.push_back(s);
    jd.t.push_back(tt);
  }
  return jd;
}

}  // namespace hlab
