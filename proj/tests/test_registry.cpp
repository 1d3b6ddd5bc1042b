#include "doctest.h"
#include "hlab/errors.hpp"
#include "hlab/orthopoly.hpp"
#include "hlab/power_series.hpp"
#include "hlab/registry.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace hlab;
using oracle::P;

namespace {

std::vector<Polynomial> forms(const std::string& id, long n_max, const Params& params = {}) {
  std::vector<Polynomial> out;
  for (long n = 0; n <= n_max; ++n) out.push_back(closed_form(id, n, params));
  return out;
}

std::vector<Polynomial> ints(std::initializer_list<long> values) {
  std::vector<Polynomial> out;
  for (long v : values) out.push_back(oracle::c(v));
  return out;
}

std::vector<Polynomial> got_values(const VerificationReport& rep) {
  std::vector<Polynomial> out;
  for (const auto& e : rep.entries) out.push_back(e.got.value_or(Polynomial()));
  return out;
}

}  // namespace

TEST_CASE("closed_form examples") {
  CHECK(forms("thm2.1-d0", 7) == ints({1, 1, -2, -3, 5, 8, -13, -21}));
  CHECK(forms("thm2.3-d0", 10) == ints({1, 1, -1, 2, 6, 9, -9, 15, 40, 64, -64}));
  const Polynomial q = P("t^2");
  std::vector<Polynomial> thm74;
  const long sign[] = {1, 1, -1, -1, 1, 1, -1, -1, 1, 1};
  const unsigned long tdeg[] = {0, 0, 0, 2, 4, 8, 12, 18, 24, 32};
  for (long n = 0; n <= 9; ++n) {
    thm74.push_back(Rational(sign[n]) * (P("t").pow(tdeg[n]) * q_integer(n / 2 + 1, q)));
  }
  CHECK(forms("thm7.4", 9) == thm74);
  CHECK_THROWS_AS(closed_form("thm2.1-d0", -1, {}), DomainError);
  CHECK_THROWS_AS(closed_form("no-such-id", 0, {}), DomainError);
}

TEST_CASE("printed lists reproduced by the determinant engine") {
  CHECK(got_values(verify("thm2.1-d1", 8)) == ints({1, -1, -3, 3, 8, -8, -21, 21, 55}));
  CHECK(got_values(verify("thm2.2-D1", 6)) == ints({1, -2, -16, 32, 176, -352, -1856}));
  CHECK(got_values(verify("thm2.3-d1", 8)) == ints({1, 0, -1, 0, 9, 0, -9, 0, 64}));
  CHECK(got_values(verify("thm2.4-D0", 5)) == ints({1, 1, -2, 12, 96, 256}));
  CHECK(got_values(verify("thm2.4-D1", 6)) == ints({1, 0, -4, 0, 256, 0, -1024}));
  CHECK(got_values(verify("eq4.10", 7)) == ints({1, 1, -2, -8, -8, 16, 64, 64}));
  CHECK(got_values(verify("d-n-5", 9)) == ints({1, 1, -5, 0, 5, 1, 1, -10, 0, 10}));
  CHECK(got_values(verify("d-n-8", 10)) == ints({1, 1, -20, -216, 8, 8, 56, -3284, 27, 27, 2744}));
}

TEST_CASE("verify examples") {
  const VerificationReport d1 = verify("thm2.2-D1", 6);
  CHECK(d1.all_match());
  CHECK(d1.entries.size() == 7);
  CHECK(verify("thm5.2", 8).all_match());
  const VerificationReport u = verify("eq1.22", 8, {{"r", 3}});
  CHECK(u.all_match());
  CHECK(got_values(u) == ints({1, 1, 3, 9, 27, 81, 243, 729, 2187}));
}

TEST_CASE("every id matches over its default range") {
  for (const auto& e : registry()) {
    CAPTURE(e.id);
    const VerificationReport rep = verify(e.id);
    CHECK(rep.all_match());
    CHECK(rep.counterexamples().empty());
    CHECK(!rep.entries.empty());
    CHECK(rep.n_max == e.default_n_max);
    const bool conjecture = e.id.rfind("conj", 0) == 0;
    CHECK((rep.category == Category::Conjecture) == conjecture);
  }
  CHECK(registry().size() == 31);
}

TEST_CASE("U-family ids across r") {
  for (long r = 1; r <= 3; ++r) {
    CHECK(verify("eq3.6", 10, {{"r", r}}).all_match());
    CHECK(verify("eq3.7", 10, {{"r", r}}).all_match());
    CHECK(verify("u-d0", 10, {{"r", r}}).all_match());
    CHECK(verify("u-d1", 10, {{"r", r}}).all_match());
  }
  for (long r = 1; r <= 2; ++r) {
    CHECK(verify("eq3.10", 9, {{"r", r}}).all_match());
    CHECK(verify("eq3.12", 9, {{"r", r}}).all_match());
  }
  CHECK_THROWS_AS(verify("eq3.6", 4, {{"r", 0}}), DomainError);
}

TEST_CASE("observed patterns") {
  const VerificationReport d6 = verify("d-n-6", 8);
  CHECK(got_values(d6) == ints({1, 1, -9, -4, -4, 45, 9, 9, -126}));
  const DetSequence six = det_sequence(parse_spec("catconv:r=6"), 8, 0);
  for (long n = 0; n <= 2; ++n) {
    long sq = 0;
    for (long j = 0; j <= n + 1; ++j) sq += j * j;
    CHECK(six.values[static_cast<std::size_t>(3 * n + 2)] == oracle::c(9 * neg_one_pow(n + 1) * sq));
  }
  CHECK(got_values(verify("d-n-7", 6)) == ints({1, 1, -14, -49, 0, 49, 329}));
}

TEST_CASE("scan reports") {
  const VerificationReport s = scan_conjecture("conj7.2");
  CHECK(s.category == Category::Conjecture);
  CHECK(s.params.at("k_min") == 1);
  CHECK(s.params.at("k_max") == 3);
  CHECK(s.all_match());
  CHECK(scan_conjecture("conj7.7").all_match());
  CHECK(scan_conjecture("conj7.6").all_match());
  CHECK_THROWS_AS(scan_conjecture("conj7.2", {}, std::pair<long, long>{0, 2}), DomainError);
  CHECK_THROWS_AS(scan_conjecture("thm2.1-d0", {}, std::pair<long, long>{1, 2}), DomainError);
}

TEST_CASE("mismatches become COUNTEREXAMPLE records") {
  const VerificationReport s = scan_conjecture("conj7.5", {}, std::pair<long, long>{1, 1});
  REQUIRE_FALSE(s.counterexamples().empty());
  for (const ReportEntry* e : s.counterexamples()) {
    CHECK(e->status == Status::Mismatch);
    CHECK(e->expected.has_value());
    CHECK(e->got.has_value());
    CHECK(e->k == 1);
  }
  const auto j = nlohmann::json::parse(to_json(s));
  CHECK(j["verdict"] == "mismatch");
  REQUIRE(!j["counterexamples"].empty());
  CHECK(j["counterexamples"][0]["record"] == "COUNTEREXAMPLE");
  CHECK(j["counterexamples"][0]["id"] == "conj7.5");
  CHECK(to_csv(s).find("\nCOUNTEREXAMPLE,conj7.5,1,") != std::string::npos);
}

TEST_CASE("report serialization") {
  const VerificationReport rep = verify("thm2.1-d0", 2);
  CHECK(to_csv(rep) ==
        "id,category,k,n,claim,expected,got,status\n"
        "thm2.1-d0,THEOREM,,0,\"D(0)\",1,1,match\n"
        "thm2.1-d0,THEOREM,,1,\"D(1)\",1,1,match\n"
        "thm2.1-d0,THEOREM,,2,\"D(2)\",-2,-2,match\n"
        "VERDICT,match\n");
  const auto j = nlohmann::json::parse(to_json(verify("eq1.22", 2, {{"r", 2}})));
  CHECK(j["id"] == "eq1.22");
  CHECK(j["params"]["r"] == 2);
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][2]["expected"] == "2");
  CHECK(j["entries"][2]["got"] == "2");
  CHECK(j["entries"][2]["status"] == "match");
  CHECK(j["verdict"] == "match");
}

TEST_CASE("r_identity examples") {
  for (long k = 1; k <= 6; ++k) {
    for (long n = 0; n <= k; ++n) CHECK(r_identity(k, n) == std::pair<Rational, Rational>{0, 0});
    for (long n = 0; n <= k + 10; ++n) {
      const auto [lhs, rhs] = r_identity(k, n);
      CHECK(lhs == rhs);
    }
  }
  CHECK(r_identity(1, 2) == std::pair<Rational, Rational>{1, 1});
}

TEST_CASE("r_identity generating function") {
  const std::size_t order = 12;
  const PowerSeries c = catalan_series(order);
  for (long k = 1; k <= 3; ++k) {
    const PowerSeries rhs = series_pow(c, static_cast<unsigned long>(4 * k + 2)).times_z(static_cast<std::size_t>(k + 1));
    for (std::size_t n = 0; n <= order; ++n) CHECK(oracle::c(1) * constant(r_identity(k, static_cast<long>(n)).first) == rhs[n]);
  }
}

TEST_CASE("h_value agrees with the fitted orthogonal polynomials") {
  for (long r = 1; r <= 3; ++r) {
    const TermList a = generate(parse_spec("u:r=" + std::to_string(r) + "|double-signed"), 21);
    const JacobiData jd = fit_recurrence(a, 10);
    for (long n = 0; n <= 10; ++n) {
      const RatFun p0 = poly_from_recurrence(jd, static_cast<std::size_t>(n)).constant_term();
      CHECK(RatFun(Rational(neg_one_pow(n))) * p0 == RatFun(h_value(n, r)));
    }
    for (long n = 0; n <= 4; ++n) {
      CHECK(h_value(2 * n + 1, r) == -r);
      CHECK(h_value(2 * n, r) == Rational(r) * f_number(2 * n + 1, r) / f_number(2 * n, r));
    }
  }
}

TEST_CASE("B-type closed form matches the determinants") {
  const DetSequence d = det_sequence(parse_spec("narayana-b|consecutive-sum"), 6, 0);
  for (long n = 0; n <= 6; ++n) CHECK(d.values[static_cast<std::size_t>(n)] == btype_closed_form(n));
}

TEST_CASE("expected_jacobi forms equal the fits") {
  const std::vector<std::pair<JacobiForm, long>> cases = {
      {JacobiForm::UFamily, 1},       {JacobiForm::UFamily, 3},       {JacobiForm::NarayanaShift, 1},
      {JacobiForm::NarayanaB, 1},     {JacobiForm::CatalanShift, 1},  {JacobiForm::DoubleSignedU, 2},
      {JacobiForm::AeratedDoubleSignedU, 2}, {JacobiForm::CatConv4, 1}, {JacobiForm::ConvPoly4, 1}};
  for (const auto& [form, r] : cases) {
    const TermList a = generate(jacobi_spec(form, r), 17);
    CHECK(fit_recurrence(a, 8) == expected_jacobi(form, 8, r));
  }
}
