#include <random>

#include "doctest.h"
#include "hlab/hankel.hpp"
#include "hlab/orthopoly.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace hlab;
using oracle::P;

namespace {

std::vector<Polynomial> ints(std::initializer_list<long> values) {
  std::vector<Polynomial> out;
  for (long v : values) out.push_back(oracle::c(v));
  return out;
}

std::vector<Polynomial> dets(const std::string& spec, std::size_t n_max, std::size_t offset) {
  return det_sequence(parse_spec(spec), n_max, offset).values;
}

SquareMatrix<Polynomial> transpose(const SquareMatrix<Polynomial>& m) {
  SquareMatrix<Polynomial> t = m;
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) t.at(i, j) = m.at(j, i);
  }
  return t;
}

}  // namespace

TEST_CASE("hankel_matrix examples") {
  const HankelMatrix m = hankel_matrix(parse_spec("catalan"), 2, 0);
  CHECK(m.entries.cells == ints({1, 1, 1, 2}));
  const HankelMatrix n = hankel_matrix(parse_spec("narayana|shift:1|consecutive-sum"), 2, 0);
  CHECK(n.at(0, 0) == P("2 + t"));
  CHECK(n.at(0, 1) == P("2 + 4*t + t^2"));
  CHECK(n.at(1, 0) == P("2 + 4*t + t^2"));
  CHECK(n.at(1, 1) == P("2 + 9*t + 7*t^2 + t^3"));
  CHECK(hankel_matrix(parse_spec("catalan"), 0, 0).entries.cells.empty());
  CHECK(hankel_matrix(parse_spec("catalan"), 3, 1).at(2, 2) == oracle::c(42));
}

TEST_CASE("det_exact examples") {
  CHECK(det_exact(hankel_matrix(parse_spec("catalan"), 2, 0)) == oracle::c(1));
  CHECK(det_exact(hankel_matrix(parse_spec("narayana|shift:1|consecutive-sum"), 2, 0)) == P("4*t + 3*t^2 + t^3"));
  CHECK(det_exact(hankel_matrix(parse_spec("catalan"), 0, 0)) == oracle::c(1));
  CHECK(det_exact(hankel_matrix(parse_spec("catconv:r=3"), 2, 0)).is_zero());
}

TEST_CASE("det_sequence examples") {
  CHECK(dets("catalan|double-signed", 7, 0) == ints({1, 1, -2, -3, 5, 8, -13, -21}));
  CHECK(dets("catalan|double-signed", 8, 1) == ints({1, -1, -3, 3, 8, -8, -21, 21, 55}));
  CHECK(dets("central-binomial|double-signed", 5, 0) == ints({1, 1, -6, -16, 56, 176}));
  for (const auto& spec : oracle::fittable_corpus()) CHECK(dets(spec, 0, 0)[0] == oracle::c(1));
}

TEST_CASE("Bareiss agrees with cofactor expansion on integer matrices") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<std::size_t> order(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_matrix(rng, order(rng), 0);
    CHECK(det_exact(oracle::to_square(m)) == oracle::cofactor_det(m, oracle::c(1)));
  }
}

TEST_CASE("Bareiss agrees with cofactor expansion on polynomial matrices") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::size_t> order(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = oracle::random_matrix(rng, order(rng), 2);
    CHECK(det_exact(oracle::to_square(m)) == oracle::cofactor_det(m, oracle::c(1)));
  }
}

TEST_CASE("singular and zero-pivot matrices") {
  const std::vector<std::vector<Polynomial>> swap = {{oracle::c(0), oracle::c(1)}, {oracle::c(1), oracle::c(0)}};
  CHECK(det_exact(oracle::to_square(swap)) == oracle::c(-1));
  const std::vector<std::vector<Polynomial>> zero_col = {{oracle::c(0), oracle::c(1)}, {oracle::c(0), oracle::c(3)}};
  CHECK(det_exact(oracle::to_square(zero_col)).is_zero());
}

TEST_CASE("transpose leaves the determinant unchanged") {
  const std::vector<std::string> specs = {
      "catalan",        "central-binomial|double-signed", "u:r=3",          "catconv:r=5",   "narayana",
      "narayana-b",     "convpoly:m=3",                   "convpoly:m=6",   "fibonacci",     "lucas|shift:2",
      "f-number:r=4",   "catalan|double-signed|aerate",   "catalan|double-signed|abs", "narayana|eval:t=-1",
      "narayana|shift:1|consecutive-sum", "catalan|scale:2", "u:r=2|double-signed|aerate", "catconv:r=8",
      "central-binomial|consecutive-sum", "narayana-b|consecutive-sum"};
  REQUIRE(specs.size() == 20);
  for (const auto& spec : specs) {
    for (std::size_t offset : {0, 1}) {
      const HankelMatrix m = hankel_matrix(parse_spec(spec), 5, offset);
      CHECK(det_exact(transpose(m.entries)) == det_exact(m));
    }
  }
}

TEST_CASE("shifted determinants from the orthogonal polynomials at zero") {
  for (const auto& spec : oracle::fittable_corpus()) {
    CAPTURE(spec);
    const std::size_t depth = 8;
    const TermList a = generate(parse_spec(spec), 2 * depth + 2);
    const JacobiData jd = fit_recurrence(a, depth);
    const DetSequence d0 = det_sequence(a, depth, 0);
    const DetSequence d1 = det_sequence(a, depth, 1);
    for (std::size_t n = 0; n <= depth; ++n) {
      const RatFun p0 = poly_from_recurrence(jd, n).constant_term();
      const RatFun expect = RatFun(Rational(neg_one_pow(static_cast<long>(n)))) * p0 * RatFun(d0.values[n]);
      CHECK(RatFun(d1.values[n]) == expect);
    }
  }
}

TEST_CASE("DetSequence serialization") {
  const DetSequence d = det_sequence(parse_spec("narayana|shift:1"), 2, 0);
  CHECK(to_csv(d) == "n,value\n0,1\n1,1\n2,\"t\"\n");
  const auto j = nlohmann::json::parse(to_json(d));
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[2] == "t");
  CHECK(to_csv(det_sequence(parse_spec("catalan|double-signed"), 2, 0)) == "n,value\n0,1\n1,1\n2,-2\n");
}
