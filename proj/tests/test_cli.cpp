#include <sstream>

#include "doctest.h"
#include "hlab/cli.hpp"
#include "hlab/polynomial.hpp"
#include "hlab/ratfun.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = hlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hankel subcommand") {
  const Result r = run({"hankel", "catalan|double-signed", "--n-max", "7", "--offset", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,value\n0,1\n1,1\n2,-2\n3,-3\n4,5\n5,8\n6,-13\n7,-21\n");
  const Result j = run({"hankel", "catalan|double-signed", "--n-max", "8", "--offset", "1", "--format", "json"});
  CHECK(j.out == "[\"1\",\"-1\",\"-3\",\"3\",\"8\",\"-8\",\"-21\",\"21\",\"55\"]\n");
  CHECK(run({"hankel", "catalan", "--offset", "2"}).code == 2);
}

TEST_CASE("seq subcommand") {
  const Result r = run({"seq", "convpoly:m=3", "--terms", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,term\n0,1\n1,\"2 + t\"\n2,\"3 + 5*t + t^2\"\n");
  const Result j = run({"--format", "json", "seq", "convpoly:m=3", "--terms", "3"});
  CHECK(nlohmann::json::parse(j.out) == nlohmann::json::array({"1", "2 + t", "3 + 5*t + t^2"}));
}

TEST_CASE("verify subcommand") {
  const Result r = run({"verify", "thm5.1", "--n-max", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("VERDICT,match\n") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"verify", "eq3.6", "--r", "3", "--format", "json"}).out);
  CHECK(j["params"]["r"] == 3);
  CHECK(j["verdict"] == "match");
  CHECK(run({"verify", "no-such-id"}).code == 2);
}

TEST_CASE("scan subcommand exit codes") {
  CHECK(run({"scan", "conj7.2"}).code == 0);
  const Result bad = run({"scan", "conj7.5", "--k-min", "1", "--k-max", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("COUNTEREXAMPLE,conj7.5") != std::string::npos);
}

TEST_CASE("fit subcommand") {
  const Result r = run({"fit", "narayana-b", "--depth", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "k,s,t\n0,\"1 + t\",\"2*t\"\n1,\"1 + t\",\"t\"\n");
  const Result z = run({"fit", "catconv:r=3", "--depth", "3"});
  CHECK(z.code == 2);
  CHECK(z.err.find("order 2") != std::string::npos);
}

TEST_CASE("lgv subcommand") {
  const Result r = run({"lgv", "--n", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lgv"] == "-1 + t");
  CHECK(j["status"] == "match");
  CHECK(run({"lgv", "--n", "5"}).code == 2);
}

TEST_CASE("errors are one-line diagnostics with exit code 2") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"seq", "catalan|eval:t=-1"}, {"seq", "bogus"}, {"seq"}, {}, {"frobnicate"},
        {"seq", "catalan", "--format", "xml"}, {"seq", "catconv:r=0"}}) {
    const Result r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(r.err.find('\n') == r.err.size() - 1);
  }
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"hankel", "convpoly:m=4", "--n-max", "8", "--format", "json"};
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.out == b.out);
  CHECK(run({"verify", "thm7.4"}).out == run({"verify", "thm7.4"}).out);
}

TEST_CASE("printed polynomials round-trip through the parser") {
  const auto dets = nlohmann::json::parse(run({"hankel", "convpoly:m=6", "--n-max", "6", "--format", "json"}).out);
  for (const auto& v : dets) {
    const std::string text = v.get<std::string>();
    CHECK(hlab::to_string(hlab::parse_polynomial(text)) == text);
  }
  const auto fit = nlohmann::json::parse(run({"fit", "convpoly:m=4", "--depth", "4", "--format", "json"}).out);
  for (const auto& v : fit["t"]) {
    const std::string text = v.get<std::string>();
    CHECK(hlab::to_string(hlab::parse_ratfun(text)) == text);
  }
}
