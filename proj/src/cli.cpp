#include "hlab/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "hlab/hankel.hpp"
#include "hlab/lattice.hpp"
#include "hlab/orthopoly.hpp"
#include "hlab/registry.hpp"
#include "json.hpp"

namespace hlab::cli {

namespace {

struct Options {
  std::string format = "csv";
  std::string target;  // spec text or registry id
  std::size_t terms = 10;
  std::size_t n_max = 8;
  std::size_t offset = 0;
  std::size_t depth = 6;
  std::size_t lgv_n = 3;
  std::optional<std::size_t> verify_n_max;
  std::optional<long> r;
  std::optional<long> k;
  std::optional<long> k_min;
  std::optional<long> k_max;
};

bool json(const Options& o) { return o.format == "json"; }

int cmd_seq(const Options& o, std::ostream& out) {
  const TermList terms = generate(parse_spec(o.target), o.terms);
  if (json(o)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : terms.terms) arr.push_back(to_string(p));
    out << arr.dump() << "\n";
  } else {
    out << "n,term\n";
    for (std::size_t n = 0; n < terms.size(); ++n) out << n << "," << csv_cell(to_string(terms[n])) << "\n";
  }
  return 0;
}

int cmd_hankel(const Options& o, std::ostream& out) {
  const DetSequence d = det_sequence(parse_spec(o.target), o.n_max, o.offset);
  out << (json(o) ? to_json(d) + "\n" : to_csv(d));
  return 0;
}

int cmd_fit(const Options& o, std::ostream& out) {
  const SequenceSpec spec = parse_spec(o.target);
  const JacobiData jd = fit_recurrence(generate(spec, 2 * o.depth + 1), o.depth);
  out << (json(o) ? to_json(jd) + "\n" : to_csv(jd));
  return 0;
}

int emit(const VerificationReport& rep, const Options& o, std::ostream& out) {
  out << (json(o) ? to_json(rep) + "\n" : to_csv(rep));
  return rep.all_match() ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Params params;
  if (o.r) params["r"] = *o.r;
  if (o.k) params["k"] = *o.k;
  return emit(verify(o.target, o.verify_n_max, params), o, out);
}

int cmd_scan(const Options& o, std::ostream& out) {
  std::optional<std::pair<long, long>> range;
  if (o.k_min || o.k_max) {
    const RegistryEntry& e = registry_entry(o.target);
    range = std::pair<long, long>{o.k_min.value_or(e.scan_min), o.k_max.value_or(e.scan_max)};
  }
  return emit(scan_conjecture(o.target, o.verify_n_max, range), o, out);
}

int cmd_lgv(const Options& o, std::ostream& out) {
  const Polynomial families = lgv_bruteforce(o.lgv_n);
  const Polynomial det = det_exact(hankel_matrix(parse_spec("convpoly:m=3"), o.lgv_n, 0));
  const bool same = families == det;
  if (json(o)) {
    nlohmann::ordered_json j;
    j["n"] = o.lgv_n;
    j["lgv"] = to_string(families);
    j["det"] = to_string(det);
    j["status"] = same ? "match" : "mismatch";
    out << j.dump() << "\n";
  } else {
    out << "n,lgv,det,status\n"
        << o.lgv_n << "," << csv_cell(to_string(families)) << "," << csv_cell(to_string(det)) << ","
        << (same ? "match" : "mismatch") << "\n";
  }
  return same ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hankel determinant laboratory", "hlab"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* seq = app.add_subcommand("seq", "Print sequence terms");
  seq->add_option("spec", o.target, "Sequence spec")->required();
  seq->add_option("--terms", o.terms, "Number of terms");

  auto* hankel = app.add_subcommand("hankel", "Print Hankel determinants of orders 0..n-max");
  hankel->add_option("spec", o.target, "Sequence spec")->required();
  hankel->add_option("--n-max", o.n_max, "Largest order");
  hankel->add_option("--offset", o.offset, "Index offset")->check(CLI::IsMember({0, 1}));

  auto* fit = app.add_subcommand("fit", "Fit recurrence coefficients s(k), t(k)");
  fit->add_option("spec", o.target, "Sequence spec")->required();
  fit->add_option("--depth", o.depth, "Number of s and t values");

  auto* ver = app.add_subcommand("verify", "Compare a closed form with computed determinants");
  ver->add_option("id", o.target, "Closed-form id")->required();
  ver->add_option("--n-max", o.verify_n_max, "Largest n (default: registry value)");
  ver->add_option("--r", o.r, "Parameter r");
  ver->add_option("--k", o.k, "Parameter k");

  auto* scan = app.add_subcommand("scan", "Scan a conjecture over a parameter range");
  scan->add_option("id", o.target, "Closed-form id")->required();
  scan->add_option("--n-max", o.verify_n_max, "Largest n (default: registry value)");
  scan->add_option("--k-min", o.k_min, "Smallest parameter value");
  scan->add_option("--k-max", o.k_max, "Largest parameter value");

  auto* lgv = app.add_subcommand("lgv", "Compare path-family enumeration with the determinant");
  lgv->add_option("--n", o.lgv_n, "Family size")->check(CLI::Range(std::size_t{0}, kLgvMaxN));

  for (auto* sub : {seq, hankel, fit, ver, scan, lgv}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (seq->parsed()) return cmd_seq(o, out);
    if (hankel->parsed()) return cmd_hankel(o, out);
    if (fit->parsed()) return cmd_fit(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (scan->parsed()) return cmd_scan(o, out);
    return cmd_lgv(o, out);
  } catch (const ZeroHankelMinor& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace hlab::cli
