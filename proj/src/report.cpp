#include <algorithm>

#include "hlab/hankel.hpp"
#include "hlab/registry.hpp"
#include "json.hpp"

namespace hlab {

std::string to_string(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    default: return "skipped";
  }
}

bool VerificationReport::all_match() const {
  return std::none_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.status == Status::Mismatch; });
}

std::vector<const ReportEntry*> VerificationReport::counterexamples() const {
  std::vector<const ReportEntry*> out;
  if (category == Category::Theorem) return out;
  for (const auto& e : entries) {
    if (e.status == Status::Mismatch) out.push_back(&e);
  }
  return out;
}

VerificationReport verify(const std::string& id, std::optional<std::size_t> n_max, const Params& params) {
  const RegistryEntry& entry = registry_entry(id);
  VerificationReport rep;
  rep.id = id;
  rep.category = entry.category;
  rep.params = resolve_params(entry, params);
  rep.n_max = n_max.value_or(entry.default_n_max);

  const std::vector<Claim> cs = claims(id, rep.n_max, rep.params);
  long top = 0;
  for (const Claim& c : cs) {
    for (const auto& [coeff, index] : c.terms) top = std::max(top, index);
  }
  const DetSequence dets = det_sequence(spec_for(id, rep.params), static_cast<std::size_t>(top), entry.offset);

  std::optional<long> k;
  if (!entry.param.empty()) k = rep.params.at(entry.param);
  for (const Claim& c : cs) {
    ReportEntry e;
    e.n = c.n;
    e.k = k;
    e.claim = c.label;
    e.expected = c.expected;
    const bool in_range = std::all_of(c.terms.begin(), c.terms.end(), [](const auto& term) { return term.second >= 0; });
    if (!in_range) {
      e.status = Status::Skipped;
      e.reason = "negative determinant order";
    } else {
      Polynomial got('t');
      for (const auto& [coeff, index] : c.terms) got += Rational(coeff) * dets.values[static_cast<std::size_t>(index)];
      e.status = got == c.expected ? Status::Match : Status::Mismatch;
      e.got = std::move(got);
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

VerificationReport scan_conjecture(const std::string& id, std::optional<std::size_t> n_max,
                                   std::optional<std::pair<long, long>> range) {
  const RegistryEntry& entry = registry_entry(id);
  if (entry.param.empty()) {
    if (range) throw DomainError("id '" + id + "' takes no parameter range");
    return verify(id, n_max);
  }
  const auto [lo, hi] = range.value_or(std::pair<long, long>{entry.scan_min, entry.scan_max});
  if (lo < 1 || hi < lo) throw DomainError("bad parameter range for '" + id + "'");
  VerificationReport rep;
  rep.id = id;
  rep.category = entry.category;
  rep.params = {{entry.param + "_min", lo}, {entry.param + "_max", hi}};
  rep.n_max = n_max.value_or(entry.default_n_max);
  for (long p = lo; p <= hi; ++p) {
    VerificationReport one = verify(id, rep.n_max, {{entry.param, p}});
    for (auto& e : one.entries) rep.entries.push_back(std::move(e));
  }
  return rep;
}

namespace {

std::string param_key(const VerificationReport& r) {
  const std::string& p = registry_entry(r.id).param;
  return p.empty() ? "k" : p;
}

std::string opt_string(const std::optional<Polynomial>& p) { return p ? to_string(*p) : std::string(); }

}  // namespace

std::string to_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  const std::string key = param_key(r);
  ordered_json out;
  out["id"] = r.id;
  out["category"] = to_string(r.category);
  out["params"] = ordered_json::object();
  for (const auto& [k, v] : r.params) out["params"][k] = v;
  out["n_max"] = r.n_max;
  out["entries"] = ordered_json::array();
  for (const auto& e : r.entries) {
    ordered_json j;
    j["n"] = e.n;
    if (e.k) j[key] = *e.k;
    j["claim"] = e.claim;
    j["expected"] = opt_string(e.expected);
    j["got"] = opt_string(e.got);
    j["status"] = to_string(e.status);
    if (!e.reason.empty()) j["reason"] = e.reason;
    out["entries"].push_back(j);
  }
  out["counterexamples"] = ordered_json::array();
  for (const ReportEntry* e : r.counterexamples()) {
    ordered_json j;
    j["record"] = "COUNTEREXAMPLE";
    j["id"] = r.id;
    j["n"] = e->n;
    if (e->k) j[key] = *e->k;
    j["claim"] = e->claim;
    j["expected"] = opt_string(e->expected);
    j["got"] = opt_string(e->got);
    out["counterexamples"].push_back(j);
  }
  out["verdict"] = r.all_match() ? "match" : "mismatch";
  return out.dump();
}

std::string to_csv(const VerificationReport& r) {
  const std::string key = param_key(r);
  auto param_cell = [](const ReportEntry& e) { return e.k ? std::to_string(*e.k) : std::string(); };
  std::string out = "id,category," + key + ",n,claim,expected,got,status\n";
  for (const auto& e : r.entries) {
    out += r.id + "," + to_string(r.category) + "," + param_cell(e) + "," + std::to_string(e.n) + "," +
           csv_cell(e.claim) + "," + csv_cell(opt_string(e.expected)) + "," + csv_cell(opt_string(e.got)) + "," +
           to_string(e.status) + "\n";
  }
  for (const ReportEntry* e : r.counterexamples()) {
    out += "COUNTEREXAMPLE," + r.id + "," + param_cell(*e) + "," + std::to_string(e->n) + "," + csv_cell(e->claim) +
           "," + csv_cell(opt_string(e->expected)) + "," + csv_cell(opt_string(e->got)) + ",mismatch\n";
  }
  out += std::string("VERDICT,") + (r.all_match() ? "match" : "mismatch") + "\n";
  return out;
}

}  // namespace hlab
