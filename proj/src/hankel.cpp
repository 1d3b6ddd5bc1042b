#include "hlab/hankel.hpp"

#include <future>

#include "json.hpp"

namespace hlab {

HankelMatrix hankel_matrix(const TermList& terms, std::size_t order, std::size_t offset) {
  if (order > 0 && terms.size() < 2 * order - 1 + offset) {
    throw DomainError("Hankel matrix of order " + std::to_string(order) + " needs " +
                      std::to_string(2 * order - 1 + offset) + " terms");
  }
  HankelMatrix h;
  h.order = order;
  h.offset = offset;
  h.entries.n = order;
  h.entries.cells.reserve(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) h.entries.cells.push_back(terms[i + j + offset]);
  }
  return h;
}

HankelMatrix hankel_matrix(const SequenceSpec& spec, std::size_t order, std::size_t offset) {
  const std::size_t needed = order == 0 ? 0 : 2 * order - 1 + offset;
  return hankel_matrix(generate(spec, needed), order, offset);
}

Polynomial det_exact(const SquareMatrix<Polynomial>& m) { return det_bareiss(m, constant(Rational(1))); }

Polynomial det_exact(const HankelMatrix& m) { return det_exact(m.entries); }

DetSequence det_sequence(const TermList& terms, std::size_t n_max, std::size_t offset) {
  DetSequence out;
  out.offset = offset;
  out.kind = terms.kind;
  std::vector<std::future<Polynomial>> jobs;
  jobs.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [&terms, n, offset] {
      return det_exact(hankel_matrix(terms, n, offset));
    }));
  }
  for (auto& j : jobs) out.values.push_back(j.get());
  return out;
}

DetSequence det_sequence(const SequenceSpec& spec, std::size_t n_max, std::size_t offset) {
  const std::size_t needed = n_max == 0 ? 0 : 2 * n_max - 1 + offset;
  DetSequence out = det_sequence(generate(spec, needed), n_max, offset);
  out.spec = spec;
  out.kind = result_kind(spec);
  return out;
}

std::string csv_cell(const std::string& value) {
  for (char ch : value) {
    const bool plain = (ch >= '0' && ch <= '9') || ch == '-' || ch == '/';
    if (!plain) return "\"" + value + "\"";
  }
  return value;
}

std::string to_csv(const DetSequence& d) {
  std::string out = "n,value\n";
  for (std::size_t n = 0; n < d.values.size(); ++n) {
    out += std::to_string(n) + "," + csv_cell(to_string(d.values[n])) + "\n";
  }
  return out;
}

std::string to_json(const DetSequence& d) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : d.values) arr.push_back(to_string(v));
  return arr.dump();
}

}  // namespace hlab
