#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlab/orthopoly.hpp"
#include "hlab/polynomial.hpp"
#include "hlab/sequences.hpp"

namespace hlab {

enum class Category { Theorem, Observed, Conjecture };

std::string to_string(Category c);

/// Named integer parameters: "r" for the U-family ids, "k" for the
/// conjecture families.
using Params = std::map<std::string, long>;

struct RegistryEntry {
  std::string id;
  Category category;
  std::size_t offset;
  std::size_t default_n_max;
  /// "r", "k" or empty.
  std::string param{};
  long default_param = 0;
  /// Inclusive range scanned by default for the parameter.
  long scan_min = 0;
  long scan_max = 0;
};

const std::vector<RegistryEntry>& registry();
/// Throws DomainError for an unknown id.
const RegistryEntry& registry_entry(const std::string& id);

/// Fills in the default parameter and checks its domain.
Params resolve_params(const RegistryEntry& e, const Params& given);

/// The sequence whose Hankel determinants the id describes.
SequenceSpec spec_for(const std::string& id, const Params& params);

/// One checked statement: sum of coeff * D(index) equals `expected`, where
/// D(i) is the order-i Hankel determinant of spec_for(id) at the entry offset.
struct Claim {
  std::string label;
  long n = 0;
  std::vector<std::pair<long, long>> terms;  // (coefficient, index)
  Polynomial expected;
};

/// Claims for n = 0..n_max. Theorem and observed ids yield one claim per
/// determinant index; conjecture ids yield one claim per displayed line and n.
std::vector<Claim> claims(const std::string& id, std::size_t n_max, const Params& params);

/// Value of the displayed formula for the determinant of order n.
/// Throws DomainError when n or the parameters lie outside its domain.
Polynomial closed_form(const std::string& id, long n, const Params& params);

enum class Status { Match, Mismatch, Skipped };
std::string to_string(Status s);

struct ReportEntry {
  long n = 0;
  std::optional<long> k;
  std::string claim;
  std::optional<Polynomial> expected;
  std::optional<Polynomial> got;
  Status status = Status::Skipped;
  std::string reason;
};

struct VerificationReport {
  std::string id;
  Category category = Category::Theorem;
  Params params;
  std::size_t n_max = 0;
  std::vector<ReportEntry> entries;

  bool all_match() const;
  /// Mismatches of observed and conjectured statements.
  std::vector<const ReportEntry*> counterexamples() const;
};

VerificationReport verify(const std::string& id, std::optional<std::size_t> n_max = {}, const Params& params = {});

/// Runs verify for every parameter value in [k_min, k_max] (or the registry
/// default range) and merges the entries in parameter order.
VerificationReport scan_conjecture(const std::string& id, std::optional<std::size_t> n_max = {},
                                   std::optional<std::pair<long, long>> range = {});

/// JSON object {id, category, params, n_max, entries, counterexamples, verdict}.
std::string to_json(const VerificationReport& r);
/// One row per entry, then COUNTEREXAMPLE rows, then a VERDICT row.
std::string to_csv(const VerificationReport& r);

// ---------------------------------------------------------------------------
// Helpers shared with tests.

/// Both sides of the summation identity behind D(k+1, 2k+1) = 0.
std::pair<Rational, Rational> r_identity(long k, long n);

/// (-1)^n p(n, 0, r) for the double-signed U sequence, by its closed form.
Rational h_value(long n, long r);

/// (-1)^n t^binom(n,2) 2^(n-1) L_n(-t-2, -t), with value 1 at n = 0.
Polynomial btype_closed_form(long n);

/// Recurrence data predicted by the closed forms, through `depth`.
enum class JacobiForm {
  UFamily,         // u:r=R
  NarayanaShift,   // narayana|shift:1
  NarayanaB,       // narayana-b
  CatalanShift,    // catalan|shift:1
  DoubleSignedU,   // u:r=R|double-signed
  AeratedDoubleSignedU,  // u:r=R|double-signed|aerate
  CatConv4,        // catconv:r=4
  ConvPoly4,       // convpoly:m=4
};
JacobiData expected_jacobi(JacobiForm form, std::size_t depth, long r = 1);
SequenceSpec jacobi_spec(JacobiForm form, long r = 1);

}  // namespace hlab
