#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "telescope/closed_form.hpp"
#include "telescope/hyperterm.hpp"
#include "telescope/zeilberger.hpp"

namespace telescope {

// Malformed corpus file (I/O, JSON, or any embedded grammar).
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Alternative evaluation route for the left-hand side of an entry.
struct Route {
  enum class Kind {
    sum,          // only the direct sum
    watson_chu,   // prefactor * W01(a, b, c) through Watson + Chu
    gamma_split,  // F(n) at even n, -G(n) at odd n via Gamma closed forms
    pfq,          // prefactor * pFq(upper; lower; 1)
  };

  Kind kind = Kind::sum;
  std::vector<ClosedForm> upper;  // watson_chu: {a, b, c}
  std::vector<ClosedForm> lower;
  std::optional<ClosedForm> prefactor;
  std::optional<ClosedForm> series_value;  // pfq: claimed value of the series alone
};

struct IdentityEntry {
  std::string name;
  std::string comment;
  std::string summand_text;
  HyperTerm summand;
  Support support;
  std::optional<ClosedForm> claimed_value;
  std::optional<Recurrence> claimed_recurrence;
  std::map<std::int64_t, Rational> initial_values;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 100;
  bool discover = false;
  Route route;
};

struct Corpus {
  int version = 1;
  std::vector<IdentityEntry> entries;
};

Corpus parse_corpus(const std::string& json_text);
Corpus load_corpus(const std::string& path);

struct RunOptions {
  int max_order = 4;
  std::optional<std::pair<std::int64_t, std::int64_t>> range_override;
  int jobs = 1;
};

// Outcome of one value check over the range; first_failure is the smallest
// failing n.
struct CheckResult {
  bool passed = true;
  std::optional<std::int64_t> first_failure;
  std::vector<std::int64_t> failures;
  std::string detail;
};

struct DiscoveryResult {
  bool found = false;
  int order = 0;
  std::vector<std::string> coefficients;  // backward a_j(n)
  std::string certificate;
  std::string digest;
  bool verified = false;
  std::optional<bool> matches_claimed;
};

struct EntryReport {
  std::string name;
  bool passed = true;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
  std::vector<std::pair<std::int64_t, std::string>> sums;
  std::optional<CheckResult> closed_form;
  std::optional<CheckResult> recurrence;
  std::optional<CheckResult> initial_values;
  std::optional<CheckResult> route;
  std::optional<DiscoveryResult> discovery;
  std::vector<std::string> failures;
  double elapsed_ms = 0;
};

struct Report {
  std::vector<EntryReport> entries;
  bool passed() const;
};

// Entries run independently (in parallel when jobs > 1); the report keeps
// corpus order.
Report run_corpus(const Corpus& corpus, const RunOptions& options);
EntryReport run_entry(const IdentityEntry& entry, const RunOptions& options);

std::string report_to_text(const Report& report);
// Machine-readable JSON. Without timing the output is deterministic.
std::string report_to_json(const Report& report, bool include_timing = true);

}  // namespace telescope
