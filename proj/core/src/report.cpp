#include <sstream>

#include "json.hpp"
#include "telescope/corpus.hpp"

namespace telescope {
namespace {

using json = nlohmann::ordered_json;

json check_json(const CheckResult& c) {
  json j;
  j["passed"] = c.passed;
  j["first_failure"] = c.first_failure ? json(*c.first_failure) : json(nullptr);
  j["failures"] = c.failures;
  if (!c.detail.empty()) {
    j["detail"] = c.detail;
  }
  return j;
}

std::string check_text(const char* label, const std::optional<CheckResult>& c) {
  if (!c) {
    return "";
  }
  std::string s = std::string("  ") + label + ": " + (c->passed ? "ok" : "FAIL");
  if (c->first_failure) {
    s += " (first failure at n=" + std::to_string(*c->first_failure) + ", " +
         std::to_string(c->failures.size()) + " failing)";
  }
  return s + "\n";
}

}  // namespace

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& e : report.entries) {
    passed += e.passed ? 1 : 0;
    out << (e.passed ? "PASS " : "FAIL ") << e.name << "  n=" << e.range_lo << ".." << e.range_hi << "\n";
    out << check_text("closed form", e.closed_form);
    out << check_text("initial values", e.initial_values);
    out << check_text("recurrence", e.recurrence);
    out << check_text("route", e.route);
    if (e.discovery) {
      const auto& d = *e.discovery;
      if (d.found) {
        out << "  discovered order " << d.order << ", certificate " << d.digest
            << (d.verified ? " verified" : " NOT verified");
        if (d.matches_claimed) {
          out << (*d.matches_claimed ? ", matches claimed" : ", differs from claimed");
        }
        out << "\n";
      } else {
        out << "  discovery: none\n";
      }
    }
    for (const auto& f : e.failures) {
      out << "  - " << f << "\n";
    }
  }
  out << passed << "/" << report.entries.size() << " entries passed\n";
  return out.str();
}

std::string report_to_json(const Report& report, bool include_timing) {
  json root;
  root["passed"] = report.passed();
  json entries = json::array();
  for (const auto& e : report.entries) {
    json j;
    j["name"] = e.name;
    j["passed"] = e.passed;
    j["range"] = {e.range_lo, e.range_hi};
    json sums = json::object();
    for (const auto& [n, v] : e.sums) {
      sums[std::to_string(n)] = v;
    }
    j["sums"] = std::move(sums);
    if (e.closed_form) {
      j["closed_form"] = check_json(*e.closed_form);
    }
    if (e.initial_values) {
      j["initial_values"] = check_json(*e.initial_values);
    }
    if (e.recurrence) {
      j["recurrence"] = check_json(*e.recurrence);
    }
    if (e.route) {
      j["route"] = check_json(*e.route);
    }
    if (e.discovery) {
      const auto& d = *e.discovery;
      json dj;
      dj["found"] = d.found;
      if (d.found) {
        dj["order"] = d.order;
        dj["coefficients"] = d.coefficients;
        dj["certificate"] = d.certificate;
        dj["digest"] = d.digest;
        dj["verified"] = d.verified;
        dj["matches_claimed"] = d.matches_claimed ? json(*d.matches_claimed) : json(nullptr);
      }
      j["discovery"] = std::move(dj);
    }
    j["failures"] = e.failures;
    if (include_timing) {
      j["elapsed_ms"] = e.elapsed_ms;
    }
    entries.push_back(std::move(j));
  }
  root["entries"] = std::move(entries);
  return root.dump(2) + "\n";
}

}  // namespace telescope
