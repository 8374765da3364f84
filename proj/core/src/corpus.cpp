#include "telescope/corpus.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "telescope/errors.hpp"
#include "telescope/hypergeometric.hpp"
#include "telescope/poly_parse.hpp"
#include "telescope/summand_parser.hpp"

namespace telescope {
namespace {

using json = nlohmann::json;

std::string required_string(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_string()) {
    throw CorpusError(where + ": missing string field '" + key + "'");
  }
  return obj.at(key).get<std::string>();
}

template <typename F>
auto with_context(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw CorpusError(where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CorpusError(where + ": " + e.what());
  }
}

ClosedForm closed_form_field(const json& obj, const char* key, const std::string& where) {
  const std::string text = required_string(obj, key, where);
  return with_context(where + "." + key, [&] { return ClosedForm::parse(text); });
}

std::vector<ClosedForm> closed_form_list(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_array()) {
    throw CorpusError(where + ": missing array field '" + key + "'");
  }
  std::vector<ClosedForm> out;
  for (const auto& item : obj.at(key)) {
    if (!item.is_string()) {
      throw CorpusError(where + "." + key + ": parameters must be strings");
    }
    out.push_back(with_context(where + "." + key, [&] { return ClosedForm::parse(item.get<std::string>()); }));
  }
  return out;
}

Route parse_route(const json& obj, const std::string& where) {
  Route route;
  const std::string kind = required_string(obj, "kind", where);
  if (kind == "sum") {
    route.kind = Route::Kind::sum;
  } else if (kind == "watson-chu") {
    route.kind = Route::Kind::watson_chu;
    for (const char* key : {"a", "b", "c"}) {
      route.upper.push_back(closed_form_field(obj, key, where));
    }
  } else if (kind == "gamma-split") {
    route.kind = Route::Kind::gamma_split;
  } else if (kind == "pfq") {
    route.kind = Route::Kind::pfq;
    route.upper = closed_form_list(obj, "upper", where);
    route.lower = closed_form_list(obj, "lower", where);
    if (obj.contains("series_value")) {
      route.series_value = closed_form_field(obj, "series_value", where);
    }
  } else {
    throw CorpusError(where + ": unknown route kind '" + kind + "'");
  }
  if (obj.contains("prefactor")) {
    route.prefactor = closed_form_field(obj, "prefactor", where);
  }
  return route;
}

IdentityEntry parse_entry(const json& obj, std::size_t index) {
  if (!obj.is_object()) {
    throw CorpusError("entry #" + std::to_string(index) + " is not an object");
  }
  IdentityEntry e;
  e.name = required_string(obj, "name", "entry #" + std::to_string(index));
  const std::string where = "entry '" + e.name + "'";
  if (obj.contains("comment")) {
    e.comment = obj.at("comment").get<std::string>();
  }
  e.summand_text = required_string(obj, "summand", where);
  e.summand = with_context(where + ".summand", [&] { return parse_summand(e.summand_text); });

  if (!obj.contains("support") || !obj.at("support").is_object()) {
    throw CorpusError(where + ": missing object field 'support'");
  }
  const json& sup = obj.at("support");
  e.support = with_context(where + ".support", [&] {
    return Support::parse(required_string(sup, "lower", where + ".support"),
                          required_string(sup, "upper", where + ".support"));
  });

  if (obj.contains("claimed_value")) {
    e.claimed_value = closed_form_field(obj, "claimed_value", where);
  }
  if (obj.contains("claimed_recurrence")) {
    const json& rec = obj.at("claimed_recurrence");
    const std::string rwhere = where + ".claimed_recurrence";
    if (rec.contains("convention") && rec.at("convention") != "backward") {
      throw CorpusError(rwhere + ": only the backward convention is supported");
    }
    if (!rec.contains("coeffs") || !rec.at("coeffs").is_array()) {
      throw CorpusError(rwhere + ": missing array field 'coeffs'");
    }
    Recurrence r;
    for (const auto& c : rec.at("coeffs")) {
      r.coeffs.push_back(with_context(rwhere, [&] { return parse_poly_n(c.get<std::string>()); }));
    }
    if (rec.contains("order") && rec.at("order").get<int>() != r.order()) {
      throw CorpusError(rwhere + ": order does not match the number of coefficients");
    }
    if (r.order() < 1 || r.coeffs.front().is_zero()) {
      throw CorpusError(rwhere + ": need order >= 1 and a nonzero a_0");
    }
    e.claimed_recurrence = std::move(r);
  }
  if (obj.contains("initial_values")) {
    for (const auto& [key, value] : obj.at("initial_values").items()) {
      const std::int64_t n = with_context(where + ".initial_values", [&] { return std::stoll(key); });
      e.initial_values[n] =
          with_context(where + ".initial_values", [&] { return Rational::parse(value.get<std::string>()); });
    }
  }
  if (obj.contains("check_range")) {
    const json& r = obj.at("check_range");
    if (!r.is_array() || r.size() != 2) {
      throw CorpusError(where + ": check_range must be [lo, hi]");
    }
    e.range_lo = r.at(0).get<std::int64_t>();
    e.range_hi = r.at(1).get<std::int64_t>();
    if (e.range_lo < 0 || e.range_hi < e.range_lo) {
      throw CorpusError(where + ": check_range needs 0 <= lo <= hi");
    }
  }
  if (obj.contains("discover")) {
    e.discover = obj.at("discover").get<bool>();
  }
  if (obj.contains("route")) {
    e.route = parse_route(obj.at("route"), where + ".route");
  }
  return e;
}

// Records per-n outcomes of one check.
class Checker {
 public:
  void record(std::int64_t n, bool ok) {
    if (!ok) {
      result_.passed = false;
      result_.failures.push_back(n);
      if (!result_.first_failure) {
        result_.first_failure = n;
      }
    }
  }
  void fail(const std::string& detail) {
    result_.passed = false;
    if (result_.detail.empty()) {
      result_.detail = detail;
    }
  }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

HalfInt half_int_at(const ClosedForm& f, std::int64_t n) {
  try {
    return HalfInt::from_rational(f.eval(n));
  } catch (const std::invalid_argument& e) {
    throw EvalError("parameter '" + f.text() + "' at n=" + std::to_string(n) + ": " + e.what());
  }
}

Rational route_value(const Route& route, std::int64_t n, Checker& checker) {
  const Rational prefactor = route.prefactor ? route.prefactor->eval(n) : Rational(1);
  switch (route.kind) {
    case Route::Kind::sum:
      return Rational();
    case Route::Kind::watson_chu: {
      const HalfInt a = half_int_at(route.upper[0], n);
      const HalfInt b = half_int_at(route.upper[1], n);
      const HalfInt c = half_int_at(route.upper[2], n);
      const HalfInt one = HalfInt::from_int(1);
      // Both Watson evaluations must agree with direct summation.
      if (!(watson_w00(a, b, c).rational() == pfq_terminating(w00_spec(a, b, c)))) {
        checker.fail("Watson W00 disagrees with direct summation at n=" + std::to_string(n));
        checker.record(n, false);
      }
      if (!(a.value() * b.value()).is_zero() &&
          !(watson_w00(a + one, b + one, c + one).rational() ==
            pfq_terminating(w00_spec(a + one, b + one, c + one)))) {
        checker.fail("Watson W00(a+1,b+1,c+1) disagrees with direct summation at n=" + std::to_string(n));
        checker.record(n, false);
      }
      const Rational w01 = chu_w01(a, b, c);
      if (!(w01 == pfq_terminating(w01_spec(a, b, c)))) {
        checker.fail("Chu W01 reduction disagrees with direct summation at n=" + std::to_string(n));
        checker.record(n, false);
      }
      return prefactor * w01;
    }
    case Route::Kind::gamma_split: {
      const GammaProduct g = n % 2 == 0 ? closed_form_F_exact(n) : closed_form_G_exact(n);
      if (!g.is_rational()) {
        checker.fail("Gamma closed form leaves a power of pi at n=" + std::to_string(n));
        checker.record(n, false);
        return Rational();
      }
      return prefactor * (n % 2 == 0 ? g.coeff : -g.coeff);
    }
    case Route::Kind::pfq: {
      PFQSpec spec;
      for (const auto& u : route.upper) {
        spec.upper.push_back(half_int_at(u, n));
      }
      for (const auto& l : route.lower) {
        spec.lower.push_back(half_int_at(l, n));
      }
      const Rational series = pfq_terminating(spec);
      if (route.series_value && !(series == route.series_value->eval(n))) {
        checker.fail("series value differs from '" + route.series_value->text() + "' at n=" +
                     std::to_string(n));
        checker.record(n, false);
      }
      return prefactor * series;
    }
  }
  return Rational();
}

const char* route_name(Route::Kind kind) {
  switch (kind) {
    case Route::Kind::sum:
      return "sum";
    case Route::Kind::watson_chu:
      return "watson-chu";
    case Route::Kind::gamma_split:
      return "gamma-split";
    case Route::Kind::pfq:
      return "pfq";
  }
  return "?";
}

void note_failure(EntryReport& report, const std::string& what, const CheckResult& check) {
  if (check.passed) {
    return;
  }
  std::string msg = what + " failed";
  if (check.first_failure) {
    msg += "; first counterexample n=" + std::to_string(*check.first_failure);
  }
  if (!check.detail.empty()) {
    msg += " (" + check.detail + ")";
  }
  report.failures.push_back(msg);
  report.passed = false;
}

}  // namespace

Corpus parse_corpus(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CorpusError(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw CorpusError("corpus root must be an object");
  }
  Corpus corpus;
  if (doc.contains("version")) {
    corpus.version = doc.at("version").get<int>();
    if (corpus.version != 1) {
      throw CorpusError("unsupported corpus version " + std::to_string(corpus.version));
    }
  }
  if (!doc.contains("entries")) {
    return corpus;
  }
  if (!doc.at("entries").is_array()) {
    throw CorpusError("'entries' must be an array");
  }
  std::set<std::string> names;
  std::size_t index = 0;
  for (const auto& item : doc.at("entries")) {
    try {
      corpus.entries.push_back(parse_entry(item, index++));
    } catch (const json::exception& e) {
      throw CorpusError("entry #" + std::to_string(index - 1) + ": " + e.what());
    }
    if (!names.insert(corpus.entries.back().name).second) {
      throw CorpusError("duplicate entry name '" + corpus.entries.back().name + "'");
    }
  }
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw CorpusError("cannot open corpus file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

bool Report::passed() const {
  for (const auto& e : entries) {
    if (!e.passed) {
      return false;
    }
  }
  return true;
}

EntryReport run_entry(const IdentityEntry& entry, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  EntryReport report;
  report.name = entry.name;
  report.range_lo = options.range_override ? options.range_override->first : entry.range_lo;
  report.range_hi = options.range_override ? options.range_override->second : entry.range_hi;
  const std::int64_t lo = report.range_lo;
  const std::int64_t hi = report.range_hi;

  try {
    const int lookback = entry.claimed_recurrence ? entry.claimed_recurrence->order() : 0;
    std::map<std::int64_t, Rational> sums;
    for (std::int64_t n = std::max<std::int64_t>(0, lo - lookback); n <= hi; ++n) {
      sums.emplace(n, sum_exact(entry.summand, entry.support, n));
    }
    for (std::int64_t n = lo; n <= hi; ++n) {
      report.sums.emplace_back(n, sums.at(n).to_string());
    }

    if (entry.claimed_value) {
      Checker c;
      for (std::int64_t n = lo; n <= hi; ++n) {
        c.record(n, entry.claimed_value->eval(n) == sums.at(n));
      }
      report.closed_form = c.take();
      note_failure(report, "claimed value '" + entry.claimed_value->text() + "'", *report.closed_form);
    }

    if (!entry.initial_values.empty()) {
      Checker c;
      for (const auto& [n, v] : entry.initial_values) {
        const auto it = sums.find(n);
        const Rational actual = it != sums.end() ? it->second : sum_exact(entry.summand, entry.support, n);
        c.record(n, actual == v);
      }
      report.initial_values = c.take();
      note_failure(report, "initial values", *report.initial_values);
    }

    if (entry.claimed_recurrence) {
      const Recurrence& rec = *entry.claimed_recurrence;
      Checker c;
      for (std::int64_t n = std::max<std::int64_t>(lo, rec.order()); n <= hi; ++n) {
        c.record(n, check_recurrence_numeric(sums, rec, n, n));
      }
      report.recurrence = c.take();
      note_failure(report, "claimed recurrence", *report.recurrence);
    }

    if (entry.route.kind != Route::Kind::sum) {
      Checker c;
      for (std::int64_t n = lo; n <= hi; ++n) {
        c.record(n, route_value(entry.route, n, c) == sums.at(n));
      }
      report.route = c.take();
      note_failure(report, std::string("route ") + route_name(entry.route.kind), *report.route);
    }

    if (entry.discover) {
      DiscoveryResult d;
      if (auto found = zeilberger(entry.summand, options.max_order)) {
        d.found = true;
        d.order = found->recurrence.order();
        for (const auto& a : found->recurrence.coeffs) {
          d.coefficients.push_back(a.to_string());
        }
        d.certificate = found->certificate.serialize();
        d.digest = found->certificate.digest();
        d.verified = verify_certificate(entry.summand, entry.support, found->recurrence, found->certificate,
                                        std::max<std::int64_t>(lo, d.order), hi);
        if (entry.claimed_recurrence) {
          d.matches_claimed = proportional(found->recurrence, *entry.claimed_recurrence);
        }
        if (!d.verified) {
          report.failures.push_back("discovered certificate failed verification");
          report.passed = false;
        }
      } else {
        report.failures.push_back("no recurrence of order <= " + std::to_string(options.max_order) + " found");
        report.passed = false;
      }
      report.discovery = std::move(d);
    }
  } catch (const std::exception& e) {
    report.failures.push_back(std::string("error: ") + e.what());
    report.passed = false;
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Report run_corpus(const Corpus& corpus, const RunOptions& options) {
  Report report;
  report.entries.resize(corpus.entries.size());
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(1, options.jobs)), corpus.entries.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
      report.entries[i] = run_entry(corpus.entries[i], options);
    }
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < corpus.entries.size(); i = next++) {
        report.entries[i] = run_entry(corpus.entries[i], options);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  return report;
}

}  // namespace telescope
