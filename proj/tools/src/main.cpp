#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "telescope/corpus.hpp"
#include "telescope/errors.hpp"
#include "telescope/hypergeometric.hpp"
#include "telescope/summand_parser.hpp"
#include "telescope/zeilberger.hpp"

namespace {

using namespace telescope;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "--upper -2,-3" would otherwise be read as a flag followed by a flag.
std::vector<std::string> join_negative_values(int argc, char** argv) {
  static const std::set<std::string> valued = {"--summand", "--lower", "--upper", "--max-order", "--corpus",
                                               "--range",   "--jobs",  "--report", "--a",        "--b",
                                               "--c",       "--reduce", "--json"};
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (valued.count(arg) && i + 1 < argc && argv[i + 1][0] == '-' && argv[i + 1][1] != '-') {
      out.push_back(arg + "=" + argv[++i]);
    } else {
      out.push_back(arg);
    }
  }
  return out;
}

std::vector<HalfInt> parse_params(const std::string& list, const char* what) {
  std::vector<HalfInt> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(HalfInt::parse(item));
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": '" + item + "' is not an integer or half-integer");
    }
  }
  return out;
}

HalfInt parse_param(const std::string& text, const char* what) {
  const auto v = parse_params(text, what);
  if (v.size() != 1) {
    throw UsageError(std::string(what) + ": expected a single value");
  }
  return v.front();
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw UsageError("--range expects A..B");
  }
  try {
    std::size_t used = 0;
    const std::int64_t lo = std::stoll(text.substr(0, dots), &used);
    const std::string rest = text.substr(dots + 2);
    std::size_t used_hi = 0;
    const std::int64_t hi = std::stoll(rest, &used_hi);
    if (used != dots || used_hi != rest.size() || lo < 0 || hi < lo) {
      throw UsageError("");
    }
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("--range expects A..B with 0 <= A <= B");
  }
}

int run_prove(const std::string& summand, const std::string& lower, const std::string& upper, int max_order,
              const std::string& json_path) {
  const HyperTerm t = parse_summand(summand);
  const Support support = Support::parse(lower, upper);
  const auto found = zeilberger(t, max_order);
  if (!found) {
    std::cout << "no recurrence of order <= " << max_order << " found\n";
    return kExitFail;
  }
  const Recurrence& rec = found->recurrence;
  const std::int64_t hi = 30;
  const bool verified = verify_certificate(t, support, rec, found->certificate, rec.order(), hi);
  std::cout << "summand:     " << t.to_string() << "\n";
  std::cout << "order:       " << rec.order() << "\n";
  std::cout << "recurrence:  " << rec.to_string() << "\n";
  std::cout << "certificate: " << found->certificate.serialize() << "\n";
  std::cout << "digest:      " << found->certificate.digest() << "\n";
  std::cout << "verified:    " << (verified ? "yes" : "no") << " (n=" << rec.order() << ".." << hi << ")\n";
  if (!json_path.empty()) {
    nlohmann::ordered_json j;
    j["summand"] = t.to_string();
    j["support"] = {lower, upper};
    j["order"] = rec.order();
    std::vector<std::string> coeffs;
    for (const auto& a : rec.coeffs) {
      coeffs.push_back(a.to_string());
    }
    j["coefficients"] = coeffs;
    j["convention"] = "backward";
    j["certificate"] = found->certificate.serialize();
    j["digest"] = found->certificate.digest();
    j["verified"] = verified;
    const std::string text = j.dump(2) + "\n";
    if (json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream(json_path) << text;
    }
  }
  return verified ? kExitPass : kExitFail;
}

int run_verify(const std::string& corpus_path, const std::string& range, int jobs, const std::string& report_path,
               bool timing) {
  RunOptions options;
  options.jobs = jobs;
  if (!range.empty()) {
    options.range_override = parse_range(range);
  }
  const Corpus corpus = load_corpus(corpus_path);
  const Report report = run_corpus(corpus, options);
  std::cout << report_to_text(report);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      throw UsageError("cannot write report file '" + report_path + "'");
    }
    out << report_to_json(report, timing);
  }
  return report.passed() ? kExitPass : kExitFail;
}

int run_eval3f2(const std::string& upper, const std::string& lower) {
  PFQSpec spec{parse_params(upper, "--upper"), parse_params(lower, "--lower")};
  if (spec.upper.size() != 3 || spec.lower.size() != 2) {
    throw UsageError("eval3f2 needs three upper and two lower parameters");
  }
  std::cout << pfq_terminating(spec).to_string() << "\n";
  return kExitPass;
}

int run_watson(const std::string& a, const std::string& b, const std::string& c, const std::string& reduce) {
  const HalfInt ha = parse_param(a, "--a");
  const HalfInt hb = parse_param(b, "--b");
  const HalfInt hc = parse_param(c, "--c");
  if (reduce.empty()) {
    std::cout << watson_w00(ha, hb, hc).rational().to_string() << "\n";
  } else if (reduce == "w01") {
    std::cout << chu_w01(ha, hb, hc).to_string() << "\n";
  } else {
    throw UsageError("--reduce supports only w01");
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact creative telescoping and terminating hypergeometric evaluation", "telescope"};
  app.require_subcommand(1);

  std::string summand, lower, upper, json_path;
  int max_order = 4;
  auto* prove = app.add_subcommand("prove", "Find and verify a recurrence for sum_k f(n,k)");
  prove->add_option("--summand", summand, "Summand, e.g. \"(-1)^k * binom(n,k)\"")->required();
  prove->add_option("--lower", lower, "Lower summation bound")->required();
  prove->add_option("--upper", upper, "Upper summation bound")->required();
  prove->add_option("--max-order", max_order, "Largest recurrence order tried")->check(CLI::Range(1, 8));
  prove->add_option("--json", json_path, "Also write JSON output to FILE ('-' for stdout)");

  std::string corpus_path, range, report_path;
  int jobs = 1;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Check every identity in a corpus file");
  verify->add_option("--corpus", corpus_path, "Corpus file (JSON)")->required();
  verify->add_option("--range", range, "Override the n range as A..B");
  verify->add_option("--jobs", jobs, "Entries checked in parallel")->check(CLI::Range(1, 256));
  verify->add_option("--report", report_path, "Write a JSON report to FILE");
  verify->add_flag("--no-timing", no_timing, "Omit timing fields from the JSON report");

  std::string upper_params, lower_params;
  auto* eval3f2 = app.add_subcommand("eval3f2", "Sum a terminating 3F2 at 1 exactly");
  eval3f2->add_option("--upper", upper_params, "a,b,c")->required();
  eval3f2->add_option("--lower", lower_params, "d,e")->required();

  std::string wa, wb, wc, reduce;
  auto* watson = app.add_subcommand("watson", "3F2(a,b,c; (1+a+b)/2, 2c; 1) by Watson's formula");
  watson->add_option("--a", wa)->required();
  watson->add_option("--b", wb)->required();
  watson->add_option("--c", wc)->required();
  watson->add_option("--reduce", reduce, "w01: raise the second lower parameter to 2c+1");

  std::vector<std::string> args = join_negative_values(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*prove) {
      return run_prove(summand, lower, upper, max_order, json_path);
    }
    if (*verify) {
      return run_verify(corpus_path, range, jobs, report_path, !no_timing);
    }
    if (*eval3f2) {
      return run_eval3f2(upper_params, lower_params);
    }
    return run_watson(wa, wb, wc, reduce);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CorpusError& e) {
    std::cerr << "corpus error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
