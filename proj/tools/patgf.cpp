// patgf: counts, series and generating functions for pattern-restricted
// permutations.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 enumeration bound exceeded, 4 engine error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "patgf/json_io.hpp"
#include "patgf/patgf.hpp"
#include "patgf/verify.hpp"

namespace {

using nlohmann::json;
using namespace patgf;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kTooLarge = 3;
constexpr int kEngine = 4;

int censusBound() {
  if (const char* env = std::getenv("PATGF_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, std::string("PATGF_MAX_N is not an integer: ") + env);
    }
  }
  return CensusOptions{}.max_n;
}

struct QueryFlags {
  std::string avoid;
  std::string once;
  std::string at_least;
  bool implicit132 = false;

  void attach(CLI::App* app) {
    app->add_option("--avoid", avoid, "patterns to avoid, e.g. \"123;213\"");
    app->add_option("--exactly-once", once, "patterns contained exactly once");
    app->add_option("--at-least-once", at_least, "patterns contained at least once");
  }

  PatternQuery query() const {
    PatternQuery q(parsePatternSet(avoid), parsePatternSet(once), parsePatternSet(at_least));
    return implicit132 ? q.with132() : q;
  }
};

// "3" or "3..6".
std::pair<int, int> parseRange(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "bad range '" + text + "' (expected N or A..B)");
  }
}

json seriesJson(const PowerSeries& s) { return toJson(s); }

int runCount(const QueryFlags& flags, int n, bool as_json) {
  CensusOptions opts;
  opts.max_n = censusBound();
  const PatternQuery q = flags.query();
  const auto count = census(q, n, opts);
  if (as_json)
    std::cout << json{{"n", n}, {"count", std::to_string(count)}}.dump() << "\n";
  else
    std::cout << count << "\n";
  return kOk;
}

int runSeries(const QueryFlags& flags, int order, bool as_json) {
  CensusOptions opts;
  opts.max_n = censusBound();
  const auto counts = censusSeries(flags.query(), order, opts);
  const PowerSeries s = PowerSeries::fromCounts(counts);
  if (as_json)
    std::cout << json{{"series", seriesJson(s)}}.dump() << "\n";
  else
    std::cout << s.toString() << "\n";
  return kOk;
}

struct GfFlags {
  std::string source;
  std::optional<int> k;
  std::optional<int> l;
  std::string pattern;
  QueryFlags query;
  std::optional<int> order;
  bool as_json = false;
  bool descending = false;
};

int require(const std::optional<int>& v, const char* name) {
  if (!v) throw Error(ErrorCode::kParseError, std::string("--") + name + " is required for this source");
  return *v;
}

GfResult computeGf(const GfFlags& f) {
  if (f.source == "catalog:ulk") return {gfAvoidUlk(require(f.k, "k"), require(f.l, "l")), Provenance::kCatalog};
  if (f.source == "catalog:ulk-once") {
    const int k = require(f.k, "k");
    const int l = require(f.l, "l");
    const Permutation t = f.pattern.empty() ? Permutation::identity(k) : Permutation::parse(f.pattern);
    return {gfExactOnceUlk(k, l, t), Provenance::kCatalog};
  }
  if (f.source == "catalog:u2k-both") return {gfBothOnceU2k(require(f.k, "k")), Provenance::kCatalog};
  if (f.source == "catalog:u2k-both-corrected")
    return {gfBothOnceU2kCorrected(require(f.k, "k")), Provenance::kCatalog};
  if (f.source == "recurrence") {
    const PatternQuery q(parsePatternSet(f.query.avoid), parsePatternSet(f.query.once),
                         parsePatternSet(f.query.at_least));
    GfEngine engine;
    return engine.evaluate(q);
  }
  throw Error(ErrorCode::kParseError, "unknown source '" + f.source + "'");
}

int runGf(const GfFlags& f) {
  GfResult result;
  try {
    result = computeGf(f);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError || e.code() == ErrorCode::kInvalidPermutation) throw;
    std::cerr << "error: " << e.what() << "\n";
    return kEngine;
  }
  const TermOrder order = f.descending ? TermOrder::kDescending : TermOrder::kAscending;
  if (f.as_json) {
    json out = toJson(result.value);
    out["provenance"] = provenanceName(result.provenance);
    out["text"] = result.value.toString(order);
    if (f.order) out["series"] = seriesJson(result.value.series(*f.order));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << result.value.toString(order) << "\n";
    if (f.order) std::cout << result.value.series(*f.order).toString() << "\n";
  }
  return kOk;
}

int runVerify(const std::string& suite, int order, int max_n, const std::string& out_path) {
  verify::Options opts;
  opts.order = order;
  opts.max_n = max_n;
  opts.census.max_n = censusBound();
  if (max_n > opts.census.max_n)
    throw Error(ErrorCode::kLengthTooLarge, "--max-n " + std::to_string(max_n) + " exceeds the enumeration bound " +
                                                std::to_string(opts.census.max_n));
  const verify::Report report = verify::runSuite(suite, opts);
  const std::string text = report.toJson(suite).dump(2);
  std::cout << text << "\n";
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw Error(ErrorCode::kParseError, "cannot write " + out_path);
    file << text << "\n";
  }
  return report.passed() ? kOk : kVerifyFailed;
}

int runTable(const std::string& family, const std::string& k_range, const std::string& l_range, int order,
             bool as_json) {
  const auto [k_lo, k_hi] = parseRange(k_range);
  const auto [l_lo, l_hi] = parseRange(l_range);
  json rows = json::array();
  std::vector<std::string> lines;
  const auto emit = [&](int k, std::optional<int> l, const RationalFunction& f) {
    const PowerSeries s = f.series(order);
    json row{{"k", k}, {"series", seriesJson(s)}};
    std::string label = "k=" + std::to_string(k);
    if (l) {
      row["l"] = *l;
      label += " l=" + std::to_string(*l);
    }
    rows.push_back(row);
    lines.push_back(label + "\t" + s.toString());
  };
  GfEngine engine;
  for (int k = k_lo; k <= k_hi; ++k) {
    if (family == "ulk") {
      for (int l = l_lo; l <= std::min(l_hi, k); ++l) emit(k, l, gfAvoidUlk(k, l));
    } else if (family == "ulk-once") {
      for (int l = l_lo; l <= std::min(l_hi, k - 1); ++l) emit(k, l, gfExactOnceUlk(k, l, Permutation::identity(k)));
    } else if (family == "u2k-both") {
      emit(k, std::nullopt, gfBothOnceU2k(k));
    } else if (family == "u2k-both-corrected") {
      emit(k, std::nullopt, gfBothOnceU2kCorrected(k, engine));
    } else {
      throw Error(ErrorCode::kParseError, "unknown family '" + family + "'");
    }
  }
  if (as_json) {
    std::cout << json{{"family", family}, {"order", order}, {"rows", rows}}.dump() << "\n";
  } else {
    for (const auto& line : lines) std::cout << line << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating functions for pattern-restricted permutations"};
  app.require_subcommand(1, 1);

  QueryFlags count_flags;
  int count_n = 0;
  bool count_json = false;
  auto* count = app.add_subcommand("count", "exhaustive count of one length");
  count_flags.attach(count);
  count->add_option("--n", count_n, "permutation length")->required();
  count->add_flag("--implicit-132", count_flags.implicit132, "also avoid 132");
  count->add_flag("--json", count_json);

  QueryFlags series_flags;
  int series_order = 10;
  bool series_json = false;
  auto* series = app.add_subcommand("series", "exhaustive counts for lengths 0..order");
  series_flags.attach(series);
  series->add_option("--order", series_order)->capture_default_str();
  series->add_flag("--implicit-132", series_flags.implicit132, "also avoid 132");
  series->add_flag("--json", series_json);

  GfFlags gf_flags;
  auto* gf = app.add_subcommand("gf", "generating function (always inside S_n(132))");
  gf->add_option("source", gf_flags.source,
                 "catalog:ulk | catalog:ulk-once | catalog:u2k-both | catalog:u2k-both-corrected | recurrence")
      ->required();
  gf->add_option("--k", gf_flags.k);
  gf->add_option("--l", gf_flags.l);
  gf->add_option("--pattern", gf_flags.pattern, "member of U_l^k for catalog:ulk-once");
  gf_flags.query.attach(gf);
  gf->add_option("--order", gf_flags.order, "also print the series to this order");
  gf->add_flag("--json", gf_flags.as_json);
  gf->add_flag("--descending", gf_flags.descending, "render highest powers first");

  std::string suite = "all";
  int verify_order = 10;
  int verify_max_n = 9;
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(verify::suiteNames()))->capture_default_str();
  verify_cmd->add_option("--order", verify_order)->capture_default_str();
  verify_cmd->add_option("--max-n", verify_max_n)->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "also write the JSON report here");

  std::string family;
  std::string k_range = "3";
  std::string l_range = "1";
  int table_order = 10;
  bool table_json = false;
  auto* table = app.add_subcommand("table", "coefficient table for a closed-form family");
  table->add_option("--family", family, "ulk | ulk-once | u2k-both | u2k-both-corrected")->required();
  table->add_option("--k", k_range, "N or A..B")->capture_default_str();
  table->add_option("--l", l_range, "N or A..B")->capture_default_str();
  table->add_option("--order", table_order)->capture_default_str();
  table->add_flag("--json", table_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return runCount(count_flags, count_n, count_json);
    if (*series) return runSeries(series_flags, series_order, series_json);
    if (*gf) return runGf(gf_flags);
    if (*verify_cmd) return runVerify(suite, verify_order, verify_max_n, verify_out);
    if (*table) return runTable(family, k_range, l_range, table_order, table_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::kLengthTooLarge) return kTooLarge;
    if (*gf || *table) {
      if (e.code() == ErrorCode::kParseError || e.code() == ErrorCode::kInvalidPermutation) return kUsage;
      return kEngine;
    }
    return kUsage;
  }
  return kUsage;
}
