#ifndef PATGF_VERIFY_HPP
#define PATGF_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "patgf/catalog.hpp"
#include "patgf/census.hpp"
#include "patgf/chebyshev.hpp"
#include "patgf/engine.hpp"
#include "patgf/errors.hpp"
#include "patgf/rational_function.hpp"

namespace patgf::verify {

enum class Status { kPass, kFail, kReport };

constexpr std::string_view statusName(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kReport: return "report";
  }
  return "unknown";
}

struct Check {
  std::string name;
  Status status;
  std::string expected;
  std::string actual;
};

struct Options {
  int order = 10;
  int max_n = 9;
  CensusOptions census{};
};

class Report {
 public:
  void add(std::string name, bool ok, std::string expected, std::string actual) {
    checks_.push_back({std::move(name), ok ? Status::kPass : Status::kFail, std::move(expected), std::move(actual)});
  }
  void note(std::string name, std::string expected, std::string actual) {
    checks_.push_back({std::move(name), Status::kReport, std::move(expected), std::move(actual)});
  }
  template <typename T>
  void equal(std::string name, const T& expected, const T& actual) {
    add(std::move(name), expected == actual, str(expected), str(actual));
  }
  // Runs fn and records any library error as a failed check.
  void guarded(const std::string& name, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      add(name, false, "no error", e.what());
    }
  }

  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool passed() const {
    return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::kFail; });
  }
  void append(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

  nlohmann::json toJson(std::string_view suite) const {
    auto arr = nlohmann::json::array();
    for (const auto& c : checks_)
      arr.push_back({{"name", c.name}, {"status", statusName(c.status)}, {"expected", c.expected}, {"actual", c.actual}});
    return {{"suite", suite}, {"passed", passed()}, {"checks", arr}};
  }

 private:
  static std::string str(const RationalFunction& f) { return f.toString(); }
  static std::string str(const PowerSeries& s) { return s.toString(); }
  static std::string str(const Polynomial& p) { return p.toString(); }

  std::vector<Check> checks_;
};

/// Integer polynomials of degree <= 3 with coefficients in [-3, 3].
inline std::vector<Polynomial> randomSmallPolynomials(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> degree(0, 3);
  std::vector<Polynomial> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Rational> c(degree(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    out.emplace_back(std::move(c));
  }
  return out;
}

/// E battery for the continued-fraction identities: 0, 1, 1 + x and twenty
/// seeded random small polynomials.
inline std::vector<RationalFunction> continuedFractionBattery() {
  std::vector<RationalFunction> es{RationalFunction{}, RationalFunction::constant(1), Polynomial{1, 1}};
  for (auto& p : randomSmallPolynomials(20, 20011)) es.emplace_back(std::move(p));
  return es;
}

/// Compares the first order + 1 coefficients of f with exhaustive counts of q
/// (132 adjoined).
inline void seriesAgainstOracle(Report& report, const std::string& name, const RationalFunction& f,
                                const PatternQuery& q, int order, const CensusOptions& census_opts) {
  report.guarded(name, [&] {
    report.equal(name, PowerSeries::fromCounts(censusSeries(q.with132(), order, census_opts)), f.series(order));
  });
}

inline Report algebraSuite(const Options& opts) {
  Report r;
  const Polynomial x = Polynomial::x();
  r.equal("poly mul (1-x)(1+x)", Polynomial{1, 0, -1}, Polynomial{1, -1} * Polynomial{1, 1});
  r.equal("poly mul (1-x)(1-2x)", Polynomial{1, -3, 2}, Polynomial{1, -1} * Polynomial{1, -2});
  r.equal("rf div 1/(1-x-x^2)", RationalFunction(Polynomial{1}, Polynomial{1, -1, -1}),
          RationalFunction::constant(1) / RationalFunction(Polynomial{1, -1, -1}));
  r.equal("rf add x/(1-x) + 1", RationalFunction(Polynomial{1}, Polynomial{1, -1}),
          RationalFunction(x, Polynomial{1, -1}) + RationalFunction::constant(1));
  r.equal("normalize (1-x^2)/(1-x)", RationalFunction(Polynomial{1, 1}), rfNormalize(Polynomial{1, 0, -1}, Polynomial{1, -1}));
  r.equal("series 1/(1-x-x^2)", PowerSeries::fromCounts({1, 1, 2, 3, 5, 8}),
          RationalFunction(Polynomial{1}, Polynomial{1, -1, -1}).series(5));

  std::mt19937 rng(7);
  auto polys = randomSmallPolynomials(60, 99);
  std::uniform_int_distribution<std::size_t> pick(0, polys.size() - 1);
  const auto rf = [&] {
    Polynomial den = polys[pick(rng)];
    if (den.isZero()) den = Polynomial{1};
    return RationalFunction(polys[pick(rng)], den);
  };
  bool assoc = true, distrib = true, inverse = true, series_mul = true;
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = rf(), b = rf(), c = rf();
    assoc = assoc && (a * b) * c == a * (b * c) && (a + b) + c == a + (b + c);
    distrib = distrib && a * (b + c) == a * b + a * c;
    if (!a.isZero()) inverse = inverse && a * (RationalFunction::constant(1) / a) == RationalFunction::constant(1);
    if (a.den().coeff(0) != 0 && b.den().coeff(0) != 0)
      series_mul = series_mul && (a * b).series(opts.order) == a.series(opts.order) * b.series(opts.order);
  }
  r.add("random associativity", assoc, "true", assoc ? "true" : "false");
  r.add("random distributivity", distrib, "true", distrib ? "true" : "false");
  r.add("random inverses", inverse, "true", inverse ? "true" : "false");
  r.add("series multiplicative", series_mul, "true", series_mul ? "true" : "false");
  return r;
}

inline Report chebyshevSuite(const Options&) {
  Report r;
  const auto battery = continuedFractionBattery();
  for (std::size_t e = 0; e < battery.size(); ++e) {
    const auto& E = battery[e];
    r.guarded("cf identities E#" + std::to_string(e), [&] {
      RationalFunction product = RationalFunction::constant(1);
      bool closed_ok = true, product_ok = true;
      std::string first_bad;
      for (int k = 1; k <= 16; ++k) {
        const RationalFunction iter = cfIterative(k, E);
        product *= iter;
        if (cfClosed(k, E) != iter && closed_ok) {
          closed_ok = false;
          first_bad = "closed k=" + std::to_string(k);
        }
        if (cfProductClosed(k, E) != product && product_ok) {
          product_ok = false;
          first_bad += " product k=" + std::to_string(k);
        }
      }
      r.add("cfClosed = cfIterative, k<=16, E=" + E.toString(), closed_ok, "equal", closed_ok ? "equal" : first_bad);
      r.add("cfProductClosed = product, k<=16, E=" + E.toString(), product_ok, "equal",
            product_ok ? "equal" : first_bad);
    });
  }
  const PowerSeries catalan = catalanSeries(12);
  for (int k = 1; k <= 12; ++k) {
    const PowerSeries s = cfIterative(k, RationalFunction{}).series(k - 1);
    r.equal("R_" + std::to_string(k) + " Catalan prefix", catalan.truncated(k - 1), s);
  }
  bool degrees = true;
  for (int k = 0; k <= 30; ++k) {
    const Polynomial q = reducedChebyshev(k);
    degrees = degrees && q.degree() == k / 2 && q.coeff(0) == 1;
  }
  r.add("deg q_k = floor(k/2), q_k(0) = 1", degrees, "true", degrees ? "true" : "false");
  for (int k = 1; k <= 12; ++k)
    r.equal("cfClosed(k,1) = cfClosed(k+1,0), k=" + std::to_string(k), cfClosed(k + 1, RationalFunction{}),
            cfClosed(k, RationalFunction::constant(1)));
  return r;
}

inline Report catalogSuite(const Options&) {
  Report r;
  GfEngine engine;
  r.guarded("closed forms", [&] {
    r.equal("F_{U_2^3} = 1/(1-x-x^2)", RationalFunction(Polynomial{1}, Polynomial{1, -1, -1}), gfAvoidUlk(3, 2));
    r.equal("F_{U_2^4} = (1-x-x^2)/(1-2x-x^2)", RationalFunction(Polynomial{1, -1, -1}, Polynomial{1, -2, -1}),
            gfAvoidUlk(4, 2));
    r.equal("F_{2341,3241} = (1-x-x^2)/(1-2x-x^2)",
            RationalFunction(Polynomial{1, -1, -1}, Polynomial{1, -2, -1}),
            engine.avoid(parsePatternSet("2341;3241")));
  });
  r.guarded("catalog vs recurrence", [&] {
    for (int l = 1; l <= 2; ++l)
      for (int k = l; k <= 6; ++k)
        r.equal("F_{U_" + std::to_string(l) + "^" + std::to_string(k) + "} catalog = recurrence",
                gfAvoidUlk(k, l), engine.avoid(ulkPatterns(k, l)));
    for (auto [k, l] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}}) {
      const auto family = ulkPatterns(k, l);
      for (const auto& t : family) {
        PatternSet others;
        for (const auto& u : family)
          if (u != t) others.push_back(u);
        r.equal("exactly-once " + t.toString() + " in U_" + std::to_string(l) + "^" + std::to_string(k) +
                    " catalog = recurrence",
                gfExactOnceUlk(k, l, t), engine.exact(others, {t}));
      }
    }
    for (int k = 3; k <= 6; ++k)
      r.equal("G_{U_2^" + std::to_string(k) + "} corrected closed form = recurrence",
              engine.exact({}, ulkPatterns(k, 2)), gfBothOnceU2kCorrected(k, engine));
  });
  r.guarded("U_2^k closed sum", [&] {
    r.equal("G_{U_2^3} closed sum is identically 0", RationalFunction{}, gfBothOnceU2k(3));
  });
  return r;
}

inline Report oracleSuite(const Options& opts) {
  Report r;
  const int n = opts.max_n;
  const auto& co = opts.census;
  for (int l = 1; l <= 2; ++l)
    for (int k = l; k <= 5; ++k)
      r.guarded("ulk", [&] {
        seriesAgainstOracle(r, "F_{U_" + std::to_string(l) + "^" + std::to_string(k) + "} vs census", gfAvoidUlk(k, l),
                            PatternQuery(ulkPatterns(k, l)), n, co);
      });
  for (auto [k, l] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
    const auto family = ulkPatterns(k, l);
    for (const auto& t : family) {
      PatternSet others;
      for (const auto& u : family)
        if (u != t) others.push_back(u);
      r.guarded("ulk-once", [&] {
        seriesAgainstOracle(r, "exactly-once " + t.toString() + " in U_" + std::to_string(l) + "^" + std::to_string(k) +
                                   " vs census",
                            gfExactOnceUlk(k, l, t), PatternQuery(others, {t}), n, co);
      });
    }
  }
  RationalFunction chain;  // F_{12...k} from F_{empty pattern} = 0
  for (int k = 1; k <= 5; ++k) {
    chain = liftByLargest(chain);
    seriesAgainstOracle(r, "lift chain R_" + std::to_string(k) + " vs census", chain,
                        PatternQuery({Permutation::identity(k)}), n, co);
  }

  r.guarded("u2k-both", [&] {
    GfEngine engine;
    for (int k = 3; k <= 5; ++k) {
      const auto q = PatternQuery({}, ulkPatterns(k, 2));
      const PowerSeries oracle = PowerSeries::fromCounts(censusSeries(q.with132(), n, co));
      const PowerSeries closed_sum = gfBothOnceU2k(k).series(n);
      const std::string label = "G_{U_2^" + std::to_string(k) + "}";
      if (k == 5)
        r.add(label + " closed sum vs census", closed_sum == oracle, oracle.toString(), closed_sum.toString());
      else
        r.note(label + " closed sum vs census (finding)", oracle.toString(), closed_sum.toString());
      r.equal(label + " corrected closed form vs census", oracle, gfBothOnceU2kCorrected(k, engine).series(n));
    }
  });

  r.guarded("base conventions", [&] {
    GfEngine engine;
    const PatternSet eps{Permutation{}};
    const PatternSet one{Permutation{1}};
    const auto zero_counts = censusSeries(PatternQuery(eps), n, co);
    r.equal("avoid {eps}: census is the zero series", PowerSeries::fromCounts(std::vector<std::uint64_t>(n + 1, 0)),
            PowerSeries::fromCounts(zero_counts));
    r.equal("avoid {eps}: engine is the zero series", PowerSeries::fromCounts(zero_counts), engine.avoid(eps).series(n));
    std::vector<std::uint64_t> unit(n + 1, 0);
    unit[0] = 1;
    r.equal("avoid {1}: census is 1,0,0,...", PowerSeries::fromCounts(unit),
            PowerSeries::fromCounts(censusSeries(PatternQuery(one), n, co)));
    r.equal("avoid {1}: engine is 1,0,0,...", PowerSeries::fromCounts(unit), engine.avoid(one).series(n));
  });
  return r;
}

inline Report recurrenceSuite(const Options& opts) {
  Report r;
  GfEngine engine;
  std::vector<PatternSet> avoid_battery{parsePatternSet("231"), parsePatternSet("231;1234"),
                                        parsePatternSet("2341;3241"), ulkPatterns(4, 2)};
  for (int k = 1; k <= 5; ++k) avoid_battery.push_back({Permutation::identity(k)});
  for (const auto& t : avoid_battery)
    r.guarded("avoid " + formatPatternSet(t), [&] {
      seriesAgainstOracle(r, "recurrence avoid {" + formatPatternSet(t) + "} vs census", engine.avoid(t),
                          PatternQuery(t), opts.max_n, opts.census);
    });
  const std::vector<std::pair<PatternSet, PatternSet>> exact_battery{
      {{}, parsePatternSet("1")}, {{}, parsePatternSet("12")}, {{}, parsePatternSet("123")},
      {parsePatternSet("213"), parsePatternSet("123")}};
  for (const auto& [a, b] : exact_battery)
    r.guarded("exact", [&] {
      seriesAgainstOracle(r, "recurrence avoid {" + formatPatternSet(a) + "} once {" + formatPatternSet(b) +
                                 "} vs census",
                          engine.exact(a, b), PatternQuery(a, b), opts.max_n, opts.census);
    });
  return r;
}

inline const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"algebra", "chebyshev", "oracle", "catalog", "recurrence", "all"};
  return names;
}

inline Report runSuite(std::string_view suite, const Options& opts) {
  if (suite == "algebra") return algebraSuite(opts);
  if (suite == "chebyshev") return chebyshevSuite(opts);
  if (suite == "oracle") return oracleSuite(opts);
  if (suite == "catalog") return catalogSuite(opts);
  if (suite == "recurrence") return recurrenceSuite(opts);
  if (suite == "all") {
    Report all;
    for (std::string_view s : {"algebra", "chebyshev", "catalog", "recurrence", "oracle"}) all.append(runSuite(s, opts));
    return all;
  }
  throw Error(ErrorCode::kParseError, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace patgf::verify

#endif  // PATGF_VERIFY_HPP
