#ifndef PATGF_ENGINE_HPP
#define PATGF_ENGINE_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patgf/census.hpp"
#include "patgf/decomposition.hpp"
#include "patgf/errors.hpp"
#include "patgf/inclusion_exclusion.hpp"
#include "patgf/permutation.hpp"
#include "patgf/rational_function.hpp"

// Generating functions over 132-avoiding permutations.
//
// Every nonempty 132-avoiding alpha splits as (alpha', n, alpha'') with all of
// alpha' above all of alpha''. Take a pattern tau with canonical decomposition
// (block_0, m_0, ..., block_r, m_r). An occurrence of tau in alpha puts some
// initial segment of tau into alpha' + n and the rest into alpha''; because
// every entry of block_i is below m_i, the only possible cut points are the
// start of tau and the positions right after each m_i. Write E = alpha' + n.
// The prefixes through m_i are nested, so E reaches some deepest level, and
// the suffixes after m_i are nested the other way. With n only able to play
// m_0, "E contains (block_0, m_0)" is the same as "alpha' contains block_0".
//
// Avoidance of tau, indexed by level j = 0..r:
//     alpha' avoids prefix(j) and contains prefix(j-1),  alpha'' avoids suffix(j).
//
// Exactly one occurrence of gamma, indexed by level s = -1..r (the unique cut
// that carries the occurrence):
//     s = -1:  alpha' avoids block_0;
//              alpha'' contains gamma exactly once.
//     s =  0:  alpha' contains block_0 exactly once and avoids (block_0, m_0);
//              alpha'' contains suffix(1) exactly once and avoids gamma.
//     s >= 1:  alpha' contains prefix(s) exactly once and avoids prefix(s+1);
//              alpha'' contains suffix(s+1) exactly once and avoids suffix(s).
// (prefix(r+1) imposes nothing and suffix(r+1) is empty.)
//
// Summing over the Cartesian product of levels gives
//     F = [no exactly-once patterns] + x * sum F(alpha' constraints) F(alpha'' constraints),
// with each "contains at least once" on the alpha' side removed by the
// inclusion-exclusion of exactOnceReduce (prefix(j-1) lies inside prefix(j)).
//
// A tempting variant of the s = 0 row asks alpha' to avoid prefix(1)
// (nothing when r = 0) instead of (block_0, m_0). It overcounts, e.g. for
// gamma = 21 or 213; ExactOnceReading::kPrefixOneRow keeps it for comparison.

namespace patgf {

enum class ExactOnceReading { kOracleValidated, kPrefixOneRow };

enum class Provenance { kCatalog, kRecurrence, kInclusionExclusion };

constexpr std::string_view provenanceName(Provenance p) {
  switch (p) {
    case Provenance::kCatalog: return "catalog";
    case Provenance::kRecurrence: return "recurrence";
    case Provenance::kInclusionExclusion: return "inclusion-exclusion";
  }
  return "unknown";
}

struct GfResult {
  RationalFunction value;
  Provenance provenance;
};

/// Memoized solver for F over 132-avoiders. Not reentrant; use one engine per
/// thread.
class GfEngine {
 public:
  explicit GfEngine(ExactOnceReading reading = ExactOnceReading::kOracleValidated) : reading_(reading) {}

  /// Generating function of S_n(132, T).
  RationalFunction avoid(const PatternSet& patterns) { return exact(patterns, {}); }

  /// Generating function of 132-avoiders that avoid A and contain each member
  /// of B exactly once.
  RationalFunction exact(const PatternSet& avoid_set, const PatternSet& once_set) {
    auto state = topLevel(avoid_set, once_set);
    if (!state) return {};
    if (state->avoid.empty() && state->exactly_once.empty())
      throw Error(ErrorCode::kPreconditionViolated, "at least one pattern is required");
    return solve(*state);
  }

  /// Full query; the at-least-once set is removed by inclusion-exclusion.
  GfResult evaluate(const PatternQuery& q) {
    if (q.atLeastOnce().empty()) return {exact(q.avoid(), q.exactlyOnce()), Provenance::kRecurrence};
    for (const auto& c : q.atLeastOnce())
      if (!avoids132(c)) return {RationalFunction{}, Provenance::kInclusionExclusion};
    const auto combo = atLeastOnceExpand(strip132(q.avoid()), q.atLeastOnce(), q.exactlyOnce());
    RationalFunction total = patgf::evaluate(combo, [&](const GfState& s) {
      return exact(s.avoid, s.exactly_once);
    });
    return {total, Provenance::kInclusionExclusion};
  }

  std::size_t memoSize() const noexcept { return memo_.size(); }

 private:
  struct Entry {
    std::optional<RationalFunction> value;  // empty while in progress
  };

  // One factor of a level choice: the constraints it puts on alpha' or alpha''.
  struct Side {
    PatternSet avoid;
    PatternSet once;
    std::vector<ContainmentPair> pairs;  // avoid outer, contain inner
  };
  struct Level {
    Side left;
    Side right;
  };

  static PatternSet strip132(const PatternSet& avoid_set) {
    PatternSet out;
    for (const auto& p : avoid_set)
      if (avoids132(p)) out.push_back(p);  // anything containing 132 is avoided already
    return out;
  }

  // nullopt when the query is identically zero.
  static std::optional<GfState> topLevel(const PatternSet& avoid_set, const PatternSet& once_set) {
    for (const auto& p : once_set)
      if (!avoids132(p)) return std::nullopt;
    return GfState::make(strip132(avoid_set), once_set);
  }

  static bool isZero(const GfState& s) {
    if (!s.avoid.empty() && s.avoid.front().empty()) return true;
    for (const auto& b : s.exactly_once)
      for (const auto& a : s.avoid)
        if (a.size() <= b.size() && containsPattern(b, a)) return true;
    return false;
  }

  const CanonicalDecomposition& decomposition(const Permutation& p) {
    auto it = decompositions_.find(p);
    if (it == decompositions_.end()) it = decompositions_.emplace(p, canonicalDecompose(p)).first;
    return it->second;
  }

  std::vector<Level> avoidLevels(const Permutation& tau) {
    const auto& d = decomposition(tau);
    std::vector<Level> out;
    for (int j = 0; j <= d.r(); ++j) {
      Level lv;
      if (j == 0)
        lv.left.avoid.push_back(d.prefix(0));
      else
        lv.left.pairs.push_back({d.prefix(j), d.prefix(j - 1)});
      lv.right.avoid.push_back(d.suffix(j));
      out.push_back(std::move(lv));
    }
    return out;
  }

  std::vector<Level> onceLevels(const Permutation& gamma) {
    const auto& d = decomposition(gamma);
    const int r = d.r();
    std::vector<Level> out;
    Level below;
    below.left.avoid.push_back(d.prefix(0));
    below.right.once.push_back(gamma);
    out.push_back(std::move(below));
    for (int s = 0; s <= r; ++s) {
      Level lv;
      if (s == 0) {
        lv.left.once.push_back(d.prefix(0));
        if (reading_ == ExactOnceReading::kOracleValidated)
          lv.left.avoid.push_back(d.throughMaximum(0));
        else if (r >= 1)
          lv.left.avoid.push_back(d.prefix(1));
      } else {
        lv.left.once.push_back(d.prefix(s));
        if (s < r) lv.left.avoid.push_back(d.prefix(s + 1));
      }
      lv.right.once.push_back(d.suffix(s + 1));
      lv.right.avoid.push_back(d.suffix(s));
      out.push_back(std::move(lv));
    }
    return out;
  }

  RationalFunction solve(const GfState& s) {
    if (isZero(s)) return {};
    if (auto it = memo_.find(s); it != memo_.end()) {
      if (!it->second.value)
        throw Error(ErrorCode::kCyclicStateReference, s.toString() + " is referenced while being solved");
      return *it->second.value;
    }
    memo_[s] = Entry{};
    RationalFunction value;
    try {
      value = compute(s);
    } catch (...) {
      memo_.erase(s);
      throw;
    }
    memo_[s].value = value;
    return value;
  }

  RationalFunction compute(const GfState& s) {
    const bool pure = s.exactly_once.empty();
    if (!s.avoid.empty() && s.avoid.front() == Permutation{1})
      return pure ? RationalFunction::constant(1) : RationalFunction{};
    if (s.avoid.empty() && pure)
      throw Error(ErrorCode::kNonRationalState, "the unrestricted 132-avoiders have a non-rational series");

    std::vector<std::vector<Level>> choices;
    for (const auto& tau : s.avoid) choices.push_back(avoidLevels(tau));
    for (const auto& gamma : s.exactly_once) choices.push_back(onceLevels(gamma));

    // F = constant + x * (known + self * F)
    RationalFunction known;
    RationalFunction self;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      Side left;
      Side right;
      for (std::size_t i = 0; i < choices.size(); ++i) {
        const Level& lv = choices[i][pick[i]];
        left.avoid.insert(left.avoid.end(), lv.left.avoid.begin(), lv.left.avoid.end());
        left.once.insert(left.once.end(), lv.left.once.begin(), lv.left.once.end());
        left.pairs.insert(left.pairs.end(), lv.left.pairs.begin(), lv.left.pairs.end());
        right.avoid.insert(right.avoid.end(), lv.right.avoid.begin(), lv.right.avoid.end());
        right.once.insert(right.once.end(), lv.right.once.begin(), lv.right.once.end());
      }
      accumulate(s, left, right, known, self);

      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }

    const RationalFunction x = Polynomial::x();
    const RationalFunction constant = pure ? RationalFunction::constant(1) : RationalFunction{};
    const RationalFunction denominator = RationalFunction::constant(1) - x * self;
    if (denominator.isZero())
      throw Error(ErrorCode::kDegenerateContinuedFraction, "self-reference of " + s.toString() + " is singular");
    return (constant + x * known) / denominator;
  }

  void accumulate(const GfState& current, const Side& left, const Side& right, RationalFunction& known,
                  RationalFunction& self) {
    const GfState right_state = GfState::make(right.avoid, right.once);
    if (isZero(right_state)) return;
    const bool right_is_self = right_state == current;
    const RationalFunction right_value = right_is_self ? RationalFunction{} : solve(right_state);

    RationalFunction left_known;
    int left_self = 0;
    for (const auto& term : exactOnceReduce(left.avoid, left.pairs, left.once)) {
      if (term.state == current) {
        left_self += term.sign;
      } else if (!isZero(term.state)) {
        const RationalFunction v = solve(term.state);
        left_known = term.sign > 0 ? left_known + v : left_known - v;
      }
    }

    if (right_is_self) {
      if (left_self != 0)
        throw Error(ErrorCode::kNonlinearSelfReference, current.toString() + " multiplies itself");
      self += left_known;
    } else {
      known += left_known * right_value;
      if (left_self != 0) self += RationalFunction::constant(left_self) * right_value;
    }
  }

  ExactOnceReading reading_;
  std::map<GfState, Entry> memo_;
  std::map<Permutation, CanonicalDecomposition> decompositions_;
};

/// Generating function of S_n(132, T).
inline RationalFunction blockRecurrenceAvoid(const PatternSet& patterns) { return GfEngine().avoid(patterns); }

/// 132-avoiders avoiding A and containing each member of B exactly once.
inline RationalFunction blockRecurrenceExact(const PatternSet& avoid_set, const PatternSet& once_set) {
  return GfEngine().exact(avoid_set, once_set);
}

}  // namespace patgf

#endif  // PATGF_ENGINE_HPP
