#ifndef PATGF_INCLUSION_EXCLUSION_HPP
#define PATGF_INCLUSION_EXCLUSION_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "patgf/decomposition.hpp"
#include "patgf/errors.hpp"
#include "patgf/permutation.hpp"

namespace patgf {

/// A pure (avoid, exactly-once) constraint pair, kept in canonical form:
/// both sets sorted and deduplicated, avoid patterns that contain another
/// avoid pattern dropped, and the empty pattern dropped from the exactly-once
/// side (it occurs exactly once in everything).
struct GfState {
  PatternSet avoid;
  PatternSet exactly_once;

  static GfState make(PatternSet avoid, PatternSet exactly_once) {
    GfState s;
    avoid = canonicalSet(std::move(avoid));
    for (std::size_t i = 0; i < avoid.size(); ++i) {
      bool redundant = false;
      // Canonical order puts shorter patterns first, so only earlier ones can be contained.
      for (std::size_t j = 0; j < s.avoid.size() && !redundant; ++j)
        redundant = containsPattern(avoid[i], s.avoid[j]);
      if (!redundant) s.avoid.push_back(std::move(avoid[i]));
    }
    for (auto& p : canonicalSet(std::move(exactly_once)))
      if (!p.empty()) s.exactly_once.push_back(std::move(p));
    return s;
  }

  friend bool operator==(const GfState&, const GfState&) = default;
  friend auto operator<=>(const GfState&, const GfState&) = default;

  std::string toString() const {
    return "F[avoid={" + formatPatternSet(avoid) + "}; once={" + formatPatternSet(exactly_once) + "}]";
  }
};

struct SignedState {
  int sign;
  GfState state;
};

using SignedCombination = std::vector<SignedState>;

/// sum_i sign_i * fn(state_i).
template <typename Fn>
auto evaluate(const SignedCombination& combo, Fn&& fn) -> decltype(fn(combo.front().state)) {
  using Value = decltype(fn(combo.front().state));
  Value total{};
  for (const auto& term : combo) {
    if (term.sign > 0)
      total = total + fn(term.state);
    else
      total = total - fn(term.state);
  }
  return total;
}

/// "Avoid A, contain each of C at least once" as the alternating sum over
/// subsets S of C of "avoid A and S". An exactly-once set rides along
/// unchanged.
inline SignedCombination atLeastOnceExpand(const PatternSet& avoid, const PatternSet& at_least_once,
                                           const PatternSet& exactly_once = {}) {
  const PatternSet c = canonicalSet(at_least_once);
  if (c.size() >= 31) throw Error(ErrorCode::kPreconditionViolated, "too many at-least-once patterns");
  SignedCombination out;
  for (unsigned mask = 0; mask < (1u << c.size()); ++mask) {
    PatternSet a = avoid;
    int sign = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (mask & (1u << i)) {
        a.push_back(c[i]);
        sign = -sign;
      }
    }
    out.push_back({sign, GfState::make(std::move(a), exactly_once)});
  }
  return out;
}

/// outer must contain inner.
struct ContainmentPair {
  Permutation outer;
  Permutation inner;
};

/// "Avoid T and every outer_i, contain every inner_i at least once" as the
/// alternating sum over selections S of the pairs, where each selected outer_i
/// is replaced by its inner_i.
inline SignedCombination exactOnceReduce(const PatternSet& avoid, std::span<const ContainmentPair> pairs,
                                         const PatternSet& exactly_once = {}) {
  for (const auto& [outer, inner] : pairs)
    if (!containsPattern(outer, inner))
      throw Error(ErrorCode::kPreconditionViolated, outer.toString() + " does not contain " + inner.toString());
  if (pairs.size() >= 31) throw Error(ErrorCode::kPreconditionViolated, "too many containment pairs");
  SignedCombination out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    PatternSet a = avoid;
    int sign = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (1u << i)) {
        a.push_back(pairs[i].inner);
        sign = -sign;
      } else {
        a.push_back(pairs[i].outer);
      }
    }
    out.push_back({sign, GfState::make(std::move(a), exactly_once)});
  }
  return out;
}

}  // namespace patgf

#endif  // PATGF_INCLUSION_EXCLUSION_HPP
