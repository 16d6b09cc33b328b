#ifndef PATGF_CENSUS_HPP
#define PATGF_CENSUS_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "patgf/errors.hpp"
#include "patgf/permutation.hpp"

namespace patgf {

/// Avoid every pattern of `avoid`, contain each of `exactly_once` exactly once
/// and each of `at_least_once` at least once.
class PatternQuery {
 public:
  PatternQuery() = default;

  PatternQuery(PatternSet avoid, PatternSet exactly_once = {}, PatternSet at_least_once = {})
      : avoid_(canonicalSet(std::move(avoid))),
        exactly_once_(canonicalSet(std::move(exactly_once))),
        at_least_once_(canonicalSet(std::move(at_least_once))) {
    const auto overlap = [](const PatternSet& a, const PatternSet& b) {
      return std::any_of(a.begin(), a.end(), [&](const Permutation& p) {
        return std::binary_search(b.begin(), b.end(), p);
      });
    };
    if (overlap(avoid_, exactly_once_) || overlap(avoid_, at_least_once_) ||
        overlap(exactly_once_, at_least_once_))
      throw Error(ErrorCode::kPreconditionViolated, "pattern sets of a query must be disjoint");
  }

  const PatternSet& avoid() const noexcept { return avoid_; }
  const PatternSet& exactlyOnce() const noexcept { return exactly_once_; }
  const PatternSet& atLeastOnce() const noexcept { return at_least_once_; }

  /// The same query with 132 added to the avoid set (a no-op if present).
  PatternQuery with132() const {
    PatternSet a = avoid_;
    a.push_back(Permutation{1, 3, 2});
    return PatternQuery(std::move(a), exactly_once_, at_least_once_);
  }

  bool operator==(const PatternQuery&) const = default;

 private:
  PatternSet avoid_;
  PatternSet exactly_once_;
  PatternSet at_least_once_;
};

struct CensusOptions {
  int max_n = 10;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

namespace detail {

class CompiledQuery {
 public:
  explicit CompiledQuery(const PatternQuery& q) {
    for (const auto& t : q.avoid()) avoid_.emplace_back(t);
    for (const auto& t : q.exactlyOnce()) once_.emplace_back(t);
    for (const auto& t : q.atLeastOnce()) some_.emplace_back(t);
    // Short patterns reject most candidates fastest.
    const auto by_length = [](const PatternMatcher& a, const PatternMatcher& b) {
      return a.length() < b.length();
    };
    std::stable_sort(avoid_.begin(), avoid_.end(), by_length);
  }

  bool accepts(std::span<const int> p) const {
    for (const auto& m : avoid_)
      if (m.count(p, 1) != 0) return false;
    for (const auto& m : once_)
      if (m.count(p, 2) != 1) return false;
    for (const auto& m : some_)
      if (m.count(p, 1) == 0) return false;
    return true;
  }

 private:
  std::vector<PatternMatcher> avoid_;
  std::vector<PatternMatcher> once_;
  std::vector<PatternMatcher> some_;
};

// Counts accepted permutations of length n whose first entry is `first`.
// These form one contiguous block of the lexicographic order of S_n.
inline std::uint64_t censusBlock(const CompiledQuery& q, int n, int first) {
  std::vector<int> p(n);
  p[0] = first;
  for (int i = 1, v = 1; i < n; ++v)
    if (v != first) p[i++] = v;
  std::uint64_t total = 0;
  do {
    if (q.accepts(p)) ++total;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return total;
}

}  // namespace detail

/// Exhaustive count over S_n of the permutations satisfying q.
inline std::uint64_t census(const PatternQuery& q, int n, const CensusOptions& opts = {}) {
  if (n < 0) throw Error(ErrorCode::kPreconditionViolated, "negative length");
  if (n > opts.max_n)
    throw Error(ErrorCode::kLengthTooLarge,
                "n = " + std::to_string(n) + " exceeds the enumeration bound " +
                    std::to_string(opts.max_n));
  const detail::CompiledQuery compiled(q);
  if (n == 0) return compiled.accepts({}) ? 1 : 0;

  unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(n));
  std::vector<std::uint64_t> per_block(n + 1, 0);
  if (threads == 1) {
    for (int first = 1; first <= n; ++first) per_block[first] = detail::censusBlock(compiled, n, first);
  } else {
    std::atomic<int> next{1};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (int first = next++; first <= n; first = next++)
          per_block[first] = detail::censusBlock(compiled, n, first);
      });
    }
  }
  return std::accumulate(per_block.begin(), per_block.end(), std::uint64_t{0});
}

/// [census(q, 0), ..., census(q, order)].
inline std::vector<std::uint64_t> censusSeries(const PatternQuery& q, int order,
                                               const CensusOptions& opts = {}) {
  if (order > opts.max_n)
    throw Error(ErrorCode::kLengthTooLarge,
                "order " + std::to_string(order) + " exceeds the enumeration bound " +
                    std::to_string(opts.max_n));
  std::vector<std::uint64_t> out;
  for (int n = 0; n <= order; ++n) out.push_back(census(q, n, opts));
  return out;
}

}  // namespace patgf

#endif  // PATGF_CENSUS_HPP
