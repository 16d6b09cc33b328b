#ifndef PATGF_DECOMPOSITION_HPP
#define PATGF_DECOMPOSITION_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "patgf/errors.hpp"
#include "patgf/permutation.hpp"

namespace patgf {

/// The permutation order-isomorphic to a word of distinct integers.
inline Permutation flatten(std::span<const int> word) {
  std::vector<std::size_t> idx(word.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t rank = 0; rank < idx.size(); ++rank) {
    if (rank > 0 && word[idx[rank]] == word[idx[rank - 1]])
      throw Error(ErrorCode::kDuplicateEntries, "value " + std::to_string(word[idx[rank]]) + " repeats");
    out[idx[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

inline bool containsPattern(const Permutation& a, const Permutation& b) {
  return PatternMatcher(b).count(a.entries(), 1) != 0;
}

inline bool avoids132(const Permutation& p) { return !containsPattern(p, Permutation{1, 3, 2}); }

/// 0-based positions of the right-to-left maxima, left to right.
inline std::vector<std::size_t> rtlMaxima(const Permutation& p) {
  std::vector<std::size_t> out;
  int best = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] > best) {
      best = p[i];
      out.push_back(i);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// tau = (block_0, m_0, block_1, m_1, ..., block_r, m_r) where m_0 > m_1 > ...
/// are the right-to-left maxima. For 132-avoiding tau every entry of block_i
/// exceeds every entry of block_{i+1} and m_{i+1}.
struct CanonicalDecomposition {
  struct Maximum {
    std::size_t position;
    int value;
  };

  Permutation pattern;
  std::vector<Maximum> maxima;
  std::vector<std::vector<int>> blocks;

  int r() const noexcept { return static_cast<int>(maxima.size()) - 1; }

  /// Flattened (block_0, m_0, ..., block_i, m_i) for 0 <= i <= r.
  Permutation throughMaximum(int i) const {
    if (i < 0 || i > r()) throw Error(ErrorCode::kIndexOutOfRange, "maximum index out of range");
    return flatten(pattern.entries().first(maxima[i].position + 1));
  }

  /// Prefix family: pi^{-1} = empty, pi^0 = block_0 alone, and pi^i runs
  /// through m_i for 1 <= i <= r.
  Permutation prefix(int i) const {
    if (i < -1 || i > r())
      throw Error(ErrorCode::kIndexOutOfRange, "prefix index " + std::to_string(i) + " outside -1.." +
                                                   std::to_string(r()));
    if (i == -1) return {};
    if (i == 0) return flatten(blocks[0]);
    return throughMaximum(i);
  }

  /// Suffix family: sigma^i = flattened (block_i, m_i, ..., block_r, m_r),
  /// sigma^{r+1} = empty.
  Permutation suffix(int i) const {
    if (i < 0 || i > r() + 1)
      throw Error(ErrorCode::kIndexOutOfRange, "suffix index " + std::to_string(i) + " outside 0.." +
                                                   std::to_string(r() + 1));
    if (i == r() + 1) return {};
    const std::size_t start = maxima[i].position - blocks[i].size();
    return flatten(pattern.entries().subspan(start));
  }
};

inline CanonicalDecomposition canonicalDecompose(const Permutation& p) {
  if (p.empty()) throw Error(ErrorCode::kPreconditionViolated, "the empty pattern has no decomposition");
  if (!avoids132(p)) throw Error(ErrorCode::kNot132Avoiding, p.toString() + " contains 132");
  CanonicalDecomposition d;
  d.pattern = p;
  std::size_t start = 0;
  for (std::size_t pos : rtlMaxima(p)) {
    d.maxima.push_back({pos, p[pos]});
    d.blocks.emplace_back(p.begin() + start, p.begin() + pos);
    start = pos + 1;
  }
  return d;
}

inline Permutation prefix(const Permutation& p, int i) {
  if (i == -1) return {};
  return canonicalDecompose(p).prefix(i);
}
inline Permutation suffix(const Permutation& p, int i) { return canonicalDecompose(p).suffix(i); }

}  // namespace patgf

#endif  // PATGF_DECOMPOSITION_HPP
