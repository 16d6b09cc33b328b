#ifndef PATGF_PERMUTATION_HPP
#define PATGF_PERMUTATION_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "patgf/errors.hpp"

namespace patgf {

/// A permutation of {1, ..., n}, stored in one-line notation. The same type is
/// used for patterns; the empty permutation (n = 0) is a valid value.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<bool> seen(entries_.size() + 1, false);
    for (int v : entries_) {
      if (v < 1 || static_cast<std::size_t>(v) > entries_.size() || seen[v])
        throw Error(ErrorCode::kInvalidPermutation,
                    "entries are not a permutation of 1.." + std::to_string(entries_.size()));
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<int> entries) : Permutation(std::vector<int>(entries)) {}

  static Permutation identity(int n) {
    std::vector<int> e(n > 0 ? n : 0);
    for (int i = 0; i < n; ++i) e[i] = i + 1;
    return Permutation(std::move(e));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Canonical order: shorter first, then lexicographic.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                  b.entries_.begin(), b.entries_.end());
  }

  /// "132" when every entry is a single digit, "10,1,2,..." otherwise, and
  /// "eps" for the empty permutation.
  std::string toString() const {
    if (entries_.empty()) return "eps";
    const bool compact = std::all_of(entries_.begin(), entries_.end(), [](int v) { return v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out;
  }

  static Permutation parse(std::string_view text);

 private:
  std::vector<int> entries_;
};

using PatternSet = std::vector<Permutation>;

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Permutation Permutation::parse(std::string_view text) {
  text = detail::trim(text);
  if (text == "eps") return Permutation{};
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty pattern text (use \"eps\")");
  std::vector<int> entries;
  if (text.find(',') != std::string_view::npos) {
    while (true) {
      const auto comma = text.find(',');
      const auto field = detail::trim(text.substr(0, comma));
      int value = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw Error(ErrorCode::kParseError, "bad pattern entry '" + std::string(field) + "'");
      entries.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw Error(ErrorCode::kParseError, "bad pattern character '" + std::string(1, c) + "'");
      entries.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(entries));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, std::string(text) + " is not a permutation");
  }
}

/// Sorts into canonical order and removes duplicates.
inline PatternSet canonicalSet(PatternSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

/// Semicolon-separated list of patterns; an empty or blank string is the empty set.
inline PatternSet parsePatternSet(std::string_view text) {
  PatternSet out;
  if (detail::trim(text).empty()) return out;
  while (true) {
    const auto semi = text.find(';');
    out.push_back(Permutation::parse(text.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return canonicalSet(std::move(out));
}

inline std::string formatPatternSet(const PatternSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ';';
    out += set[i].toString();
  }
  return out;
}

/// Precomputed search plan for one pattern. For the j-th pattern entry we keep
/// the earlier entries holding the nearest smaller and nearest larger values;
/// a candidate text value must fall strictly between the text values matched
/// to those two, which is exactly order-isomorphism of the growing prefix.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Permutation& pattern)
      : values_(pattern.begin(), pattern.end()),
        below_(values_.size(), -1),
        above_(values_.size(), -1) {
    for (std::size_t j = 0; j < values_.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (values_[i] < values_[j] && (below_[j] < 0 || values_[i] > values_[below_[j]]))
          below_[j] = static_cast<int>(i);
        if (values_[i] > values_[j] && (above_[j] < 0 || values_[i] < values_[above_[j]]))
          above_[j] = static_cast<int>(i);
      }
    }
  }

  std::size_t length() const noexcept { return values_.size(); }

  /// Occurrences of the pattern in `text`, which must hold a permutation of
  /// 1..text.size(). Stops counting once `limit` is reached.
  std::uint64_t count(std::span<const int> text,
                      std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) const {
    const int n = static_cast<int>(text.size());
    const int k = static_cast<int>(values_.size());
    if (limit == 0) return 0;
    if (k == 0) return 1;
    if (k > n) return 0;
    std::vector<int> matched(k);
    std::uint64_t found = 0;
    search(text, matched, 0, 0, found, limit);
    return found;
  }

 private:
  void search(std::span<const int> text, std::vector<int>& matched, int j, int start,
              std::uint64_t& found, std::uint64_t limit) const {
    const int n = static_cast<int>(text.size());
    const int k = static_cast<int>(values_.size());
    if (j == k) {
      ++found;
      return;
    }
    const int lo_text = below_[j] < 0 ? 0 : matched[below_[j]];
    const int hi_text = above_[j] < 0 ? n + 1 : matched[above_[j]];
    // Value window: enough room must remain for the pattern values that have
    // to land between the bounding matches.
    const int need_below = values_[j] - (below_[j] < 0 ? 0 : values_[below_[j]]);
    const int need_above = (above_[j] < 0 ? k + 1 : values_[above_[j]]) - values_[j];
    if (hi_text - lo_text < need_below + need_above) return;
    for (int i = start; i <= n - (k - j) && found < limit; ++i) {
      const int v = text[i];
      if (v - lo_text < need_below || hi_text - v < need_above) continue;
      matched[j] = v;
      search(text, matched, j + 1, i + 1, found, limit);
    }
  }

  std::vector<int> values_;
  std::vector<int> below_;
  std::vector<int> above_;
};

/// Number of subsequences of p order-isomorphic to t. The empty pattern
/// occurs exactly once in every permutation.
inline std::uint64_t occurrences(const Permutation& p, const Permutation& t) {
  return PatternMatcher(t).count(p.entries());
}

inline bool avoidsAll(const Permutation& p, const PatternSet& patterns) {
  return std::all_of(patterns.begin(), patterns.end(), [&](const Permutation& t) {
    return PatternMatcher(t).count(p.entries(), 1) == 0;
  });
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& v) { return os << v.toString(); }

}  // namespace patgf

#endif  // PATGF_PERMUTATION_HPP
