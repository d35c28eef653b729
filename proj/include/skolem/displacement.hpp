#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skolem/bigint.hpp"
#include "skolem/enumeration.hpp"
#include "skolem/model.hpp"
#include "skolem/permutation.hpp"
#include "skolem/solver.hpp"

namespace skolem {

// The multiset {pi(i) - i} of a permutation, sorted in decreasing order.
// A pattern of length n is realizable exactly when the shifted multiset
// {a_i + n} is an extremal multi Skolem set, which is how realize_pattern and
// count_realizations are computed.
class DisplacementPattern {
 public:
  DisplacementPattern() = default;

  explicit DisplacementPattern(std::vector<int> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), std::greater<int>());
  }

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }

  long long sum() const {
    long long total = 0;
    for (int e : entries_) total += e;
    return total;
  }

  friend bool operator==(const DisplacementPattern&, const DisplacementPattern&) = default;
  friend bool operator<(const DisplacementPattern& a, const DisplacementPattern& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<int> entries_;
};

inline DisplacementPattern pattern_of(const Permutation& p) {
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) entries.push_back(p(i) - i);
  return DisplacementPattern(std::move(entries));
}

// Pattern of p^-1; always equals negate_reverse(pattern_of(p)).
inline DisplacementPattern inverse_pattern_of(const Permutation& p) {
  return pattern_of(p.inverse());
}

inline DisplacementPattern negate_reverse(const DisplacementPattern& pattern) {
  std::vector<int> entries;
  entries.reserve(pattern.entries().size());
  for (int e : pattern.entries()) entries.push_back(-e);
  return DisplacementPattern(std::move(entries));
}

// Necessary conditions for a pattern to be realizable: prefix sums bounded by
// m(n - m) with equality at m = n (the entries telescope to zero), and an even
// number of even entries for n even / odd entries for n odd.
inline bool displacement_necessary(const DisplacementPattern& pattern) {
  const int n = pattern.size();
  long long prefix = 0;
  for (int m = 1; m <= n; ++m) {
    prefix += pattern.entries()[static_cast<std::size_t>(m) - 1];
    if (prefix > static_cast<long long>(m) * (n - m)) return false;
  }
  if (prefix != 0) return false;
  int count = 0;
  for (int e : pattern.entries())
    count += (n % 2 == 0) ? (e % 2 == 0) : (e % 2 != 0);
  return count % 2 == 0;
}

namespace detail {
inline std::optional<DiffMultiset> shifted_diffs(const DisplacementPattern& pattern) {
  const int n = pattern.size();
  std::vector<int> diffs;
  diffs.reserve(pattern.entries().size());
  for (int e : pattern.entries()) {
    if (e <= -n || e >= n) return std::nullopt;  // no permutation moves an element that far
    diffs.push_back(e + n);
  }
  return DiffMultiset(std::move(diffs));
}
}  // namespace detail

// Some permutation with the given displacement pattern, or nothing. The
// witness pairing (t, s) of the shifted multiset converts back via
// pi(t) = s - n.
inline std::optional<Permutation> realize_pattern(const DisplacementPattern& pattern) {
  const int n = pattern.size();
  if (n < 1) throw std::invalid_argument("realize_pattern: pattern must be nonempty");
  if (pattern.sum() != 0) return std::nullopt;
  const auto diffs = detail::shifted_diffs(pattern);
  if (!diffs) return std::nullopt;
  SearchStats stats;
  const auto witness = skolem::detail::ExtremalSearch(*diffs).find_first(stats);
  if (!witness) return std::nullopt;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (const auto& [t, s] : witness->pairs()) images[static_cast<std::size_t>(t) - 1] = s - n;
  return Permutation(std::move(images));
}

// Exact number of permutations with the given pattern.
inline BigUint count_realizations(const DisplacementPattern& pattern, SearchStats* stats = nullptr) {
  const int n = pattern.size();
  if (n < 1) throw std::invalid_argument("count_realizations: pattern must be nonempty");
  if (n > Ceilings::active().perfect_extremal)
    throw ResourceLimitError("count_realizations: pattern length " + std::to_string(n) +
                             " exceeds the ceiling (override with SKOLEM_MAX_ORDER)");
  if (pattern.sum() != 0) return BigUint();
  const auto diffs = detail::shifted_diffs(pattern);
  if (!diffs) return BigUint();
  return BigUint(count_extremal(*diffs, stats));
}

// n! sum_{i=0..n} (-1)^i / i!, via D(k) = (k-1)(D(k-1) + D(k-2)). This is also
// the number of extremal multi sequences of order n avoiding the difference n.
inline BigUint derangement_count(int n) {
  if (n < 0) throw std::invalid_argument("derangement_count: negative argument");
  if (n == 0) return BigUint(1);
  BigUint prev2(1), prev(0);  // D(0), D(1)
  for (int k = 2; k <= n; ++k) {
    BigUint cur = prev + prev2;
    cur *= static_cast<std::uint32_t>(k - 1);
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

// Text form "(4,1,0,-2,-3)".
inline std::string pattern_to_string(const DisplacementPattern& pattern) {
  std::string out = "(";
  for (std::size_t i = 0; i < pattern.entries().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pattern.entries()[i]);
  }
  out += ')';
  return out;
}

inline DisplacementPattern pattern_from_string(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && (text[begin] == ' ' || text[begin] == '(')) ++begin;
  while (end > begin && (text[end - 1] == ' ' || text[end - 1] == ')')) --end;
  std::vector<int> entries;
  std::size_t i = begin;
  while (i < end) {
    std::size_t j = i;
    while (j < end && text[j] != ',') ++j;
    std::string token(text.substr(i, j - i));
    std::size_t parsed = 0;
    int value = 0;
    try {
      value = std::stoi(token, &parsed);
    } catch (const std::exception&) {
      throw std::invalid_argument("pattern_from_string: bad entry '" + token + "'");
    }
    while (parsed < token.size() && token[parsed] == ' ') ++parsed;
    if (parsed != token.size())
      throw std::invalid_argument("pattern_from_string: bad entry '" + token + "'");
    entries.push_back(value);
    i = j + 1;
  }
  return DisplacementPattern(std::move(entries));
}

}  // namespace skolem
