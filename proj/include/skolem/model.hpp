#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skolem/bigint.hpp"
#include "skolem/permutation.hpp"

namespace skolem {

// A computed invariant failed to hold (e.g. a construction produced a witness
// that does not validate). Distinct from bad input, which is invalid_argument.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact computation was requested above the configured order ceiling.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multiset of positive differences, kept sorted in decreasing order.
class DiffMultiset {
 public:
  DiffMultiset() = default;

  explicit DiffMultiset(std::vector<int> values) : diffs_(std::move(values)) {
    for (int d : diffs_)
      if (d < 1) throw std::invalid_argument("DiffMultiset: differences must be positive");
    std::sort(diffs_.begin(), diffs_.end(), std::greater<int>());
  }

  static DiffMultiset range(int lo, int hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("DiffMultiset::range: bad bounds");
    std::vector<int> values;
    for (int v = lo; v <= hi; ++v) values.push_back(v);
    return DiffMultiset(std::move(values));
  }

  static DiffMultiset range_without(int lo, int hi, int gap) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("DiffMultiset::range_without: bad bounds");
    std::vector<int> values;
    for (int v = lo; v <= hi; ++v)
      if (v != gap) values.push_back(v);
    return DiffMultiset(std::move(values));
  }

  const std::vector<int>& values() const { return diffs_; }
  int order() const { return static_cast<int>(diffs_.size()); }
  bool empty() const { return diffs_.empty(); }
  int max() const { return diffs_.empty() ? 0 : diffs_.front(); }

  bool is_set() const {
    return std::adjacent_find(diffs_.begin(), diffs_.end()) == diffs_.end();
  }

  long long sum() const {
    long long total = 0;
    for (int d : diffs_) total += d;
    return total;
  }

  bool contains(int d) const {
    return std::binary_search(diffs_.begin(), diffs_.end(), d, std::greater<int>());
  }

  friend bool operator==(const DiffMultiset&, const DiffMultiset&) = default;

 private:
  std::vector<int> diffs_;
};

// Strictly increasing set of positive positions.
class PositionSet {
 public:
  PositionSet() = default;

  explicit PositionSet(std::vector<int> values) : positions_(std::move(values)) {
    std::sort(positions_.begin(), positions_.end());
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      if (positions_[i] < 1) throw std::invalid_argument("PositionSet: positions must be positive");
      if (i > 0 && positions_[i] == positions_[i - 1])
        throw std::invalid_argument("PositionSet: duplicate position");
    }
  }

  static PositionSet contiguous(int count) {
    std::vector<int> values;
    for (int v = 1; v <= count; ++v) values.push_back(v);
    return PositionSet(std::move(values));
  }

  static PositionSet contiguous_without(int count, int hole) {
    std::vector<int> values;
    for (int v = 1; v <= count; ++v)
      if (v != hole) values.push_back(v);
    return PositionSet(std::move(values));
  }

  const std::vector<int>& values() const { return positions_; }
  int size() const { return static_cast<int>(positions_.size()); }
  bool empty() const { return positions_.empty(); }
  int max() const { return positions_.empty() ? 0 : positions_.back(); }

  bool contains(int p) const {
    return std::binary_search(positions_.begin(), positions_.end(), p);
  }

  friend bool operator==(const PositionSet&, const PositionSet&) = default;

 private:
  std::vector<int> positions_;
};

// Partition of a position set into ordered pairs (t, s) with t < s. Canonical
// form is sorted by first coordinate; construction enforces t < s and that no
// position is used twice, so equality and hashing are well defined.
class Pairing {
 public:
  using Pair = std::pair<int, int>;

  Pairing() = default;

  explicit Pairing(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    for (auto& [t, s] : pairs_) {
      if (t == s) throw std::invalid_argument("Pairing: a pair must join two distinct positions");
      if (t > s) std::swap(t, s);
      if (t < 1) throw std::invalid_argument("Pairing: positions must be positive");
    }
    std::sort(pairs_.begin(), pairs_.end());
    std::vector<int> used;
    for (const auto& [t, s] : pairs_) {
      used.push_back(t);
      used.push_back(s);
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
      throw std::invalid_argument("Pairing: position used by more than one pair");
  }

  const std::vector<Pair>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }

  PositionSet positions() const {
    std::vector<int> values;
    values.reserve(pairs_.size() * 2);
    for (const auto& [t, s] : pairs_) {
      values.push_back(t);
      values.push_back(s);
    }
    return PositionSet(std::move(values));
  }

  DiffMultiset differences() const {
    std::vector<int> values;
    values.reserve(pairs_.size());
    for (const auto& [t, s] : pairs_) values.push_back(s - t);
    return DiffMultiset(std::move(values));
  }

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend bool operator<(const Pairing& a, const Pairing& b) { return a.pairs_ < b.pairs_; }

 private:
  std::vector<Pair> pairs_;
};

// True iff `pairing` partitions exactly the positions of P into exactly the
// differences of A. Total predicate: never throws.
inline bool validate(const Pairing& pairing, const PositionSet& positions, const DiffMultiset& diffs) {
  if (pairing.size() != diffs.order()) return false;
  return pairing.positions() == positions && pairing.differences() == diffs;
}

// The label array of a pairing: cell t and cell s of each pair carry the label
// s - t, cells not covered by any pair are blank. Cells are indexed 1..max(P).
//
// Text forms: the canonical form separates labels by single spaces and writes
// blanks as "_". A compact digit string ("42324311", "66_11_66") is accepted
// on input when every label is a single digit.
class SequenceText {
 public:
  static constexpr int kBlank = 0;

  SequenceText() = default;

  static SequenceText render(const Pairing& pairing) {
    SequenceText text;
    const int length = pairing.positions().max();
    text.cells_.assign(static_cast<std::size_t>(length), kBlank);
    for (const auto& [t, s] : pairing.pairs()) {
      text.cells_[static_cast<std::size_t>(t) - 1] = s - t;
      text.cells_[static_cast<std::size_t>(s) - 1] = s - t;
    }
    return text;
  }

  static SequenceText parse(std::string_view input) {
    SequenceText text;
    if (input.find(' ') != std::string_view::npos) {
      std::size_t begin = 0;
      while (begin <= input.size()) {
        std::size_t end = input.find(' ', begin);
        if (end == std::string_view::npos) end = input.size();
        const std::string_view token = input.substr(begin, end - begin);
        if (!token.empty()) text.cells_.push_back(parse_token(token));
        begin = end + 1;
      }
    } else {
      for (char c : input) {
        if (c == '_')
          text.cells_.push_back(kBlank);
        else if (c >= '1' && c <= '9')
          text.cells_.push_back(c - '0');
        else
          throw std::invalid_argument("SequenceText: compact form allows digits 1-9 and '_' only");
      }
    }
    text.to_pairing();  // reject label arrays that do not encode a pairing
    return text;
  }

  int length() const { return static_cast<int>(cells_.size()); }
  int label_at(int position) const { return cells_.at(static_cast<std::size_t>(position) - 1); }
  bool blank_at(int position) const { return label_at(position) == kBlank; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i) out += ' ';
      out += cells_[i] == kBlank ? "_" : std::to_string(cells_[i]);
    }
    return out;
  }

  std::string compact() const {
    std::string out;
    for (int cell : cells_) {
      if (cell > 9) throw std::invalid_argument("SequenceText: compact form requires single-digit labels");
      out += cell == kBlank ? '_' : static_cast<char>('0' + cell);
    }
    return out;
  }

  // The unique pairing encoded by the label array: the smallest unmatched
  // occurrence of a label d can only be the left end of its pair, so matching
  // left to right is forced.
  Pairing to_pairing() const {
    std::vector<char> matched(cells_.size(), 0);
    std::vector<Pairing::Pair> pairs;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (cells_[i] == kBlank || matched[i]) continue;
      const std::size_t j = i + static_cast<std::size_t>(cells_[i]);
      if (j >= cells_.size() || cells_[j] != cells_[i] || matched[j])
        throw std::invalid_argument("SequenceText: label array does not encode a pairing");
      matched[i] = matched[j] = 1;
      pairs.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
    }
    if (!cells_.empty() && cells_.back() == kBlank)
      throw std::invalid_argument("SequenceText: trailing blank cell");
    return Pairing(std::move(pairs));
  }

  friend bool operator==(const SequenceText&, const SequenceText&) = default;

 private:
  static int parse_token(std::string_view token) {
    if (token == "_") return kBlank;
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') throw std::invalid_argument("SequenceText: bad label token");
      value = value * 10 + (c - '0');
    }
    if (value < 1) throw std::invalid_argument("SequenceText: labels must be positive");
    return value;
  }

  std::vector<int> cells_;
};

inline SequenceText render(const Pairing& pairing) { return SequenceText::render(pairing); }

// Mirror image of a pairing over {1..2n}: (t, s) -> (2n+1-s, 2n+1-t).
// An involution that preserves the difference multiset.
inline Pairing reverse(const Pairing& pairing) {
  const int two_n = 2 * pairing.size();
  if (!(pairing.positions() == PositionSet::contiguous(two_n)))
    throw std::invalid_argument("reverse: requires a pairing over {1..2n}");
  std::vector<Pairing::Pair> pairs;
  pairs.reserve(pairing.pairs().size());
  for (const auto& [t, s] : pairing.pairs()) pairs.push_back({two_n + 1 - s, two_n + 1 - t});
  return Pairing(std::move(pairs));
}

// The fixed-point-free involution of S_2n whose 2-cycles are the pairs.
inline Permutation as_involution(const Pairing& pairing) {
  const int two_n = 2 * pairing.size();
  if (!(pairing.positions() == PositionSet::contiguous(two_n)))
    throw std::invalid_argument("as_involution: requires a pairing over {1..2n}");
  std::vector<int> images(static_cast<std::size_t>(two_n));
  for (const auto& [t, s] : pairing.pairs()) {
    images[static_cast<std::size_t>(t) - 1] = s;
    images[static_cast<std::size_t>(s) - 1] = t;
  }
  return Permutation(std::move(images));
}

inline Pairing pairing_from_involution(const Permutation& involution) {
  std::vector<Pairing::Pair> pairs;
  for (int i = 1; i <= involution.size(); ++i) {
    const int j = involution(i);
    if (j == i || involution(j) != i)
      throw std::invalid_argument("pairing_from_involution: requires a fixed-point-free involution");
    if (i < j) pairs.push_back({i, j});
  }
  return Pairing(std::move(pairs));
}

enum class Family { skolem, perfect, perfect_extremal, multi, extremal_multi, perfect_sets };

inline std::string_view family_name(Family family) {
  switch (family) {
    case Family::skolem: return "skolem";
    case Family::perfect: return "perfect";
    case Family::perfect_extremal: return "perfect-extremal";
    case Family::multi: return "multi";
    case Family::extremal_multi: return "extremal-multi";
    case Family::perfect_sets: return "perfect-sets";
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::skolem, Family::perfect, Family::perfect_extremal, Family::multi,
                   Family::extremal_multi, Family::perfect_sets})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

// Result of an exact counting run. Counts are exact, never sampled.
struct CountReport {
  Family family = Family::skolem;
  int order = 0;
  BigUint count;
  std::chrono::milliseconds elapsed{0};
  std::uint64_t nodes = 0;
};

}  // namespace skolem
