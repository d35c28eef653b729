#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "skolem/conditions.hpp"
#include "skolem/model.hpp"

namespace skolem {

struct SearchStats {
  std::uint64_t nodes = 0;
};

// A fixed placement of the largest difference; the subtrees below distinct
// root branches are independent, which is what the counting engines split on.
struct RootBranch {
  int first_position = 0;
};

namespace detail {

// Exhaustive backtracking over one (P, A) instance.
//
// decide/count place differences largest-first (the most constrained label
// first) and scan candidate first-positions in increasing order; equal
// differences are forced onto strictly increasing first positions so every
// pairing is produced exactly once. The enumerator instead always extends at
// the smallest free position and tries the remaining difference values in
// increasing order, which emits pairings in lexicographic order of their
// canonical form. Both orders visit the same solution set.
class InstanceSearch {
 public:
  InstanceSearch(const PositionSet& positions, const DiffMultiset& diffs)
      : positions_(positions.values()), diffs_(diffs.values()) {
    if (positions_.size() != diffs_.size() * 2)
      throw std::invalid_argument("solver: require |P| == 2 |A|");
    const int limit = positions_.empty() ? 0 : positions_.back();
    free_.assign(static_cast<std::size_t>(limit) + 2, 0);
    for (int p : positions_) free_[static_cast<std::size_t>(p)] = 1;
    chosen_.resize(diffs_.size());
  }

  std::optional<Pairing> find_first(SearchStats& stats) {
    std::uint64_t found = 0;
    descend(0, 0, true, found, stats);
    if (!found) return std::nullopt;
    return Pairing(chosen_);
  }

  std::uint64_t count_all(SearchStats& stats) {
    std::uint64_t found = 0;
    descend(0, 0, false, found, stats);
    return found;
  }

  std::vector<RootBranch> root_branches() const {
    std::vector<RootBranch> branches;
    if (diffs_.empty()) return branches;
    const int d = diffs_.front();
    for (int t : positions_)
      if (is_free(t) && is_free(t + d)) branches.push_back({t});
    return branches;
  }

  std::uint64_t count_from(const RootBranch& branch, SearchStats& stats) {
    if (diffs_.empty()) throw std::invalid_argument("solver: no root branch on an empty instance");
    const int d = diffs_.front();
    const int t = branch.first_position;
    if (!is_free(t) || !is_free(t + d))
      throw std::invalid_argument("solver: root branch does not fit the instance");
    const std::size_t index = static_cast<std::size_t>(
        std::lower_bound(positions_.begin(), positions_.end(), t) - positions_.begin());
    std::uint64_t found = 0;
    ++stats.nodes;
    free_[static_cast<std::size_t>(t)] = free_[static_cast<std::size_t>(t + d)] = 0;
    chosen_[0] = {t, t + d};
    descend(1, index, false, found, stats);
    free_[static_cast<std::size_t>(t)] = free_[static_cast<std::size_t>(t + d)] = 1;
    return found;
  }

  // visitor: bool(const Pairing&); returning false stops the enumeration
  template <typename Visitor>
  void enumerate_lex(std::optional<std::uint64_t> limit, Visitor&& visit, SearchStats& stats) {
    if (limit && *limit == 0) return;
    pool_.clear();
    for (auto it = diffs_.rbegin(); it != diffs_.rend(); ++it) {
      if (!pool_.empty() && pool_.back().value == *it)
        ++pool_.back().remaining;
      else
        pool_.push_back({*it, 1});
    }
    std::uint64_t emitted = 0;
    lex_descend(0, 0, limit, emitted, visit, stats);
  }

 private:
  bool is_free(int value) const {
    return value >= 1 && value < static_cast<int>(free_.size()) && free_[static_cast<std::size_t>(value)];
  }

  // returns true when the search should unwind (first witness found)
  bool descend(std::size_t level, std::size_t prev_index, bool stop_at_first,
               std::uint64_t& found, SearchStats& stats) {
    if (level == diffs_.size()) {
      ++found;
      return stop_at_first;
    }
    const int d = diffs_[level];
    const std::size_t begin = (level > 0 && diffs_[level] == diffs_[level - 1]) ? prev_index + 1 : 0;
    for (std::size_t i = begin; i < positions_.size(); ++i) {
      const int t = positions_[i];
      if (!free_[static_cast<std::size_t>(t)]) continue;
      const int s = t + d;
      if (!is_free(s)) continue;
      ++stats.nodes;
      free_[static_cast<std::size_t>(t)] = free_[static_cast<std::size_t>(s)] = 0;
      chosen_[level] = {t, s};
      const bool stop = descend(level + 1, i, stop_at_first, found, stats);
      free_[static_cast<std::size_t>(t)] = free_[static_cast<std::size_t>(s)] = 1;
      if (stop) return true;
    }
    return false;
  }

  struct PoolEntry {
    int value;
    int remaining;
  };

  // returns false when the visitor (or the limit) asked to stop
  template <typename Visitor>
  bool lex_descend(std::size_t placed, std::size_t scan_from, std::optional<std::uint64_t> limit,
                   std::uint64_t& emitted, Visitor& visit, SearchStats& stats) {
    if (placed == diffs_.size()) {
      ++emitted;
      if (!visit(Pairing(chosen_))) return false;
      return !(limit && emitted >= *limit);
    }
    std::size_t i = scan_from;
    while (!free_[static_cast<std::size_t>(positions_[i])]) ++i;
    const int t = positions_[i];
    for (auto& entry : pool_) {
      if (entry.remaining == 0) continue;
      const int s = t + entry.value;
      if (!is_free(s)) continue;
      ++stats.nodes;
      free_[static_cast<std::size_t>(t)] = free_[static_cast<std::size_t>(s)] = 0;
      --entry.remaining;
      chosen_[placed] = {t, s};
      const bool keep_going = lex_descend(placed + 1, i + 1, limit, emitted, visit, stats);
      free_[static_cast<std::size_t>(t)] = free_[static_cast<std::size_t>(s)] = 1;
      ++entry.remaining;
      if (!keep_going) return false;
    }
    return true;
  }

  std::vector<int> positions_;  // increasing
  std::vector<int> diffs_;      // decreasing
  std::vector<char> free_;      // indexed by position value
  std::vector<Pairing::Pair> chosen_;
  std::vector<PoolEntry> pool_;  // increasing distinct values with multiplicities
};

// Search specialized to extremal instances over {1..2n}: every pair must
// straddle the midpoint, so the left cells 1..n are exactly the first
// coordinates and can be filled in order.
class ExtremalSearch {
 public:
  explicit ExtremalSearch(const DiffMultiset& diffs)
      : diffs_(diffs.values()), n_(static_cast<int>(diffs_.size())) {
    used_.assign(diffs_.size(), 0);
    right_free_.assign(diffs_.size(), 1);
    chosen_.resize(diffs_.size());
  }

  std::optional<Pairing> find_first(SearchStats& stats) {
    std::uint64_t found = 0;
    step(1, true, found, stats);
    if (!found) return std::nullopt;
    return Pairing(chosen_);
  }

  std::uint64_t count_all(SearchStats& stats) {
    std::uint64_t found = 0;
    step(1, false, found, stats);
    return found;
  }

 private:
  bool step(int t, bool stop_at_first, std::uint64_t& found, SearchStats& stats) {
    if (t > n_) {
      ++found;
      return stop_at_first;
    }
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
      if (used_[i]) continue;
      if (i > 0 && diffs_[i] == diffs_[i - 1] && !used_[i - 1]) continue;  // equal copies left to right
      const int s = t + diffs_[i];
      if (s <= n_ || s > 2 * n_ || !right_free_[static_cast<std::size_t>(s - n_ - 1)]) continue;
      ++stats.nodes;
      used_[i] = 1;
      right_free_[static_cast<std::size_t>(s - n_ - 1)] = 0;
      chosen_[static_cast<std::size_t>(t) - 1] = {t, s};
      const bool stop = step(t + 1, stop_at_first, found, stats);
      used_[i] = 0;
      right_free_[static_cast<std::size_t>(s - n_ - 1)] = 1;
      if (stop) return true;
    }
    return false;
  }

  std::vector<int> diffs_;  // decreasing
  int n_;
  std::vector<char> used_;
  std::vector<char> right_free_;
  std::vector<Pairing::Pair> chosen_;
};

}  // namespace detail

// First witness in the solver's fixed branch order, or nothing. Deterministic
// for fixed inputs; exhaustive, no closed-form shortcuts.
inline std::optional<Pairing> decide(const PositionSet& positions, const DiffMultiset& diffs,
                                     SearchStats& stats) {
  return detail::InstanceSearch(positions, diffs).find_first(stats);
}

inline std::optional<Pairing> decide(const PositionSet& positions, const DiffMultiset& diffs) {
  SearchStats stats;
  return decide(positions, diffs, stats);
}

// Emits every solution exactly once, in lexicographic order of canonical form.
template <typename Visitor>
inline void enumerate_solutions(const PositionSet& positions, const DiffMultiset& diffs,
                                std::optional<std::uint64_t> limit, Visitor&& visit,
                                SearchStats& stats) {
  detail::InstanceSearch(positions, diffs).enumerate_lex(limit, std::forward<Visitor>(visit), stats);
}

inline std::vector<Pairing> enumerate_solutions(const PositionSet& positions, const DiffMultiset& diffs,
                                                std::optional<std::uint64_t> limit = std::nullopt) {
  std::vector<Pairing> out;
  SearchStats stats;
  enumerate_solutions(positions, diffs, limit,
                      [&out](const Pairing& p) {
                        out.push_back(p);
                        return true;
                      },
                      stats);
  return out;
}

inline std::uint64_t count_solutions(const PositionSet& positions, const DiffMultiset& diffs,
                                     SearchStats* stats = nullptr) {
  SearchStats local;
  return detail::InstanceSearch(positions, diffs).count_all(stats ? *stats : local);
}

// Same count through the position-major branch order; used to assert that
// branch ordering cannot change totals.
inline std::uint64_t count_solutions_lex(const PositionSet& positions, const DiffMultiset& diffs,
                                         SearchStats* stats = nullptr) {
  SearchStats local;
  std::uint64_t count = 0;
  enumerate_solutions(positions, diffs, std::nullopt,
                      [&count](const Pairing&) {
                        ++count;
                        return true;
                      },
                      stats ? *stats : local);
  return count;
}

inline std::vector<RootBranch> root_split(const PositionSet& positions, const DiffMultiset& diffs) {
  return detail::InstanceSearch(positions, diffs).root_branches();
}

inline std::uint64_t count_solutions_branch(const PositionSet& positions, const DiffMultiset& diffs,
                                            const RootBranch& branch, SearchStats* stats = nullptr) {
  SearchStats local;
  return detail::InstanceSearch(positions, diffs).count_from(branch, stats ? *stats : local);
}

inline std::optional<Pairing> is_perfect_multi_skolem_set(const DiffMultiset& diffs) {
  return decide(PositionSet::contiguous(2 * diffs.order()), diffs);
}

inline std::optional<Pairing> is_perfect_skolem_set(const DiffMultiset& diffs) {
  if (!diffs.is_set())
    throw std::invalid_argument("is_perfect_skolem_set: requires distinct differences; "
                                "use is_perfect_multi_skolem_set for multisets");
  return is_perfect_multi_skolem_set(diffs);
}

// Decision restricted to straddling pairs; for extremal candidates this is
// equivalent to the unrestricted decision, only faster.
inline std::optional<Pairing> is_perfect_extremal(const DiffMultiset& diffs, SearchStats& stats) {
  if (!is_extremal_candidate(diffs))
    throw std::invalid_argument("is_perfect_extremal: element sum must equal n^2");
  return detail::ExtremalSearch(diffs).find_first(stats);
}

inline std::optional<Pairing> is_perfect_extremal(const DiffMultiset& diffs) {
  SearchStats stats;
  return is_perfect_extremal(diffs, stats);
}

// Number of straddling pairings of {1..2n} realizing A. Zero whenever the
// element sum differs from n^2, so no candidate precondition is needed.
inline std::uint64_t count_extremal(const DiffMultiset& diffs, SearchStats* stats = nullptr) {
  SearchStats local;
  return detail::ExtremalSearch(diffs).count_all(stats ? *stats : local);
}

}  // namespace skolem
