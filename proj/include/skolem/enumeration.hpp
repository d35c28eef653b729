#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "skolem/bigint.hpp"
#include "skolem/conditions.hpp"
#include "skolem/model.hpp"
#include "skolem/solver.hpp"

namespace skolem {

inline BigUint factorial_count(int n) {
  if (n < 0) throw std::invalid_argument("factorial_count: negative argument");
  BigUint result(1);
  for (int k = 2; k <= n; ++k) result *= static_cast<std::uint32_t>(k);
  return result;
}

// (2n-1)!! = (2n-1)(2n-3)...(3)(1); empty product for n = 0.
inline BigUint double_factorial_count(int n) {
  if (n < 0) throw std::invalid_argument("double_factorial_count: negative argument");
  BigUint result(1);
  for (int k = 1; k <= n; ++k) result *= static_cast<std::uint32_t>(2 * k - 1);
  return result;
}

// Per-family order ceilings keeping every exact count at desk scale.
// SKOLEM_MAX_ORDER, when set, replaces all of them.
struct Ceilings {
  int skolem = 12;
  int perfect = 9;
  int perfect_extremal = 10;
  int perfect_sets = 10;
  int multi = 6;
  int extremal_multi = 6;

  int for_family(Family family) const {
    switch (family) {
      case Family::skolem: return skolem;
      case Family::perfect: return perfect;
      case Family::perfect_extremal: return perfect_extremal;
      case Family::perfect_sets: return perfect_sets;
      case Family::multi: return multi;
      case Family::extremal_multi: return extremal_multi;
    }
    return 0;
  }

  static Ceilings active() {
    Ceilings c;
    if (const char* env = std::getenv("SKOLEM_MAX_ORDER")) {
      const int v = std::atoi(env);
      if (v >= 1) c = Ceilings{v, v, v, v, v, v};
    }
    return c;
  }
};

namespace detail {

struct BranchOutcome {
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

// Runs one worker function over a list of independent subproblems. Workers
// share nothing; results land in a pre-sized vector and are reduced by the
// caller in branch order, so totals cannot depend on the schedule.
template <typename Branch, typename Fn>
inline std::vector<BranchOutcome> run_pool(const std::vector<Branch>& branches, Fn&& worker, int jobs) {
  std::vector<BranchOutcome> results(branches.size());
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), branches.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < branches.size(); ++i) results[i] = worker(branches[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= branches.size()) return;
        results[i] = worker(branches[i]);
      }
    });
  }
  for (auto& t : threads) t.join();
  return results;
}

struct NullSink {
  void operator()(const std::array<int, 64>&) const {}
};

// Pairings of {1..2n} (0-based bit positions), always extending at the lowest
// free cell, with the first pair (0, first_partner) fixed. kDistinct adds the
// all-differences-distinct mask. The sink sees the partner table of every
// complete pairing.
template <bool kDistinct, typename Sink = NullSink>
inline BranchOutcome paired_positions_branch(const int cells, const int first_partner,
                                             Sink&& sink = {}) {
  BranchOutcome out;
  std::uint64_t free = (cells >= 64) ? ~0ull : ((1ull << cells) - 1);
  std::uint64_t used = 0;
  std::array<int, 64> partner{};

  auto dfs = [&](auto&& self) -> void {
    if (free == 0) {
      ++out.count;
      sink(partner);
      return;
    }
    const int t = std::countr_zero(free);
    std::uint64_t candidates = free & ~((2ull << t) - 1);
    while (candidates) {
      const int s = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if constexpr (kDistinct) {
        if ((used >> (s - t)) & 1) continue;
      }
      ++out.nodes;
      const std::uint64_t move = (1ull << t) | (1ull << s);
      free ^= move;
      partner[static_cast<std::size_t>(t)] = s;
      partner[static_cast<std::size_t>(s)] = t;
      if constexpr (kDistinct) used ^= 1ull << (s - t);
      self(self);
      free ^= move;
      if constexpr (kDistinct) used ^= 1ull << (s - t);
    }
  };

  ++out.nodes;
  free ^= 1ull | (1ull << first_partner);
  partner[0] = first_partner;
  partner[static_cast<std::size_t>(first_partner)] = 0;
  if constexpr (kDistinct) used ^= 1ull << first_partner;
  dfs(dfs);
  return out;
}

// Straddling pairings of {1..2n}: left cell t (0-based, in order) pairs with a
// free right cell n + r. The first pair (0, n + first_right) is fixed.
template <bool kDistinct, typename Sink = NullSink>
inline BranchOutcome straddling_branch(const int n, const int first_right, Sink&& sink = {}) {
  BranchOutcome out;
  std::uint64_t right_free = (n >= 64) ? ~0ull : ((1ull << n) - 1);
  std::uint64_t used = 0;
  std::array<int, 64> partner{};

  auto dfs = [&](auto&& self, int t) -> void {
    if (t == n) {
      ++out.count;
      sink(partner);
      return;
    }
    std::uint64_t candidates = right_free;
    while (candidates) {
      const int r = std::countr_zero(candidates);
      candidates &= candidates - 1;
      const int d = n + r - t;
      if constexpr (kDistinct) {
        if ((used >> d) & 1) continue;
      }
      ++out.nodes;
      right_free ^= 1ull << r;
      partner[static_cast<std::size_t>(t)] = n + r;
      partner[static_cast<std::size_t>(n + r)] = t;
      if constexpr (kDistinct) used ^= 1ull << d;
      self(self, t + 1);
      right_free ^= 1ull << r;
      if constexpr (kDistinct) used ^= 1ull << d;
    }
  };

  ++out.nodes;
  right_free ^= 1ull << first_right;
  partner[0] = n + first_right;
  partner[static_cast<std::size_t>(n + first_right)] = 0;
  if constexpr (kDistinct) used ^= 1ull << (n + first_right);
  dfs(dfs, 1);
  return out;
}

inline void for_each_subset(int universe_max, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > universe_max) return;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    fn(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == universe_max - (k - 1 - i)) --i;
    if (i < 0) return;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline std::vector<std::vector<int>> subsets(int universe_max, int k) {
  std::vector<std::vector<int>> out;
  for_each_subset(universe_max, k, [&out](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

inline void require_within(int order, int ceiling, Family family) {
  if (order > ceiling)
    throw ResourceLimitError("order " + std::to_string(order) + " exceeds the ceiling " +
                             std::to_string(ceiling) + " for family " +
                             std::string(family_name(family)) +
                             " (override with SKOLEM_MAX_ORDER)");
}

}  // namespace detail

// Exact count of one sequence family at one order:
//   skolem            pairings of {1..2n} into {1..n}
//   perfect           pairings of {1..2n} with n distinct differences
//   perfect-extremal  perfect pairings whose pairs all straddle the midpoint
//   perfect-sets      distinct sets A admitting a pairing of {1..2n}
//   multi             all pairings of {1..2n} (equals (2n-1)!!)
//   extremal-multi    all straddling pairings (equals n!)
// Counting is always by direct search; the closed forms are cross-checks.
// `jobs` sizes the worker pool and can never change the result.
inline CountReport count_family(Family family, int order, int jobs = 1) {
  if (order < 1) throw std::invalid_argument("count_family: order must be positive");
  detail::require_within(order, Ceilings::active().for_family(family), family);

  const auto start = std::chrono::steady_clock::now();
  CountReport report;
  report.family = family;
  report.order = order;

  std::vector<detail::BranchOutcome> outcomes;
  switch (family) {
    case Family::skolem: {
      const DiffMultiset diffs = DiffMultiset::range(1, order);
      const PositionSet positions = PositionSet::contiguous(2 * order);
      const std::vector<RootBranch> branches = root_split(positions, diffs);
      outcomes = detail::run_pool(branches,
                                  [&](const RootBranch& b) {
                                    SearchStats stats;
                                    detail::BranchOutcome o;
                                    o.count = count_solutions_branch(positions, diffs, b, &stats);
                                    o.nodes = stats.nodes;
                                    return o;
                                  },
                                  jobs);
      break;
    }
    case Family::perfect:
    case Family::multi: {
      std::vector<int> branches;
      for (int s = 1; s < 2 * order; ++s) branches.push_back(s);
      outcomes = detail::run_pool(branches,
                                  [&](int s) {
                                    return family == Family::perfect
                                               ? detail::paired_positions_branch<true>(2 * order, s)
                                               : detail::paired_positions_branch<false>(2 * order, s);
                                  },
                                  jobs);
      break;
    }
    case Family::perfect_extremal:
    case Family::extremal_multi: {
      std::vector<int> branches;
      for (int r = 0; r < order; ++r) branches.push_back(r);
      outcomes = detail::run_pool(branches,
                                  [&](int r) {
                                    return family == Family::perfect_extremal
                                               ? detail::straddling_branch<true>(order, r)
                                               : detail::straddling_branch<false>(order, r);
                                  },
                                  jobs);
      break;
    }
    case Family::perfect_sets: {
      const std::vector<std::vector<int>> candidates = detail::subsets(2 * order - 1, order);
      const PositionSet positions = PositionSet::contiguous(2 * order);
      outcomes = detail::run_pool(candidates,
                                  [&](const std::vector<int>& values) {
                                    detail::BranchOutcome o;
                                    const DiffMultiset diffs{std::vector<int>(values)};
                                    if (!necessary_conditions_perfect(diffs).both()) return o;
                                    SearchStats stats;
                                    o.count = decide(positions, diffs, stats).has_value() ? 1 : 0;
                                    o.nodes = stats.nodes;
                                    return o;
                                  },
                                  jobs);
      break;
    }
  }

  for (const auto& outcome : outcomes) {
    report.count += outcome.count;
    report.nodes += outcome.nodes;
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

struct ReversalCensus {
  BigUint total;
  BigUint reversal_fixed;
};

// How many perfect (distinct-difference) sequences of order n there are, and
// how many of them are their own reversal. The reversal-fixed ones observed so
// far are exactly the odd-difference palindromes ...5 3 1 1 3 5..., one per
// order; this routine measures rather than assumes that.
inline ReversalCensus reversal_census(int n) {
  if (n < 1) throw std::invalid_argument("reversal_census: order must be positive");
  detail::require_within(n, Ceilings::active().perfect, Family::perfect);
  const int cells = 2 * n;
  std::uint64_t total = 0, fixed = 0;
  for (int s = 1; s < cells; ++s) {
    const auto outcome = detail::paired_positions_branch<true>(
        cells, s, [&fixed, cells](const std::array<int, 64>& partner) {
          for (int v = 0; v < cells; ++v)
            if (partner[static_cast<std::size_t>(cells - 1 - v)] !=
                cells - 1 - partner[static_cast<std::size_t>(v)])
              return;
          ++fixed;
        });
    total += outcome.count;
  }
  return {BigUint(total), BigUint(fixed)};
}

struct ConjectureMismatch {
  std::vector<int> set;  // increasing
  bool predicted = false;
  bool solvable = false;
};

struct Conjecture2Report {
  std::vector<ConjectureMismatch> mismatches;
  std::vector<std::uint64_t> accepting_per_order;  // index i holds order i+1
};

// Sweeps every set A of cardinality n <= max_card with elements in {1..2n-1}
// and compares the parity+density predicate with the exhaustive solver. Any
// disagreement would be a counterexample to the conjectured characterization.
inline Conjecture2Report verify_conjecture2(int max_card) {
  if (max_card < 1) throw std::invalid_argument("verify_conjecture2: cardinality must be positive");
  detail::require_within(max_card, Ceilings::active().perfect_sets, Family::perfect_sets);
  Conjecture2Report report;
  report.accepting_per_order.assign(static_cast<std::size_t>(max_card), 0);
  for (int n = 1; n <= max_card; ++n) {
    const PositionSet positions = PositionSet::contiguous(2 * n);
    detail::for_each_subset(2 * n - 1, n, [&](const std::vector<int>& values) {
      const DiffMultiset diffs{std::vector<int>(values)};
      const bool predicted = conjecture2_predicate(diffs);
      const bool solvable = decide(positions, diffs).has_value();
      if (solvable) ++report.accepting_per_order[static_cast<std::size_t>(n) - 1];
      if (predicted != solvable) report.mismatches.push_back({values, predicted, solvable});
    });
  }
  return report;
}

struct TwoMissingReport {
  std::vector<ConjectureMismatch> mismatches;
  std::vector<std::vector<int>> density_exceptions;  // parity passes, density fails
};

// Sets {1..n} minus two elements a_i < a_j. Conjectured solvable iff the two
// missing elements have equal parity for n = 0,1 (mod 4) (opposite parity for
// n = 2,3 (mod 4)) and the set is not one of the four density violators
// {3}, {2,4}, {2,4,5}, {3,4,5,6}.
inline TwoMissingReport two_missing_sweep(int max_base) {
  detail::require_within(max_base, Ceilings::active().skolem, Family::skolem);
  static const std::vector<std::vector<int>> kDensityViolators = {
      {3}, {2, 4}, {2, 4, 5}, {3, 4, 5, 6}};
  TwoMissingReport report;
  for (int base = 3; base <= max_base; ++base) {
    const bool base01 = base % 4 == 0 || base % 4 == 1;
    const PositionSet positions = PositionSet::contiguous(2 * (base - 2));
    for (int ai = 1; ai <= base; ++ai) {
      for (int aj = ai + 1; aj <= base; ++aj) {
        std::vector<int> values;
        for (int v = 1; v <= base; ++v)
          if (v != ai && v != aj) values.push_back(v);
        const bool parity_rule = base01 ? (ai % 2 == aj % 2) : (ai % 2 != aj % 2);
        const bool excluded =
            std::find(kDensityViolators.begin(), kDensityViolators.end(), values) !=
            kDensityViolators.end();
        const bool predicted = parity_rule && !excluded;
        const DiffMultiset diffs{std::vector<int>(values)};
        const bool solvable = decide(positions, diffs).has_value();
        if (predicted != solvable) report.mismatches.push_back({values, predicted, solvable});
        if (parity_rule && !necessary_conditions_perfect(diffs).density_ok)
          report.density_exceptions.push_back(values);
      }
    }
  }
  return report;
}

// Restriction of the conjecture sweep to extremal candidates (element sum n^2),
// decided with the straddling search.
inline std::vector<ConjectureMismatch> verify_extremal_conjecture(int max_card) {
  if (max_card < 1) throw std::invalid_argument("verify_extremal_conjecture: cardinality must be positive");
  detail::require_within(max_card, Ceilings::active().perfect_extremal, Family::perfect_extremal);
  std::vector<ConjectureMismatch> mismatches;
  for (int n = 1; n <= max_card; ++n) {
    detail::for_each_subset(2 * n - 1, n, [&](const std::vector<int>& values) {
      const DiffMultiset diffs{std::vector<int>(values)};
      if (!is_extremal_candidate(diffs)) return;
      const bool predicted = conjecture2_predicate(diffs);
      const bool solvable = count_extremal(diffs) > 0;
      if (predicted != solvable) mismatches.push_back({values, predicted, solvable});
    });
  }
  return mismatches;
}

struct Mod4Entry {
  int order = 0;
  BigUint count;
  unsigned residue = 0;
};

// Perfect-sequence counts and their residues mod 4. Every value computed so
// far has residue 1; a different residue would be a reportable counterexample.
inline std::vector<Mod4Entry> mod4_check(const std::vector<int>& orders, int jobs = 1) {
  std::vector<Mod4Entry> entries;
  entries.reserve(orders.size());
  for (int order : orders) {
    const CountReport report = count_family(Family::perfect, order, jobs);
    entries.push_back({order, report.count, report.count.mod4()});
  }
  return entries;
}

}  // namespace skolem
