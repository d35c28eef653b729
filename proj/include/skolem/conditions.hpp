#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>

#include "skolem/model.hpp"

namespace skolem {

// Necessary conditions for (P, A) to admit a pairing, with A sorted in
// decreasing order and |P| = 2n:
//
//   parity:   sum(a_i) == sum(p_i)  (mod 2)
//   density:  a_1 + ... + a_m  <=  (sum of the m largest p_i)
//                                - (sum of the m smallest p_i)   for m = 1..n
//
// The density check reports the first failing prefix length m, which is what
// makes a rejection diagnosable.

struct DensityResult {
  bool ok = true;
  std::optional<int> first_failure;
};

struct ConditionReport {
  bool parity_ok = false;
  bool density_ok = false;
  std::optional<int> first_density_failure;
  bool extremal = false;  // element sum meets the density bound at m = n exactly

  bool both() const { return parity_ok && density_ok; }
};

namespace detail {
inline void require_matching_sizes(const PositionSet& positions, const DiffMultiset& diffs) {
  if (positions.size() != 2 * diffs.order())
    throw std::invalid_argument("conditions: require |P| == 2 |A|");
}
}  // namespace detail

inline bool parity_condition(const PositionSet& positions, const DiffMultiset& diffs) {
  detail::require_matching_sizes(positions, diffs);
  long long psum = 0;
  for (int p : positions.values()) psum += p;
  return ((diffs.sum() ^ psum) & 1) == 0;
}

inline DensityResult density_condition(const PositionSet& positions, const DiffMultiset& diffs) {
  detail::require_matching_sizes(positions, diffs);
  const auto& a = diffs.values();      // decreasing
  const auto& p = positions.values();  // increasing
  const int n = diffs.order();
  long long prefix = 0, top = 0, bottom = 0;
  for (int m = 1; m <= n; ++m) {
    prefix += a[m - 1];
    top += p[2 * n - m];
    bottom += p[m - 1];
    if (prefix > top - bottom) return {false, m};
  }
  return {true, std::nullopt};
}

inline ConditionReport general_conditions(const PositionSet& positions, const DiffMultiset& diffs) {
  detail::require_matching_sizes(positions, diffs);
  ConditionReport report;
  report.parity_ok = parity_condition(positions, diffs);
  const DensityResult density = density_condition(positions, diffs);
  report.density_ok = density.ok;
  report.first_density_failure = density.first_failure;
  const int n = diffs.order();
  long long spread = 0;
  for (int m = 1; m <= n; ++m)
    spread += positions.values()[2 * n - m] - positions.values()[m - 1];
  report.extremal = diffs.sum() == spread;
  return report;
}

// Specialization to P = {1..2n}: parity reduces to "the number of even
// differences is even", density to sum of the m largest <= m(2n - m).
inline ConditionReport necessary_conditions_perfect(const DiffMultiset& diffs) {
  return general_conditions(PositionSet::contiguous(2 * diffs.order()), diffs);
}

// Extremal means the element sum is exactly n^2: every pair of a witness must
// then straddle the midpoint of {1..2n}.
inline bool is_extremal_candidate(const DiffMultiset& diffs) {
  const long long n = diffs.order();
  return diffs.sum() == n * n;
}

enum class ClassicalFamily { skolem, langford, near_skolem, m_fold };

inline std::string_view classical_family_name(ClassicalFamily family) {
  switch (family) {
    case ClassicalFamily::skolem: return "skolem";
    case ClassicalFamily::langford: return "langford";
    case ClassicalFamily::near_skolem: return "near-skolem";
    case ClassicalFamily::m_fold: return "m-fold";
  }
  return "?";
}

struct ClassicalVerdict {
  ClassicalFamily family;
  bool solvable;
};

// Closed-form classification of the classical shapes:
//   {1..n}            solvable iff n = 0,1 (mod 4)
//   {a..b}, a >= 2    solvable iff |A| >= 2a-1 and |A| = 0,1 (mod 4) for a odd,
//                     |A| = 0,3 (mod 4) for a even
//   {1..n} \ {m}      solvable iff n = 0,1 (mod 4) and m odd, or
//                     n = 2,3 (mod 4) and m even
//   {1^m,...,n^m}     solvable iff n = 0,1 (mod 4), or n = 2,3 (mod 4) and m even
// Returns nothing when A matches none of these shapes.
inline std::optional<ClassicalVerdict> classify_classical(const DiffMultiset& diffs) {
  if (diffs.empty()) return std::nullopt;
  std::vector<int> v(diffs.values().rbegin(), diffs.values().rend());  // ascending
  const int count = static_cast<int>(v.size());

  if (diffs.is_set()) {
    bool contiguous = true;
    int gaps = 0, missing = 0;
    for (int i = 1; i < count; ++i) {
      const int step = v[i] - v[i - 1];
      if (step == 2) {
        ++gaps;
        missing = v[i] - 1;
      } else if (step != 1) {
        return std::nullopt;
      }
    }
    contiguous = gaps == 0;
    if (contiguous && v.front() == 1) {
      const int n = count;
      return ClassicalVerdict{ClassicalFamily::skolem, n % 4 == 0 || n % 4 == 1};
    }
    if (contiguous) {
      const int a = v.front();
      const bool long_enough = count >= 2 * a - 1;
      const bool residue_ok = (a % 2 == 1) ? (count % 4 == 0 || count % 4 == 1)
                                           : (count % 4 == 0 || count % 4 == 3);
      return ClassicalVerdict{ClassicalFamily::langford, long_enough && residue_ok};
    }
    if (gaps == 1 && v.front() == 1) {
      const int n = v.back();
      const int m = missing;
      const bool n01 = n % 4 == 0 || n % 4 == 1;
      return ClassicalVerdict{ClassicalFamily::near_skolem, (n01 && m % 2 == 1) || (!n01 && m % 2 == 0)};
    }
    return std::nullopt;
  }

  // m-fold shape: m copies of each of 1..n
  const int mult = static_cast<int>(std::count(v.begin(), v.end(), v.front()));
  if (mult < 2 || count % mult != 0) return std::nullopt;
  const int n = count / mult;
  for (int value = 1; value <= n; ++value)
    for (int copy = 0; copy < mult; ++copy)
      if (v[static_cast<std::size_t>(value - 1) * mult + copy] != value) return std::nullopt;
  const bool n01 = n % 4 == 0 || n % 4 == 1;
  return ClassicalVerdict{ClassicalFamily::m_fold, n01 || mult % 2 == 0};
}

// {1..2n+1} with position k left empty and A = {1..n}: solvable iff
// n = 0,1 (mod 4) for k odd, n = 2,3 (mod 4) for k even.
inline bool k_extended_verdict(int n, int k) {
  if (n < 1) throw std::invalid_argument("k_extended_verdict: order must be positive");
  if (k < 1 || k > 2 * n + 1) throw std::invalid_argument("k_extended_verdict: hook out of range");
  const bool n01 = n % 4 == 0 || n % 4 == 1;
  return (k % 2 == 1) ? n01 : !n01;
}

// The conjectured exact characterization of perfect Skolem sets: parity and
// density together. Defined for sets only; it is false for multisets in
// general ({1,3,3} passes both conditions yet has no witness).
inline bool conjecture2_predicate(const DiffMultiset& diffs) {
  if (!diffs.is_set())
    throw std::invalid_argument("conjecture2_predicate: defined for sets, not multisets");
  return necessary_conditions_perfect(diffs).both();
}

}  // namespace skolem
