#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "skolem/conditions.hpp"
#include "skolem/model.hpp"
#include "skolem/permutation.hpp"

namespace skolem {

struct SetWithWitness {
  DiffMultiset set;
  Pairing pairing;
};

// True iff the pairing covers {1..2n} and every pair straddles the midpoint.
inline bool is_extremal_pairing(const Pairing& pairing) {
  const int n = pairing.size();
  if (!(pairing.positions() == PositionSet::contiguous(2 * n))) return false;
  for (const auto& [t, s] : pairing.pairs())
    if (t > n || s <= n) return false;
  return true;
}

namespace detail {

// Every construction self-validates before returning; a failure here means
// the construction itself is broken, not the input.
inline SetWithWitness checked_extremal(DiffMultiset set, Pairing pairing) {
  if (!validate(pairing, PositionSet::contiguous(2 * pairing.size()), set) ||
      !is_extremal_pairing(pairing))
    throw ValidationError("construction produced a witness that does not validate");
  return {std::move(set), std::move(pairing)};
}

inline void require_witness(const Pairing& witness, const PositionSet& positions,
                            const DiffMultiset& diffs, const char* what) {
  if (!validate(witness, positions, diffs)) throw std::invalid_argument(what);
}

}  // namespace detail

// From a pairing of {1..2n} into A, builds the order-2n extremal set
// B = {2n + a_i} u {2n - a_i}: each original pair (t, s) contributes the pairs
// (t, s + 2n) and (s, t + 2n), i.e. x is paired with sigma(x) + 2n where sigma
// is the involution of the witness.
inline SetWithWitness extremal_from_skolem(const DiffMultiset& diffs, const Pairing& witness) {
  const int n = diffs.order();
  detail::require_witness(witness, PositionSet::contiguous(2 * n), diffs,
                          "extremal_from_skolem: witness does not pair {1..2n} into the given set");
  std::vector<int> out_set;
  out_set.reserve(static_cast<std::size_t>(2 * n));
  for (int a : diffs.values()) {
    out_set.push_back(2 * n + a);
    out_set.push_back(2 * n - a);
  }
  std::vector<Pairing::Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(2 * n));
  for (const auto& [t, s] : witness.pairs()) {
    pairs.push_back({t, s + 2 * n});
    pairs.push_back({s, t + 2 * n});
  }
  return detail::checked_extremal(DiffMultiset(std::move(out_set)), Pairing(std::move(pairs)));
}

// Same map for a pairing of {1..2n+1} with the hook position k left empty:
// the hook is the fixed point of the involution and contributes the middle
// difference 2n+1, giving B = {2n+1 + a_i} u {2n+1} u {2n+1 - a_i}.
// A perfect witness of order n doubles as the hook-at-the-end case k = 2n+1.
inline SetWithWitness extremal_from_k_extended(const DiffMultiset& diffs, int hook,
                                               const Pairing& witness) {
  const int n = diffs.order();
  const int len = 2 * n + 1;
  if (hook < 1 || hook > len)
    throw std::invalid_argument("extremal_from_k_extended: hook out of range");
  detail::require_witness(witness, PositionSet::contiguous_without(len, hook), diffs,
                          "extremal_from_k_extended: witness does not pair {1..2n+1} minus the hook "
                          "into the given set");
  std::vector<int> out_set;
  out_set.reserve(static_cast<std::size_t>(len));
  for (int a : diffs.values()) {
    out_set.push_back(len + a);
    out_set.push_back(len - a);
  }
  out_set.push_back(len);
  std::vector<Pairing::Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(len));
  for (const auto& [t, s] : witness.pairs()) {
    pairs.push_back({t, s + len});
    pairs.push_back({s, t + len});
  }
  pairs.push_back({hook, hook + len});
  return detail::checked_extremal(DiffMultiset(std::move(out_set)), Pairing(std::move(pairs)));
}

enum class ComposeVariant { C, D, E };

// Splices two extremal witnesses S_A (order n) and S_B (order m) into a new
// extremal witness of order n + m by concatenating their halves:
//   C = A u {b_j + 2n}          as (B_left + 2n) A (B_right + 2n)
//   D = B u {a_i + 2m}          as (A_left + 2m) B (A_right + 2m)
//   E = {a_i + m} u {b_j + n}   as (A_left + m)(B_left + n)(A_right + m)(B_right + n)
// expressed below directly on pair coordinates.
inline SetWithWitness compose(const SetWithWitness& a, const SetWithWitness& b,
                              ComposeVariant variant) {
  const int n = a.set.order();
  const int m = b.set.order();
  if (!validate(a.pairing, PositionSet::contiguous(2 * n), a.set) || !is_extremal_pairing(a.pairing))
    throw std::invalid_argument("compose: first ingredient is not an extremal witness");
  if (!validate(b.pairing, PositionSet::contiguous(2 * m), b.set) || !is_extremal_pairing(b.pairing))
    throw std::invalid_argument("compose: second ingredient is not an extremal witness");

  std::vector<int> out_set;
  std::vector<Pairing::Pair> pairs;
  switch (variant) {
    case ComposeVariant::C:
      for (int v : a.set.values()) out_set.push_back(v);
      for (int v : b.set.values()) out_set.push_back(v + 2 * n);
      for (const auto& [t, s] : a.pairing.pairs()) pairs.push_back({t + m, s + m});
      for (const auto& [t, s] : b.pairing.pairs()) pairs.push_back({t, s + 2 * n});
      break;
    case ComposeVariant::D:
      for (int v : b.set.values()) out_set.push_back(v);
      for (int v : a.set.values()) out_set.push_back(v + 2 * m);
      for (const auto& [t, s] : b.pairing.pairs()) pairs.push_back({t + n, s + n});
      for (const auto& [t, s] : a.pairing.pairs()) pairs.push_back({t, s + 2 * m});
      break;
    case ComposeVariant::E:
      for (int v : a.set.values()) out_set.push_back(v + m);
      for (int v : b.set.values()) out_set.push_back(v + n);
      for (const auto& [t, s] : a.pairing.pairs()) pairs.push_back({t, s + m});
      for (const auto& [t, s] : b.pairing.pairs()) pairs.push_back({t + n, s + 2 * n});
      break;
  }
  return detail::checked_extremal(DiffMultiset(std::move(out_set)), Pairing(std::move(pairs)));
}

// The complete defect-a solution for near-Langford extremal sets: the set
// {a..3a} \ {2a} with the explicit witness
//   (2a - 2j, 3a - j)          j = 0..a-1      (differences a..2a-1)
//   (4a+1 - 2j, 5a+1 - j)      j = a+1..2a     (differences 2a+1..3a)
inline SetWithWitness near_langford_extremal(int defect) {
  if (defect < 1) throw std::invalid_argument("near_langford_extremal: defect must be positive");
  const int a = defect;
  std::vector<Pairing::Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(2 * a));
  for (int j = 0; j <= a - 1; ++j) pairs.push_back({2 * a - 2 * j, 3 * a - j});
  for (int j = a + 1; j <= 2 * a; ++j) pairs.push_back({4 * a + 1 - 2 * j, 5 * a + 1 - j});
  return detail::checked_extremal(DiffMultiset::range_without(a, 3 * a, 2 * a),
                                  Pairing(std::move(pairs)));
}

// A set {a..b} \ {m} with a < m < b is a perfect extremal Skolem set exactly
// when b = 3a and m = (a + b) / 2 = 2a.
inline bool near_langford_extremal_verdict(int a, int b, int m) {
  if (!(1 <= a && a < m && m < b))
    throw std::invalid_argument("near_langford_extremal_verdict: requires 1 <= a < m < b");
  return b == 3 * a && m == 2 * a;
}

// The mirror set {2n - a_n, ..., 2n - a_1} of an extremal multi set, witnessed
// through the inverse of the permutation the witness encodes.
inline SetWithWitness complement_extremal(const SetWithWitness& input) {
  const int n = input.set.order();
  if (!validate(input.pairing, PositionSet::contiguous(2 * n), input.set) ||
      !is_extremal_pairing(input.pairing))
    throw std::invalid_argument("complement_extremal: input is not an extremal witness");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (const auto& [t, s] : input.pairing.pairs()) images[static_cast<std::size_t>(t) - 1] = s - n;
  const Permutation inverse = Permutation(std::move(images)).inverse();
  std::vector<Pairing::Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) pairs.push_back({i, inverse(i) + n});
  std::vector<int> out_set;
  out_set.reserve(static_cast<std::size_t>(n));
  for (int v : input.set.values()) out_set.push_back(2 * n - v);
  return detail::checked_extremal(DiffMultiset(std::move(out_set)), Pairing(std::move(pairs)));
}

}  // namespace skolem
