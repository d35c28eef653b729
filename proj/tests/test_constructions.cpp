#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "skolem/constructions.hpp"
#include "skolem/solver.hpp"

using namespace skolem;

TEST_CASE("extremal_from_skolem") {
  const auto small = extremal_from_skolem(DiffMultiset({1}), Pairing({{1, 2}}));
  CHECK(small.set == DiffMultiset({3, 1}));
  CHECK(small.pairing == Pairing({{1, 4}, {2, 3}}));
  CHECK(render(small.pairing).compact() == "3113");

  const Pairing witness = SequenceText::parse("42324311").to_pairing();
  const auto big = extremal_from_skolem(DiffMultiset({4, 3, 2, 1}), witness);
  CHECK(big.set == DiffMultiset({12, 11, 10, 9, 7, 6, 5, 4}));
  CHECK(validate(big.pairing, PositionSet::contiguous(16), big.set));
  CHECK(is_extremal_pairing(big.pairing));
  CHECK(is_extremal_candidate(big.set));

  CHECK_THROWS_AS(extremal_from_skolem(DiffMultiset({4, 3, 2, 1}), Pairing({{1, 2}})),
                  std::invalid_argument);
  // {1,2} admits no witness at all (parity), so the precondition cannot be met
  CHECK_FALSE(is_perfect_multi_skolem_set(DiffMultiset({2, 1})).has_value());
}

TEST_CASE("extremal_from_k_extended") {
  const auto small = extremal_from_k_extended(DiffMultiset({1}), 1, Pairing({{2, 3}}));
  CHECK(small.set == DiffMultiset({4, 3, 2}));
  CHECK(small.pairing == Pairing({{1, 4}, {2, 6}, {3, 5}}));

  // hook at the far end accepts a perfect witness unchanged
  const auto zero_ext = extremal_from_k_extended(DiffMultiset({1}), 3, Pairing({{1, 2}}));
  CHECK(zero_ext.set == DiffMultiset({4, 3, 2}));
  CHECK(validate(zero_ext.pairing, PositionSet::contiguous(6), zero_ext.set));

  const DiffMultiset diffs({4, 3, 2, 1});
  const auto witness = decide(PositionSet::contiguous_without(9, 1), diffs);
  REQUIRE(witness.has_value());
  const auto big = extremal_from_k_extended(diffs, 1, *witness);
  CHECK(big.set == DiffMultiset({13, 12, 11, 10, 9, 8, 7, 6, 5}));
  CHECK(validate(big.pairing, PositionSet::contiguous(18), big.set));
  CHECK(is_extremal_pairing(big.pairing));

  CHECK_THROWS_AS(extremal_from_k_extended(DiffMultiset({1}), 5, Pairing({{2, 3}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(extremal_from_k_extended(DiffMultiset({1}), 2, Pairing({{2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("compose") {
  const SetWithWitness unit{DiffMultiset({1}), Pairing({{1, 2}})};

  const auto c = compose(unit, unit, ComposeVariant::C);
  CHECK(c.set == DiffMultiset({3, 1}));
  CHECK(render(c.pairing).compact() == "3113");

  const auto e = compose(unit, unit, ComposeVariant::E);
  CHECK(e.set == DiffMultiset({2, 2}));
  CHECK(render(e.pairing).compact() == "2222");

  const SetWithWitness three{DiffMultiset({3, 1}), SequenceText::parse("3113").to_pairing()};
  const auto d = compose(unit, three, ComposeVariant::D);
  CHECK(d.set == DiffMultiset({5, 3, 1}));
  CHECK(render(d.pairing).compact() == "531135");  // the order-3 palindrome

  // a witness with a pair on one side of the midpoint is rejected
  const SetWithWitness bad{DiffMultiset({4, 3, 2, 1}), SequenceText::parse("42324311").to_pairing()};
  CHECK_THROWS_AS(compose(bad, unit, ComposeVariant::C), std::invalid_argument);
}

TEST_CASE("compose output sizes and extremality") {
  std::mt19937 rng(3);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 5);
    const Pairing wa(oracle::random_extremal_pairing(rng, n));
    const Pairing wb(oracle::random_extremal_pairing(rng, m));
    const SetWithWitness a{wa.differences(), wa};
    const SetWithWitness b{wb.differences(), wb};
    for (ComposeVariant variant : {ComposeVariant::C, ComposeVariant::D, ComposeVariant::E}) {
      const auto out = compose(a, b, variant);
      CHECK(out.set.order() == n + m);
      CHECK(is_extremal_candidate(out.set));
      CHECK(is_extremal_pairing(out.pairing));
    }
  }
}

TEST_CASE("near_langford_extremal") {
  const auto a1 = near_langford_extremal(1);
  CHECK(a1.set == DiffMultiset({3, 1}));
  CHECK(a1.pairing == Pairing({{2, 3}, {1, 4}}));
  CHECK(render(a1.pairing).compact() == "3113");

  const auto a2 = near_langford_extremal(2);
  CHECK(a2.set == DiffMultiset({6, 5, 3, 2}));
  CHECK(a2.pairing == Pairing({{4, 6}, {2, 5}, {3, 8}, {1, 7}}));
  CHECK(render(a2.pairing).compact() == "63523265");

  const auto a3 = near_langford_extremal(3);
  CHECK(a3.set == DiffMultiset({9, 8, 7, 5, 4, 3}));
  CHECK(a3.pairing.size() == 6);

  for (int a = 1; a <= 10; ++a) {
    const auto out = near_langford_extremal(a);
    CHECK(out.set == DiffMultiset::range_without(a, 3 * a, 2 * a));
    CHECK(validate(out.pairing, PositionSet::contiguous(4 * a), out.set));
    CHECK(is_extremal_pairing(out.pairing));
    // row (2a-2j, 3a-j) realizes difference a+j, row (4a+1-2j, 5a+1-j) likewise
    for (int j = 0; j <= a - 1; ++j) CHECK((3 * a - j) - (2 * a - 2 * j) == a + j);
    for (int j = a + 1; j <= 2 * a; ++j) CHECK((5 * a + 1 - j) - (4 * a + 1 - 2 * j) == a + j);
  }
  CHECK_THROWS_AS(near_langford_extremal(0), std::invalid_argument);
}

TEST_CASE("near_langford_extremal_verdict") {
  CHECK(near_langford_extremal_verdict(2, 6, 4));
  CHECK_FALSE(near_langford_extremal_verdict(2, 6, 5));
  CHECK_FALSE(near_langford_extremal_verdict(2, 7, 4));
  CHECK_THROWS_AS(near_langford_extremal_verdict(2, 7, 1), std::invalid_argument);

  // agreement with the search on small defects
  for (int a = 1; a <= 2; ++a) {
    for (int b = a + 2; b <= 3 * a + 3; ++b) {
      for (int m = a + 1; m < b; ++m) {
        const DiffMultiset diffs = DiffMultiset::range_without(a, b, m);
        const bool solvable_extremal =
            is_extremal_candidate(diffs) && count_extremal(diffs) > 0;
        CHECK(near_langford_extremal_verdict(a, b, m) == solvable_extremal);
      }
    }
  }
}

TEST_CASE("complement_extremal") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Pairing witness(oracle::random_extremal_pairing(rng, n));
    const SetWithWitness input{witness.differences(), witness};
    const auto mirrored = complement_extremal(input);

    std::vector<int> expected;
    for (int v : input.set.values()) expected.push_back(2 * n - v);
    CHECK(mirrored.set == DiffMultiset(expected));
    CHECK(validate(mirrored.pairing, PositionSet::contiguous(2 * n), mirrored.set));
    CHECK(is_extremal_pairing(mirrored.pairing));
  }

  // mirrored sets have the same number of witnesses
  std::vector<int> stack;
  std::function<void(int, int, int)> walk = [&](int n, int min_value, int remaining) {
    if (static_cast<int>(stack.size()) == n) {
      if (remaining != 0) return;
      const DiffMultiset diffs{std::vector<int>(stack)};
      std::vector<int> mirrored;
      for (int v : diffs.values()) mirrored.push_back(2 * n - v);
      CHECK(count_extremal(diffs) == count_extremal(DiffMultiset(mirrored)));
      return;
    }
    for (int v = min_value; v <= std::min(2 * n - 1, remaining); ++v) {
      stack.push_back(v);
      walk(n, v, remaining - v);
      stack.pop_back();
    }
  };
  for (int n = 1; n <= 4; ++n) walk(n, 1, n * n);
}
