#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"

using namespace opgb;
using testutil::brute_shuffle_permutations;
using testutil::compositions;

TEST_SUITE_BEGIN("permutations");

TEST_CASE("identity and validity") {
  Permutation id = Permutation::identity(4);
  CHECK(id.images == std::vector<int>{1, 2, 3, 4});
  CHECK(id.is_valid());
  CHECK(id(3) == 3);
  CHECK_FALSE(Permutation({1, 1, 3}).is_valid());
  CHECK_FALSE(Permutation({0, 1, 2}).is_valid());
  CHECK(Permutation(std::vector<int>{}).is_valid());
}

TEST_CASE("compose and inverse") {
  Permutation s({2, 3, 1});
  Permutation t({1, 3, 2});
  CHECK(compose(s, t).images == std::vector<int>{2, 1, 3});  // s after t
  CHECK(compose(inverse(s), s) == Permutation::identity(3));
  CHECK(compose(s, inverse(s)) == Permutation::identity(3));
}

TEST_CASE("reorder_by_images places item i at position sigma(i)") {
  Permutation s({2, 3, 1});
  std::vector<char> items{'a', 'b', 'c'};
  CHECK(reorder_by_images(s, items) == std::vector<char>{'c', 'a', 'b'});
  CHECK_THROWS_AS(reorder_by_images(s, std::vector<char>{'a'}), std::invalid_argument);
}

TEST_CASE("spot values") {
  CHECK(shuffle_permutations({2, 1}).size() == 2);
  CHECK(shuffle_permutations({2, 1})[0].images == std::vector<int>{1, 2, 3});
  CHECK(shuffle_permutations({2, 1})[1].images == std::vector<int>{1, 3, 2});
  CHECK(count_shuffle_permutations({2, 2}) == 3);
  CHECK(count_shuffle_permutations({3}) == 1);
  CHECK(count_shuffle_permutations({1, 1, 1, 1}) == 1);  // singleton leads force identity
  CHECK(count_shuffle_permutations({2, 2, 2, 2}) == 105);
}

TEST_CASE("count stays exact past 64 bits") {
  // 21 blocks of two: every unordered partition into pairs orders uniquely.
  mpz_class expected = testutil::factorial(42);
  mpz_class pairings = testutil::factorial(21);
  pairings <<= 21;  // 2! per block
  expected /= pairings;
  CHECK(count_shuffle_permutations(std::vector<int>(21, 2)) == expected);
}

TEST_CASE("invalid types throw") {
  CHECK_THROWS_AS(shuffle_permutations({}), std::invalid_argument);
  CHECK_THROWS_AS(shuffle_permutations({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(count_shuffle_permutations({-1}), std::invalid_argument);
}

TEST_CASE("matches the brute-force filter of S_n for every type of total <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& blocks : compositions(n)) {
      CAPTURE(blocks);
      auto fast = shuffle_permutations(blocks);
      auto brute = brute_shuffle_permutations(blocks);
      REQUIRE(fast == brute);  // same elements in the same (lexicographic) order
      for (const auto& sigma : fast) CHECK(is_shuffle_permutation(sigma, blocks));
    }
  }
}

TEST_CASE("enumerated count matches the closed form for every type of total <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& blocks : compositions(n)) {
      CAPTURE(blocks);
      CHECK(count_shuffle_permutations(blocks) ==
            mpz_class(static_cast<long>(shuffle_permutations(blocks).size())));
    }
  }
}

TEST_CASE("output is sorted and duplicate-free") {
  auto all = shuffle_permutations({2, 3, 1});
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("is_shuffle_permutation rejects non-members") {
  CHECK(is_shuffle_permutation(Permutation({1, 3, 2}), {2, 1}));
  CHECK_FALSE(is_shuffle_permutation(Permutation({2, 3, 1}), {2, 1}));  // lead of {3} too small
  CHECK_FALSE(is_shuffle_permutation(Permutation({2, 1, 3}), {2, 1}));  // decreasing block
  CHECK_FALSE(is_shuffle_permutation(Permutation({1, 2}), {2, 1}));     // wrong size
}

TEST_SUITE_END();
