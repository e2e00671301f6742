// Copyright 2026 The bsstar Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bsstar/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace bsstar {
namespace {

// Every permutation of {1..n} in lexicographic order, straight from the
// standard library.
std::vector<std::vector<int>> lexicographic(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation perm(std::initializer_list<int> s) { return Permutation::from_symbols(s); }

TEST(PermutationTest, RankMatchesLexicographicEnumeration) {
  for (int n = 2; n <= 6; ++n) {
    const auto all = lexicographic(n);
    ASSERT_EQ(all.size(), factorial(n));
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Permutation p = Permutation::from_symbols(std::span<const int>(all[i]));
      EXPECT_EQ(rank(p).value, i);
      EXPECT_EQ(unrank(Rank{i, n}), p);
    }
  }
}

TEST(PermutationTest, RankExamples) {
  EXPECT_EQ(rank(perm({1, 2, 3})).value, 0u);
  EXPECT_EQ(rank(perm({3, 2, 1})).value, 5u);
  EXPECT_EQ(rank(perm({2, 1, 3, 4})).value, 6u);
  EXPECT_EQ(unrank(Rank{0, 3}), perm({1, 2, 3}));
  EXPECT_EQ(unrank(Rank{5, 3}), perm({3, 2, 1}));
  EXPECT_EQ(unrank(Rank{23, 4}), perm({4, 3, 2, 1}));
}

TEST(PermutationTest, UnrankRejectsOutOfRange) {
  EXPECT_THROW(unrank(Rank{6, 3}), std::out_of_range);
  EXPECT_THROW(unrank(Rank{0, 13}), std::invalid_argument);
  EXPECT_THROW(unrank(Rank{0, 1}), std::invalid_argument);
}

TEST(PermutationTest, RandomRoundTrips) {
  std::mt19937_64 rng(20261015);
  for (int n = 2; n <= 8; ++n) {
    std::uniform_int_distribution<std::uint64_t> pick(0, factorial(n) - 1);
    for (int i = 0; i < 1000; ++i) {
      const Rank r{pick(rng), n};
      EXPECT_EQ(rank(unrank(r)), r);
      const Permutation p = unrank(r);
      EXPECT_EQ(unrank(rank(p)), p);
    }
  }
  const Permutation top = unrank(Rank{factorial(12) - 1, 12});
  EXPECT_EQ(top.at(1), 12);
  EXPECT_EQ(rank(top).value, factorial(12) - 1);
}

TEST(PermutationTest, SwapExamples) {
  EXPECT_EQ(swap(perm({1, 2, 3, 4}), 1, 2), perm({2, 1, 3, 4}));
  EXPECT_EQ(swap(perm({1, 2, 3, 4}), 3, 4), perm({1, 2, 4, 3}));
  EXPECT_EQ(swap(perm({2, 1, 3, 4}), 1, 4), perm({4, 1, 3, 2}));
  EXPECT_EQ(swap(perm({2, 1, 3, 4}), 4, 1), perm({4, 1, 3, 2}));
}

TEST(PermutationTest, SwapRejectsBadPositions) {
  const Permutation p = perm({1, 2, 3});
  EXPECT_THROW(swap(p, 2, 2), std::invalid_argument);
  EXPECT_THROW(swap(p, 0, 2), std::invalid_argument);
  EXPECT_THROW(swap(p, 1, 4), std::invalid_argument);
}

TEST(PermutationTest, MinusAndPlus) {
  EXPECT_EQ(minus(perm({1, 2, 3})), perm({1, 3, 2}));
  EXPECT_EQ(minus(perm({1, 2, 3, 4})), perm({1, 2, 4, 3}));
  EXPECT_EQ(plus(perm({1, 2, 3})), perm({3, 2, 1}));
  EXPECT_EQ(plus(perm({1, 2, 3, 4})), perm({4, 2, 3, 1}));
}

TEST(PermutationTest, OperationsAreInvolutionsAndPure) {
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 9; ++n) {
    std::uniform_int_distribution<std::uint64_t> pick(0, factorial(n) - 1);
    std::uniform_int_distribution<int> pos(1, n);
    for (int i = 0; i < 200; ++i) {
      const Permutation p = unrank(Rank{pick(rng), n});
      const Permutation copy = p;
      int j = pos(rng);
      int k = pos(rng);
      if (j == k) k = j == n ? 1 : j + 1;
      EXPECT_EQ(swap(swap(p, j, k), j, k), p);
      EXPECT_EQ(swap(p, j, k), swap(p, k, j));
      EXPECT_EQ(minus(minus(p)), p);
      EXPECT_EQ(plus(plus(p)), p);
      EXPECT_EQ(p, copy);
    }
  }
}

TEST(PermutationTest, ParityExamples) {
  EXPECT_EQ(parity(perm({1, 2, 3})), Parity::kEven);
  EXPECT_EQ(parity(perm({2, 1, 3})), Parity::kOdd);
  EXPECT_EQ(parity(perm({2, 3, 1})), Parity::kEven);
}

TEST(PermutationTest, ParityFlipsUnderEverySwap) {
  for (int n = 3; n <= 4; ++n) {
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const Permutation p = unrank(Rank{r, n});
      for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          EXPECT_NE(parity(swap(p, j, k)), parity(p));
        }
      }
    }
  }
}

TEST(PermutationTest, FromSymbolsValidates) {
  EXPECT_THROW(perm({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(perm({0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(perm({1, 2, 4}), std::invalid_argument);
  EXPECT_THROW(perm({1}), std::invalid_argument);
}

TEST(PermutationTest, TextFormat) {
  EXPECT_EQ(to_string(perm({2, 1, 3, 4})), "2134");
  EXPECT_EQ(parse_permutation("2134"), perm({2, 1, 3, 4}));
  const Permutation ten = swap(Permutation::identity(10), 1, 10);
  EXPECT_EQ(to_string(ten), "10,2,3,4,5,6,7,8,9,1");
  EXPECT_EQ(parse_permutation("10,2,3,4,5,6,7,8,9,1"), ten);
  EXPECT_THROW(parse_permutation("12a"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1233"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("123", 4), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_permutation(""), std::invalid_argument);
}

}  // namespace
}  // namespace bsstar
