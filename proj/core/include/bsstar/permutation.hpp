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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace bsstar {

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 12;

// n! for 0 <= n <= 20.
std::uint64_t factorial(int n);

// Dense lexicographic index of a permutation of dimension n.
struct Rank {
  std::uint64_t value = 0;
  int n = 0;

  friend auto operator<=>(const Rank&, const Rank&) = default;
};

enum class Parity { kEven, kOdd };

// A permutation of {1, ..., n}. Symbols are stored 0-based; every accessor
// taking or returning a symbol or a position uses the 1-based convention.
class Permutation {
 public:
  static Permutation identity(int n);

  // Throws std::invalid_argument unless `symbols` is a bijection on {1..n}
  // with kMinDimension <= n <= kMaxDimension.
  static Permutation from_symbols(std::span<const int> symbols);
  static Permutation from_symbols(std::initializer_list<int> symbols);

  int n() const { return n_; }

  // Symbol at 1-based `position`.
  int at(int position) const;
  int last() const { return symbols_[n_ - 1] + 1; }

  std::span<const std::uint8_t> zero_based() const {
    return {symbols_.data(), static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.symbols_ == b.symbols_;
  }

 private:
  friend Permutation swap(const Permutation&, int, int);
  friend Permutation unrank(Rank);

  Permutation() = default;

  std::array<std::uint8_t, kMaxDimension> symbols_{};
  int n_ = 0;
};

Rank rank(const Permutation& p);

// Throws std::out_of_range if r.value >= r.n!, std::invalid_argument if r.n
// is not a supported dimension.
Permutation unrank(Rank r);

// p ∘ (j, k): exchange the symbols at 1-based positions j and k. Argument
// order does not matter. Throws std::invalid_argument when j == k or either
// position lies outside [1, n].
Permutation swap(const Permutation& p, int j, int k);

// p ∘ (n-1, n)
Permutation minus(const Permutation& p);
// p ∘ (1, n)
Permutation plus(const Permutation& p);

Parity parity(const Permutation& p);

// Digit string for n <= 9 ("2134"), comma separated for n >= 10.
std::string to_string(const Permutation& p);

// Inverse of to_string. When `n` is nonzero the parsed dimension must match.
// Throws std::invalid_argument on malformed input.
Permutation parse_permutation(std::string_view text, int n = 0);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace bsstar
