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

#include <charconv>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace bsstar {

namespace {

void require_dimension(int n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " outside [2, 12]");
  }
}

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation Permutation::identity(int n) {
  require_dimension(n);
  Permutation p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.symbols_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_symbols(std::span<const int> symbols) {
  const int n = static_cast<int>(symbols.size());
  require_dimension(n);
  Permutation p;
  p.n_ = n;
  std::array<bool, kMaxDimension> seen{};
  for (int i = 0; i < n; ++i) {
    const int s = symbols[i];
    if (s < 1 || s > n || seen[s - 1]) {
      throw std::invalid_argument("not a permutation of {1.." +
                                  std::to_string(n) + "}");
    }
    seen[s - 1] = true;
    p.symbols_[i] = static_cast<std::uint8_t>(s - 1);
  }
  return p;
}

Permutation Permutation::from_symbols(std::initializer_list<int> symbols) {
  return from_symbols(std::span<const int>(symbols.begin(), symbols.size()));
}

int Permutation::at(int position) const {
  if (position < 1 || position > n_) {
    throw std::out_of_range("position " + std::to_string(position));
  }
  return symbols_[position - 1] + 1;
}

Rank rank(const Permutation& p) {
  const auto s = p.zero_based();
  const int n = p.n();
  std::uint64_t value = 0;
  std::uint16_t used = 0;
  for (int i = 0; i < n; ++i) {
    // Lehmer digit: unused symbols smaller than s[i].
    const std::uint16_t below = used & static_cast<std::uint16_t>((1u << s[i]) - 1);
    const int digit = s[i] - __builtin_popcount(below);
    value = value * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(digit);
    used |= static_cast<std::uint16_t>(1u << s[i]);
  }
  return Rank{value, n};
}

Permutation unrank(Rank r) {
  require_dimension(r.n);
  const int n = r.n;
  if (r.value >= factorial(n)) {
    throw std::out_of_range("rank " + std::to_string(r.value) +
                            " >= " + std::to_string(n) + "!");
  }
  std::array<int, kMaxDimension> digits{};
  std::uint64_t v = r.value;
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(v % base);
    v /= base;
  }
  Permutation p;
  p.n_ = n;
  std::uint16_t used = 0;
  for (int i = 0; i < n; ++i) {
    int remaining = digits[i];
    for (int s = 0; s < n; ++s) {
      if (used & (1u << s)) continue;
      if (remaining-- == 0) {
        p.symbols_[i] = static_cast<std::uint8_t>(s);
        used |= static_cast<std::uint16_t>(1u << s);
        break;
      }
    }
  }
  return p;
}

Permutation swap(const Permutation& p, int j, int k) {
  const int n = p.n();
  if (j == k || j < 1 || k < 1 || j > n || k > n) {
    throw std::invalid_argument("invalid swap positions (" + std::to_string(j) +
                                "," + std::to_string(k) + ") for n=" +
                                std::to_string(n));
  }
  Permutation q = p;
  std::swap(q.symbols_[j - 1], q.symbols_[k - 1]);
  return q;
}

Permutation minus(const Permutation& p) { return swap(p, p.n() - 1, p.n()); }

Permutation plus(const Permutation& p) { return swap(p, 1, p.n()); }

Parity parity(const Permutation& p) {
  const auto s = p.zero_based();
  int inversions = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] > s[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.n(); ++i) {
    if (p.n() >= 10 && i > 1) out.push_back(',');
    out += std::to_string(p.at(i));
  }
  return out;
}

Permutation parse_permutation(std::string_view text, int n) {
  std::vector<int> symbols;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view field = text.substr(start, end - start);
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      }
      symbols.push_back(value);
      start = end + 1;
    }
  } else {
    for (const char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
      }
      symbols.push_back(c - '0');
    }
  }
  if (n != 0 && static_cast<int>(symbols.size()) != n) {
    throw std::invalid_argument("permutation '" + std::string(text) +
                                "' does not have dimension " + std::to_string(n));
  }
  return Permutation::from_symbols(std::span<const int>(symbols));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_string(p);
}

}  // namespace bsstar
