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

#include <limits>
#include <string>

#include "bsstar/fault_models.hpp"

namespace bsstar {

namespace {

__extension__ using Wide = unsigned __int128;

}  // namespace

BudgetError::BudgetError(std::uint64_t required, std::uint64_t budget, const std::string& what)
    : std::runtime_error(what), required_(required), budget_(budget) {}

SaturationError::SaturationError(std::uint64_t attempts, const std::string& what)
    : std::runtime_error(what), attempts_(attempts) {}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays an integer at every step.
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t binomial_sum(std::uint64_t n, int lo, int hi) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (int k = std::max(lo, 0); k <= hi; ++k) {
    const std::uint64_t c = binomial(n, static_cast<std::uint64_t>(k));
    if (c > kMax - total) return kMax;
    total += c;
  }
  return total;
}

std::vector<std::uint64_t> colex_unrank(std::uint64_t index, int k, std::uint64_t universe) {
  std::vector<std::uint64_t> items(static_cast<std::size_t>(k));
  std::uint64_t upper = universe;
  for (int i = k; i >= 1; --i) {
    // Largest c < upper with C(c, i) <= index.
    std::uint64_t lo = static_cast<std::uint64_t>(i - 1);
    std::uint64_t hi = upper - 1;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (binomial(mid, static_cast<std::uint64_t>(i)) <= index) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    items[static_cast<std::size_t>(i - 1)] = lo;
    index -= binomial(lo, static_cast<std::uint64_t>(i));
    upper = lo;
  }
  return items;
}

std::uint64_t colex_rank(std::span<const std::uint64_t> items) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < items.size(); ++i) r += binomial(items[i], i + 1);
  return r;
}

CombinationCursor::CombinationCursor(std::uint64_t universe, int k, std::uint64_t index)
    : universe_(universe), index_(index) {
  if (k < 0) throw std::invalid_argument("negative subset size");
  done_ = index >= binomial(universe, static_cast<std::uint64_t>(k));
  if (!done_) items_ = colex_unrank(index, k, universe);
}

void CombinationCursor::advance() {
  if (done_) return;
  ++index_;
  const std::size_t k = items_.size();
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t limit = j + 1 < k ? items_[j + 1] : universe_;
    if (items_[j] + 1 < limit) {
      ++items_[j];
      for (std::size_t i = 0; i < j; ++i) items_[i] = i;
      return;
    }
  }
  done_ = true;
}

FaultSetStream::FaultSetStream(const Topology& t, int m, std::uint64_t begin, std::uint64_t end)
    : topology_(&t),
      cursor_(t.edge_count(), m, begin),
      end_(end),
      total_(binomial(t.edge_count(), static_cast<std::uint64_t>(m))) {}

std::optional<FaultSet> FaultSetStream::next() {
  if (cursor_.done() || cursor_.index() >= end_) return std::nullopt;
  FaultSet f(*topology_);
  for (const std::uint64_t e : cursor_.current()) f.insert(EdgeId{e});
  cursor_.advance();
  return f;
}

FaultSetStream enumerate_fault_sets(const Topology& t, int m, std::uint64_t budget) {
  if (m < 0) throw std::invalid_argument("negative fault-set size");
  const std::uint64_t count = binomial(t.edge_count(), static_cast<std::uint64_t>(m));
  if (count > budget) {
    throw BudgetError(count, budget,
                      "enumerating C(" + std::to_string(t.edge_count()) + ", " +
                          std::to_string(m) + ") = " + std::to_string(count) +
                          " fault sets exceeds the budget of " + std::to_string(budget));
  }
  return FaultSetStream(t, m, 0, count);
}

}  // namespace bsstar
