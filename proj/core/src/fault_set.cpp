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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bsstar/topology.hpp"

namespace bsstar {

namespace {

// Above this many edges membership falls back to binary search.
constexpr std::uint64_t kMaxBitsetUniverse = std::uint64_t{1} << 24;

}  // namespace

FaultSet::FaultSet(const Topology& t) : n_(t.n()), universe_(t.edge_count()) {
  if (universe_ <= kMaxBitsetUniverse) bits_.assign((universe_ + 63) / 64, 0);
}

FaultSet::FaultSet(const Topology& t, std::span<const EdgeId> edges) : FaultSet(t) {
  for (const EdgeId e : edges) {
    if (!insert(e)) {
      throw std::invalid_argument("duplicate edge id " + std::to_string(e.value));
    }
  }
}

void FaultSet::check(EdgeId e) const {
  if (e.value >= universe_) {
    throw std::invalid_argument("edge id " + std::to_string(e.value) +
                                " is not an edge of BS_" + std::to_string(n_));
  }
}

bool FaultSet::contains(EdgeId e) const {
  if (e.value >= universe_) return false;
  if (!bits_.empty()) return (bits_[e.value >> 6] >> (e.value & 63)) & 1;
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool FaultSet::insert(EdgeId e) {
  check(e);
  if (contains(e)) return false;
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  if (!bits_.empty()) bits_[e.value >> 6] |= std::uint64_t{1} << (e.value & 63);
  return true;
}

bool FaultSet::erase(EdgeId e) {
  if (!contains(e)) return false;
  edges_.erase(std::lower_bound(edges_.begin(), edges_.end(), e));
  if (!bits_.empty()) bits_[e.value >> 6] &= ~(std::uint64_t{1} << (e.value & 63));
  return true;
}

}  // namespace bsstar
