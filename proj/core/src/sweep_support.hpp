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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <vector>

#include "bsstar/fault_models.hpp"
#include "bsstar/verifier.hpp"

namespace bsstar::detail {

// Reports keep the smallest violations in sort order; the rest are counted.
inline constexpr std::size_t kMaxRecordedViolations = 1000;
inline constexpr std::uint64_t kChunk = 64;

inline void trim_violations(std::vector<Violation>& v, bool final_pass) {
  if (!final_pass && v.size() <= 2 * kMaxRecordedViolations) return;
  std::sort(v.begin(), v.end());
  if (v.size() > kMaxRecordedViolations) v.resize(kMaxRecordedViolations);
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Global index space over every fault-set size in [lo, hi], size-major.
class ExhaustiveRange {
 public:
  ExhaustiveRange(const Topology& t, int lo, int hi) : topology_(&t), lo_(std::max(lo, 0)) {
    offsets_.push_back(0);
    for (int m = lo_; m <= hi; ++m) {
      offsets_.push_back(offsets_.back() + binomial(t.edge_count(), static_cast<std::uint64_t>(m)));
    }
  }

  std::uint64_t total() const { return offsets_.back(); }

  template <class Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn fn) const {
    for (std::size_t i = 0; i + 1 < offsets_.size(); ++i) {
      const std::uint64_t lo = std::max(begin, offsets_[i]);
      const std::uint64_t hi = std::min(end, offsets_[i + 1]);
      if (lo >= hi) continue;
      FaultSetStream stream(*topology_, lo_ + static_cast<int>(i), lo - offsets_[i],
                            hi - offsets_[i]);
      while (auto f = stream.next()) fn(*f);
    }
  }

 private:
  const Topology* topology_;
  int lo_;
  std::vector<std::uint64_t> offsets_;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::vector<EdgeText> render_edges(const Topology& t, const std::vector<EdgeId>& edges) {
  std::vector<EdgeText> out;
  out.reserve(edges.size());
  for (const EdgeId e : edges) out.push_back(edge_text(t, e));
  return out;
}

}  // namespace bsstar::detail
