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
#include <numeric>
#include <string>

#include "bsstar/fault_models.hpp"
#include "bsstar/flow.hpp"

namespace bsstar {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream),
                       static_cast<std::uint32_t>(stream >> 32)};
}

}  // namespace

SeededSampler::SeededSampler(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  std::seed_seq seq = make_seed_seq(seed, stream);
  engine_.seed(seq);
}

std::uint64_t SeededSampler::next() { return engine_(); }

std::uint64_t SeededSampler::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty sampling range");
  // Reject the low residue class so every value is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

FaultSet sample_uniform(const Topology& t, std::uint64_t m, SeededSampler& sampler) {
  const std::uint64_t edges = t.edge_count();
  if (m > edges) {
    throw std::invalid_argument("cannot draw " + std::to_string(m) + " faults from " +
                                std::to_string(edges) + " edges");
  }
  sampler.count_draw();
  std::vector<std::uint64_t> pool(static_cast<std::size_t>(edges));
  std::iota(pool.begin(), pool.end(), std::uint64_t{0});
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t j = i + sampler.below(edges - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<EdgeId> chosen;
  chosen.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t i = 0; i < m; ++i) chosen.push_back(EdgeId{pool[i]});
  return FaultSet(t, chosen);
}

FaultSet sample_conditional(const Topology& t, std::uint64_t m, SeededSampler& sampler,
                            std::uint64_t max_attempts) {
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    FaultSet f = sample_uniform(t, m, sampler);
    if (min_degree(t, f) >= 2) return f;
  }
  throw SaturationError(max_attempts,
                        "no fault set of size " + std::to_string(m) +
                            " with minimum degree >= 2 after " +
                            std::to_string(max_attempts) + " draws");
}

}  // namespace bsstar
