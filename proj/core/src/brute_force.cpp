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

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "bsstar/flow.hpp"

namespace bsstar {

namespace {

// Edge masks of every simple u-v path.
std::vector<std::uint32_t> simple_paths(const Topology& t, const FaultSet& f, Vertex u,
                                        Vertex v) {
  std::vector<std::uint32_t> masks;
  std::vector<bool> on_path(static_cast<std::size_t>(t.vertex_count()), false);
  std::function<void(Vertex, std::uint32_t)> walk = [&](Vertex x, std::uint32_t mask) {
    if (x == v) {
      masks.push_back(mask);
      return;
    }
    on_path[x] = true;
    for (const Neighbor& nb : t.neighbors(x)) {
      if (on_path[nb.vertex] || f.contains(nb.edge)) continue;
      walk(nb.vertex, mask | (std::uint32_t{1} << nb.edge.value));
    }
    on_path[x] = false;
  };
  walk(u, 0);
  return masks;
}

int best_packing(const std::vector<std::uint32_t>& masks, std::size_t from,
                 std::uint32_t used) {
  int best = 0;
  for (std::size_t i = from; i < masks.size(); ++i) {
    if (masks[i] & used) continue;
    best = std::max(best, 1 + best_packing(masks, i + 1, used | masks[i]));
  }
  return best;
}

}  // namespace

int brute_force_paths(const Topology& t, const FaultSet& f, Vertex u, Vertex v) {
  if (t.n() > 3) throw std::domain_error("brute-force path oracle supports n <= 3 only");
  if (u == v) throw std::invalid_argument("u and v must be distinct");
  return best_packing(simple_paths(t, f, u, v), 0, 0);
}

}  // namespace bsstar
