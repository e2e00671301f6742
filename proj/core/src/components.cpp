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

#include "bsstar/flow.hpp"

namespace bsstar {

ComponentProfile components(const Topology& t, const FaultSet& f) {
  const auto count = static_cast<std::size_t>(t.vertex_count());
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  ComponentProfile profile;
  profile.component_of.assign(count, kUnseen);

  std::vector<std::uint64_t> size_of;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < count; ++root) {
    if (profile.component_of[root] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(size_of.size());
    size_of.push_back(0);
    profile.component_of[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size_of[id];
      for (const Neighbor& nb : t.neighbors(v)) {
        if (profile.component_of[nb.vertex] != kUnseen || f.contains(nb.edge)) continue;
        profile.component_of[nb.vertex] = id;
        stack.push_back(nb.vertex);
      }
    }
  }

  std::vector<std::uint32_t> order(size_of.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return size_of[a] > size_of[b];
  });
  profile.largest_id = order.front();
  for (const std::uint32_t id : order) profile.sizes.push_back(size_of[id]);

  if (order.size() > 1) {
    std::vector<std::size_t> slot(size_of.size(), 0);
    profile.small_components.resize(order.size() - 1);
    for (std::size_t i = 1; i < order.size(); ++i) slot[order[i]] = i;
    for (Vertex v = 0; v < count; ++v) {
      const std::uint32_t id = profile.component_of[v];
      if (id != profile.largest_id) profile.small_components[slot[id] - 1].push_back(v);
    }
  }
  return profile;
}

std::vector<int> surviving_degrees(const Topology& t, const FaultSet& f) {
  std::vector<int> degree(static_cast<std::size_t>(t.vertex_count()), t.degree());
  for (const EdgeId e : f.edges()) {
    const Edge edge = t.decode(e);
    --degree[edge.canonical];
    --degree[edge.other];
  }
  return degree;
}

int min_degree(const Topology& t, const FaultSet& f) {
  if (f.empty()) return t.degree();
  const std::vector<int> degree = surviving_degrees(t, f);
  return *std::min_element(degree.begin(), degree.end());
}

}  // namespace bsstar
