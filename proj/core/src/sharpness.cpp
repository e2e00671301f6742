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

#include "bsstar/fault_models.hpp"

namespace bsstar {

namespace {

bool adjacent_or_equal(const Topology& t, Vertex a, Vertex b) {
  return a == b || t.find_edge(a, b).has_value();
}

// Smallest-rank vertex that is neither in nor adjacent to any of `avoid`.
Vertex first_vertex_away_from(const Topology& t, std::span<const Vertex> avoid) {
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const bool blocked = std::any_of(avoid.begin(), avoid.end(), [&](Vertex a) {
      return adjacent_or_equal(t, a, v);
    });
    if (!blocked) return v;
  }
  throw std::logic_error("no vertex outside the closed neighbourhood");
}

}  // namespace

SharpnessInstance fault_tolerant_sharpness(const Topology& t, Vertex u) {
  if (t.n() < 3) throw std::invalid_argument("construction needs n >= 3");
  const Vertex u1 = t.neighbor(u, 0);
  FaultSet faults(t);
  for (const Neighbor& nb : t.neighbors(u1)) {
    if (nb.vertex != u) faults.insert(nb.edge);
  }
  // u itself lies in N(u1), so it is excluded along with u1's neighbourhood.
  const Vertex away[] = {u1};
  const Vertex v = first_vertex_away_from(t, away);
  return SharpnessInstance{std::move(faults), u, v, {u1}};
}

SharpnessInstance conditional_sharpness(const Topology& t, Vertex u) {
  if (t.n() < 4) throw std::invalid_argument("construction needs n >= 4");
  const int swap_front = 0;            // bubble(2) = ∘(1,2)
  const int swap_back = t.n() - 2;     // bubble(n) = ∘(n-1,n)
  const Vertex u1 = t.neighbor(u, swap_front);
  const Vertex u2 = t.neighbor(u1, swap_back);
  const Vertex u3 = t.neighbor(u2, swap_front);

  Vertex u11 = u;
  for (const Neighbor& nb : t.neighbors(u1)) {
    if (nb.vertex != u && nb.vertex != u2) {
      u11 = nb.vertex;
      break;
    }
  }

  const EdgeId kept[] = {*t.find_edge(u, u1), *t.find_edge(u1, u2), *t.find_edge(u2, u3),
                         *t.find_edge(u3, u), *t.find_edge(u1, u11)};
  FaultSet faults(t);
  for (const Vertex w : {u1, u2, u3}) {
    for (const Neighbor& nb : t.neighbors(w)) {
      if (std::find(std::begin(kept), std::end(kept), nb.edge) == std::end(kept)) {
        faults.insert(nb.edge);
      }
    }
  }
  // u is adjacent to u1, so it is excluded together with u1, u2, u3 and their
  // neighbourhoods.
  const Vertex away[] = {u1, u2, u3};
  const Vertex v = first_vertex_away_from(t, away);
  return SharpnessInstance{std::move(faults), u, v, {u1, u2, u3, u11}};
}

}  // namespace bsstar
