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

#include "bsstar/topology.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bsstar {

std::vector<Generator> generators(int n) {
  std::vector<Generator> out;
  for (int k = 2; k <= n; ++k) out.push_back({GeneratorKind::kBubble, k});
  for (int k = 3; k <= n; ++k) out.push_back({GeneratorKind::kStar, k});
  return out;
}

Topology Topology::build(int n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " outside [2, 12]");
  }
  Topology t;
  t.n_ = n;
  t.generators_ = generators(n);
  t.degree_ = static_cast<int>(t.generators_.size());
  t.vertex_count_ = factorial(n);
  if (n > kMaxMaterializedDimension) return t;

  const auto d = static_cast<std::size_t>(t.degree_);
  t.adjacency_.resize(t.vertex_count_ * d);
  t.arc_edge_.resize(t.vertex_count_ * d);
  t.block_.resize(t.vertex_count_);
  for (Vertex v = 0; v < t.vertex_count_; ++v) {
    const Permutation p = unrank(Rank{v, n});
    t.block_[v] = static_cast<std::uint8_t>(p.last());
    for (int g = 0; g < t.degree_; ++g) {
      const Generator& gen = t.generators_[static_cast<std::size_t>(g)];
      const Permutation q = swap(p, gen.first(), gen.second());
      t.adjacency_[v * d + static_cast<std::size_t>(g)] =
          static_cast<Vertex>(rank(q).value);
      t.arc_edge_[v * d + static_cast<std::size_t>(g)] = t.compute_edge_id(p, g);
    }
  }
  return t;
}

Vertex Topology::compute_neighbor(Vertex v, int generator) const {
  const Generator& gen = generators_.at(static_cast<std::size_t>(generator));
  const Permutation p = unrank(Rank{v, n_});
  return static_cast<Vertex>(rank(swap(p, gen.first(), gen.second())).value);
}

EdgeId Topology::compute_edge_id(const Permutation& p, int generator) const {
  const Generator& gen = generators_[static_cast<std::size_t>(generator)];
  std::array<int, kMaxDimension> reordered{};
  int out = 0;
  for (int pos = 1; pos <= n_; ++pos) {
    if (pos != gen.first() && pos != gen.second()) reordered[out++] = p.at(pos);
  }
  reordered[out++] = p.at(gen.first());
  reordered[out++] = p.at(gen.second());
  const Permutation w = Permutation::from_symbols(
      std::span<const int>(reordered.data(), static_cast<std::size_t>(n_)));
  const std::uint64_t half = vertex_count_ / 2;
  return EdgeId{static_cast<std::uint64_t>(generator) * half + rank(w).value / 2};
}

NeighborList Topology::neighbors(Vertex v) const {
  if (v >= vertex_count_) throw std::out_of_range("vertex " + std::to_string(v));
  NeighborList out;
  if (materialized()) {
    const std::size_t base = static_cast<std::size_t>(v) * static_cast<std::size_t>(degree_);
    for (int g = 0; g < degree_; ++g) {
      out.push_back({adjacency_[base + static_cast<std::size_t>(g)],
                     arc_edge_[base + static_cast<std::size_t>(g)]});
    }
    return out;
  }
  const Permutation p = unrank(Rank{v, n_});
  for (int g = 0; g < degree_; ++g) {
    const Generator& gen = generators_[static_cast<std::size_t>(g)];
    out.push_back({static_cast<Vertex>(rank(swap(p, gen.first(), gen.second())).value),
                   compute_edge_id(p, g)});
  }
  return out;
}

Vertex Topology::neighbor(Vertex v, int generator) const {
  if (v >= vertex_count_) throw std::out_of_range("vertex " + std::to_string(v));
  if (generator < 0 || generator >= degree_) {
    throw std::out_of_range("generator " + std::to_string(generator));
  }
  if (materialized()) {
    return adjacency_[static_cast<std::size_t>(v) * static_cast<std::size_t>(degree_) +
                      static_cast<std::size_t>(generator)];
  }
  return compute_neighbor(v, generator);
}

EdgeId Topology::edge_id(Vertex v, int generator) const {
  if (v >= vertex_count_) throw std::out_of_range("vertex " + std::to_string(v));
  if (generator < 0 || generator >= degree_) {
    throw std::out_of_range("generator " + std::to_string(generator));
  }
  if (materialized()) {
    return arc_edge_[static_cast<std::size_t>(v) * static_cast<std::size_t>(degree_) +
                     static_cast<std::size_t>(generator)];
  }
  return compute_edge_id(unrank(Rank{v, n_}), generator);
}

Edge Topology::decode(EdgeId e) const {
  if (e.value >= edge_count()) {
    throw std::out_of_range("edge id " + std::to_string(e.value));
  }
  const std::uint64_t half = vertex_count_ / 2;
  const int g = static_cast<int>(e.value / half);
  const Permutation w = unrank(Rank{2 * (e.value % half), n_});
  const Generator& gen = generators_[static_cast<std::size_t>(g)];
  std::array<int, kMaxDimension> symbols{};
  int in = 0;
  for (int pos = 1; pos <= n_; ++pos) {
    if (pos != gen.first() && pos != gen.second()) symbols[pos - 1] = w.at(++in);
  }
  symbols[gen.first() - 1] = w.at(n_ - 1);
  symbols[gen.second() - 1] = w.at(n_);
  const Permutation p = Permutation::from_symbols(
      std::span<const int>(symbols.data(), static_cast<std::size_t>(n_)));
  const auto canonical = static_cast<Vertex>(rank(p).value);
  return Edge{canonical, neighbor(canonical, g), g};
}

std::optional<EdgeId> Topology::find_edge(Vertex a, Vertex b) const {
  for (const Neighbor& nb : neighbors(a)) {
    if (nb.vertex == b) return nb.edge;
  }
  return std::nullopt;
}

int Topology::block_of(Vertex v) const {
  if (v >= vertex_count_) throw std::out_of_range("vertex " + std::to_string(v));
  if (materialized()) return block_[v];
  return unrank(Rank{v, n_}).last();
}

Permutation Topology::permutation(Vertex v) const {
  if (v >= vertex_count_) throw std::out_of_range("vertex " + std::to_string(v));
  return unrank(Rank{v, n_});
}

Vertex Topology::vertex(const Permutation& p) const {
  if (p.n() != n_) {
    throw std::invalid_argument("permutation " + to_string(p) +
                                " has the wrong dimension for BS_" + std::to_string(n_));
  }
  return static_cast<Vertex>(rank(p).value);
}

FaultPartition partition_faults(const Topology& t, const FaultSet& f) {
  FaultPartition out;
  out.parts.reserve(static_cast<std::size_t>(t.n()) + 1);
  for (int i = 0; i <= t.n(); ++i) out.parts.emplace_back(t);
  for (const EdgeId e : f.edges()) {
    const Edge edge = t.decode(e);
    const int bi = t.block_of(edge.canonical);
    const int bj = t.block_of(edge.other);
    out.parts[static_cast<std::size_t>(bi == bj ? bi : 0)].insert(e);
  }
  return out;
}

std::vector<EdgeId> cross_edges(const Topology& t, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > t.n() || j > t.n()) {
    throw std::invalid_argument("cross_edges needs two distinct blocks in [1, n]");
  }
  std::vector<EdgeId> out;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.block_of(v) != i) continue;
    for (const Neighbor& nb : t.neighbors(v)) {
      if (t.block_of(nb.vertex) == j) out.push_back(nb.edge);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BlockSubgraph block_subgraph(const Topology& t, std::span<const int> blocks) {
  if (blocks.empty()) throw std::invalid_argument("block list is empty");
  std::vector<bool> selected(static_cast<std::size_t>(t.n()) + 1, false);
  for (const int b : blocks) {
    if (b < 1 || b > t.n()) {
      throw std::invalid_argument("block " + std::to_string(b) + " outside [1, n]");
    }
    selected[static_cast<std::size_t>(b)] = true;
  }
  BlockSubgraph out;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (!selected[static_cast<std::size_t>(t.block_of(v))]) continue;
    out.vertices.push_back(v);
    for (const Neighbor& nb : t.neighbors(v)) {
      if (v < nb.vertex && selected[static_cast<std::size_t>(t.block_of(nb.vertex))]) {
        out.edges.push_back(nb.edge);
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

void write_edge_list(const Topology& t, std::ostream& os) {
  os << "{\"n\":" << t.n() << ",\"vertices\":" << t.vertex_count()
     << ",\"edges\":" << t.edge_count() << "}\n";
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const std::string from = to_string(t.permutation(v));
    for (const Neighbor& nb : t.neighbors(v)) {
      if (v < nb.vertex) os << from << ' ' << to_string(t.permutation(nb.vertex)) << '\n';
    }
  }
}

}  // namespace bsstar
