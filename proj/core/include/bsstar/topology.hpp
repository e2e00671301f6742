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
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "bsstar/permutation.hpp"

namespace bsstar {

// Dense vertex index; equal to the lexicographic rank of the permutation.
using Vertex = std::uint32_t;

inline constexpr int kMaxDegree = 2 * kMaxDimension - 3;
// Largest dimension whose adjacency is stored explicitly.
inline constexpr int kMaxMaterializedDimension = 7;

enum class GeneratorKind { kBubble, kStar };

// bubble(k) is ∘(k-1, k) for k in [2, n]; star(k) is ∘(1, k) for k in [3, n].
struct Generator {
  GeneratorKind kind;
  int k;

  int first() const { return kind == GeneratorKind::kBubble ? k - 1 : 1; }
  int second() const { return k; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Generator order used everywhere: bubble(2..n), then star(3..n).
std::vector<Generator> generators(int n);

struct EdgeId {
  std::uint64_t value = 0;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Neighbor {
  Vertex vertex;
  EdgeId edge;
};

// Endpoints of an edge; `canonical` is the endpoint with the smaller rank.
struct Edge {
  Vertex canonical;
  Vertex other;
  int generator;
};

class NeighborList {
 public:
  void push_back(Neighbor nb) { items_[size_++] = nb; }
  std::size_t size() const { return size_; }
  const Neighbor& operator[](std::size_t i) const { return items_[i]; }
  const Neighbor* begin() const { return items_.data(); }
  const Neighbor* end() const { return items_.data() + size_; }

 private:
  std::array<Neighbor, kMaxDegree> items_{};
  std::size_t size_ = 0;
};

// The bubble-sort star graph BS_n. Immutable once built.
//
// Edge identifiers are dense in [0, n!(2n-3)/2) and generator-major: the edge
// {x, x∘(a,b)} of generator g gets g * n!/2 + floor(r/2), where r is the
// lexicographic rank of x read with positions a and b moved to the end. The
// two endpoints of an edge differ only in the lowest bit of r, so both map to
// the same id, and the even one is the endpoint of smaller rank.
class Topology {
 public:
  // Throws std::invalid_argument unless 2 <= n <= 12.
  static Topology build(int n);

  int n() const { return n_; }
  int degree() const { return degree_; }
  std::uint64_t vertex_count() const { return vertex_count_; }
  std::uint64_t edge_count() const { return vertex_count_ * degree_ / 2; }
  bool materialized() const { return !adjacency_.empty(); }
  const std::vector<Generator>& generator_list() const { return generators_; }

  NeighborList neighbors(Vertex v) const;
  Vertex neighbor(Vertex v, int generator) const;
  EdgeId edge_id(Vertex v, int generator) const;

  // Throws std::out_of_range for an id outside [0, edge_count()).
  Edge decode(EdgeId e) const;

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  // Block index i such that v lies in BS_n^i, i.e. v's last symbol.
  int block_of(Vertex v) const;

  Permutation permutation(Vertex v) const;
  Vertex vertex(const Permutation& p) const;

 private:
  Topology() = default;

  Vertex compute_neighbor(Vertex v, int generator) const;
  EdgeId compute_edge_id(const Permutation& p, int generator) const;

  int n_ = 0;
  int degree_ = 0;
  std::uint64_t vertex_count_ = 0;
  std::vector<Generator> generators_;
  // Materialized tables, indexed by v * degree + generator.
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> arc_edge_;
  std::vector<std::uint8_t> block_;
};

// A set of edges of one topology with constant-time membership.
class FaultSet {
 public:
  explicit FaultSet(const Topology& t);
  // Throws std::invalid_argument on an invalid or duplicated edge id.
  FaultSet(const Topology& t, std::span<const EdgeId> edges);

  int n() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(EdgeId e) const;

  // Returns false if e was already present.
  bool insert(EdgeId e);
  bool erase(EdgeId e);

  // Sorted ascending.
  const std::vector<EdgeId>& edges() const { return edges_; }

  friend bool operator==(const FaultSet& a, const FaultSet& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check(EdgeId e) const;

  int n_;
  std::uint64_t universe_;
  std::vector<EdgeId> edges_;
  std::vector<std::uint64_t> bits_;
};

// parts[0] holds the cross-block faults F^0; parts[i] holds F^i for i in [1, n].
struct FaultPartition {
  std::vector<FaultSet> parts;

  const FaultSet& cross() const { return parts.front(); }
  const FaultSet& block(int i) const { return parts.at(static_cast<std::size_t>(i)); }
};

FaultPartition partition_faults(const Topology& t, const FaultSet& f);

// E_{i,j}: edges with one endpoint in block i and the other in block j.
// Sorted. Throws std::invalid_argument when i == j or either is outside [1, n].
std::vector<EdgeId> cross_edges(const Topology& t, int i, int j);

struct BlockSubgraph {
  std::vector<Vertex> vertices;  // ascending
  std::vector<EdgeId> edges;     // ascending
};

// The subgraph induced by the union of blocks in `blocks`.
// Throws std::invalid_argument for an empty or out-of-range block list.
BlockSubgraph block_subgraph(const Topology& t, std::span<const int> blocks);

// Edge-list export: a JSON header line {"n":..,"vertices":..,"edges":..}
// followed by one "u v" line per edge in permutation text form.
void write_edge_list(const Topology& t, std::ostream& os);

}  // namespace bsstar
