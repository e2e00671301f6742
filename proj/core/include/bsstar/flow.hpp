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

#include <cstdint>
#include <limits>
#include <vector>

#include "bsstar/topology.hpp"

namespace bsstar {

// Largest dimension a FlowNetwork accepts (9! * 15 arcs).
inline constexpr int kMaxFlowDimension = 9;

// Unit-capacity flow network over BS_n minus a fault set, with scratch state
// that is reset between queries by epoch stamps instead of reallocation.
//
// Every surviving undirected edge carries a net flow in {-1, 0, +1} measured
// from its canonical endpoint; the arc v->w is usable while the flow it
// carries is below 1. This is the two antiparallel unit arcs of the Menger
// reduction after flow cancellation, so the max-flow value is the number of
// pairwise edge-disjoint paths.
//
// Holds a reference to the topology, which must outlive the network. Not
// thread-safe; give each worker its own instance.
class FlowNetwork {
 public:
  // Throws std::invalid_argument for n > kMaxFlowDimension.
  explicit FlowNetwork(const Topology& t);

  const Topology& topology() const { return *topology_; }

  void set_faults(const FaultSet& f);
  void clear_faults();

  bool alive(EdgeId e) const { return fault_mark_[e.value] != fault_epoch_; }
  // Number of surviving edges at v.
  int degree(Vertex v) const { return degree_[v]; }
  int min_degree() const;

  // Routes up to `limit` units from s to t and returns the amount routed.
  // The result is exact whenever it is below `limit`.
  // Throws std::invalid_argument when s == t.
  int max_flow(Vertex s, Vertex t, int limit = std::numeric_limits<int>::max());

  // Edges from the source side of the last flow's residual network to the
  // sink side. Throws std::logic_error if the sink is still reachable, i.e.
  // the last max_flow call stopped at its limit short of a maximum flow.
  std::vector<EdgeId> min_cut() const;

  // Decomposes the last flow into edge-disjoint simple paths, scanning arcs
  // in generator order at every step.
  std::vector<std::vector<Vertex>> paths() const;

 private:
  int flow_on(std::size_t arc, Vertex from) const;
  void push(std::size_t arc, Vertex from);
  bool build_levels(Vertex s, Vertex t);
  bool augment(Vertex v, Vertex t);
  void bump(std::uint32_t& epoch, std::vector<std::uint32_t>& marks);
  std::vector<bool> residual_reachable(Vertex s) const;

  const Topology* topology_;
  std::size_t degree_count_;
  std::uint32_t vertex_count_;
  std::vector<Vertex> head_;
  std::vector<std::uint32_t> arc_edge_;

  std::uint32_t fault_epoch_ = 1;
  std::vector<std::uint32_t> fault_mark_;
  std::vector<int> degree_;
  std::vector<Vertex> touched_;

  std::uint32_t flow_epoch_ = 0;
  std::vector<std::uint32_t> flow_mark_;
  std::vector<std::int8_t> flow_;

  std::uint32_t level_epoch_ = 0;
  std::vector<std::uint32_t> level_mark_;
  std::vector<int> level_;
  std::vector<std::size_t> next_arc_;
  std::vector<Vertex> queue_;

  Vertex last_source_ = 0;
  Vertex last_sink_ = 0;
  bool has_flow_ = false;
};

// Exact maximum number of pairwise edge-disjoint u-v paths in t - f.
// Throws std::invalid_argument when u == v.
int max_edge_disjoint_paths(const Topology& t, const FaultSet& f, Vertex u, Vertex v);

// A minimum u-v edge cut of t - f; its size always equals
// max_edge_disjoint_paths (checked, std::logic_error otherwise).
std::vector<EdgeId> min_edge_cut(const Topology& t, const FaultSet& f, Vertex u, Vertex v);

// A maximum system of edge-disjoint u-v paths, each listed from u to v.
std::vector<std::vector<Vertex>> edge_disjoint_paths(const Topology& t, const FaultSet& f,
                                                     Vertex u, Vertex v);

// True when `paths` are simple u-v walks over surviving edges of t - f that
// share no edge.
bool verify_path_system(const Topology& t, const FaultSet& f, Vertex u, Vertex v,
                        const std::vector<std::vector<Vertex>>& paths);

struct ComponentProfile {
  // Non-increasing; sums to n!.
  std::vector<std::uint64_t> sizes;
  // Vertex sets (ascending) of every component but the largest, ordered like
  // sizes[1..].
  std::vector<std::vector<Vertex>> small_components;
  // Components are numbered in order of their smallest vertex.
  std::uint32_t largest_id = 0;
  std::vector<std::uint32_t> component_of;

  std::size_t count() const { return sizes.size(); }
  bool connected() const { return sizes.size() <= 1; }
};

ComponentProfile components(const Topology& t, const FaultSet& f);

int min_degree(const Topology& t, const FaultSet& f);

// Surviving degree of every vertex.
std::vector<int> surviving_degrees(const Topology& t, const FaultSet& f);

// Global edge connectivity of the fault-free graph, as the minimum over
// v != 0 of the flow from vertex 0; exact because BS_n is vertex-transitive.
// Throws std::invalid_argument for n < 3.
int edge_connectivity(const Topology& t);

// Exhaustive-search oracle: enumerates all simple u-v paths of t - f and the
// largest pairwise edge-disjoint subset. Independent of the flow code.
// Throws std::domain_error for n > 3, std::invalid_argument when u == v.
int brute_force_paths(const Topology& t, const FaultSet& f, Vertex u, Vertex v);

}  // namespace bsstar
