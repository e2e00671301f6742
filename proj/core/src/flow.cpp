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

#include "bsstar/flow.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bsstar {

FlowNetwork::FlowNetwork(const Topology& t)
    : topology_(&t),
      degree_count_(static_cast<std::size_t>(t.degree())),
      vertex_count_(static_cast<std::uint32_t>(t.vertex_count())) {
  if (t.n() > kMaxFlowDimension) {
    throw std::invalid_argument("flow network supports n <= " +
                                std::to_string(kMaxFlowDimension));
  }
  const std::size_t arcs = vertex_count_ * degree_count_;
  head_.resize(arcs);
  arc_edge_.resize(arcs);
  for (Vertex v = 0; v < vertex_count_; ++v) {
    std::size_t a = v * degree_count_;
    for (const Neighbor& nb : t.neighbors(v)) {
      head_[a] = nb.vertex;
      arc_edge_[a] = static_cast<std::uint32_t>(nb.edge.value);
      ++a;
    }
  }
  const auto edges = static_cast<std::size_t>(t.edge_count());
  fault_mark_.assign(edges, 0);
  flow_mark_.assign(edges, 0);
  flow_.assign(edges, 0);
  degree_.assign(vertex_count_, t.degree());
  level_mark_.assign(vertex_count_, 0);
  level_.assign(vertex_count_, 0);
  next_arc_.assign(vertex_count_, 0);
  queue_.reserve(vertex_count_);
}

void FlowNetwork::bump(std::uint32_t& epoch, std::vector<std::uint32_t>& marks) {
  if (++epoch == 0) {
    std::fill(marks.begin(), marks.end(), 0);
    epoch = 1;
  }
}

void FlowNetwork::clear_faults() {
  for (const Vertex v : touched_) degree_[v] = topology_->degree();
  touched_.clear();
  bump(fault_epoch_, fault_mark_);
  has_flow_ = false;
}

void FlowNetwork::set_faults(const FaultSet& f) {
  if (f.n() != topology_->n()) {
    throw std::invalid_argument("fault set dimension does not match the topology");
  }
  clear_faults();
  for (const EdgeId e : f.edges()) {
    fault_mark_[e.value] = fault_epoch_;
    const Edge edge = topology_->decode(e);
    for (const Vertex v : {edge.canonical, edge.other}) {
      if (degree_[v] == topology_->degree()) touched_.push_back(v);
      --degree_[v];
    }
  }
}

int FlowNetwork::min_degree() const {
  return *std::min_element(degree_.begin(), degree_.end());
}

int FlowNetwork::flow_on(std::size_t arc, Vertex from) const {
  const std::uint32_t e = arc_edge_[arc];
  if (flow_mark_[e] != flow_epoch_) return 0;
  return from < head_[arc] ? flow_[e] : -flow_[e];
}

void FlowNetwork::push(std::size_t arc, Vertex from) {
  const std::uint32_t e = arc_edge_[arc];
  if (flow_mark_[e] != flow_epoch_) {
    flow_mark_[e] = flow_epoch_;
    flow_[e] = 0;
  }
  flow_[e] = static_cast<std::int8_t>(flow_[e] + (from < head_[arc] ? 1 : -1));
}

bool FlowNetwork::build_levels(Vertex s, Vertex t) {
  bump(level_epoch_, level_mark_);
  queue_.clear();
  queue_.push_back(s);
  level_mark_[s] = level_epoch_;
  level_[s] = 0;
  next_arc_[s] = 0;
  for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
    const Vertex v = queue_[qi];
    const std::size_t begin = v * degree_count_;
    for (std::size_t a = begin; a < begin + degree_count_; ++a) {
      const Vertex w = head_[a];
      if (level_mark_[w] == level_epoch_) continue;
      if (fault_mark_[arc_edge_[a]] == fault_epoch_ || flow_on(a, v) >= 1) continue;
      level_mark_[w] = level_epoch_;
      level_[w] = level_[v] + 1;
      next_arc_[w] = 0;
      if (w == t) return true;
      queue_.push_back(w);
    }
  }
  return false;
}

bool FlowNetwork::augment(Vertex v, Vertex t) {
  if (v == t) return true;
  const std::size_t begin = v * degree_count_;
  for (std::size_t& i = next_arc_[v]; i < degree_count_; ++i) {
    const std::size_t a = begin + i;
    const Vertex w = head_[a];
    if (level_mark_[w] != level_epoch_ || level_[w] != level_[v] + 1) continue;
    if (fault_mark_[arc_edge_[a]] == fault_epoch_ || flow_on(a, v) >= 1) continue;
    if (augment(w, t)) {
      push(a, v);
      return true;
    }
  }
  // Dead end for the rest of this phase.
  level_[v] = -1;
  return false;
}

int FlowNetwork::max_flow(Vertex s, Vertex t, int limit) {
  if (s == t) throw std::invalid_argument("source and sink coincide");
  if (s >= vertex_count_ || t >= vertex_count_) {
    throw std::out_of_range("vertex outside the topology");
  }
  bump(flow_epoch_, flow_mark_);
  last_source_ = s;
  last_sink_ = t;
  has_flow_ = true;
  int flow = 0;
  while (flow < limit && build_levels(s, t)) {
    while (flow < limit && augment(s, t)) ++flow;
  }
  return flow;
}

std::vector<bool> FlowNetwork::residual_reachable(Vertex s) const {
  std::vector<bool> seen(vertex_count_, false);
  std::vector<Vertex> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    const std::size_t begin = v * degree_count_;
    for (std::size_t a = begin; a < begin + degree_count_; ++a) {
      const Vertex w = head_[a];
      if (seen[w] || fault_mark_[arc_edge_[a]] == fault_epoch_ || flow_on(a, v) >= 1) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return seen;
}

std::vector<EdgeId> FlowNetwork::min_cut() const {
  if (!has_flow_) throw std::logic_error("min_cut requires a max_flow run");
  const std::vector<bool> source_side = residual_reachable(last_source_);
  if (source_side[last_sink_]) {
    throw std::logic_error("min_cut requires a max_flow run that was not cut off by its limit");
  }
  std::vector<EdgeId> cut;
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (!source_side[v]) continue;
    const std::size_t begin = v * degree_count_;
    for (std::size_t a = begin; a < begin + degree_count_; ++a) {
      if (!source_side[head_[a]] && fault_mark_[arc_edge_[a]] != fault_epoch_) {
        cut.push_back(EdgeId{arc_edge_[a]});
      }
    }
  }
  std::sort(cut.begin(), cut.end());
  return cut;
}

std::vector<std::vector<Vertex>> FlowNetwork::paths() const {
  if (!has_flow_) throw std::logic_error("paths requires a max_flow run");
  std::vector<std::int8_t> remaining(flow_.size(), 0);
  for (std::size_t e = 0; e < flow_.size(); ++e) {
    if (flow_mark_[e] == flow_epoch_) remaining[e] = flow_[e];
  }
  auto carried = [&](std::size_t a, Vertex from) {
    const std::int8_t f = remaining[arc_edge_[a]];
    return from < head_[a] ? f : static_cast<std::int8_t>(-f);
  };

  std::vector<std::vector<Vertex>> out;
  std::vector<int> position(vertex_count_, -1);
  const Vertex s = last_source_;
  const Vertex t = last_sink_;
  while (true) {
    std::vector<Vertex> path{s};
    position[s] = 0;
    Vertex cur = s;
    bool stuck = false;
    while (cur != t) {
      const std::size_t begin = cur * degree_count_;
      std::size_t a = begin;
      while (a < begin + degree_count_ && carried(a, cur) != 1) ++a;
      if (a == begin + degree_count_) {
        stuck = true;
        break;
      }
      remaining[arc_edge_[a]] = 0;
      const Vertex next = head_[a];
      if (position[next] >= 0) {
        // Closed a cycle of circulating flow; drop it.
        while (path.back() != next) {
          position[path.back()] = -1;
          path.pop_back();
        }
      } else {
        position[next] = static_cast<int>(path.size());
        path.push_back(next);
      }
      cur = next;
    }
    for (const Vertex v : path) position[v] = -1;
    if (stuck) break;
    out.push_back(std::move(path));
  }
  return out;
}

int max_edge_disjoint_paths(const Topology& t, const FaultSet& f, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("u and v must be distinct");
  FlowNetwork net(t);
  net.set_faults(f);
  return net.max_flow(u, v);
}

std::vector<EdgeId> min_edge_cut(const Topology& t, const FaultSet& f, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("u and v must be distinct");
  FlowNetwork net(t);
  net.set_faults(f);
  const int flow = net.max_flow(u, v);
  std::vector<EdgeId> cut = net.min_cut();
  if (static_cast<int>(cut.size()) != flow) {
    throw std::logic_error("cut size " + std::to_string(cut.size()) +
                           " differs from flow value " + std::to_string(flow));
  }
  return cut;
}

std::vector<std::vector<Vertex>> edge_disjoint_paths(const Topology& t, const FaultSet& f,
                                                     Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("u and v must be distinct");
  FlowNetwork net(t);
  net.set_faults(f);
  const int flow = net.max_flow(u, v);
  auto paths = net.paths();
  if (static_cast<int>(paths.size()) != flow || !verify_path_system(t, f, u, v, paths)) {
    throw std::logic_error("flow decomposition failed its edge-disjointness check");
  }
  return paths;
}

bool verify_path_system(const Topology& t, const FaultSet& f, Vertex u, Vertex v,
                        const std::vector<std::vector<Vertex>>& paths) {
  std::vector<EdgeId> used;
  for (const auto& path : paths) {
    if (path.size() < 2 || path.front() != u || path.back() != v) return false;
    std::vector<Vertex> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const auto e = t.find_edge(path[i], path[i + 1]);
      if (!e || f.contains(*e)) return false;
      used.push_back(*e);
    }
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

int edge_connectivity(const Topology& t) {
  if (t.n() < 3) throw std::invalid_argument("edge connectivity needs n >= 3");
  FlowNetwork net(t);
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 1; v < t.vertex_count(); ++v) {
    best = std::min(best, net.max_flow(0, v, best));
  }
  return best;
}

}  // namespace bsstar
