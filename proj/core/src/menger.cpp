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
#include <set>
#include <stdexcept>
#include <tuple>

#include "bsstar/verifier.hpp"

namespace bsstar {

std::vector<VertexPair> all_pairs(std::uint64_t vertex_count) {
  std::vector<VertexPair> out;
  out.reserve(static_cast<std::size_t>(vertex_count * (vertex_count - 1) / 2));
  for (Vertex u = 0; u < vertex_count; ++u) {
    for (Vertex v = u + 1; v < vertex_count; ++v) out.emplace_back(u, v);
  }
  return out;
}

std::vector<VertexPair> sample_pairs(std::uint64_t vertex_count, std::size_t count,
                                     SeededSampler& sampler) {
  const std::uint64_t total = vertex_count * (vertex_count - 1) / 2;
  if (count >= total) return all_pairs(vertex_count);
  // Floyd's algorithm over colex pair indices.
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = total - count; j < total; ++j) {
    const std::uint64_t r = sampler.below(j + 1);
    if (!chosen.insert(r).second) chosen.insert(j);
  }
  std::vector<VertexPair> out;
  out.reserve(count);
  for (const std::uint64_t index : chosen) {
    const auto pair = colex_unrank(index, 2, vertex_count);
    out.emplace_back(static_cast<Vertex>(pair[0]), static_cast<Vertex>(pair[1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool StrongMengerResult::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const MengerVerdict& v) { return v.pass; });
}

StrongMengerResult check_strong_menger(FlowNetwork& net, const FaultSet& f,
                                       const std::vector<VertexPair>& pairs) {
  StrongMengerResult result;
  const ComponentProfile profile = components(net.topology(), f);
  result.connected = profile.connected();
  result.component_count = profile.count();
  net.set_faults(f);
  result.verdicts.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    const int min_deg = std::min(net.degree(u), net.degree(v));
    // The flow cannot exceed min_deg, so stopping there loses nothing.
    const int paths = min_deg == 0 ? 0 : net.max_flow(u, v, min_deg);
    result.verdicts.push_back({u, v, min_deg, paths, paths == min_deg});
  }
  return result;
}

StrongMengerResult check_strong_menger(const Topology& t, const FaultSet& f,
                                       const PairSelection& pairs) {
  FlowNetwork net(t);
  std::vector<VertexPair> selected;
  if (const auto* sampled = std::get_if<SampledPairs>(&pairs)) {
    SeededSampler sampler(sampled->seed);
    selected = sample_pairs(t.vertex_count(), sampled->count, sampler);
  } else {
    selected = all_pairs(t.vertex_count());
  }
  return check_strong_menger(net, f, selected);
}

EdgeText edge_text(const Topology& t, EdgeId e) {
  const Edge edge = t.decode(e);
  return {to_string(t.permutation(edge.canonical)), to_string(t.permutation(edge.other))};
}

bool operator<(const Violation& a, const Violation& b) {
  return std::tie(a.faults, a.u, a.v, a.detail, a.paths, a.min_deg) <
         std::tie(b.faults, b.u, b.v, b.detail, b.paths, b.min_deg);
}

std::optional<std::int64_t> SweepReport::metric(std::string_view name) const {
  for (const auto& [key, value] : metrics) {
    if (key == name) return value;
  }
  return std::nullopt;
}

std::string_view to_string(SweepMode mode) {
  return mode == SweepMode::kExhaustive ? "exhaustive" : "sampled";
}

SharpnessOutcome evaluate_sharpness(const Topology& t, SharpnessInstance instance) {
  FlowNetwork net(t);
  net.set_faults(instance.faults);
  const int graph_min_degree = net.min_degree();
  const int min_deg_pair = std::min(net.degree(instance.u), net.degree(instance.v));
  const int paths = net.max_flow(instance.u, instance.v);
  std::vector<EdgeId> cut = net.min_cut();
  const int full = 2 * t.n() - 3;
  const bool demonstrates = min_deg_pair == full && paths == full - 1;
  return SharpnessOutcome{std::move(instance), graph_min_degree, min_deg_pair, paths,
                          std::move(cut), demonstrates};
}

}  // namespace bsstar
