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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace bsstar {
namespace {

Vertex at(const Topology& t, const char* text) { return t.vertex(parse_permutation(text)); }

FaultSet incident_edges(const Topology& t, Vertex v) {
  FaultSet f(t);
  for (const Neighbor& nb : t.neighbors(v)) f.insert(nb.edge);
  return f;
}

FaultSet random_faults(const Topology& t, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, t.edge_count() - 1);
  FaultSet f(t);
  count = std::min<std::size_t>(count, t.edge_count());
  while (f.size() < count) f.insert(EdgeId{pick(rng)});
  return f;
}

TEST(FlowTest, PathCountExamples) {
  const Topology t3 = Topology::build(3);
  EXPECT_EQ(max_edge_disjoint_paths(t3, FaultSet(t3), at(t3, "123"), at(t3, "321")), 3);
  EXPECT_EQ(brute_force_paths(t3, FaultSet(t3), at(t3, "123"), at(t3, "321")), 3);

  const FaultSet isolate = incident_edges(t3, at(t3, "123"));
  for (Vertex v = 1; v < 6; ++v) {
    EXPECT_EQ(max_edge_disjoint_paths(t3, isolate, 0, v), 0);
    EXPECT_EQ(brute_force_paths(t3, isolate, 0, v), 0);
  }

  const Topology t4 = Topology::build(4);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Vertex> pick(0, 23);
  for (int i = 0; i < 20; ++i) {
    const Vertex u = pick(rng);
    const Vertex v = pick(rng);
    if (u != v) EXPECT_EQ(max_edge_disjoint_paths(t4, FaultSet(t4), u, v), 5);
  }
}

TEST(FlowTest, RejectsIdenticalEndpoints) {
  const Topology t = Topology::build(3);
  EXPECT_THROW(max_edge_disjoint_paths(t, FaultSet(t), 2, 2), std::invalid_argument);
  EXPECT_THROW(min_edge_cut(t, FaultSet(t), 2, 2), std::invalid_argument);
  EXPECT_THROW(brute_force_paths(t, FaultSet(t), 2, 2), std::invalid_argument);
}

TEST(FlowTest, BruteForceRefusesLargeGraphs) {
  const Topology t = Topology::build(4);
  EXPECT_THROW(brute_force_paths(t, FaultSet(t), 0, 1), std::domain_error);
}

// 500 seeded random BS_3 instances with up to four faults: flow and exhaustive
// search must agree everywhere.
TEST(FlowTest, AgreesWithBruteForceOracle) {
  const Topology t = Topology::build(3);
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> size(0, 4);
  std::uniform_int_distribution<Vertex> pick(0, 5);
  FlowNetwork net(t);
  for (int trial = 0; trial < 500; ++trial) {
    const FaultSet f = random_faults(t, static_cast<std::size_t>(size(rng)), rng);
    Vertex u = pick(rng);
    Vertex v = pick(rng);
    if (u == v) v = (v + 1) % 6;
    net.set_faults(f);
    EXPECT_EQ(net.max_flow(u, v), brute_force_paths(t, f, u, v)) << "trial " << trial;
  }
}

TEST(FlowTest, CutDualityAndRemoval) {
  for (int n = 3; n <= 5; ++n) {
    const Topology t = Topology::build(n);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(t.vertex_count() - 1));
    for (int trial = 0; trial < 100; ++trial) {
      const FaultSet f = random_faults(t, static_cast<std::size_t>(trial % (4 * n)), rng);
      const Vertex u = pick(rng);
      Vertex v = pick(rng);
      if (u == v) continue;
      const int flow = max_edge_disjoint_paths(t, f, u, v);
      const auto cut = min_edge_cut(t, f, u, v);
      ASSERT_EQ(static_cast<int>(cut.size()), flow);
      FaultSet severed = f;
      for (const EdgeId e : cut) {
        EXPECT_FALSE(f.contains(e));
        severed.insert(e);
      }
      EXPECT_EQ(max_edge_disjoint_paths(t, severed, u, v), 0);
    }
  }
  const Topology t3 = Topology::build(3);
  EXPECT_EQ(min_edge_cut(t3, FaultSet(t3), at(t3, "123"), at(t3, "213")).size(), 3u);
}

TEST(FlowTest, MinCutNeedsACompletedFlow) {
  const Topology t = Topology::build(4);
  FlowNetwork net(t);
  EXPECT_THROW(net.min_cut(), std::logic_error);
  EXPECT_EQ(net.max_flow(0, 5, 2), 2);
  EXPECT_THROW(net.min_cut(), std::logic_error);
  EXPECT_EQ(net.max_flow(0, 5), 5);
  EXPECT_EQ(net.min_cut().size(), 5u);
}

TEST(FlowTest, MonotoneUnderAddedFaultsAndSymmetric) {
  const Topology t = Topology::build(4);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Vertex> pick(0, 23);
  std::uniform_int_distribution<std::uint64_t> edge(0, t.edge_count() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    FaultSet f = random_faults(t, static_cast<std::size_t>(trial % 12), rng);
    const Vertex u = pick(rng);
    const Vertex v = pick(rng);
    if (u == v) continue;
    const int before = max_edge_disjoint_paths(t, f, u, v);
    EXPECT_EQ(before, max_edge_disjoint_paths(t, f, v, u));
    f.insert(EdgeId{edge(rng)});
    EXPECT_LE(max_edge_disjoint_paths(t, f, u, v), before);
  }
}

TEST(FlowTest, ZeroExactlyAcrossComponents) {
  const Topology t = Topology::build(4);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const FaultSet f = random_faults(t, 25, rng);
    const ComponentProfile p = components(t, f);
    for (Vertex u = 0; u < 24; u += 5) {
      for (Vertex v = u + 1; v < 24; v += 3) {
        const bool same = p.component_of[u] == p.component_of[v];
        EXPECT_EQ(max_edge_disjoint_paths(t, f, u, v) == 0, !same);
      }
    }
  }
}

TEST(FlowTest, PathDecomposition) {
  const Topology t3 = Topology::build(3);
  const auto paths = edge_disjoint_paths(t3, FaultSet(t3), at(t3, "123"), at(t3, "321"));
  EXPECT_EQ(paths.size(), 3u);
  EXPECT_TRUE(verify_path_system(t3, FaultSet(t3), at(t3, "123"), at(t3, "321"), paths));

  const Topology t5 = Topology::build(5);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const FaultSet f = random_faults(t5, static_cast<std::size_t>(trial % 20), rng);
    const Vertex u = static_cast<Vertex>(trial);
    const Vertex v = static_cast<Vertex>(119 - trial % 50);
    if (u == v) continue;
    const auto system = edge_disjoint_paths(t5, f, u, v);
    EXPECT_EQ(static_cast<int>(system.size()), max_edge_disjoint_paths(t5, f, u, v));
    EXPECT_TRUE(verify_path_system(t5, f, u, v, system));
  }
  // Deterministic across calls.
  EXPECT_EQ(edge_disjoint_paths(t5, FaultSet(t5), 0, 119), edge_disjoint_paths(t5, FaultSet(t5), 0, 119));
}

TEST(FlowTest, VerifyPathSystemRejectsSharedEdges) {
  const Topology t = Topology::build(3);
  const Vertex u = at(t, "123");
  const Vertex v = at(t, "213");
  const std::vector<std::vector<Vertex>> twice = {{u, v}, {u, v}};
  EXPECT_FALSE(verify_path_system(t, FaultSet(t), u, v, twice));
  const std::vector<std::vector<Vertex>> once = {{u, v}};
  EXPECT_TRUE(verify_path_system(t, FaultSet(t), u, v, once));
}

TEST(ComponentsTest, Examples) {
  const Topology t3 = Topology::build(3);
  EXPECT_EQ(components(t3, FaultSet(t3)).sizes, std::vector<std::uint64_t>{6});

  const ComponentProfile isolated = components(t3, incident_edges(t3, at(t3, "123")));
  EXPECT_EQ(isolated.sizes, (std::vector<std::uint64_t>{5, 1}));
  ASSERT_EQ(isolated.small_components.size(), 1u);
  EXPECT_EQ(isolated.small_components[0], std::vector<Vertex>{at(t3, "123")});

  // The four edges leaving the edge {123, 213}.
  FaultSet around(t3);
  for (const char* end : {"123", "213"}) {
    for (const Neighbor& nb : t3.neighbors(at(t3, end))) {
      const auto other = to_string(t3.permutation(nb.vertex));
      if (other != "123" && other != "213") around.insert(nb.edge);
    }
  }
  ASSERT_EQ(around.size(), 4u);
  const ComponentProfile split = components(t3, around);
  EXPECT_EQ(split.sizes, (std::vector<std::uint64_t>{4, 2}));
  EXPECT_EQ(split.small_components[0], (std::vector<Vertex>{at(t3, "123"), at(t3, "213")}));
}

TEST(ComponentsTest, ProfileInvariants) {
  const Topology t = Topology::build(5);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const FaultSet f = random_faults(t, static_cast<std::size_t>(50 + 4 * trial), rng);
    const ComponentProfile p = components(t, f);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < p.sizes.size(); ++i) {
      total += p.sizes[i];
      if (i > 0) {
        EXPECT_GE(p.sizes[i - 1], p.sizes[i]);
        EXPECT_EQ(p.small_components[i - 1].size(), p.sizes[i]);
      }
    }
    EXPECT_EQ(total, 120u);
    EXPECT_EQ(p.small_components.size() + 1, p.count());
    std::uint64_t in_largest = 0;
    for (Vertex v = 0; v < 120; ++v) in_largest += p.component_of[v] == p.largest_id;
    EXPECT_EQ(in_largest, p.sizes[0]);
  }
}

TEST(DegreeTest, MinimumDegree) {
  const Topology t = Topology::build(4);
  EXPECT_EQ(min_degree(t, FaultSet(t)), 5);
  const EdgeId one[] = {EdgeId{0}};
  EXPECT_EQ(min_degree(t, FaultSet(t, one)), 4);
  EXPECT_EQ(min_degree(t, incident_edges(t, 7)), 0);
  FlowNetwork net(t);
  net.set_faults(incident_edges(t, 7));
  EXPECT_EQ(net.min_degree(), 0);
  EXPECT_EQ(net.degree(7), 0);
  net.clear_faults();
  EXPECT_EQ(net.min_degree(), 5);
}

TEST(ConnectivityTest, EdgeConnectivityIsTwoNMinusThree) {
  EXPECT_EQ(edge_connectivity(Topology::build(3)), 3);
  EXPECT_EQ(edge_connectivity(Topology::build(4)), 5);
  EXPECT_EQ(edge_connectivity(Topology::build(5)), 7);
  EXPECT_THROW(edge_connectivity(Topology::build(2)), std::invalid_argument);
}

}  // namespace
}  // namespace bsstar
