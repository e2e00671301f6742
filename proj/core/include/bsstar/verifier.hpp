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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bsstar/fault_models.hpp"
#include "bsstar/flow.hpp"
#include "bsstar/topology.hpp"

namespace bsstar {

// Outcome of one vertex pair in G - F. `paths` never exceeds `min_deg`, so a
// pair passes exactly when the two are equal.
struct MengerVerdict {
  Vertex u;
  Vertex v;
  int min_deg;
  int paths;
  bool pass;
};

struct AllPairs {};
// `count` unordered pairs drawn uniformly without replacement.
struct SampledPairs {
  std::size_t count;
  std::uint64_t seed;
};
using PairSelection = std::variant<AllPairs, SampledPairs>;

using VertexPair = std::pair<Vertex, Vertex>;

// Pairs (u < v) in ascending order.
std::vector<VertexPair> all_pairs(std::uint64_t vertex_count);
std::vector<VertexPair> sample_pairs(std::uint64_t vertex_count, std::size_t count,
                                     SeededSampler& sampler);

struct StrongMengerResult {
  // A disconnected G - F is reported here rather than raised: the premise of
  // the property fails, and the pairs across components show up as failures.
  bool connected = true;
  std::size_t component_count = 1;
  std::vector<MengerVerdict> verdicts;

  bool all_pass() const;
};

StrongMengerResult check_strong_menger(const Topology& t, const FaultSet& f,
                                       const PairSelection& pairs);

// Same check on caller-owned scratch state; `pairs` must be distinct vertices.
StrongMengerResult check_strong_menger(FlowNetwork& net, const FaultSet& f,
                                       const std::vector<VertexPair>& pairs);

enum class SweepMode { kExhaustive, kSampled };

std::string_view to_string(SweepMode mode);

struct SweepConfig {
  SweepMode mode = SweepMode::kExhaustive;
  // Sampled mode only.
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  // nullopt examines every pair.
  std::optional<std::size_t> pairs_per_set;
  // Fault-set sizes; max_faults defaults to the result's own bound.
  int min_faults = 0;
  std::optional<int> max_faults;
  // Exhaustive mode refuses runs needing more work units than this unless
  // `force` is set. A work unit is one flow computation for the Menger
  // sweeps and one fault set for the component checks.
  std::uint64_t budget = kDefaultBudget;
  bool force = false;
  // 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

using EdgeText = std::array<std::string, 2>;

// Self-contained witness of a failed check.
struct Violation {
  std::vector<EdgeText> faults;
  std::optional<std::string> u;
  std::optional<std::string> v;
  std::optional<int> paths;
  std::optional<int> min_deg;
  std::vector<EdgeText> min_cut;
  std::vector<std::uint64_t> component_sizes;
  std::string detail;

  friend bool operator<(const Violation& a, const Violation& b);
};

struct SweepReport {
  std::string subject;
  int n = 0;
  SweepMode mode = SweepMode::kExhaustive;
  std::optional<std::uint64_t> seed;
  std::uint64_t examined_fault_sets = 0;
  std::uint64_t examined_pairs = 0;
  std::uint64_t disconnected_fault_sets = 0;
  int min_faults = 0;
  int max_faults = 0;
  std::uint64_t trials = 0;
  std::optional<std::size_t> pairs_per_set;
  std::uint64_t budget = 0;
  std::vector<std::pair<std::string, std::int64_t>> metrics;
  // Sorted, so reports do not depend on worker scheduling.
  std::vector<Violation> violations;
  double elapsed_ms = 0.0;

  bool passed() const { return violations.empty(); }
  std::optional<std::int64_t> metric(std::string_view name) const;
};

// Every fault set with at most 2n-5 edges (or config.max_faults) leaves BS_n
// strongly Menger edge connected. Exhaustive or sampled; sampled sizes are
// uniform on [min_faults, max_faults].
// Throws BudgetError when an exhaustive run exceeds its budget.
SweepReport check_fault_tolerant_menger(int n, const SweepConfig& config);

// Every fault set with at most 6n-17 edges (or config.max_faults) and minimum
// degree >= 2 leaves BS_n strongly Menger edge connected. Sampled mode only:
// rejection-sampled conditional sets plus every single-fault relaxation of the
// conditional sharpness construction for a battery of base vertices.
// Throws std::invalid_argument for n < 4 or exhaustive mode, SaturationError
// if the conditional sampler saturates.
SweepReport check_conditional_menger(int n, const SweepConfig& config);

// Strong Menger edge connectivity of G - F for one given fault set, with no
// bound on |F|. Pairs follow config.pairs_per_set and config.seed.
SweepReport check_fault_set(const Topology& t, const FaultSet& f, const SweepConfig& config);

// Order, regularity, symmetry, simplicity, bipartiteness and edge count.
SweepReport check_structure(int n);

// Cross-edge counts 2(n-2)!, disjointness of {u+, u-} within a block,
// and that u+ or u- leaves blocks 1 and 2 for every u in them. Also checks
// that u+ and u- lie in two distinct blocks other than u's.
SweepReport check_block_structure(int n);

// Global edge connectivity equals 2n-3. Requires 3 <= n <= 5.
SweepReport check_edge_connectivity(int n);

enum class ComponentLemma {
  kIsolatedVertexSplit,     // <= 4n-9 faults: a split leaves one isolated vertex
  kVertexOrEdgeSplit,       // BS_3, <= 4 faults: the small side is K1 or K2
  kLargeComponentBs4Two,    // BS_4, <= 10 faults: a component of >= 4!-2
  kLargeComponentTwo,       // <= 6n-14 faults: a component of >= n!-2
  kLargeComponentBs4Three,  // BS_4, <= 11 faults: a component of >= 4!-3
  kLargeComponentThree,     // <= 8n-21 faults: a component of >= n!-3
};

struct LemmaSpec {
  ComponentLemma id;
  // Subject identifier used by reports and the command line.
  std::string_view subject;
  std::string_view conclusion;

  // Fault budget at dimension n, or nullopt when n is not covered.
  std::optional<int> fault_budget(int n) const;
  // The structural conclusion for a disconnected G - F.
  bool holds(const Topology& t, const FaultSet& f, const ComponentProfile& profile) const;
};

const LemmaSpec& lemma_spec(ComponentLemma id);
const std::vector<LemmaSpec>& component_lemmas();
std::optional<ComponentLemma> component_lemma_from_subject(std::string_view subject);

// Sweeps fault sets within the lemma's budget (exhaustive: every size in
// [min_faults, budget]; sampled: `trials` uniform sets of exactly the budget
// size) and checks the conclusion on each disconnected G - F.
// Throws std::invalid_argument when n is not covered, BudgetError when an
// exhaustive run exceeds its budget.
SweepReport check_component_lemma(ComponentLemma id, int n, const SweepConfig& config);

struct SharpnessOutcome {
  SharpnessInstance instance;
  int graph_min_degree;
  int min_deg_pair;
  int paths;
  std::vector<EdgeId> min_cut;
  // True when the pair falls short of min_deg_pair = 2n-3 by exactly one.
  bool demonstrates_bound;
};

SharpnessOutcome evaluate_sharpness(const Topology& t, SharpnessInstance instance);

// Renders an edge with its endpoints in permutation text form, canonical first.
EdgeText edge_text(const Topology& t, EdgeId e);

}  // namespace bsstar
