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
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bsstar/topology.hpp"

namespace bsstar {

// Default cap on enumerated fault sets or flow computations for one run.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultRejectionCap = 1'000'000;

class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t required, std::uint64_t budget, const std::string& what);
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

class SaturationError : public std::runtime_error {
 public:
  SaturationError(std::uint64_t attempts, const std::string& what);
  std::uint64_t attempts() const { return attempts_; }

 private:
  std::uint64_t attempts_;
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
// sum_{k=lo}^{hi} C(n, k), saturating.
std::uint64_t binomial_sum(std::uint64_t n, int lo, int hi);

// k-subsets of [0, universe) in colexicographic order.
class CombinationCursor {
 public:
  // Starts at the subset with colex index `index`; past-the-end if
  // index >= C(universe, k).
  CombinationCursor(std::uint64_t universe, int k, std::uint64_t index = 0);

  bool done() const { return done_; }
  std::uint64_t index() const { return index_; }
  std::span<const std::uint64_t> current() const { return items_; }
  void advance();

 private:
  std::uint64_t universe_;
  std::vector<std::uint64_t> items_;
  std::uint64_t index_;
  bool done_;
};

std::vector<std::uint64_t> colex_unrank(std::uint64_t index, int k, std::uint64_t universe);
std::uint64_t colex_rank(std::span<const std::uint64_t> items);

// Every m-edge fault set of a topology, in colex order of edge ids.
class FaultSetStream {
 public:
  FaultSetStream(const Topology& t, int m, std::uint64_t begin, std::uint64_t end);

  std::uint64_t total() const { return total_; }
  std::optional<FaultSet> next();

 private:
  const Topology* topology_;
  CombinationCursor cursor_;
  std::uint64_t end_;
  std::uint64_t total_;
};

// Throws BudgetError when C(|E|, m) exceeds `budget`.
FaultSetStream enumerate_fault_sets(const Topology& t, int m,
                                    std::uint64_t budget = kDefaultBudget);

// Reproducible random source: std::mt19937_64 seeded through std::seed_seq
// from (seed, stream), with bounded draws by rejection so that sequences do
// not depend on the standard library's distribution implementations.
// Distinct streams of one seed let a sweep give every trial its own sampler
// and stay deterministic under any worker schedule.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  // Fault sets drawn so far, rejected ones included.
  std::uint64_t draws() const { return draws_; }

  std::uint64_t next();
  // Uniform on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  void count_draw() { ++draws_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

// Uniform m-subset of the edges by partial Fisher-Yates.
// Throws std::invalid_argument when m > |E|.
FaultSet sample_uniform(const Topology& t, std::uint64_t m, SeededSampler& sampler);

// Uniform m-subset conditioned on minimum surviving degree >= 2, by rejection.
// Throws SaturationError after `max_attempts` rejected draws.
FaultSet sample_conditional(const Topology& t, std::uint64_t m, SeededSampler& sampler,
                            std::uint64_t max_attempts = kDefaultRejectionCap);

struct SharpnessInstance {
  FaultSet faults;
  Vertex u;
  Vertex v;
  // {u1} for the unconditional construction, {u1, u2, u3, u11} for the
  // conditional one.
  std::vector<Vertex> witnesses;
};

// Isolates u's first neighbor u1 except for the edge (u, u1): 2n-4 faults,
// and u, v keep full degree while at most 2n-4 edge-disjoint u-v paths exist.
SharpnessInstance fault_tolerant_sharpness(const Topology& t, Vertex u);

// Traps the 4-cycle u, u1 = u∘(1,2), u2 = u1∘(n-1,n), u3 = u2∘(1,2) behind the
// single exit (u1, u11): 6n-16 faults, minimum degree 2, u and v at full
// degree and at most 2n-4 edge-disjoint u-v paths.
// Throws std::invalid_argument for n < 4.
SharpnessInstance conditional_sharpness(const Topology& t, Vertex u);

// Fault-set text format: a JSON array of edges, each a two-element array of
// permutation strings, e.g. [["1234","2134"]].
// Throws std::invalid_argument for malformed input, non-edges or duplicates.
FaultSet parse_fault_set(const Topology& t, const std::string& json_text);
std::string format_fault_set(const Topology& t, const FaultSet& f);

}  // namespace bsstar
