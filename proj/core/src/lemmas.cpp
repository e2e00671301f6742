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
#include <string>

#include "bsstar/verifier.hpp"
#include "parallel.hpp"
#include "sweep_support.hpp"

namespace bsstar {

namespace {

Violation finding(std::string detail) {
  Violation v;
  v.detail = std::move(detail);
  return v;
}

SweepReport exact_report(std::string subject, int n) {
  SweepReport report;
  report.subject = std::move(subject);
  report.n = n;
  report.mode = SweepMode::kExhaustive;
  return report;
}

std::string vertex_text(const Topology& t, Vertex v) { return to_string(t.permutation(v)); }

}  // namespace

SweepReport check_structure(int n) {
  const detail::Stopwatch clock;
  const Topology t = Topology::build(n);
  SweepReport report = exact_report("structure", n);

  std::uint64_t arcs = 0;
  bool regular = true;
  bool simple = true;
  bool symmetric = true;
  bool bipartite = true;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const NeighborList nbs = t.neighbors(v);
    arcs += nbs.size();
    if (static_cast<int>(nbs.size()) != 2 * n - 3) regular = false;
    const Parity pv = parity(t.permutation(v));
    for (std::size_t i = 0; i < nbs.size(); ++i) {
      const Vertex w = nbs[i].vertex;
      if (w == v) simple = false;
      for (std::size_t j = i + 1; j < nbs.size(); ++j) {
        if (nbs[j].vertex == w) simple = false;
      }
      const auto back = t.find_edge(w, v);
      if (!back || *back != nbs[i].edge) symmetric = false;
      if (parity(t.permutation(w)) == pv) bipartite = false;
    }
  }
  const std::uint64_t expected_vertices = factorial(n);
  const std::uint64_t expected_edges = expected_vertices * static_cast<std::uint64_t>(2 * n - 3) / 2;
  if (t.vertex_count() != expected_vertices) report.violations.push_back(finding("vertex count != n!"));
  if (!regular) report.violations.push_back(finding("not (2n-3)-regular"));
  if (!simple) report.violations.push_back(finding("self-loop or parallel edge"));
  if (!symmetric) report.violations.push_back(finding("adjacency or edge ids not symmetric"));
  if (!bipartite) report.violations.push_back(finding("an edge joins two permutations of equal parity"));
  if (arcs / 2 != expected_edges || arcs % 2 != 0) {
    report.violations.push_back(finding("edge count != n!(2n-3)/2"));
  }
  report.metrics = {{"vertices", static_cast<std::int64_t>(t.vertex_count())},
                    {"edges", static_cast<std::int64_t>(arcs / 2)},
                    {"degree", t.degree()}};
  std::sort(report.violations.begin(), report.violations.end());
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

SweepReport check_block_structure(int n) {
  if (n < 3) throw std::invalid_argument("block structure needs n >= 3");
  const detail::Stopwatch clock;
  const Topology t = Topology::build(n);
  SweepReport report = exact_report("lemma22", n);
  const std::uint64_t expected_cross = 2 * factorial(n - 2);

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::size_t got = cross_edges(t, i, j).size();
      if (got != expected_cross) {
        report.violations.push_back(finding("|E_{" + std::to_string(i) + "," + std::to_string(j) +
                                            "}| = " + std::to_string(got)));
      }
    }
  }

  // {u+, u-} ∩ {v+, v-} = ∅ for distinct u, v of one block is the same as the
  // 2|block| outer neighbours of the block being pairwise distinct.
  constexpr Vertex kFree = ~Vertex{0};
  // owner[k * |V| + w]: the vertex of block k whose u+ or u- is w.
  std::vector<Vertex> owner(static_cast<std::size_t>(t.vertex_count()) * (n + 1), kFree);
  const int minus_gen = n - 2;
  const int plus_gen = 2 * n - 4;
  std::uint64_t block_pairs = 0;
  std::vector<std::uint64_t> block_size(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex u = 0; u < t.vertex_count(); ++u) {
    const int k = t.block_of(u);
    ++block_size[static_cast<std::size_t>(k)];
    const Vertex um = t.neighbor(u, minus_gen);
    const Vertex up = t.neighbor(u, plus_gen);
    const int bm = t.block_of(um);
    const int bp = t.block_of(up);
    if (bm == k || bp == k || bm == bp) {
      report.violations.push_back(finding("u-, u+ and u not in three distinct blocks for u = " +
                                          vertex_text(t, u)));
    }
    for (const Vertex w : {um, up}) {
      Vertex& slot = owner[static_cast<std::size_t>(k) * t.vertex_count() + w];
      if (slot != kFree && slot != u) {
        report.violations.push_back(finding("{u+,u-} meets {v+,v-} for u = " +
                                            vertex_text(t, slot) + ", v = " + vertex_text(t, u)));
      }
      slot = u;
    }
    if (k <= 2 && t.block_of(up) < 3 && t.block_of(um) < 3) {
      report.violations.push_back(finding("u+ and u- both stay in blocks 1, 2 for u = " +
                                          vertex_text(t, u)));
    }
  }
  for (int k = 1; k <= n; ++k) {
    const std::uint64_t s = block_size[static_cast<std::size_t>(k)];
    block_pairs += s * (s - 1) / 2;
  }
  report.examined_pairs = block_pairs;
  report.metrics = {{"cross_edges_per_block_pair", static_cast<std::int64_t>(expected_cross)},
                    {"block_pairs", n * (n - 1) / 2},
                    {"within_block_vertex_pairs", static_cast<std::int64_t>(block_pairs)},
                    {"vertices_in_blocks_1_2", static_cast<std::int64_t>(2 * factorial(n - 1))}};
  std::sort(report.violations.begin(), report.violations.end());
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

SweepReport check_edge_connectivity(int n) {
  if (n < 3 || n > 5) throw std::invalid_argument("edge connectivity check covers 3 <= n <= 5");
  const detail::Stopwatch clock;
  const Topology t = Topology::build(n);
  SweepReport report = exact_report("lemma23", n);
  const int lambda = edge_connectivity(t);
  report.examined_fault_sets = 1;
  report.examined_pairs = t.vertex_count() - 1;
  report.metrics = {{"lambda", lambda}, {"expected", 2 * n - 3}};
  if (lambda != 2 * n - 3) {
    report.violations.push_back(finding("lambda = " + std::to_string(lambda)));
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

std::optional<int> LemmaSpec::fault_budget(int n) const {
  switch (id) {
    case ComponentLemma::kIsolatedVertexSplit:
      return n >= 3 ? std::optional<int>(4 * n - 9) : std::nullopt;
    case ComponentLemma::kVertexOrEdgeSplit:
      return n == 3 ? std::optional<int>(4) : std::nullopt;
    case ComponentLemma::kLargeComponentBs4Two:
      return n == 4 ? std::optional<int>(10) : std::nullopt;
    case ComponentLemma::kLargeComponentTwo:
      return n >= 3 ? std::optional<int>(6 * n - 14) : std::nullopt;
    case ComponentLemma::kLargeComponentBs4Three:
      return n == 4 ? std::optional<int>(11) : std::nullopt;
    case ComponentLemma::kLargeComponentThree:
      return n >= 3 ? std::optional<int>(8 * n - 21) : std::nullopt;
  }
  return std::nullopt;
}

bool LemmaSpec::holds(const Topology& t, const FaultSet& f, const ComponentProfile& p) const {
  if (p.connected()) return true;
  const std::uint64_t order = t.vertex_count();
  switch (id) {
    case ComponentLemma::kIsolatedVertexSplit:
      return p.count() == 2 && p.sizes[1] == 1;
    case ComponentLemma::kVertexOrEdgeSplit: {
      if (p.count() != 2) return false;
      if (p.sizes[1] == 1) return true;
      if (p.sizes[1] != 2) return false;
      const auto& pair = p.small_components.front();
      const auto e = t.find_edge(pair[0], pair[1]);
      return e && !f.contains(*e);
    }
    case ComponentLemma::kLargeComponentBs4Two:
    case ComponentLemma::kLargeComponentTwo:
      return p.sizes[0] + 2 >= order;
    case ComponentLemma::kLargeComponentBs4Three:
    case ComponentLemma::kLargeComponentThree:
      return p.sizes[0] + 3 >= order;
  }
  return false;
}

const std::vector<LemmaSpec>& component_lemmas() {
  static const std::vector<LemmaSpec> specs = {
      {ComponentLemma::kIsolatedVertexSplit, "lemma24",
       "a disconnection has two components, one an isolated vertex"},
      {ComponentLemma::kVertexOrEdgeSplit, "lemma25",
       "a disconnection has two components, the smaller an isolated vertex or an edge"},
      {ComponentLemma::kLargeComponentBs4Two, "lemma26", "some component has >= 4!-2 vertices"},
      {ComponentLemma::kLargeComponentTwo, "lemma27", "some component has >= n!-2 vertices"},
      {ComponentLemma::kLargeComponentBs4Three, "lemma28", "some component has >= 4!-3 vertices"},
      {ComponentLemma::kLargeComponentThree, "lemma29", "some component has >= n!-3 vertices"},
  };
  return specs;
}

const LemmaSpec& lemma_spec(ComponentLemma id) {
  return component_lemmas().at(static_cast<std::size_t>(id));
}

std::optional<ComponentLemma> component_lemma_from_subject(std::string_view subject) {
  for (const LemmaSpec& spec : component_lemmas()) {
    if (spec.subject == subject) return spec.id;
  }
  return std::nullopt;
}

namespace {

struct LemmaState {
  std::uint64_t sets = 0;
  std::uint64_t disconnected = 0;
  std::uint64_t violation_count = 0;
  std::uint64_t smallest_largest = ~std::uint64_t{0};
  std::vector<Violation> violations;
};

void examine(const Topology& t, const LemmaSpec& spec, LemmaState& state, const FaultSet& f) {
  ++state.sets;
  const ComponentProfile profile = components(t, f);
  if (profile.connected()) return;
  ++state.disconnected;
  state.smallest_largest = std::min(state.smallest_largest, profile.sizes[0]);
  if (spec.holds(t, f, profile)) return;
  ++state.violation_count;
  Violation v;
  v.faults = detail::render_edges(t, f.edges());
  v.component_sizes = profile.sizes;
  v.detail = std::string("conclusion fails: ") + std::string(spec.conclusion);
  state.violations.push_back(std::move(v));
  detail::trim_violations(state.violations, false);
}

}  // namespace

SweepReport check_component_lemma(ComponentLemma id, int n, const SweepConfig& config) {
  const LemmaSpec& spec = lemma_spec(id);
  const std::optional<int> budget = spec.fault_budget(n);
  if (!budget) {
    throw std::invalid_argument(std::string(spec.subject) + " does not cover n = " +
                                std::to_string(n));
  }
  const detail::Stopwatch clock;
  const Topology t = Topology::build(n);
  const int hi = config.max_faults.value_or(*budget);
  const int lo = config.mode == SweepMode::kExhaustive ? std::max(0, config.min_faults) : hi;
  if (lo > hi) throw std::invalid_argument("min_faults exceeds max_faults");

  SweepReport report;
  report.subject = std::string(spec.subject);
  report.n = n;
  report.mode = config.mode;
  report.min_faults = lo;
  report.max_faults = hi;
  report.budget = config.budget;

  std::vector<LemmaState> states;
  auto make_state = [] { return LemmaState{}; };
  if (config.mode == SweepMode::kExhaustive) {
    const detail::ExhaustiveRange range(t, lo, hi);
    if (range.total() > config.budget && !config.force) {
      throw BudgetError(range.total(), config.budget,
                        "exhaustive sweep needs " + std::to_string(range.total()) +
                            " fault sets, over the budget of " + std::to_string(config.budget) +
                            "; use sampled mode or force");
    }
    states = detail::run_chunked(range.total(), config.workers, detail::kChunk, make_state,
                                 [&](LemmaState& s, std::uint64_t b, std::uint64_t e) {
                                   range.for_each(b, e, [&](const FaultSet& f) {
                                     examine(t, spec, s, f);
                                   });
                                 });
  } else {
    report.seed = config.seed;
    report.trials = config.trials;
    states = detail::run_chunked(config.trials, config.workers, detail::kChunk, make_state,
                                 [&](LemmaState& s, std::uint64_t b, std::uint64_t e) {
                                   for (std::uint64_t trial = b; trial < e; ++trial) {
                                     SeededSampler sampler(config.seed, trial);
                                     examine(t, spec, s,
                                             sample_uniform(t, static_cast<std::uint64_t>(hi),
                                                            sampler));
                                   }
                                 });
  }

  std::uint64_t violation_count = 0;
  std::uint64_t smallest_largest = ~std::uint64_t{0};
  for (LemmaState& s : states) {
    report.examined_fault_sets += s.sets;
    report.disconnected_fault_sets += s.disconnected;
    violation_count += s.violation_count;
    smallest_largest = std::min(smallest_largest, s.smallest_largest);
    report.violations.insert(report.violations.end(), std::make_move_iterator(s.violations.begin()),
                             std::make_move_iterator(s.violations.end()));
  }
  detail::trim_violations(report.violations, true);
  report.metrics.emplace_back("violation_count", static_cast<std::int64_t>(violation_count));
  if (report.disconnected_fault_sets > 0) {
    report.metrics.emplace_back("smallest_largest_component",
                                static_cast<std::int64_t>(smallest_largest));
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace bsstar
