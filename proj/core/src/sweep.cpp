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

#include <stdexcept>
#include <string>

#include "bsstar/verifier.hpp"
#include "parallel.hpp"
#include "sweep_support.hpp"

namespace bsstar {

namespace {

using detail::ExhaustiveRange;

struct MengerState {
  explicit MengerState(const Topology& t) : net(t) {}

  FlowNetwork net;
  std::uint64_t sets = 0;
  std::uint64_t pairs = 0;
  std::uint64_t disconnected = 0;
  std::uint64_t violation_count = 0;
  std::uint64_t sampler_draws = 0;
  std::vector<Violation> violations;
};

void examine(MengerState& state, const FaultSet& f, const std::vector<VertexPair>& pairs) {
  const StrongMengerResult result = check_strong_menger(state.net, f, pairs);
  ++state.sets;
  state.pairs += pairs.size();
  if (!result.connected) ++state.disconnected;
  const Topology& t = state.net.topology();
  for (const MengerVerdict& verdict : result.verdicts) {
    if (verdict.pass) continue;
    ++state.violation_count;
    Violation violation;
    violation.faults = detail::render_edges(t, f.edges());
    violation.u = to_string(t.permutation(verdict.u));
    violation.v = to_string(t.permutation(verdict.v));
    violation.paths = verdict.paths;
    violation.min_deg = verdict.min_deg;
    state.net.max_flow(verdict.u, verdict.v);
    violation.min_cut = detail::render_edges(t, state.net.min_cut());
    if (!result.connected) violation.detail = "G - F is disconnected";
    state.violations.push_back(std::move(violation));
    detail::trim_violations(state.violations, false);
  }
}

SweepReport merge(std::vector<MengerState>& states, SweepReport report) {
  std::uint64_t violation_count = 0;
  std::uint64_t draws = 0;
  for (MengerState& s : states) {
    report.examined_fault_sets += s.sets;
    report.examined_pairs += s.pairs;
    report.disconnected_fault_sets += s.disconnected;
    violation_count += s.violation_count;
    draws += s.sampler_draws;
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(s.violations.begin()),
                             std::make_move_iterator(s.violations.end()));
  }
  detail::trim_violations(report.violations, true);
  report.metrics.emplace_back("violation_count", static_cast<std::int64_t>(violation_count));
  if (report.mode == SweepMode::kSampled) {
    report.metrics.emplace_back("sampler_draws", static_cast<std::int64_t>(draws));
  }
  return report;
}

SweepReport report_header(std::string subject, int n, const SweepConfig& config, int lo,
                          int hi) {
  SweepReport report;
  report.subject = std::move(subject);
  report.n = n;
  report.mode = config.mode;
  if (config.mode == SweepMode::kSampled) {
    report.seed = config.seed;
    report.trials = config.trials;
  }
  report.min_faults = lo;
  report.max_faults = hi;
  report.pairs_per_set = config.pairs_per_set;
  report.budget = config.budget;
  return report;
}

std::vector<VertexPair> pairs_for_trial(const Topology& t, const SweepConfig& config,
                                        const std::vector<VertexPair>& every_pair,
                                        SeededSampler& sampler) {
  if (!config.pairs_per_set) return every_pair;
  return sample_pairs(t.vertex_count(), *config.pairs_per_set, sampler);
}

}  // namespace

SweepReport check_fault_tolerant_menger(int n, const SweepConfig& config) {
  if (n < 3) throw std::invalid_argument("the fault-tolerance sweep needs n >= 3");
  const detail::Stopwatch clock;
  const Topology t = Topology::build(n);
  const int hi = config.max_faults.value_or(2 * n - 5);
  const int lo = std::max(0, config.min_faults);
  if (lo > hi) throw std::invalid_argument("min_faults exceeds max_faults");
  SweepReport report = report_header("thm31", n, config, lo, hi);
  const std::vector<VertexPair> every_pair = all_pairs(t.vertex_count());
  auto make_state = [&] { return MengerState(t); };

  std::vector<MengerState> states;
  if (config.mode == SweepMode::kExhaustive) {
    report.pairs_per_set.reset();
    const ExhaustiveRange range(t, lo, hi);
    const std::uint64_t work = detail::saturating_mul(range.total(), every_pair.size());
    if (work > config.budget && !config.force) {
      throw BudgetError(work, config.budget,
                        "exhaustive sweep needs " + std::to_string(work) +
                            " flow computations, over the budget of " +
                            std::to_string(config.budget) + "; use sampled mode or force");
    }
    states = detail::run_chunked(range.total(), config.workers, detail::kChunk, make_state,
                                 [&](MengerState& s, std::uint64_t b, std::uint64_t e) {
                                   range.for_each(b, e, [&](const FaultSet& f) {
                                     examine(s, f, every_pair);
                                   });
                                 });
  } else {
    states = detail::run_chunked(
        config.trials, config.workers, detail::kChunk, make_state,
        [&](MengerState& s, std::uint64_t b, std::uint64_t e) {
          for (std::uint64_t trial = b; trial < e; ++trial) {
            SeededSampler sampler(config.seed, trial);
            const auto m = sampler.between(static_cast<std::uint64_t>(lo),
                                           static_cast<std::uint64_t>(hi));
            const FaultSet f = sample_uniform(t, m, sampler);
            s.sampler_draws += sampler.draws();
            examine(s, f, pairs_for_trial(t, config, every_pair, sampler));
          }
        });
  }
  report = merge(states, std::move(report));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

SweepReport check_conditional_menger(int n, const SweepConfig& config) {
  if (n < 4) throw std::invalid_argument("the conditional sweep needs n >= 4");
  if (config.mode != SweepMode::kSampled) {
    throw std::invalid_argument("the conditional sweep runs in sampled mode only");
  }
  const detail::Stopwatch clock;
  const Topology t = Topology::build(n);
  const int bound = 6 * n - 17;
  const int hi = config.max_faults.value_or(bound);
  const int lo = std::max(0, config.min_faults);
  if (lo > hi) throw std::invalid_argument("min_faults exceeds max_faults");
  SweepReport report = report_header("thm41", n, config, lo, hi);
  const std::vector<VertexPair> every_pair = all_pairs(t.vertex_count());

  // Relaxations of the sharpness construction sit exactly at the bound.
  std::vector<SharpnessInstance> battery;
  if (hi >= bound) {
    if (n == 4) {
      for (Vertex u = 0; u < t.vertex_count(); ++u) battery.push_back(conditional_sharpness(t, u));
    } else {
      constexpr int kBatteryBases = 8;
      SeededSampler picker(config.seed, ~std::uint64_t{0});
      battery.push_back(conditional_sharpness(t, 0));
      while (static_cast<int>(battery.size()) < kBatteryBases) {
        battery.push_back(conditional_sharpness(
            t, static_cast<Vertex>(picker.below(t.vertex_count()))));
      }
    }
  }
  const std::size_t per_instance = static_cast<std::size_t>(6 * n - 16);
  const std::uint64_t battery_items = battery.size() * per_instance;

  auto make_state = [&] { return MengerState(t); };
  auto states = detail::run_chunked(
      config.trials + battery_items, config.workers, detail::kChunk, make_state,
      [&](MengerState& s, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t item = b; item < e; ++item) {
          SeededSampler sampler(config.seed, item);
          if (item < config.trials) {
            const auto m = sampler.between(static_cast<std::uint64_t>(lo),
                                           static_cast<std::uint64_t>(hi));
            const FaultSet f = sample_conditional(t, m, sampler);
            s.sampler_draws += sampler.draws();
            examine(s, f, pairs_for_trial(t, config, every_pair, sampler));
            continue;
          }
          const std::uint64_t k = item - config.trials;
          const SharpnessInstance& inst = battery[k / per_instance];
          FaultSet f = inst.faults;
          f.erase(f.edges()[k % per_instance]);
          std::vector<VertexPair> pairs = pairs_for_trial(t, config, every_pair, sampler);
          const VertexPair probe{std::min(inst.u, inst.v), std::max(inst.u, inst.v)};
          if (std::find(pairs.begin(), pairs.end(), probe) == pairs.end()) {
            pairs.insert(std::lower_bound(pairs.begin(), pairs.end(), probe), probe);
          }
          examine(s, f, pairs);
        }
      });
  report = merge(states, std::move(report));
  report.metrics.emplace_back("near_sharpness_sets", static_cast<std::int64_t>(battery_items));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

SweepReport check_fault_set(const Topology& t, const FaultSet& f, const SweepConfig& config) {
  const detail::Stopwatch clock;
  const int size = static_cast<int>(f.size());
  SweepReport report = report_header("faultset", t.n(), config, size, size);
  report.trials = 0;
  if (config.pairs_per_set) report.seed = config.seed;
  SeededSampler sampler(config.seed);
  std::vector<MengerState> states;
  states.emplace_back(t);
  examine(states.front(), f, pairs_for_trial(t, config, all_pairs(t.vertex_count()), sampler));
  report = merge(states, std::move(report));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace bsstar
