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

#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bsstar/fault_models.hpp"
#include "bsstar/flow.hpp"
#include "bsstar/report.hpp"
#include "bsstar/version.hpp"

namespace bsstar::cli {

namespace {

constexpr int kMaxExportDimension = 9;
constexpr int kMaxLambdaDimension = 7;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path);
  file << text;
  if (!file.flush()) throw IoError("write failed for " + path);
}

FaultSet load_faults(const Topology& t, const std::string& path) {
  if (path.empty()) return FaultSet(t);
  return parse_fault_set(t, read_file(path));
}

std::string edge_list(const Topology& t, const std::vector<EdgeId>& edges) {
  std::string out;
  for (const EdgeId e : edges) {
    const EdgeText text = edge_text(t, e);
    if (!out.empty()) out += ' ';
    out += '[' + text[0] + ',' + text[1] + ']';
  }
  return out;
}

std::string summary(const SweepReport& r) {
  std::ostringstream os;
  os << r.subject << " n=" << r.n << ' ' << to_string(r.mode) << ": "
     << r.examined_fault_sets << " fault sets, " << r.examined_pairs << " pairs, "
     << r.metric("violation_count").value_or(static_cast<std::int64_t>(r.violations.size()))
     << " violations -> " << (r.passed() ? "PASS" : "FAIL");
  return os.str();
}

SweepReport dispatch(const RunConfig& c) {
  const SweepConfig sweep = to_sweep_config(c);
  if (c.subject == "structure") return check_structure(c.n);
  if (c.subject == "lemma22") return check_block_structure(c.n);
  if (c.subject == "lemma23") return check_edge_connectivity(c.n);
  if (c.subject == "thm31") return check_fault_tolerant_menger(c.n, sweep);
  if (c.subject == "thm41") {
    if (c.mode != SweepMode::kSampled) throw UsageError("thm41 runs in sampled mode only");
    return check_conditional_menger(c.n, sweep);
  }
  if (c.subject == "faultset") {
    const Topology t = Topology::build(c.n);
    return check_fault_set(t, load_faults(t, c.faults_file), sweep);
  }
  if (const auto lemma = component_lemma_from_subject(c.subject)) {
    return check_component_lemma(*lemma, c.n, sweep);
  }
  throw UsageError("unknown subject '" + c.subject +
                   "'; expected structure, lemma22..lemma29, thm31, thm41 or faultset");
}

// Maps library exceptions onto exit codes.
template <class Fn>
int guarded(std::ostream& err, Fn fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const SaturationError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kViolation;
  }
}

}  // namespace

int cmd_gen(int n, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (n < kMinDimension || n > kMaxExportDimension) {
    throw UsageError("gen supports 2 <= n <= " + std::to_string(kMaxExportDimension));
  }
  const Topology t = Topology::build(n);
  const std::string line = "n=" + std::to_string(n) + " vertices=" +
                           std::to_string(t.vertex_count()) +
                           " edges=" + std::to_string(t.edge_count()) + '\n';
  if (out_path.empty()) {
    write_edge_list(t, out);
    err << line;
  } else {
    std::ostringstream text;
    write_edge_list(t, text);
    write_file(out_path, text.str());
    out << line;
  }
  return kVerified;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const SweepReport report = dispatch(config);
  const std::string text =
      config.format == Format::kJson ? report_to_json(report) : report_to_csv(report);
  if (config.out.empty()) {
    out << text;
  } else {
    write_file(config.out, text);
  }
  err << summary(report) << '\n';
  return report.passed() ? kVerified : kViolation;
}

int cmd_sharpness(int theorem, int n, const std::optional<std::string>& u, std::ostream& out) {
  if (theorem != 31 && theorem != 41) throw UsageError("theorem must be 31 or 41");
  const int lowest = theorem == 31 ? 3 : 4;
  if (n < lowest || n > kMaxFlowDimension) {
    throw UsageError("sharpness " + std::to_string(theorem) + " needs " + std::to_string(lowest) +
                     " <= n <= " + std::to_string(kMaxFlowDimension));
  }
  const Topology t = Topology::build(n);
  const Vertex base = t.vertex(u ? parse_permutation(*u, n) : Permutation::identity(n));
  SharpnessInstance instance =
      theorem == 31 ? fault_tolerant_sharpness(t, base) : conditional_sharpness(t, base);
  const SharpnessOutcome o = evaluate_sharpness(t, std::move(instance));
  out << "theorem=" << theorem << " n=" << n << " u=" << to_string(t.permutation(o.instance.u))
      << " v=" << to_string(t.permutation(o.instance.v)) << " faults=" << o.instance.faults.size()
      << " graph_min_degree=" << o.graph_min_degree << " min_deg=" << o.min_deg_pair
      << " paths=" << o.paths << '\n';
  out << "witnesses:";
  for (const Vertex w : o.instance.witnesses) out << ' ' << to_string(t.permutation(w));
  out << '\n';
  out << "faults: " << edge_list(t, o.instance.faults.edges()) << '\n';
  out << "min_cut: " << edge_list(t, o.min_cut) << '\n';
  out << (o.demonstrates_bound ? "sharp: paths = min_deg - 1\n" : "not sharp\n");
  return o.demonstrates_bound ? kVerified : kViolation;
}

int cmd_paths(int n, const std::string& u, const std::string& v, const std::string& faults_file,
              std::ostream& out) {
  const Permutation pu = parse_permutation(u, n);
  const Permutation pv = parse_permutation(v, pu.n());
  if (pu.n() > kMaxFlowDimension) {
    throw UsageError("paths supports n <= " + std::to_string(kMaxFlowDimension));
  }
  const Topology t = Topology::build(pu.n());
  const Vertex a = t.vertex(pu);
  const Vertex b = t.vertex(pv);
  if (a == b) throw UsageError("u and v must be distinct");
  const FaultSet f = load_faults(t, faults_file);
  const auto paths = edge_disjoint_paths(t, f, a, b);
  const auto cut = min_edge_cut(t, f, a, b);
  const std::vector<int> degree = surviving_degrees(t, f);
  out << "n=" << t.n() << " u=" << to_string(pu) << " v=" << to_string(pv)
      << " faults=" << f.size() << " min_deg=" << std::min(degree[a], degree[b])
      << " paths=" << paths.size() << '\n';
  out << "min_cut: " << edge_list(t, cut) << '\n';
  for (std::size_t i = 0; i < paths.size(); ++i) {
    out << "path " << i + 1 << ':';
    for (const Vertex w : paths[i]) out << ' ' << to_string(t.permutation(w));
    out << '\n';
  }
  return kVerified;
}

int cmd_lambda(int n, std::ostream& out) {
  if (n < 3 || n > kMaxLambdaDimension) {
    throw UsageError("lambda supports 3 <= n <= " + std::to_string(kMaxLambdaDimension));
  }
  const int lambda = edge_connectivity(Topology::build(n));
  out << "n=" << n << " lambda=" << lambda << " expected=" << 2 * n - 3 << '\n';
  return lambda == 2 * n - 3 ? kVerified : kViolation;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bubble-sort star graph toolkit: edge-disjoint paths under edge faults", "bsstar"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  int gen_n = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Export the edge list of BS_n");
  gen->add_option("-n,--dimension", gen_n, "Dimension")->required();
  gen->add_option("--out", gen_out, "Output file (default: stdout)");

  RunSettings cli;
  int n = 0;
  std::string subject, mode, pairs, faults_file, out_path, format, config_path;
  std::uint64_t trials = 0, seed = 0, budget = 0;
  int min_faults = 0, max_faults = 0;
  unsigned workers = 0;
  bool force = false;
  CLI::App* verify = app.add_subcommand("verify", "Run a lemma or theorem check");
  auto* o_n = verify->add_option("-n,--dimension", n, "Dimension");
  auto* o_subject = verify->add_option(
      "--subject", subject, "structure, lemma22..lemma29, thm31, thm41 or faultset");
  auto* o_mode = verify->add_option("--mode", mode, "exhaustive or sampled");
  auto* o_trials = verify->add_option("--trials", trials, "Sampled fault sets");
  auto* o_pairs = verify->add_option("--pairs", pairs, "Pairs per fault set, or 'all'");
  auto* o_seed = verify->add_option("--seed", seed, "Seed, required in sampled mode");
  auto* o_budget = verify->add_option("--budget", budget, "Work budget for exhaustive runs");
  auto* o_min = verify->add_option("--min-faults", min_faults, "Smallest fault-set size");
  auto* o_max = verify->add_option("--max-faults", max_faults, "Largest fault-set size");
  auto* o_faults = verify->add_option("--faults-file", faults_file, "JSON fault set to check");
  auto* o_out = verify->add_option("--out", out_path, "Report file (default: stdout)");
  auto* o_format = verify->add_option("--format", format, "json or csv");
  auto* o_workers = verify->add_option("--workers", workers, "Worker threads (0: all cores)");
  auto* o_force = verify->add_flag("--force", force, "Run past the work budget");
  verify->add_option("--config", config_path, "JSON run configuration");

  int theorem = 0;
  int sharp_n = 0;
  std::string sharp_u;
  CLI::App* sharpness = app.add_subcommand("sharpness", "Show that a fault bound is sharp");
  sharpness->add_option("theorem", theorem, "31 or 41")->required();
  sharpness->add_option("-n,--dimension", sharp_n, "Dimension")->required();
  auto* o_sharp_u = sharpness->add_option("--u", sharp_u, "Base vertex (default: identity)");

  int paths_n = 0;
  std::string paths_u, paths_v, paths_faults;
  CLI::App* paths = app.add_subcommand("paths", "Count and list edge-disjoint u-v paths");
  paths->add_option("u", paths_u, "Source permutation")->required();
  paths->add_option("v", paths_v, "Target permutation")->required();
  paths->add_option("-n,--dimension", paths_n, "Dimension (default: from u)");
  paths->add_option("--faults-file", paths_faults, "JSON fault set");

  int lambda_n = 0;
  CLI::App* lambda = app.add_subcommand("lambda", "Exact edge connectivity");
  lambda->add_option("-n,--dimension", lambda_n, "Dimension")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kVerified : kUsage;
  }

  return guarded(err, [&]() -> int {
    if (gen->parsed()) return cmd_gen(gen_n, gen_out, out, err);
    if (sharpness->parsed()) {
      return cmd_sharpness(theorem, sharp_n,
                           o_sharp_u->count() ? std::optional<std::string>(sharp_u) : std::nullopt,
                           out);
    }
    if (paths->parsed()) return cmd_paths(paths_n, paths_u, paths_v, paths_faults, out);
    if (lambda->parsed()) return cmd_lambda(lambda_n, out);

    if (o_n->count()) cli.n = n;
    if (o_subject->count()) cli.subject = subject;
    if (o_mode->count()) cli.mode = parse_mode(mode);
    if (o_trials->count()) cli.trials = trials;
    if (o_pairs->count()) cli.pairs = parse_pairs(pairs);
    if (o_seed->count()) cli.seed = seed;
    if (o_budget->count()) cli.budget = budget;
    if (o_min->count()) cli.min_faults = min_faults;
    if (o_max->count()) cli.max_faults = max_faults;
    if (o_faults->count()) cli.faults_file = faults_file;
    if (o_out->count()) cli.out = out_path;
    if (o_format->count()) cli.format = parse_format(format);
    if (o_workers->count()) cli.workers = workers;
    if (o_force->count()) cli.force = force;
    const RunSettings file = config_path.empty() ? RunSettings{} : load_config_file(config_path);
    const RunConfig config = resolve(cli, file, default_budget(std::getenv("BSSTAR_BUDGET")));
    return cmd_verify(config, out, err);
  });
}

}  // namespace bsstar::cli
