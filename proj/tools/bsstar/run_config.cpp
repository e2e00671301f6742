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

#include "run_config.hpp"

#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

namespace bsstar::cli {

namespace {

using Json = nlohmann::json;

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw UsageError(what + " is out of range: " + text);
  }
}

template <class T>
T json_unsigned(const Json& value, const std::string& key) {
  if (!value.is_number_unsigned()) throw UsageError("config '" + key + "' must be a non-negative integer");
  const auto raw = value.get<std::uint64_t>();
  if (raw > std::numeric_limits<T>::max()) throw UsageError("config '" + key + "' is out of range");
  return static_cast<T>(raw);
}

std::string json_string(const Json& value, const std::string& key) {
  if (!value.is_string()) throw UsageError("config '" + key + "' must be a string");
  return value.get<std::string>();
}

template <class T>
T pick(const std::optional<T>& cli, const std::optional<T>& file, T fallback) {
  if (cli) return *cli;
  if (file) return *file;
  return fallback;
}

template <class T>
std::optional<T> pick(const std::optional<T>& cli, const std::optional<T>& file) {
  return cli ? cli : file;
}

}  // namespace

SweepMode parse_mode(const std::string& text) {
  if (text == "exhaustive") return SweepMode::kExhaustive;
  if (text == "sampled") return SweepMode::kSampled;
  throw UsageError("mode must be 'exhaustive' or 'sampled', got '" + text + "'");
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw UsageError("format must be 'json' or 'csv', got '" + text + "'");
}

std::size_t parse_pairs(const std::string& text) {
  if (text == "all") return kAllPairs;
  const std::uint64_t count = parse_unsigned(text, "--pairs");
  if (count == 0) throw UsageError("--pairs must be positive or 'all'");
  return static_cast<std::size_t>(count);
}

RunSettings parse_config_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config must be a JSON object");
  RunSettings s;
  for (const auto& [key, value] : doc.items()) {
    if (key == "n") {
      s.n = json_unsigned<int>(value, key);
    } else if (key == "subject") {
      s.subject = json_string(value, key);
    } else if (key == "mode") {
      s.mode = parse_mode(json_string(value, key));
    } else if (key == "trials") {
      s.trials = json_unsigned<std::uint64_t>(value, key);
    } else if (key == "pairs") {
      s.pairs = value.is_string() ? parse_pairs(value.get<std::string>())
                                  : json_unsigned<std::size_t>(value, key);
      if (value.is_number() && *s.pairs == 0) throw UsageError("config 'pairs' must be positive or \"all\"");
    } else if (key == "seed") {
      s.seed = json_unsigned<std::uint64_t>(value, key);
    } else if (key == "budget") {
      s.budget = json_unsigned<std::uint64_t>(value, key);
    } else if (key == "min_faults") {
      s.min_faults = json_unsigned<int>(value, key);
    } else if (key == "max_faults") {
      s.max_faults = json_unsigned<int>(value, key);
    } else if (key == "faults_file") {
      s.faults_file = json_string(value, key);
    } else if (key == "out") {
      s.out = json_string(value, key);
    } else if (key == "format") {
      s.format = parse_format(json_string(value, key));
    } else if (key == "workers") {
      s.workers = json_unsigned<unsigned>(value, key);
    } else if (key == "force") {
      if (!value.is_boolean()) throw UsageError("config 'force' must be a boolean");
      s.force = value.get<bool>();
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  return s;
}

RunSettings load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_json(text.str());
}

std::uint64_t default_budget(const char* env_value) {
  if (env_value == nullptr || *env_value == '\0') return kDefaultBudget;
  const std::uint64_t budget = parse_unsigned(env_value, "BSSTAR_BUDGET");
  if (budget == 0) throw UsageError("BSSTAR_BUDGET must be positive");
  return budget;
}

RunConfig resolve(const RunSettings& cli, const RunSettings& file, std::uint64_t fallback_budget) {
  RunConfig c;
  const std::optional<int> n = pick(cli.n, file.n);
  if (!n) throw UsageError("the dimension is required (-n/--dimension or config 'n')");
  c.n = *n;
  c.faults_file = pick(cli.faults_file, file.faults_file, std::string());
  c.subject = pick(cli.subject, file.subject,
                   std::string(c.faults_file.empty() ? "" : "faultset"));
  if (c.subject.empty()) throw UsageError("--subject is required");
  const SweepMode default_mode = c.subject == "thm41" ? SweepMode::kSampled : SweepMode::kExhaustive;
  c.mode = pick(cli.mode, file.mode, default_mode);
  c.trials = pick(cli.trials, file.trials, c.trials);
  c.pairs = pick(cli.pairs, file.pairs, c.n <= 4 ? kAllPairs : std::size_t{100});
  c.seed = pick(cli.seed, file.seed);
  c.budget = pick(cli.budget, file.budget, fallback_budget);
  c.min_faults = pick(cli.min_faults, file.min_faults, 0);
  c.max_faults = pick(cli.max_faults, file.max_faults);
  c.out = pick(cli.out, file.out, std::string());
  c.format = pick(cli.format, file.format, Format::kJson);
  c.workers = pick(cli.workers, file.workers, 0u);
  c.force = pick(cli.force, file.force, false);

  if (c.budget == 0) throw UsageError("the budget must be positive");
  if (c.mode == SweepMode::kSampled && !c.seed) {
    throw UsageError("sampled mode needs an explicit --seed");
  }
  if (c.subject == "faultset" && c.faults_file.empty()) {
    throw UsageError("subject 'faultset' needs --faults-file");
  }
  if (!c.faults_file.empty() && c.subject != "faultset") {
    throw UsageError("--faults-file applies only to subject 'faultset'");
  }
  if (c.max_faults && c.min_faults > *c.max_faults) {
    throw UsageError("--min-faults exceeds --max-faults");
  }
  return c;
}

SweepConfig to_sweep_config(const RunConfig& c) {
  SweepConfig s;
  s.mode = c.mode;
  s.trials = c.trials;
  s.seed = c.seed.value_or(0);
  if (c.pairs != kAllPairs && c.n >= kMinDimension && c.n <= kMaxDimension) {
    const std::uint64_t vertices = factorial(c.n);
    const std::uint64_t total = vertices * (vertices - 1) / 2;
    if (c.pairs < total) s.pairs_per_set = c.pairs;
  }
  s.min_faults = c.min_faults;
  s.max_faults = c.max_faults;
  s.budget = c.budget;
  s.force = c.force;
  s.workers = c.workers;
  return s;
}

}  // namespace bsstar::cli
