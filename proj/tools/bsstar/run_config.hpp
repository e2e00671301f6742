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
#include <stdexcept>
#include <string>

#include "bsstar/verifier.hpp"

namespace bsstar::cli {

// Process exit codes, stable for scripting.
enum ExitCode : int {
  kVerified = 0,
  kViolation = 1,
  kUsage = 2,
  kBudget = 3,
  kIo = 4,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kJson, kCsv };

// Pair count meaning "every unordered pair".
inline constexpr std::size_t kAllPairs = 0;

// One source of settings (command line or config file); unset fields defer
// to the next source.
struct RunSettings {
  std::optional<int> n;
  std::optional<std::string> subject;
  std::optional<SweepMode> mode;
  std::optional<std::uint64_t> trials;
  std::optional<std::size_t> pairs;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<int> min_faults;
  std::optional<int> max_faults;
  std::optional<std::string> faults_file;
  std::optional<std::string> out;
  std::optional<Format> format;
  std::optional<unsigned> workers;
  std::optional<bool> force;
};

struct RunConfig {
  int n = 0;
  std::string subject;
  SweepMode mode = SweepMode::kExhaustive;
  std::uint64_t trials = 1000;
  // kAllPairs, or the number of pairs sampled per fault set.
  std::size_t pairs = kAllPairs;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = kDefaultBudget;
  int min_faults = 0;
  std::optional<int> max_faults;
  std::string faults_file;
  std::string out;
  Format format = Format::kJson;
  unsigned workers = 0;
  bool force = false;
};

SweepMode parse_mode(const std::string& text);
Format parse_format(const std::string& text);
// "all" or a positive count.
std::size_t parse_pairs(const std::string& text);

// JSON object with the RunSettings field names as keys; --pairs may be "all".
RunSettings parse_config_json(const std::string& text);
RunSettings load_config_file(const std::string& path);

// Value of BSSTAR_BUDGET, or kDefaultBudget when unset.
std::uint64_t default_budget(const char* env_value);

// Command line over config file over defaults, then validated.
RunConfig resolve(const RunSettings& cli, const RunSettings& file, std::uint64_t fallback_budget);

SweepConfig to_sweep_config(const RunConfig& config);

}  // namespace bsstar::cli
