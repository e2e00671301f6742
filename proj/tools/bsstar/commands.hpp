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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace bsstar::cli {

// Writes the edge list of BS_n to `out_path`, or to `out` when the path is
// empty; the one-line summary goes to `out` in the first case and `err` in
// the second so that stdout stays a clean edge list.
int cmd_gen(int n, const std::string& out_path, std::ostream& out, std::ostream& err);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

// theorem is 31 or 41; u defaults to the identity.
int cmd_sharpness(int theorem, int n, const std::optional<std::string>& u, std::ostream& out);

// n = 0 takes the dimension from u.
int cmd_paths(int n, const std::string& u, const std::string& v, const std::string& faults_file,
              std::ostream& out);

int cmd_lambda(int n, std::ostream& out);

// Full command line without the program name. Never throws; returns an
// ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsstar::cli
