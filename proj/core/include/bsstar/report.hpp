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

#include <string>

#include "bsstar/verifier.hpp"

namespace bsstar {

// Versioned JSON document. Field order is fixed, so two reports of the same
// run differ only in elapsed_ms; pass include_timing = false to drop it.
std::string report_to_json(const SweepReport& report, bool include_timing = true);

// Header plus one row per violation, or a single summary row if there are none.
std::string report_to_csv(const SweepReport& report);

}  // namespace bsstar
