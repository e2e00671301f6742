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

#include "bsstar/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "bsstar/version.hpp"

namespace bsstar {

namespace {

using Json = nlohmann::ordered_json;

Json edges_json(const std::vector<EdgeText>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({e[0], e[1]});
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json violation_json(const Violation& v) {
  Json out;
  out["faults"] = edges_json(v.faults);
  out["u"] = optional_json(v.u);
  out["v"] = optional_json(v.v);
  out["paths"] = optional_json(v.paths);
  out["min_deg"] = optional_json(v.min_deg);
  out["min_cut"] = edges_json(v.min_cut);
  if (!v.component_sizes.empty()) out["component_sizes"] = v.component_sizes;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

std::string edges_field(const std::vector<EdgeText>& edges) {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out += ';';
    out += e[0] + '-' + e[1];
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string report_to_json(const SweepReport& report, bool include_timing) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["subject"] = report.subject;
  doc["n"] = report.n;
  doc["mode"] = std::string(to_string(report.mode));
  doc["seed"] = optional_json(report.seed);
  doc["examined_fault_sets"] = report.examined_fault_sets;
  doc["examined_pairs"] = report.examined_pairs;
  doc["disconnected_fault_sets"] = report.disconnected_fault_sets;
  doc["budget"] = {{"min_faults", report.min_faults},
                   {"max_faults", report.max_faults},
                   {"trials", report.trials},
                   {"pairs_per_set", optional_json(report.pairs_per_set)},
                   {"work_budget", report.budget}};
  Json metrics = Json::object();
  for (const auto& [key, value] : report.metrics) metrics[key] = value;
  doc["metrics"] = std::move(metrics);
  Json violations = Json::array();
  for (const Violation& v : report.violations) violations.push_back(violation_json(v));
  doc["violations"] = std::move(violations);
  doc["passed"] = report.passed();
  if (include_timing) doc["elapsed_ms"] = report.elapsed_ms;
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "subject,n,mode,seed,examined_fault_sets,examined_pairs,passed,"
        "u,v,paths,min_deg,faults,min_cut,detail\n";
  const std::string prefix =
      report.subject + ',' + std::to_string(report.n) + ',' + std::string(to_string(report.mode)) +
      ',' + (report.seed ? std::to_string(*report.seed) : std::string()) + ',' +
      std::to_string(report.examined_fault_sets) + ',' + std::to_string(report.examined_pairs) +
      ',' + (report.passed() ? "true" : "false") + ',';
  if (report.violations.empty()) {
    os << prefix << ",,,,,,\n";
    return os.str();
  }
  for (const Violation& v : report.violations) {
    os << prefix << v.u.value_or("") << ',' << v.v.value_or("") << ','
       << (v.paths ? std::to_string(*v.paths) : "") << ','
       << (v.min_deg ? std::to_string(*v.min_deg) : "") << ',' << edges_field(v.faults) << ','
       << edges_field(v.min_cut) << ',' << csv_quote(v.detail) << '\n';
  }
  return os.str();
}

}  // namespace bsstar
