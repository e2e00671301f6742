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

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

#include "bsstar/fault_models.hpp"

namespace bsstar {

FaultSet parse_fault_set(const Topology& t, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("fault file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("fault file must hold a JSON array");

  FaultSet f(t);
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw std::invalid_argument("each fault must be a pair of permutation strings");
    }
    const Vertex a = t.vertex(parse_permutation(item[0].get<std::string>(), t.n()));
    const Vertex b = t.vertex(parse_permutation(item[1].get<std::string>(), t.n()));
    const auto e = t.find_edge(a, b);
    if (!e) {
      throw std::invalid_argument(item[0].get<std::string>() + " and " +
                                  item[1].get<std::string>() + " are not adjacent");
    }
    if (!f.insert(*e)) {
      throw std::invalid_argument("duplicate fault " + item[0].get<std::string>() + " " +
                                  item[1].get<std::string>());
    }
  }
  return f;
}

std::string format_fault_set(const Topology& t, const FaultSet& f) {
  nlohmann::json doc = nlohmann::json::array();
  for (const EdgeId e : f.edges()) {
    const Edge edge = t.decode(e);
    doc.push_back({to_string(t.permutation(edge.canonical)), to_string(t.permutation(edge.other))});
  }
  return doc.dump();
}

}  // namespace bsstar
