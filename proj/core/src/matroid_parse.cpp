// Copyright 2026 The Authors.
//
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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "flatmatch/errors.hpp"
#include "flatmatch/matroid.hpp"
#include "json_util.hpp"

namespace flatmatch {

using detail::int_list;
using detail::require_array;
using detail::require_field;
using detail::require_int;

MatroidSpec parse_matroid(std::string_view text) {
  const nlohmann::json doc = detail::parse_json_text(text);
  const auto& kind_field = require_field(doc, "kind");
  if (!kind_field.is_string()) {
    throw ParseError("field 'kind' must be a string", 0, "kind");
  }
  const std::string kind = kind_field.get<std::string>();
  const int n = require_int(doc, "n");
  if (n < 0 || n > kMaxGroundSize) {
    throw ParseError("field 'n' must lie in [0, 64]", 0, "n");
  }

  if (kind == "uniform") {
    return MatroidSpec::uniform(require_int(doc, "k"), n);
  }
  if (kind == "graphic") {
    const int vertices = require_int(doc, "vertices");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : require_array(doc, "edges")) {
      const auto ends = int_list(e, "edges");
      if (ends.size() != 2) {
        throw ParseError("each edge must be a pair of vertices", 0, "edges");
      }
      edges.emplace_back(ends[0], ends[1]);
    }
    if (static_cast<int>(edges.size()) != n) {
      throw ParseError("field 'n' must equal the number of edges", 0, "n");
    }
    return MatroidSpec::graphic(vertices, std::move(edges));
  }
  if (kind == "linear") {
    const int p = require_int(doc, "p");
    std::vector<std::vector<int>> columns;
    for (const auto& c : require_array(doc, "columns")) {
      columns.push_back(int_list(c, "columns"));
    }
    if (static_cast<int>(columns.size()) != n) {
      throw ParseError("field 'n' must equal the number of columns", 0, "n");
    }
    return MatroidSpec::linear(p, std::move(columns));
  }
  if (kind == "flats") {
    std::vector<Subset> flats;
    for (const auto& f : require_array(doc, "flats")) {
      Subset s;
      for (int e : int_list(f, "flats")) {
        if (e < 0 || e >= n) {
          throw ParseError("flat element " + std::to_string(e) +
                               " outside the ground set",
                           0, "flats");
        }
        s.insert(e);
      }
      flats.push_back(s);
    }
    return MatroidSpec::explicit_flats(n, std::move(flats));
  }
  throw ParseError("unknown matroid kind '" + kind + "'", 0, "kind");
}

std::string matroid_to_json(const MatroidSpec& spec) {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(spec.kind_name());
  doc["n"] = spec.ground_size();
  if (const auto* u = std::get_if<UniformKind>(&spec.kind())) {
    doc["k"] = u->k;
  } else if (const auto* g = std::get_if<GraphicKind>(&spec.kind())) {
    doc["vertices"] = g->vertices;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g->edges) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
  } else if (const auto* l = std::get_if<LinearKind>(&spec.kind())) {
    doc["p"] = l->prime;
    doc["columns"] = l->columns;
  } else {
    auto flats = nlohmann::ordered_json::array();
    for (Subset f : std::get<FlatsKind>(spec.kind()).flats) {
      flats.push_back(f.elements());
    }
    doc["flats"] = std::move(flats);
  }
  return doc.dump();
}

}  // namespace flatmatch
