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

#include <sstream>
#include <string>

#include "flatmatch/export.hpp"

namespace flatmatch {
namespace {

Json flat_json(const Lattice& lat, ElementId x) { return lat.set_of(x).elements(); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& [m, w] : edges) out.push_back({m, w});
  return out;
}

}  // namespace

Json lattice_to_json(const Lattice& lat) {
  Json doc;
  doc["size"] = lat.size();
  doc["rank"] = lat.rank();
  doc["bottom"] = lat.bottom();
  doc["top"] = lat.top();
  doc["atoms"] = lat.atoms();
  doc["hyperplanes"] = lat.hyperplanes();
  Json elements = Json::array();
  for (ElementId x = 0; x < lat.size(); ++x) {
    Json e;
    e["id"] = x;
    e["flat"] = flat_json(lat, x);
    e["rank"] = lat.rank_of(x);
    e["covers"] = lat.covers_up(x);
    elements.push_back(std::move(e));
  }
  doc["elements"] = std::move(elements);
  return doc;
}

std::string lattice_to_dot(const Lattice& lat) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int r = 0; r <= lat.rank(); ++r) {
    out << "  { rank=same;";
    for (ElementId x : lat.elements_of_rank(r)) out << " n" << x << ";";
    out << " }\n";
  }
  for (ElementId x = 0; x < lat.size(); ++x) {
    out << "  n" << x << " [label=\"" << lat.set_of(x).to_string() << "\"];\n";
  }
  for (ElementId x = 0; x < lat.size(); ++x) {
    for (ElementId y : lat.covers_up(x)) out << "  n" << x << " -> n" << y << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json report_to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  Json doc;
  doc["checks"] = std::move(checks);
  doc["all_passed"] = report.passed();
  return doc;
}

Json society_to_json(const Society& soc) {
  Json doc;
  doc["M"] = soc.men();
  doc["W"] = soc.women();
  doc["edges"] = edges_json(soc.edges());
  return doc;
}

Json espousal_to_json(const Espousal& e) { return edges_json(e.pairs); }

Json matching_report_to_json(const Lattice& lat, const DispatchResult& result) {
  const StrategyReport& r = result.report;
  Json doc;
  doc["strategy"] = std::string(strategy_name(r.requested));
  doc["used"] = r.used;
  doc["preconditions"] = r.preconditions;
  doc["fallbacks"] = r.fallbacks;
  doc["trace"] = r.trace;
  Json pairs = Json::array();
  for (const auto& [p, h] : result.matching) {
    Json entry;
    entry["atom"] = flat_json(lat, p);
    entry["hyperplane"] = flat_json(lat, h);
    pairs.push_back(std::move(entry));
  }
  doc["matching"] = std::move(pairs);
  doc["verified"] = r.verified;
  doc["violation"] = r.violation;
  return doc;
}

Json witness_to_json(const ObstructionWitness& w, const ObstructionVerdict& verdict) {
  Json doc;
  doc["Pi"] = society_to_json(w.pi);
  doc["A"] = w.removed;
  doc["kappa"] = w.kappa;
  doc["E_crit"] = espousal_to_json(w.critical);
  Json v;
  v["ok"] = verdict.ok;
  v["failed_clause"] = verdict.failed_clause;
  v["detail"] = verdict.detail;
  doc["verdict"] = std::move(v);
  return doc;
}

}  // namespace flatmatch
