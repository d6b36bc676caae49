#pragma once

#include <json.hpp>

#include "satgraph/construct.hpp"
#include "satgraph/embed.hpp"
#include "satgraph/hunt.hpp"
#include "satgraph/saturate.hpp"
#include "satgraph/search.hpp"

namespace satgraph {

using json = nlohmann::json;

inline json to_json(const Witness& w) {
  json parts = json::array();
  for (const auto& part : w.parts) parts.push_back(part);
  return parts;
}

inline json to_json(const SaturationReport& rep) {
  json j;
  j["pattern"] = rep.pattern.sizes();
  j["free"] = rep.is_free;
  j["saturated"] = rep.is_saturated;
  j["witness"] = rep.containment_witness ? to_json(*rep.containment_witness) : json(nullptr);
  j["failing_non_edge"] = rep.failing_non_edge
                              ? json::array({rep.failing_non_edge->first, rep.failing_non_edge->second})
                              : json(nullptr);
  j["non_edges_checked"] = rep.non_edges_checked;
  if (!rep.failing_non_edges.empty()) {
    json all = json::array();
    for (const auto& [u, v] : rep.failing_non_edges) all.push_back(json::array({u, v}));
    j["failing_non_edges"] = all;
  }
  return j;
}

inline json to_json(const FormulaVerdict& v) {
  json j;
  j["covered"] = v.covered();
  j["value"] = v.value ? json(*v.value) : json(nullptr);
  j["source"] = v.covered() ? json(v.source) : json(nullptr);
  j["valid_n_threshold"] = v.covered() ? json(v.valid_n_threshold) : json(nullptr);
  return j;
}

inline json to_json(const SearchResult& r) {
  json j;
  j["n"] = r.n;
  j["pattern"] = r.pattern.sizes();
  j["sat_value"] = r.sat_value;
  j["extremal_canonical"] = r.extremal_canonical;
  j["graphs_enumerated"] = r.graphs_enumerated;
  if (!r.exhaustive) j["non_exhaustive"] = true;
  return j;
}

inline json to_json(const HuntResult& r) {
  json j;
  j["best_graph"] = r.best_graph;
  j["best_edges"] = r.best_edges;
  j["target_edges"] = r.target_edges;
  j["iterations"] = r.iterations;
  j["seed"] = r.seed;
  return j;
}

inline json to_json(const DeltaDiagnostics& d) {
  json j;
  j["min_degree"] = d.min_degree;
  j["min_degree_vertex"] = d.min_degree_vertex;
  j["condition_i"] = d.condition_i;
  j["condition_ii"] = d.condition_ii;
  j["condition_iii"] = d.condition_iii;
  j["applicable"] = d.applicable;
  return j;
}

}  // namespace satgraph
