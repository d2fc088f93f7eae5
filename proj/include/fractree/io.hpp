#pragma once

// Text and JSON encodings: edge lists, graph JSON, DOT, factored counts,
// clustering reports.

#include <json.hpp>

#include <cstddef>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "fractree/clustering.hpp"
#include "fractree/exact_arith.hpp"
#include "fractree/graph.hpp"

namespace fractree {

using json = nlohmann::ordered_json;

/// One "u v" line per edge, u < v, ascending.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline json graph_to_json(const Graph& g) {
  json j;
  if (const auto& p = g.params()) {
    j["family"] = std::string(to_string(p->family));
    j["n"] = p->n;
    j["m"] = p->m;
    j["i"] = p->i;
  } else {
    j["family"] = nullptr;
    j["n"] = nullptr;
    j["m"] = nullptr;
    j["i"] = nullptr;
  }
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexInfo& info = g.info(v);
    vertices.push_back({{"id", v}, {"role", std::string(to_string(info.role))}, {"birth", info.birth_stage}});
  }
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

inline void write_json(std::ostream& os, const Graph& g) { os << graph_to_json(g).dump() << '\n'; }

inline void write_dot(std::ostream& os, const Graph& g) {
  os << "graph G {\n";
  if (const auto& p = g.params()) os << "  label=\"" << to_string(*p) << "\";\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexInfo& info = g.info(v);
    os << "  " << v << " [role=" << to_string(info.role) << ", birth=" << info.birth_stage << "];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

/// Bases are JSON numbers; a base too large for 64 bits is written as a
/// decimal string instead.
inline json factored_to_json(const FactoredCount& c) {
  json factors = json::array();
  for (const auto& [base, exponent] : c.factors()) {
    json b = base.fits_ulong_p() ? json(base.get_ui()) : json(to_decimal(base));
    factors.push_back({b, to_decimal(exponent)});
  }
  return {{"factors", factors}};
}

inline FactoredCount factored_from_json(const json& j) {
  FactoredCount c;
  for (const auto& item : j.at("factors")) {
    const json& b = item.at(0);
    BigInt base = b.is_string() ? BigInt(b.get<std::string>()) : BigInt(b.get<unsigned long>());
    c.multiply(base, BigInt(item.at(1).get<std::string>()));
  }
  return c;
}

/// {"factored": ..., "decimal": "...", "digits": k}
inline json count_to_json(const FactoredCount& c, const BigInt& value) {
  const std::string decimal = to_decimal(value);
  return {{"factored", factored_to_json(c)}, {"decimal", decimal}, {"digits", decimal.size() - (value < 0 ? 1 : 0)}};
}

inline json clustering_to_json(const ClusteringReport& r, const Rational& closed_form) {
  json classes = json::array();
  for (const auto& [coefficient, count] : r.classes) {
    classes.push_back({{"coefficient", to_fraction_string(coefficient)}, {"count", count}});
  }
  return {{"classes", classes},
          {"average", to_fraction_string(r.average)},
          {"closed_form", to_fraction_string(closed_form)},
          {"match", r.average == closed_form}};
}

} // namespace fractree
