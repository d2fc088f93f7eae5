#pragma once

// The two construction operations and the staged iteration
//   G^(0) = C_n or W_n
//   G^(k+1) = glv(ept(G^(k), m), eligible = vertices of G^(k))
//
// Id assignment is fixed: ept keeps existing ids and appends interior
// vertices edge by edge (ascending (u, v)), from u towards v; glv then
// appends one fresh copy per host in ascending host order, rim vertices
// first walking the copy's cycle away from the host, hub last.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fractree/blocks.hpp"
#include "fractree/error.hpp"
#include "fractree/graph.hpp"
#include "fractree/sequences.hpp"

namespace fractree {

inline constexpr std::size_t kDefaultMaxVertices = 1'000'000;

/// FRACTREE_MAX_VERTICES when set to a positive integer, else the default.
inline std::size_t max_vertices_from_env() {
  if (const char* env = std::getenv("FRACTREE_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxVertices;
}

inline Graph base(Family family, int n) {
  if (n < 3) throw BadN("base graph needs n >= 3, got " + std::to_string(n));
  const auto nv = static_cast<VertexId>(n);
  std::vector<VertexInfo> vertices(nv, VertexInfo{VertexRole::OriginalBase, 0});
  std::vector<Edge> edges;
  for (VertexId k = 0; k < nv; ++k) edges.emplace_back(k, (k + 1) % nv);
  if (family == Family::Wheel) {
    vertices.push_back({VertexRole::BaseHub, 0});
    for (VertexId k = 0; k < nv; ++k) edges.emplace_back(k, nv);
  }
  return Graph(std::move(vertices), edges);
}

/// Replaces every edge by a path of m edges through m-1 new PathInterior
/// vertices.
inline Graph ept(const Graph& g, int m, int birth_stage = 0) {
  if (m < 2) throw UsageError("ept needs m >= 2, got " + std::to_string(m));
  std::vector<VertexInfo> vertices = g.vertices();
  vertices.reserve(g.vertex_count() + static_cast<std::size_t>(m - 1) * g.edge_count());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * g.edge_count());
  for (auto [u, v] : g.edges()) {
    VertexId prev = u;
    for (int k = 1; k < m; ++k) {
      const auto w = static_cast<VertexId>(vertices.size());
      vertices.push_back({VertexRole::PathInterior, birth_stage});
      edges.emplace_back(prev, w);
      prev = w;
    }
    edges.emplace_back(prev, v);
  }
  return Graph(std::move(vertices), edges);
}

/// Attaches a fresh copy of the base graph at every eligible vertex. The host
/// plays one cycle vertex (cycle family) or one rim vertex (wheel family).
inline Graph glv(const Graph& g, Family family, int n, std::span<const VertexId> eligible, int birth_stage = 0) {
  if (n < 3) throw BadN("glv needs n >= 3, got " + std::to_string(n));
  std::vector<VertexId> hosts(eligible.begin(), eligible.end());
  std::sort(hosts.begin(), hosts.end());
  if (std::adjacent_find(hosts.begin(), hosts.end()) != hosts.end()) {
    throw InvalidVertexSet("eligible set lists a vertex twice");
  }
  if (!hosts.empty() && hosts.back() >= g.vertex_count()) {
    throw InvalidVertexSet("eligible vertex " + std::to_string(hosts.back()) + " not in graph");
  }

  const std::size_t per_copy = family == Family::Cycle ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(n);
  std::vector<VertexInfo> vertices = g.vertices();
  vertices.reserve(g.vertex_count() + per_copy * hosts.size());
  std::vector<Edge> edges = g.edges();
  for (VertexId host : hosts) {
    std::vector<VertexId> rim{host};
    for (int k = 1; k < n; ++k) {
      rim.push_back(static_cast<VertexId>(vertices.size()));
      vertices.push_back({VertexRole::FreshRim, birth_stage});
    }
    for (std::size_t k = 0; k < rim.size(); ++k) edges.emplace_back(rim[k], rim[(k + 1) % rim.size()]);
    if (family == Family::Wheel) {
      const auto hub = static_cast<VertexId>(vertices.size());
      vertices.push_back({VertexRole::FreshHub, birth_stage});
      for (VertexId r : rim) edges.emplace_back(r, hub);
    }
  }
  return Graph(std::move(vertices), edges);
}

/// G^(i) for the given family. Refuses when the predicted vertex count
/// exceeds `max_vertices`.
inline Graph build(const FractalParams& p, std::size_t max_vertices) {
  p.validate();
  const SizeSequences sizes = size_sequences(p, static_cast<std::size_t>(p.i) + 1);
  const BigInt& predicted = sizes.u.back();
  if (predicted > BigInt(static_cast<unsigned long>(max_vertices))) {
    throw SizeCap(to_string(p) + " would have " + to_decimal(predicted) + " vertices, cap is " +
                  std::to_string(max_vertices));
  }
  Graph g = base(p.family, p.n);
  for (int k = 0; k < p.i; ++k) {
    std::vector<VertexId> hosts(g.vertex_count());
    for (VertexId v = 0; v < hosts.size(); ++v) hosts[v] = v;
    g = glv(ept(g, p.m, k + 1), p.family, p.n, hosts, k + 1);
  }
  g.set_params(p);
  return g;
}

inline Graph build(const FractalParams& p) { return build(p, max_vertices_from_env()); }

/// Descriptor of the central graph H^(i): ept applied i times to the base.
struct CentralGraph {
  Family family = Family::Cycle;
  int n = 3;
  BigInt path_length = 1; // m^i edges per original base edge

  [[nodiscard]] BlockShape shape() const {
    const std::size_t len = path_length.get_ui();
    if (family == Family::Cycle) return CycleBlock{static_cast<std::size_t>(n) * len};
    return SubdividedWheelBlock{static_cast<std::size_t>(n), len};
  }
};

/// Top-level decomposition of G^(i): the central graph plus, for each stage
/// t < i, `copies[t]` embedded copies of G^(t) hanging off it.
///
/// Copies of G^(i-1) hang off the base vertices (n for cycles, n+1 for
/// wheels). Copies of G^(t), t <= i-2, hang off the vertices the (i-t-1)-th
/// subdivision round inserted into the central graph:
///   cycle: n (m-1) m^(i-t-2),   wheel: 2n (m-1) m^(i-t-2).
struct CopyCensus {
  FractalParams params;
  std::vector<BigInt> copies; // index t = stage of the embedded copy
  CentralGraph central;
};

inline CopyCensus copy_census(const FractalParams& p) {
  p.validate();
  if (p.i < 1) throw UsageError("copy census needs stage i >= 1");
  CopyCensus c;
  c.params = p;
  c.copies.assign(static_cast<std::size_t>(p.i), BigInt(0));
  const long edges_in_base = p.family == Family::Cycle ? p.n : 2L * p.n;
  for (int t = 0; t <= p.i - 1; ++t) {
    if (t == p.i - 1) {
      c.copies[t] = p.family == Family::Cycle ? p.n : p.n + 1;
    } else {
      c.copies[t] = BigInt(edges_in_base) * (p.m - 1) * pow_big(BigInt(p.m), static_cast<unsigned long>(p.i - t - 2));
    }
  }
  c.central = CentralGraph{p.family, p.n, pow_big(BigInt(p.m), static_cast<unsigned long>(p.i))};
  return c;
}

/// Block multiset implied by recursively unfolding the copy census. Each
/// copy shares only a cut vertex with the central graph, so blocks add up.
inline std::map<BlockShape, BigInt> census_block_multiset(const FractalParams& p) {
  std::map<BlockShape, BigInt> out;
  if (p.i == 0) {
    out[CentralGraph{p.family, p.n, BigInt(1)}.shape()] = 1;
    return out;
  }
  const CopyCensus census = copy_census(p);
  ++out[census.central.shape()];
  for (int t = 0; t < p.i; ++t) {
    FractalParams sub = p;
    sub.i = t;
    for (const auto& [shape, count] : census_block_multiset(sub)) {
      out[shape] += count * census.copies[static_cast<std::size_t>(t)];
    }
  }
  return out;
}

/// Equivalent flat form: H^(k) blocks (k subdivision rounds) with
/// multiplicity u_{i-k}.
inline std::map<BlockShape, BigInt> layered_block_multiset(const FractalParams& p) {
  const SizeSequences s = size_sequences(p, static_cast<std::size_t>(p.i));
  std::map<BlockShape, BigInt> out;
  for (int k = 0; k <= p.i; ++k) {
    CentralGraph h{p.family, p.n, pow_big(BigInt(p.m), static_cast<unsigned long>(k))};
    out[h.shape()] += s.u[static_cast<std::size_t>(p.i - k)];
  }
  return out;
}

} // namespace fractree
