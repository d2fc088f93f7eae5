#pragma once

// Biconnected-block decomposition with a structural shape classifier. The
// classifier only looks at degrees and paths inside a block, never at vertex
// provenance, so it can cross-check the copy census of the constructions.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fractree/error.hpp"
#include "fractree/graph.hpp"

namespace fractree {

struct CycleBlock {
  std::size_t length = 0;
  friend auto operator<=>(const CycleBlock&, const CycleBlock&) = default;
};

/// W_n with every edge replaced by a path of `path_length` edges.
struct SubdividedWheelBlock {
  std::size_t n = 0;
  std::size_t path_length = 1;
  friend auto operator<=>(const SubdividedWheelBlock&, const SubdividedWheelBlock&) = default;
};

struct OtherBlock {
  friend auto operator<=>(const OtherBlock&, const OtherBlock&) = default;
};

using BlockShape = std::variant<CycleBlock, SubdividedWheelBlock, OtherBlock>;

inline std::string to_string(const BlockShape& shape) {
  if (const auto* c = std::get_if<CycleBlock>(&shape)) return "Cycle(" + std::to_string(c->length) + ")";
  if (const auto* w = std::get_if<SubdividedWheelBlock>(&shape)) {
    return "SubdividedWheel(n=" + std::to_string(w->n) + ",path=" + std::to_string(w->path_length) + ")";
  }
  return "Other";
}

struct Block {
  std::vector<VertexId> vertices; // ascending
  std::vector<Edge> edges;        // u < v, ascending
  BlockShape shape;
};

namespace detail {

inline BlockShape classify_block(const std::vector<VertexId>& vertices, const std::vector<Edge>& edges) {
  if (edges.size() < 3) return OtherBlock{};

  std::map<VertexId, std::vector<VertexId>> local;
  for (auto [u, v] : edges) {
    local[u].push_back(v);
    local[v].push_back(u);
  }
  std::vector<VertexId> branch;
  for (const auto& [v, nbrs] : local) {
    if (nbrs.size() >= 3) branch.push_back(v);
  }
  if (branch.empty()) {
    // Biconnected with all degrees 2: a single cycle.
    return CycleBlock{vertices.size()};
  }

  // Suppress degree-2 vertices: trace every branch-to-branch path.
  std::map<std::pair<VertexId, VertexId>, std::size_t> paths; // (a<b) -> length
  std::size_t common_length = 0;
  for (VertexId start : branch) {
    for (VertexId first : local[start]) {
      VertexId prev = start;
      VertexId cur = first;
      std::size_t length = 1;
      while (local[cur].size() == 2) {
        const auto& nb = local[cur];
        VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++length;
      }
      if (cur == start) return OtherBlock{};
      if (common_length == 0) common_length = length;
      if (length != common_length) return OtherBlock{};
      auto key = std::minmax(start, cur);
      auto [it, inserted] = paths.emplace(std::pair{key.first, key.second}, length);
      if (!inserted && start < cur) return OtherBlock{}; // second path between the same pair
    }
  }

  const std::size_t n = branch.size() - 1;
  if (n < 3 || paths.size() != 2 * n) return OtherBlock{};

  std::map<VertexId, std::vector<VertexId>> reduced;
  for (const auto& [key, len] : paths) {
    reduced[key.first].push_back(key.second);
    reduced[key.second].push_back(key.first);
  }
  VertexId hub = branch.front();
  bool found_hub = false;
  for (VertexId v : branch) {
    if (reduced[v].size() == n) {
      hub = v;
      found_hub = true;
      break;
    }
  }
  if (!found_hub) return OtherBlock{};

  // Rim: every non-hub branch vertex has degree 3 (hub + two rim neighbours)
  // and the rim is one connected cycle.
  std::vector<VertexId> rim;
  for (VertexId v : branch) {
    if (v == hub) continue;
    if (reduced[v].size() != 3) return OtherBlock{};
    rim.push_back(v);
  }
  auto rim_neighbors = [&](VertexId v) {
    std::vector<VertexId> out;
    for (VertexId w : reduced[v]) {
      if (w != hub) out.push_back(w);
    }
    return out;
  };
  VertexId prev = rim.front();
  auto first_nb = rim_neighbors(prev);
  if (first_nb.size() != 2) return OtherBlock{};
  VertexId cur = first_nb[0];
  std::size_t walked = 1;
  while (cur != rim.front()) {
    auto nb = rim_neighbors(cur);
    if (nb.size() != 2) return OtherBlock{};
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (++walked > rim.size()) return OtherBlock{};
  }
  if (walked != rim.size()) return OtherBlock{};
  return SubdividedWheelBlock{n, common_length};
}

} // namespace detail

/// Biconnected components (iterative Hopcroft-Tarjan). Every edge lands in
/// exactly one block. Blocks are returned sorted by their vertex lists.
inline std::vector<Block> blocks(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraph("block decomposition needs a connected graph");
  const std::size_t nv = g.vertex_count();
  std::vector<Block> out;
  if (nv == 0) return out;

  std::vector<long> disc(nv, -1);
  std::vector<long> low(nv, 0);
  std::vector<VertexId> parent(nv, 0);
  std::vector<Edge> edge_stack;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  long clock = 0;

  auto emit = [&](VertexId u, VertexId w) {
    Block b;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      b.edges.push_back(std::minmax(e.first, e.second));
      if ((e.first == u && e.second == w) || (e.first == w && e.second == u)) break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    for (auto [a, c] : b.edges) {
      b.vertices.push_back(a);
      b.vertices.push_back(c);
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    b.shape = detail::classify_block(b.vertices, b.edges);
    out.push_back(std::move(b));
  };

  disc[0] = low[0] = clock++;
  parent[0] = 0;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const VertexId v = f.v;
    const auto& nbrs = g.neighbors(v);
    if (f.next < nbrs.size()) {
      const VertexId w = nbrs[f.next++];
      if (disc[w] < 0) {
        parent[w] = v;
        disc[w] = low[w] = clock++;
        edge_stack.emplace_back(v, w);
        stack.push_back({w, 0});
      } else if (w != parent[v] && disc[w] < disc[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        const VertexId p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) emit(p, v);
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  return out;
}

/// Shape -> number of blocks with that shape.
inline std::map<BlockShape, std::size_t> block_shape_counts(const std::vector<Block>& bs) {
  std::map<BlockShape, std::size_t> counts;
  for (const auto& b : bs) ++counts[b.shape];
  return counts;
}

/// Subgraph induced by one block's edges, vertices relabelled 0..k-1 in
/// ascending original id order.
inline Graph block_subgraph(const Block& b) {
  std::vector<Edge> edges;
  edges.reserve(b.edges.size());
  auto local = [&](VertexId v) {
    return static_cast<VertexId>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin());
  };
  for (auto [u, v] : b.edges) edges.emplace_back(local(u), local(v));
  return Graph::from_edges(b.vertices.size(), edges);
}

} // namespace fractree
