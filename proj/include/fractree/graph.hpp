#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fractree/error.hpp"
#include "fractree/exact_arith.hpp"

namespace fractree {

enum class Family { Cycle, Wheel };

inline std::string_view to_string(Family f) { return f == Family::Cycle ? "cycle" : "wheel"; }

inline Family parse_family(std::string_view text) {
  if (text == "cycle") return Family::Cycle;
  if (text == "wheel") return Family::Wheel;
  throw UsageError("unknown family '" + std::string(text) + "' (expected cycle or wheel)");
}

/// Identifies G^(i) of one family: base C_n or W_n, path length m, stage i.
struct FractalParams {
  Family family = Family::Cycle;
  int n = 3;
  int m = 2;
  int i = 0;

  void validate() const {
    if (n < 3) throw BadN("n must be >= 3, got " + std::to_string(n));
    if (m < 2) throw UsageError("m must be >= 2, got " + std::to_string(m));
    if (i < 0) throw UsageError("stage i must be >= 0, got " + std::to_string(i));
  }

  friend bool operator==(const FractalParams&, const FractalParams&) = default;
};

inline std::string to_string(const FractalParams& p) {
  return std::string(to_string(p.family)) + "(n=" + std::to_string(p.n) + ",m=" + std::to_string(p.m) +
         ",i=" + std::to_string(p.i) + ")";
}

using VertexId = std::uint32_t;

enum class VertexRole { OriginalBase, PathInterior, FreshRim, FreshHub, BaseHub };

inline std::string_view to_string(VertexRole r) {
  switch (r) {
  case VertexRole::OriginalBase: return "OriginalBase";
  case VertexRole::PathInterior: return "PathInterior";
  case VertexRole::FreshRim: return "FreshRim";
  case VertexRole::FreshHub: return "FreshHub";
  case VertexRole::BaseHub: return "BaseHub";
  }
  return "?";
}

struct VertexInfo {
  VertexRole role = VertexRole::OriginalBase;
  int birth_stage = 0;

  friend bool operator==(const VertexInfo&, const VertexInfo&) = default;
};

using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple graph. Vertex ids are dense; neighbor lists are sorted
/// ascending. Immutable once built.
class Graph {
public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, parallel edges or
  /// out-of-range endpoints.
  Graph(std::vector<VertexInfo> vertices, const std::vector<Edge>& edges,
        std::optional<FractalParams> params = std::nullopt)
      : vertices_(std::move(vertices)), adjacency_(vertices_.size()), params_(params) {
    for (auto [u, v] : edges) {
      if (u >= vertices_.size() || v >= vertices_.size()) {
        throw std::invalid_argument("edge endpoint out of range");
      }
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
        throw std::invalid_argument("parallel edge");
      }
    }
    edge_count_ = edges.size();
  }

  /// Graph with plain OriginalBase vertices, stage 0.
  static Graph from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
    return Graph(std::vector<VertexInfo>(vertex_count), edges);
  }

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] const std::vector<VertexInfo>& vertices() const { return vertices_; }
  [[nodiscard]] const VertexInfo& info(VertexId v) const { return vertices_.at(v); }
  [[nodiscard]] const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  [[nodiscard]] const std::optional<FractalParams>& params() const { return params_; }

  [[nodiscard]] bool has_edge(VertexId u, VertexId v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Edges (u, v) with u < v in ascending lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
      for (VertexId v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  [[nodiscard]] bool is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : adjacency_[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    return reached == vertices_.size();
  }

  void set_params(std::optional<FractalParams> p) { params_ = p; }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<VertexInfo> vertices_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::optional<FractalParams> params_;
};

inline std::map<std::size_t, std::size_t> degree_histogram(const Graph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++hist[g.degree(v)];
  return hist;
}

inline void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) {
    throw InvalidVertex("vertex " + std::to_string(v) + " out of range (|V|=" +
                        std::to_string(g.vertex_count()) + ")");
  }
}

/// Laplacian D - A restricted to the vertices in `order` (each listed once),
/// rows and columns in that order.
inline IntegerMatrix laplacian_submatrix(const Graph& g, const std::vector<VertexId>& order) {
  std::vector<std::int64_t> position(g.vertex_count(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    check_vertex(g, order[k]);
    position[order[k]] = static_cast<std::int64_t>(k);
  }
  IntegerMatrix out(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const VertexId v = order[k];
    out.at(k, k) = static_cast<unsigned long>(g.degree(v));
    for (VertexId w : g.neighbors(v)) {
      if (position[w] >= 0) out.at(k, static_cast<std::size_t>(position[w])) = -1;
    }
  }
  return out;
}

/// Laplacian with the row and column of `omit` removed, remaining vertices in
/// ascending id order.
inline IntegerMatrix laplacian_minor(const Graph& g, VertexId omit) {
  check_vertex(g, omit);
  std::vector<VertexId> order;
  order.reserve(g.vertex_count() - 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v != omit) order.push_back(v);
  }
  return laplacian_submatrix(g, order);
}

} // namespace fractree
