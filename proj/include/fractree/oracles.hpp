#pragma once

// Slow reference routines and random instance generators used by the
// cross-check harness.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "fractree/exact_arith.hpp"
#include "fractree/graph.hpp"

namespace fractree::oracle {

/// Laplace expansion along the first row. Exponential; order <= 8 or so.
inline BigInt cofactor_determinant(const IntegerMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m.at(0, col) == 0) continue;
    IntegerMatrix sub(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t c2 = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == col) continue;
        sub.at(r - 1, c2++) = m.at(r, c);
      }
    }
    const BigInt term = m.at(0, col) * cofactor_determinant(sub);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t order, long lo, long hi) {
  std::uniform_int_distribution<long> value(lo, hi);
  IntegerMatrix m(order);
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) m.at(r, c) = value(rng);
  }
  return m;
}

/// Connected simple graph: a random spanning tree plus `extra` random chords
/// (fewer if the graph saturates).
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t vertices, std::size_t extra) {
  std::set<Edge> edges;
  for (VertexId v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<VertexId> pick(0, v - 1);
    edges.emplace(pick(rng), v);
  }
  const std::size_t max_edges = vertices * (vertices - 1) / 2;
  std::uniform_int_distribution<VertexId> any(0, static_cast<VertexId>(vertices - 1));
  for (std::size_t k = 0; k < extra && edges.size() < max_edges; ++k) {
    VertexId a = any(rng);
    VertexId b = any(rng);
    if (a == b) continue;
    edges.insert(std::minmax(a, b));
  }
  return Graph::from_edges(vertices, std::vector<Edge>(edges.begin(), edges.end()));
}

inline std::vector<VertexId> random_subset(std::mt19937_64& rng, std::size_t vertices) {
  std::vector<VertexId> out;
  std::bernoulli_distribution keep(0.5);
  for (VertexId v = 0; v < vertices; ++v) {
    if (keep(rng)) out.push_back(v);
  }
  return out;
}

} // namespace fractree::oracle
