#pragma once

// Spanning-tree counts three ways: closed form over the size sequence,
// Kirchhoff (Laplacian minor determinant), and product over blocks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fractree/blocks.hpp"
#include "fractree/error.hpp"
#include "fractree/exact_arith.hpp"
#include "fractree/graph.hpp"
#include "fractree/sequences.hpp"

namespace fractree {

inline constexpr std::size_t kDefaultOracleMaxVertices = 2000;

struct LucasPair {
  unsigned long index = 0;
  BigInt lucas;
  BigInt fibonacci;
};

/// L_k and F_k with L_1 = 1, L_2 = 3, F_1 = F_2 = 1 (L_0 = 2, F_0 = 0).
inline LucasPair lucas_pair(unsigned long k) {
  BigInt l_prev = 2, l_cur = 1; // L_0, L_1
  BigInt f_prev = 0, f_cur = 1; // F_0, F_1
  if (k == 0) return {0, l_prev, f_prev};
  for (unsigned long j = 1; j < k; ++j) {
    BigInt l_next = l_cur + l_prev;
    BigInt f_next = f_cur + f_prev;
    l_prev = std::move(l_cur);
    l_cur = std::move(l_next);
    f_prev = std::move(f_cur);
    f_cur = std::move(f_next);
  }
  return {k, l_cur, f_cur};
}

/// tau(W_n) = L_{2n} - 2
inline BigInt tau_wheel_base(int n) {
  if (n < 3) throw BadN("wheel needs n >= 3, got " + std::to_string(n));
  return lucas_pair(2UL * static_cast<unsigned long>(n)).lucas - 2;
}

/// Golden-ratio form phi^{2n} + phi^{-2n} cos(2 pi n) - 2, floating point.
inline double tau_wheel_golden(int n) {
  const double phi = (std::sqrt(5.0) + 1.0) / 2.0;
  return std::pow(phi, 2.0 * n) + std::pow(1.0 / phi, 2.0 * n) * std::cos(2.0 * M_PI * n) - 2.0;
}

inline BigInt tau_base(Family family, int n) { return family == Family::Cycle ? BigInt(n) : tau_wheel_base(n); }

/// cycle: n^{S0} m^{S1};  wheel: (L_{2n}-2)^{S0} m^{n S1}
/// with S0 = sum_{j<=i} u_j and S1 = sum_{j<=i} (i-j) u_j, accumulated exactly.
inline FactoredCount tau_closed(const FractalParams& p) {
  p.validate();
  const SizeSequences s = size_sequences(p, static_cast<std::size_t>(p.i));
  BigInt sum_u = 0;
  BigInt weighted = 0;
  for (int j = 0; j <= p.i; ++j) {
    sum_u += s.u[static_cast<std::size_t>(j)];
    weighted += (p.i - j) * s.u[static_cast<std::size_t>(j)];
  }
  FactoredCount out;
  out.multiply(tau_base(p.family, p.n), sum_u);
  out.multiply(BigInt(p.m), p.family == Family::Cycle ? weighted : weighted * p.n);
  return out;
}

namespace detail {

// Greedy minimum-degree elimination order over all vertices except `omit`.
// Fill-reducing, so the sparse Bareiss rows stay short.
inline std::vector<VertexId> min_degree_order(const Graph& g, VertexId omit) {
  const std::size_t nv = g.vertex_count();
  std::vector<std::set<VertexId>> adj(nv);
  for (VertexId v = 0; v < nv; ++v) {
    if (v == omit) continue;
    for (VertexId w : g.neighbors(v)) {
      if (w != omit) adj[v].insert(w);
    }
  }
  std::vector<char> done(nv, 0);
  done[omit] = 1;
  std::set<std::pair<std::size_t, VertexId>> queue;
  for (VertexId v = 0; v < nv; ++v) {
    if (v != omit) queue.emplace(adj[v].size(), v);
  }
  std::vector<VertexId> order;
  order.reserve(nv - 1);
  while (!queue.empty()) {
    const VertexId v = queue.begin()->second;
    queue.erase(queue.begin());
    done[v] = 1;
    order.push_back(v);
    std::vector<VertexId> nbrs(adj[v].begin(), adj[v].end());
    for (VertexId a : nbrs) {
      queue.erase({adj[a].size(), a});
      adj[a].erase(v);
      for (VertexId b : nbrs) {
        if (b != a) adj[a].insert(b);
      }
      queue.emplace(adj[a].size(), a);
    }
    adj[v].clear();
  }
  return order;
}

} // namespace detail

/// Matrix-tree count. `omit` selects the deleted row/column; by default the
/// highest-degree vertex is removed and the rest ordered by minimum degree.
inline BigInt tau_oracle(const Graph& g, std::size_t max_vertices = kDefaultOracleMaxVertices) {
  if (g.vertex_count() > max_vertices) {
    throw SizeCap("matrix-tree oracle limited to " + std::to_string(max_vertices) + " vertices, graph has " +
                  std::to_string(g.vertex_count()));
  }
  if (g.vertex_count() == 0 || !g.is_connected()) throw DisconnectedGraph("spanning trees need a connected graph");
  VertexId omit = 0;
  for (VertexId v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) > g.degree(omit)) omit = v;
  }
  return bareiss_determinant(laplacian_submatrix(g, detail::min_degree_order(g, omit)));
}

/// Matrix-tree count with an explicitly chosen omitted vertex and the
/// natural id order for the remaining rows.
inline BigInt tau_oracle_omitting(const Graph& g, VertexId omit) {
  if (!g.is_connected()) throw DisconnectedGraph("spanning trees need a connected graph");
  return bareiss_determinant(laplacian_minor(g, omit));
}

/// Product of per-block matrix-tree counts. Blocks of the same recognized
/// shape are isomorphic, so their determinant is computed once.
inline BigInt tau_blocks(const Graph& g, std::size_t max_vertices = kDefaultOracleMaxVertices) {
  const std::vector<Block> bs = blocks(g);
  std::map<BlockShape, BigInt> by_shape;
  BigInt product = 1;
  for (const Block& b : bs) {
    if (b.edges.size() == 1) continue; // bridge: one spanning tree
    if (std::holds_alternative<OtherBlock>(b.shape)) {
      product *= tau_oracle(block_subgraph(b), max_vertices);
      continue;
    }
    auto it = by_shape.find(b.shape);
    if (it == by_shape.end()) it = by_shape.emplace(b.shape, tau_oracle(block_subgraph(b), max_vertices)).first;
    product *= it->second;
  }
  return product;
}

} // namespace fractree
