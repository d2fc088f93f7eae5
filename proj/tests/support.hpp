#pragma once

// Test-only reference implementations. Deliberately naive and unrelated to
// the library code paths they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "fractree/exact_arith.hpp"
#include "fractree/graph.hpp"

namespace testsupport {

using fractree::BigInt;
using fractree::Edge;
using fractree::Graph;
using fractree::IntegerMatrix;
using fractree::Rational;
using fractree::VertexId;

/// Leibniz formula: sum over permutations of sign * product.
inline BigInt leibniz_determinant(const IntegerMatrix& m) {
  const std::size_t n = m.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    BigInt term = 1;
    for (std::size_t r = 0; r < n && term != 0; ++r) term *= m.at(r, perm[r]);
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

/// Counts spanning trees by trying every (|V|-1)-subset of edges.
inline std::uint64_t brute_force_spanning_trees(const Graph& g) {
  const std::size_t nv = g.vertex_count();
  if (nv <= 1) return 1;
  const std::vector<Edge> edges = g.edges();
  const std::size_t ne = edges.size();
  if (ne < nv - 1) return 0;
  std::vector<bool> pick(ne, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(nv - 1), true);
  std::uint64_t count = 0;
  do {
    UnionFind uf(nv);
    bool acyclic = true;
    for (std::size_t k = 0; k < ne && acyclic; ++k) {
      if (pick[k]) acyclic = uf.unite(edges[k].first, edges[k].second);
    }
    if (acyclic) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

/// Triple loop over neighbour pairs.
inline Rational naive_local_clustering(const Graph& g, VertexId v) {
  const auto& nb = g.neighbors(v);
  const std::size_t k = nb.size();
  if (k < 2) return Rational(0);
  long links = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) links += g.has_edge(nb[a], nb[b]) ? 1 : 0;
  }
  Rational r(2 * links, static_cast<long>(k * (k - 1)));
  r.canonicalize();
  return r;
}

inline Rational naive_average_clustering(const Graph& g) {
  Rational total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) total += naive_local_clustering(g, v);
  total /= static_cast<long>(g.vertex_count());
  total.canonicalize();
  return total;
}

/// Simple graph on `nv` vertices with independent edge probability, not
/// necessarily connected.
inline Graph random_graph(std::mt19937_64& rng, std::size_t nv, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < nv; ++u) {
    for (VertexId v = u + 1; v < nv; ++v) {
      if (keep(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(nv, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, static_cast<VertexId>(n - 1));
  return Graph::from_edges(n, edges);
}

} // namespace testsupport
