#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>

#include "fractree/error.hpp"
#include "fractree/exact_arith.hpp"
#include "fractree/graph.hpp"
#include "fractree/sequences.hpp"

namespace fractree {

/// 2 E_v / (k (k - 1)) with E_v the number of edges among the neighbours of
/// v. Degree <= 1 gives 0.
inline Rational local_clustering(const Graph& g, VertexId v) {
  check_vertex(g, v);
  const auto& nbrs = g.neighbors(v);
  const std::size_t k = nbrs.size();
  if (k < 2) return Rational(0);
  std::size_t links = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const auto& na = g.neighbors(nbrs[a]);
    // Count neighbours of nbrs[a] that are also neighbours of v and larger.
    auto it_a = std::upper_bound(na.begin(), na.end(), nbrs[a]);
    auto it_b = nbrs.begin() + static_cast<std::ptrdiff_t>(a) + 1;
    while (it_a != na.end() && it_b != nbrs.end()) {
      if (*it_a < *it_b) {
        ++it_a;
      } else if (*it_b < *it_a) {
        ++it_b;
      } else {
        ++links;
        ++it_a;
        ++it_b;
      }
    }
  }
  return make_rational(BigInt(static_cast<unsigned long>(2 * links)), BigInt(static_cast<unsigned long>(k * (k - 1))));
}

struct ClusteringReport {
  std::map<Rational, std::size_t> classes; // coefficient -> vertex count
  Rational average{0};
};

/// Mean of the local coefficients over all vertices (zeros included).
inline ClusteringReport average_clustering(const Graph& g) {
  ClusteringReport report;
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++report.classes[local_clustering(g, v)];
  Rational total = 0;
  for (const auto& [coefficient, count] : report.classes) total += coefficient * static_cast<unsigned long>(count);
  if (g.vertex_count() > 0) total /= static_cast<unsigned long>(g.vertex_count());
  total.canonicalize();
  report.average = total;
  return report;
}

namespace detail {

inline Rational inv_choose2(long a) { return make_rational(BigInt(1), choose2(BigInt(a))); }

} // namespace detail

/// Cycle family, n = 3, stage i >= 1:
///   (3/C(2(i+1),2) + sum_{j=1}^{i-1} (u_{j+1}-u_j)/C(2(i-j+1),2) + 2 u_i) / u_{i+1}
inline Rational cycle_clustering_formula(const FractalParams& p) {
  const SizeSequences s = size_sequences(p, static_cast<std::size_t>(p.i) + 1);
  const auto& u = s.u;
  const long i = p.i;
  Rational total = Rational(3) * detail::inv_choose2(2 * (i + 1));
  for (long j = 1; j <= i - 1; ++j) {
    total += Rational(u[j + 1] - u[j]) * detail::inv_choose2(2 * (i - j + 1));
  }
  total += Rational(2 * u[i]);
  return total / Rational(u[i + 1]);
}

/// Wheel W_n average: (2n/3 + 2/(n-1)) / (n+1).
inline Rational wheel_base_clustering_formula(int n) {
  return (make_rational(BigInt(2 * n), BigInt(3)) + make_rational(BigInt(2), BigInt(n - 1))) / Rational(n + 1);
}

/// Wheel family at stage 1:
///   (2(n-1)u1/C(3,2) + n u1/C(n,2) + 2n/C(6,2) + 2/C(n+3,2)) / u2
inline Rational wheel_stage1_clustering_formula(const FractalParams& p) {
  const SizeSequences s = size_sequences(p, 2);
  const long n = p.n;
  Rational total = Rational(2 * (n - 1) * s.u[1]) * detail::inv_choose2(3);
  total += Rational(n * s.u[1]) * detail::inv_choose2(n);
  total += Rational(2 * n) * detail::inv_choose2(6);
  total += Rational(2) * detail::inv_choose2(n + 3);
  return total / Rational(s.u[2]);
}

/// Wheel family at stage i >= 1: (s1 + s2 + s3 + s4 + s5) / u_{i+1} with
///   s1 = 2n / C(3(i+1),2)
///   s2 = n u_i / C(n,2)
///   s3 = sum_{j=0}^{i-1} 2(n-1) u_{i-j} / C(3(j+1),2)
///   s4 = sum_{j=1}^{i}   2 u_{i-j} / C(3j+n,2)
///   s5 = sum_{j=1}^{i-1} 2(m-1) e_{i-j} / C(3j+2,2)
inline Rational wheel_clustering_formula(const FractalParams& p) {
  const SizeSequences s = size_sequences(p, static_cast<std::size_t>(p.i) + 1);
  const auto& u = s.u;
  const auto& e = s.e;
  const long n = p.n;
  const long m = p.m;
  const long i = p.i;
  Rational total = Rational(2 * n) * detail::inv_choose2(3 * (i + 1));
  total += Rational(n * u[i]) * detail::inv_choose2(n);
  for (long j = 0; j <= i - 1; ++j) total += Rational(2 * (n - 1) * u[i - j]) * detail::inv_choose2(3 * (j + 1));
  for (long j = 1; j <= i; ++j) total += Rational(2 * u[i - j]) * detail::inv_choose2(3 * j + n);
  for (long j = 1; j <= i - 1; ++j) total += Rational(2 * (m - 1) * e[i - j]) * detail::inv_choose2(3 * j + 2);
  return total / Rational(u[i + 1]);
}

/// The applicable closed form:
///   cycle n >= 4: 0; cycle n = 3: 1 at i = 0 (a triangle), else the n = 3 formula
///   wheel: i = 0 base formula, i = 1 stage-1 formula, i >= 2 general formula
inline Rational clustering_closed(const FractalParams& p) {
  p.validate();
  if (p.family == Family::Cycle) {
    if (p.n >= 4) return Rational(0);
    if (p.i == 0) return Rational(1);
    return cycle_clustering_formula(p);
  }
  if (p.i == 0) return wheel_base_clustering_formula(p.n);
  if (p.i == 1) return wheel_stage1_clustering_formula(p);
  return wheel_clustering_formula(p);
}

/// Predicted degree histogram from vertex lineages. A vertex born at stage s
/// has age a = i - s in G^(i); every stage adds one attached copy to it.
///   cycle: every lineage starts at degree 2 and gains 2 per stage
///   wheel: path interiors 2 + 3a, rims 3 + 3a, hubs n + 3a
/// Births at stage s >= 1: (m-1) e_s path interiors, (n-1) u_s fresh rims
/// (cycle: fresh cycle vertices), u_s fresh hubs (wheel only).
inline std::map<std::size_t, BigInt> degree_census_predicted(const FractalParams& p) {
  p.validate();
  const SizeSequences s = size_sequences(p, static_cast<std::size_t>(p.i) + 1);
  std::map<std::size_t, BigInt> hist;
  const auto n = static_cast<std::size_t>(p.n);
  const auto age_of = [&](int stage) { return static_cast<std::size_t>(p.i - stage); };
  auto add = [&](std::size_t degree, const BigInt& count) {
    if (count != 0) hist[degree] += count;
  };
  if (p.family == Family::Cycle) {
    add(2 + 2 * age_of(0), BigInt(p.n));
    for (int st = 1; st <= p.i; ++st) {
      add(2 + 2 * age_of(st), (p.m - 1) * s.e[st] + (p.n - 1) * s.u[st]);
    }
    return hist;
  }
  add(3 + 3 * age_of(0), BigInt(p.n));
  add(n + 3 * age_of(0), BigInt(1));
  for (int st = 1; st <= p.i; ++st) {
    add(2 + 3 * age_of(st), (p.m - 1) * s.e[st]);
    add(3 + 3 * age_of(st), (p.n - 1) * s.u[st]);
    add(n + 3 * age_of(st), s.u[st]);
  }
  return hist;
}

} // namespace fractree
