#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "gknet/error.hpp"

namespace gknet {

/// Binary adjacency with self-loops: a_ij = 1 iff (i,j) is an edge or i == j.
/// Duplicate and reversed edge entries are tolerated.
inline std::vector<double> build_adjacency(
    int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw InvalidInputError("build_adjacency: need at least one node");
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = 1.0;
  for (const auto& [i, j] : edges) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw InvalidInputError("build_adjacency: edge index out of range (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ") for n=" + std::to_string(n));
    a[static_cast<std::size_t>(i) * n + j] = 1.0;
    a[static_cast<std::size_t>(j) * n + i] = 1.0;
  }
  return a;
}

/// Symmetric normalization D^{-1/2} A D^{-1/2} with the self-loops already
/// inside A, so every degree is >= 1.
inline std::vector<double> normalize_adjacency(const std::vector<double>& a,
                                               int n) {
  if (n < 1 || a.size() != static_cast<std::size_t>(n) * n)
    throw ShapeError("normalize_adjacency: adjacency must be n*n");
  std::vector<double> dinv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double d = 0.0;
    for (int j = 0; j < n; ++j) d += a[static_cast<std::size_t>(i) * n + j];
    if (!(d > 0.0))
      throw InvalidInputError("normalize_adjacency: zero-degree node " +
                              std::to_string(i));
    dinv[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(d);
  }
  std::vector<double> out(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[static_cast<std::size_t>(i) * n + j] =
          a[static_cast<std::size_t>(i) * n + j] * dinv[static_cast<std::size_t>(i)] *
          dinv[static_cast<std::size_t>(j)];
  return out;
}

/// Keypoint graph: node count, undirected edge list and both adjacency forms.
/// Immutable after build(); shared freely between threads.
struct KeypointGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized (i<j), sorted, unique
  std::vector<double> adjacency;           // n*n, binary with self-loops
  std::vector<double> normalized;          // D^{-1/2} A D^{-1/2}

  static KeypointGraph build(int n,
                             const std::vector<std::pair<int, int>>& edges) {
    KeypointGraph g;
    g.n = n;
    g.adjacency = build_adjacency(n, edges);
    g.normalized = normalize_adjacency(g.adjacency, n);
    for (const auto& [i, j] : edges) {
      if (i == j) continue;
      g.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
  }
};

}  // namespace gknet
