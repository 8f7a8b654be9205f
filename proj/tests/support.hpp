#pragma once

// Shared fixtures for the test binaries: random and exhaustive graph corpora
// and small brute-force oracles that do not share code with the library.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "covering/graph.hpp"

namespace covering::testing {

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) e.push_back({a, b});
  return Graph(n, e);
}

// Every labelled graph on n vertices (n <= 6).
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
  std::vector<Graph> out;
  const uint32_t total = 1u << pairs.size();
  out.reserve(total);
  for (uint32_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) e.push_back(pairs[i]);
    out.emplace_back(n, e);
  }
  return out;
}

// Olariu: G is an interval graph iff some vertex order has
// u < v < w and uw in E implying uv in E.
inline bool interval_by_orderings(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; ok && a < n; ++a)
      for (int c = a + 2; ok && c < n; ++c)
        if (g.has_edge(order[a], order[c]))
          for (int b = a + 1; ok && b < c; ++b)
            if (!g.has_edge(order[a], order[b])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace covering::testing
