#pragma once

// Template classes: membership tests and the closure flags that decide
// which general inequalities between covering numbers apply.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covering/graph.hpp"

namespace covering {

enum class ClassTag {
  linear_forest,
  star_forest,
  caterpillar_forest,
  interval,
  clique_collection,
  cycle_collection,
  matching,
  forest,
  pseudoforest,
};

inline constexpr std::array<ClassTag, 9> all_classes = {
    ClassTag::linear_forest, ClassTag::star_forest,      ClassTag::caterpillar_forest,
    ClassTag::interval,      ClassTag::clique_collection, ClassTag::cycle_collection,
    ClassTag::matching,      ClassTag::forest,            ClassTag::pseudoforest,
};

inline std::string_view class_name(ClassTag t) {
  switch (t) {
    case ClassTag::linear_forest: return "linear_forest";
    case ClassTag::star_forest: return "star_forest";
    case ClassTag::caterpillar_forest: return "caterpillar_forest";
    case ClassTag::interval: return "interval";
    case ClassTag::clique_collection: return "clique_collection";
    case ClassTag::cycle_collection: return "cycle_collection";
    case ClassTag::matching: return "matching";
    case ClassTag::forest: return "forest";
    case ClassTag::pseudoforest: return "pseudoforest";
  }
  return "?";
}

inline ClassTag parse_class(std::string_view name) {
  for (ClassTag t : all_classes)
    if (class_name(t) == name) return t;
  throw std::invalid_argument("unknown template class: " + std::string(name));
}

struct ClosureFlags {
  bool closed_under_subgraphs = false;
  bool closed_under_disjoint_union = true;
  bool closed_under_merging_within_components = false;
};

struct TemplateClass {
  ClassTag tag = ClassTag::linear_forest;
  ClosureFlags flags;
};

// Static flag table. Interval graphs and clique collections are only closed
// under induced subgraphs; deleting a chord of a diamond yields C4, deleting
// an edge of a triangle yields P3. Matchings are closed under merging because
// a component is a single edge and merging its ends leaves one vertex.
inline ClosureFlags class_properties(ClassTag t) {
  ClosureFlags f;
  switch (t) {
    case ClassTag::linear_forest:
    case ClassTag::caterpillar_forest:
    case ClassTag::forest:
    case ClassTag::pseudoforest:
      f.closed_under_subgraphs = true;
      break;
    case ClassTag::star_forest:
    case ClassTag::matching:
      f.closed_under_subgraphs = true;
      f.closed_under_merging_within_components = true;
      break;
    case ClassTag::clique_collection:
      f.closed_under_merging_within_components = true;
      break;
    case ClassTag::interval:
    case ClassTag::cycle_collection:
      break;
  }
  return f;
}

inline TemplateClass make_class(ClassTag t) { return {t, class_properties(t)}; }

// --------------------------------------------------------------- helpers

// Identify vertex b with vertex a, dropping the loop and parallel edges that
// arise; vertex b is removed and ids above b shift down by one.
inline Graph merge_vertices(const Graph& g, Vertex a, Vertex b) {
  if (a == b) return g;
  auto relabel = [&](Vertex x) {
    if (x == b) x = a;
    return x > b ? x - 1 : x;
  };
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    Vertex x = relabel(e.u), y = relabel(e.v);
    if (x != y) edges.push_back(make_edge(x, y));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(g.vertex_count() - 1, std::move(edges));
}

namespace detail {

inline bool is_forest(const Graph& g) {
  const auto comp = g.components();
  std::vector<int> vcount(g.vertex_count(), 0), ecount(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++vcount[comp[v]];
  for (const auto& e : g.edges()) ++ecount[comp[e.u]];
  for (Vertex c = 0; c < g.vertex_count(); ++c)
    if (vcount[c] > 0 && ecount[c] >= vcount[c]) return false;
  return true;
}

inline bool is_pseudoforest(const Graph& g) {
  const auto comp = g.components();
  std::vector<int> vcount(g.vertex_count(), 0), ecount(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++vcount[comp[v]];
  for (const auto& e : g.edges()) ++ecount[comp[e.u]];
  for (Vertex c = 0; c < g.vertex_count(); ++c)
    if (ecount[c] > vcount[c]) return false;
  return true;
}

inline bool is_caterpillar_forest(const Graph& g) {
  if (!is_forest(g)) return false;
  // in a tree the non-leaves induce a subtree; it is a path iff no non-leaf
  // has three non-leaf neighbours
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) <= 1) continue;
    int inner = 0;
    for (Vertex w : g.neighbors(v)) inner += g.degree(w) > 1;
    if (inner > 2) return false;
  }
  return true;
}

// Maximum cardinality search; returns vertices in visit order.
inline std::vector<Vertex> mcs_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<char> done(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && (best == -1 || weight[v] > weight[best])) best = v;
    done[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!done[w]) ++weight[w];
  }
  return order;
}

inline bool is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  auto visit = mcs_order(g);
  // elimination order is the reverse visit order
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[visit[i]] = n - 1 - i;
  for (Vertex v = 0; v < n; ++v) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && (parent == -1 || pos[w] < pos[parent])) parent = w;
    if (parent == -1) continue;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && w != parent && !g.has_edge(w, parent)) return false;
  }
  return true;
}

inline bool has_asteroidal_triple(const Graph& g) {
  const int n = g.vertex_count();
  // comp[z][x]: component of x in G - N[z], or -1 when x is in N[z]
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (Vertex z = 0; z < n; ++z) {
    std::vector<char> blocked(n, 0);
    blocked[z] = 1;
    for (Vertex w : g.neighbors(z)) blocked[w] = 1;
    int label = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (blocked[s] || comp[z][s] != -1) continue;
      std::vector<Vertex> stack{s};
      comp[z][s] = label;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
          if (!blocked[y] && comp[z][y] == -1) {
            comp[z][y] = label;
            stack.push_back(y);
          }
      }
      ++label;
    }
  }
  auto joined = [&](Vertex avoid, Vertex a, Vertex b) {
    return comp[avoid][a] != -1 && comp[avoid][a] == comp[avoid][b];
  };
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z)
        if (joined(z, x, y) && joined(x, y, z) && joined(y, x, z)) return true;
  return false;
}

}  // namespace detail

inline bool is_interval_graph(const Graph& g) {
  return detail::is_chordal(g) && !detail::has_asteroidal_triple(g);
}

inline bool recognize(ClassTag t, const Graph& g) {
  switch (t) {
    case ClassTag::linear_forest:
      return g.max_degree() <= 2 && detail::is_forest(g);
    case ClassTag::star_forest: {
      if (!detail::is_forest(g)) return false;
      for (const auto& e : g.edges())
        if (g.degree(e.u) > 1 && g.degree(e.v) > 1) return false;
      return true;
    }
    case ClassTag::caterpillar_forest:
      return detail::is_caterpillar_forest(g);
    case ClassTag::interval:
      return is_interval_graph(g);
    case ClassTag::clique_collection: {
      const auto comp = g.components();
      std::vector<int> size(g.vertex_count(), 0);
      for (Vertex v = 0; v < g.vertex_count(); ++v) ++size[comp[v]];
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != size[comp[v]] - 1) return false;
      return true;
    }
    case ClassTag::cycle_collection:
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
      return true;
    case ClassTag::matching:
      return g.max_degree() <= 1;
    case ClassTag::forest:
      return detail::is_forest(g);
    case ClassTag::pseudoforest:
      return detail::is_pseudoforest(g);
  }
  return false;
}

inline bool recognize(const TemplateClass& c, const Graph& g) { return recognize(c.tag, g); }

// Witnesses for every false entry of the flag table: a member of the class
// and the operation that leaves it.
struct MergeCounterexample {
  Graph member;
  Vertex a = 0, b = 0;
};

struct SubgraphCounterexample {
  Graph member;
  Edge removed;
};

inline std::optional<MergeCounterexample> merge_counterexample(ClassTag t) {
  switch (t) {
    case ClassTag::linear_forest:
    case ClassTag::caterpillar_forest:
    case ClassTag::forest:
      return MergeCounterexample{path_graph(4), 0, 3};  // closes a triangle
    case ClassTag::interval:
      return MergeCounterexample{path_graph(5), 0, 4};  // closes a C4
    case ClassTag::cycle_collection:
      return MergeCounterexample{cycle_graph(4), 0, 2};  // collapses to a path
    case ClassTag::pseudoforest:
      // triangle 0-1-2 with tail 2-3-4; merging 0 and 4 creates a second cycle
      return MergeCounterexample{Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}), 0, 4};
    default:
      return std::nullopt;
  }
}

inline std::optional<SubgraphCounterexample> subgraph_counterexample(ClassTag t) {
  switch (t) {
    case ClassTag::interval:
      return SubgraphCounterexample{Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}), {0, 2}};
    case ClassTag::clique_collection:
      return SubgraphCounterexample{complete_graph(3), {0, 2}};
    case ClassTag::cycle_collection:
      return SubgraphCounterexample{cycle_graph(3), {0, 2}};
    default:
      return std::nullopt;
  }
}

inline Graph remove_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges;
  const Edge target = make_edge(e.u, e.v);
  for (const auto& x : g.edges())
    if (x != target) edges.push_back(x);
  return Graph(g.vertex_count(), std::move(edges));
}

inline Graph remove_vertex(const Graph& g, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (x != v) keep.push_back(x);
  return induced_subgraph(g, keep);
}

}  // namespace covering
