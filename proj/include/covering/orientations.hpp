#pragma once

// Degree-constrained orientations by max flow, and the density parameters
// built on them: pseudoarboricity, arboricity, degeneracy and the local star
// arboricity with a star-cover certificate.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "covering/cover.hpp"
#include "covering/graph.hpp"

namespace covering {

// Integral max flow (Dinic).
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : adj_(nodes) {}

  int add_arc(int from, int to, int cap) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
    return static_cast<int>(arcs_.size()) - 2;
  }

  int64_t run(int s, int t) {
    int64_t total = 0;
    while (bfs(s, t)) {
      it_.assign(adj_.size(), 0);
      while (int64_t f = dfs(s, t, std::numeric_limits<int>::max())) total += f;
    }
    return total;
  }

  int flow_on(int arc) const { return arcs_[arc ^ 1].cap; }

  // Nodes reachable from s in the residual network (valid after run()).
  std::vector<char> reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int id : adj_[x])
        if (arcs_[id].cap > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = 1;
          stack.push_back(arcs_[id].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  bool bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int id : adj_[x])
        if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
          level_[arcs_[id].to] = level_[x] + 1;
          q.push(arcs_[id].to);
        }
    }
    return level_[t] >= 0;
  }

  int dfs(int x, int t, int pushed) {
    if (x == t) return pushed;
    for (auto& i = it_[x]; i < adj_[x].size(); ++i) {
      const int id = adj_[x][i];
      Arc& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[x] + 1) continue;
      if (int f = dfs(a.to, t, std::min(pushed, a.cap))) {
        a.cap -= f;
        arcs_[id ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

// head[i] is the head of the i-th edge of the host; the other endpoint is the tail.
struct Orientation {
  std::vector<Vertex> head;

  Vertex tail(const Graph& g, int edge) const {
    const Edge& e = g.edges()[edge];
    return head[edge] == e.u ? e.v : e.u;
  }

  std::vector<int> out_degrees(const Graph& g) const {
    std::vector<int> out(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) ++out[tail(g, i)];
    return out;
  }

  std::vector<int> in_degrees(const Graph& g) const {
    std::vector<int> in(g.vertex_count(), 0);
    for (Vertex h : head) ++in[h];
    return in;
  }

  int max_out_degree(const Graph& g) const {
    auto out = out_degrees(g);
    return out.empty() ? 0 : *std::max_element(out.begin(), out.end());
  }
};

enum class DensityKind { arboricity, pseudoarboricity };

struct DensityWitness {
  std::vector<Vertex> subset;
  int induced_edges = 0;
  DensityKind kind = DensityKind::pseudoarboricity;

  // ceil(|E[S]| / |S|) or ceil(|E[S]| / (|S|-1))
  int bound() const {
    const int denom = static_cast<int>(subset.size()) - (kind == DensityKind::arboricity ? 1 : 0);
    if (denom <= 0 || induced_edges == 0) return 0;
    return (induced_edges + denom - 1) / denom;
  }
};

inline int count_induced_edges(const Graph& g, const std::vector<Vertex>& subset) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : subset) in.at(v) = 1;
  int m = 0;
  for (const auto& e : g.edges()) m += in[e.u] && in[e.v];
  return m;
}

struct OrientResult {
  std::optional<Orientation> orientation;
  // when infeasible: a vertex set S with sum_{v in S} alpha(v) < |E[S]|
  std::vector<Vertex> violating_set;
};

// Edge-node network: source -> edge (1), edge -> endpoint (1), vertex -> sink (alpha).
// A unit of flow from edge e into v makes v the tail of e.
inline OrientResult orient_bounded(const Graph& g, const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != g.vertex_count())
    throw std::invalid_argument("alpha must give a bound for every vertex");
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("alpha must be non-negative");
  const int m = g.edge_count(), n = g.vertex_count();
  const int source = 0, sink = m + n + 1;
  MaxFlow flow(m + n + 2);
  std::vector<std::pair<int, int>> endpoint_arcs(m);
  for (int i = 0; i < m; ++i) {
    flow.add_arc(source, 1 + i, 1);
    endpoint_arcs[i].first = flow.add_arc(1 + i, 1 + m + g.edges()[i].u, 1);
    endpoint_arcs[i].second = flow.add_arc(1 + i, 1 + m + g.edges()[i].v, 1);
  }
  for (Vertex v = 0; v < n; ++v) flow.add_arc(1 + m + v, sink, alpha[v]);
  OrientResult res;
  if (flow.run(source, sink) == m) {
    Orientation o;
    o.head.resize(m);
    for (int i = 0; i < m; ++i) {
      const Edge& e = g.edges()[i];
      o.head[i] = flow.flow_on(endpoint_arcs[i].first) > 0 ? e.v : e.u;
    }
    res.orientation = std::move(o);
  } else {
    const auto seen = flow.reachable(source);
    for (Vertex v = 0; v < n; ++v)
      if (seen[1 + m + v]) res.violating_set.push_back(v);
  }
  return res;
}

struct PseudoarboricityResult {
  int value = 0;
  Orientation orientation;
  DensityWitness witness;
};

inline PseudoarboricityResult pseudoarboricity(const Graph& g) {
  PseudoarboricityResult res;
  const int n = g.vertex_count(), m = g.edge_count();
  if (m == 0) {
    res.orientation.head.clear();
    return res;
  }
  auto feasible = [&](int p) { return orient_bounded(g, std::vector<int>(n, p)); };
  int lo = (m + n - 1) / n, hi = g.max_degree();
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (feasible(mid).orientation) hi = mid;
    else lo = mid + 1;
  }
  res.value = lo;
  res.orientation = *feasible(lo).orientation;
  res.witness.kind = DensityKind::pseudoarboricity;
  res.witness.subset = feasible(lo - 1).violating_set;
  res.witness.induced_edges = count_induced_edges(g, res.witness.subset);
  return res;
}

inline constexpr int arboricity_vertex_limit = 20;

struct ArboricityResult {
  int value = 0;
  DensityWitness witness;
};

// Nash-Williams formula by subset enumeration; ties keep the smallest subset mask.
inline ArboricityResult arboricity(const Graph& g) {
  const int n = g.vertex_count();
  if (n > arboricity_vertex_limit)
    throw std::invalid_argument("arboricity: graph exceeds " + std::to_string(arboricity_vertex_limit) +
                                " vertices");
  std::vector<uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  ArboricityResult res;
  res.witness.kind = DensityKind::arboricity;
  uint32_t best_mask = 0;
  int best_edges = 0;
  for (uint32_t s = 1; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size < 2) continue;
    int twice = 0;
    for (uint32_t r = s; r; r &= r - 1) twice += __builtin_popcount(adj[__builtin_ctz(r)] & s);
    const int edges = twice / 2;
    const int val = (edges + size - 2) / (size - 1);
    if (val > res.value) {
      res.value = val;
      best_mask = s;
      best_edges = edges;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (best_mask >> v & 1u) res.witness.subset.push_back(v);
  res.witness.induced_edges = best_edges;
  return res;
}

struct DegeneracyResult {
  int value = 0;
  std::vector<Vertex> order;  // removal order; orienting each edge towards the later vertex
                              // gives out-degree <= value
};

inline DegeneracyResult degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  DegeneracyResult res;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (best == -1 || deg[v] < deg[best])) best = v;
    res.value = std::max(res.value, deg[best]);
    gone[best] = 1;
    res.order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!gone[w]) --deg[w];
  }
  return res;
}

// Star cover from an orientation: one star of incoming edges at every vertex
// with positive in-degree, centred at that vertex.
inline CoverCertificate stars_of_orientation(const Graph& g, const Orientation& o) {
  CoverCertificate cert;
  cert.host_vertex_count = g.vertex_count();
  std::vector<std::vector<Vertex>> leaves(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i) leaves[o.head[i]].push_back(o.tail(g, i));
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    if (leaves[c].empty()) continue;
    CoverComponent comp;
    comp.graph = star_graph(static_cast<int>(leaves[c].size()));
    comp.map.push_back(c);
    comp.map.insert(comp.map.end(), leaves[c].begin(), leaves[c].end());
    cert.components.push_back(std::move(comp));
  }
  return cert;
}

struct LocalStarArboricityResult {
  int value = 0;
  int pseudoarboricity = 0;
  Orientation orientation;
  CoverCertificate certificate;
};

inline LocalStarArboricityResult local_star_arboricity(const Graph& g) {
  LocalStarArboricityResult res;
  const auto p = pseudoarboricity(g);
  res.pseudoarboricity = p.value;
  if (p.value == 0) {
    res.certificate.host_vertex_count = g.vertex_count();
    return res;
  }
  std::vector<int> alpha(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    alpha[v] = g.degree(v) == p.value ? p.value : p.value - 1;
  auto tight = orient_bounded(g, alpha);
  if (tight.orientation) {
    res.value = p.value;
    res.orientation = *tight.orientation;
  } else {
    res.value = p.value + 1;
    res.orientation = p.orientation;
  }
  res.certificate = stars_of_orientation(g, res.orientation);
  return res;
}

// ------------------------------------------------------------ text format
//   a <tail> <head>

inline void write_orientation(std::ostream& out, const Graph& g, const Orientation& o) {
  for (int i = 0; i < g.edge_count(); ++i) out << "a " << o.tail(g, i) << ' ' << o.head[i] << '\n';
}

inline Orientation read_orientation(std::istream& in, const Graph& g) {
  Orientation o;
  o.head.assign(g.edge_count(), -1);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    Vertex t, h;
    if (!(ls >> tag >> t >> h) || tag != "a") detail::parse_error(line_no, "expected 'a <tail> <head>'");
    const int idx = g.edge_index(t, h);
    if (idx < 0) detail::parse_error(line_no, "arc is not an edge of the graph");
    if (o.head[idx] != -1) detail::parse_error(line_no, "edge oriented twice");
    o.head[idx] = h;
  }
  for (Vertex h : o.head)
    if (h == -1) throw std::invalid_argument("orientation misses an edge");
  return o;
}

}  // namespace covering
