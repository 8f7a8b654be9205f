#pragma once

// Exact desk-scale solvers for the global, local and folded covering numbers
// and the packing numbers. Every positive answer carries a certificate.
//
// Three search engines:
//   ColorSearch  - global covers: edges go into at most k bags over the host.
//   CopySearch   - local and folded covers: a single subgraph of a (possibly
//                  heterogeneous) blowup; local additionally asks every
//                  component to be injective under the projection.
//   CycleSearch  - cycle collections, whose partial covers are not members
//                  of the class; pieces are whole cycles or closed walks.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "covering/cover.hpp"
#include "covering/graph.hpp"
#include "covering/templates.hpp"

namespace covering {

enum class SolveStatus { feasible, infeasible, infinite, unknown };

inline std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::infinite: return "infinite";
    case SolveStatus::unknown: return "unknown";
  }
  return "?";
}

struct Budget {
  uint64_t max_nodes = 0;    // 0 means unlimited
  double max_seconds = 0.0;  // 0 means unlimited
};

struct SolveResult {
  SolveStatus status = SolveStatus::unknown;
  std::optional<int> value;
  std::optional<CoverCertificate> certificate;
  uint64_t nodes_explored = 0;
  bool time_limit_hit = false;
};

namespace detail {

using Mask = uint64_t;
inline constexpr int max_universe = 64;

inline Mask bit(int i) { return Mask{1} << i; }
inline int low(Mask m) { return std::countr_zero(m); }

class SearchClock {
 public:
  explicit SearchClock(Budget b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  bool step() {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > budget_.max_nodes) exhausted_ = true;
    if (budget_.max_seconds > 0 && (nodes_ & 1023) == 0 && elapsed() > budget_.max_seconds) exhausted_ = true;
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  uint64_t nodes() const { return nodes_; }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

inline Mask component_of(const Mask* adj, int x) {
  Mask seen = bit(x), frontier = bit(x);
  while (frontier) {
    const int y = low(frontier);
    frontier &= frontier - 1;
    const Mask next = adj[y] & ~seen;
    seen |= next;
    frontier |= next;
  }
  return seen;
}

// An order of comp whose interval completion {xy : x before y, y no later
// than the last required neighbour of x} stays inside `allowed`. Such an order
// exists iff some interval graph H with required <= H <= allowed spans comp.
inline std::optional<std::vector<int>> interval_completion_order(Mask comp, const Mask* req,
                                                                 const std::vector<Mask>& allowed) {
  std::vector<int> order;
  std::unordered_set<Mask> dead;
  std::function<bool(Mask)> place = [&](Mask placed) {
    if (placed == comp) return true;
    if (dead.count(placed)) return false;
    Mask open = 0;
    for (Mask r = placed; r; r &= r - 1)
      if (req[low(r)] & comp & ~placed) open |= bit(low(r));
    for (Mask cand = comp & ~placed; cand; cand &= cand - 1) {
      const int v = low(cand);
      if ((allowed[v] & open) != open) continue;
      order.push_back(v);
      if (place(placed | bit(v))) return true;
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };
  if (!place(0)) return std::nullopt;
  return order;
}

// Edges that complete the component to a member of the class (interval or
// clique); empty for the other classes.
inline std::vector<std::pair<int, int>> completion_edges(ClassTag tag, Mask comp, const Mask* req,
                                                         const std::vector<Mask>& allowed) {
  std::vector<std::pair<int, int>> out;
  if (tag == ClassTag::clique_collection) {
    for (Mask a = comp; a; a &= a - 1)
      for (Mask b = comp & ~((bit(low(a)) << 1) - 1); b; b &= b - 1)
        if (!(req[low(a)] & bit(low(b)))) out.emplace_back(low(a), low(b));
  } else if (tag == ClassTag::interval) {
    const auto order = interval_completion_order(comp, req, allowed);
    if (!order) throw std::logic_error("interval completion vanished");
    std::vector<int> pos(max_universe, -1);
    for (int i = 0; i < static_cast<int>(order->size()); ++i) pos[(*order)[i]] = i;
    for (int i = 0; i < static_cast<int>(order->size()); ++i) {
      const int x = (*order)[i];
      int far = i;
      for (Mask r = req[x]; r; r &= r - 1) far = std::max(far, pos[low(r)]);
      for (int k = i + 1; k <= far; ++k)
        if (!(req[x] & bit((*order)[k]))) out.emplace_back(x, (*order)[k]);
    }
  }
  return out;
}

inline int degree_cap(ClassTag tag) {
  switch (tag) {
    case ClassTag::matching: return 1;
    case ClassTag::linear_forest:
    case ClassTag::cycle_collection: return 2;
    default: return std::numeric_limits<int>::max() / 4;
  }
}

inline bool acyclic_class(ClassTag tag) {
  switch (tag) {
    case ClassTag::linear_forest:
    case ClassTag::star_forest:
    case ClassTag::caterpillar_forest:
    case ClassTag::forest:
    case ClassTag::matching: return true;
    default: return false;
  }
}

// Whether the bag component can still be part of a class member. For the
// subgraph-closed classes this is membership; interval graphs and clique
// collections only need a completion inside `allowed`.
inline bool component_admissible(ClassTag tag, const Mask* adj, Mask comp, const std::vector<Mask>& allowed) {
  const int size = std::popcount(comp);
  int twice = 0;
  for (Mask r = comp; r; r &= r - 1) twice += std::popcount(adj[low(r)]);
  const int edges = twice / 2;
  auto deg = [&](int x) { return std::popcount(adj[x]); };
  switch (tag) {
    case ClassTag::matching:
      return edges * 2 == size || edges == 0;
    case ClassTag::linear_forest:
      for (Mask r = comp; r; r &= r - 1)
        if (deg(low(r)) > 2) return false;
      return edges == size - 1;
    case ClassTag::forest:
      return edges == size - 1;
    case ClassTag::pseudoforest:
      return edges <= size;
    case ClassTag::star_forest: {
      if (edges != size - 1) return false;
      int centres = 0;
      for (Mask r = comp; r; r &= r - 1) centres += deg(low(r)) >= 2;
      return centres <= 1;
    }
    case ClassTag::caterpillar_forest: {
      if (edges != size - 1) return false;
      for (Mask r = comp; r; r &= r - 1) {
        const int x = low(r);
        if (deg(x) < 2) continue;
        int inner = 0;
        for (Mask s = adj[x]; s; s &= s - 1) inner += deg(low(s)) >= 2;
        if (inner > 2) return false;
      }
      return true;
    }
    case ClassTag::clique_collection:
      for (Mask r = comp; r; r &= r - 1)
        if (((allowed[low(r)] | bit(low(r))) & comp) != comp) return false;
      return true;
    case ClassTag::interval:
      return interval_completion_order(comp, adj, allowed).has_value();
    case ClassTag::cycle_collection:
      throw std::logic_error("cycle collections use the piece search");
  }
  return false;
}

// Vertices in BFS order from high-degree roots; edges sorted by the rank of
// their later endpoint so that vertices are finished early.
inline std::vector<int> search_edge_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> rank(n, -1);
  int next = 0;
  while (next < n) {
    Vertex root = -1;
    for (Vertex v = 0; v < n; ++v)
      if (rank[v] < 0 && (root < 0 || g.degree(v) > g.degree(root))) root = v;
    std::vector<Vertex> queue{root};
    rank[root] = next++;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex w : g.neighbors(queue[i]))
        if (rank[w] < 0) {
          rank[w] = next++;
          queue.push_back(w);
        }
  }
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    const Edge& e = g.edges()[i];
    return std::pair{std::max(rank[e.u], rank[e.v]), std::min(rank[e.u], rank[e.v])};
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  return order;
}

inline int nontrivial_components(const Graph& g) {
  const auto comp = g.components();
  std::vector<char> seen(g.vertex_count(), 0);
  int count = 0;
  for (const auto& e : g.edges())
    if (!seen[comp[e.u]]) {
      seen[comp[e.u]] = 1;
      ++count;
    }
  return count;
}

inline int nonisolated_vertices(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) count += g.degree(v) > 0;
  return count;
}

// Builds a template component from bag edges over universe vertices.
inline CoverComponent make_component(ClassTag tag, Mask comp, const Mask* adj, const std::vector<Mask>& allowed,
                                     const std::vector<Vertex>& projection) {
  std::vector<int> local(max_universe, -1);
  CoverComponent out;
  for (Mask r = comp; r; r &= r - 1) {
    local[low(r)] = static_cast<int>(out.map.size());
    out.map.push_back(projection[low(r)]);
  }
  std::vector<Edge> edges;
  for (Mask r = comp; r; r &= r - 1)
    for (Mask s = adj[low(r)] & comp; s; s &= s - 1)
      if (low(r) < low(s)) edges.push_back({local[low(r)], local[low(s)]});
  // completions are computed per connected piece of the bag
  Mask left = comp;
  while (left) {
    const Mask piece = component_of(adj, low(left)) & comp;
    left &= ~piece;
    for (const auto& [a, b] : completion_edges(tag, piece, adj, allowed)) edges.push_back(make_edge(local[a], local[b]));
  }
  out.graph = Graph(static_cast<int>(out.map.size()), std::move(edges));
  return out;
}

// ------------------------------------------------------------ global covers

class ColorSearch {
 public:
  ColorSearch(const Graph& g, ClassTag tag, int k, SearchClock& clock)
      : g_(g), tag_(tag), k_(k), n_(g.vertex_count()), clock_(clock), order_(search_edge_order(g)) {
    if (n_ > max_universe) throw std::invalid_argument("global search supports at most 64 vertices");
    allowed_.assign(n_, 0);
    for (const auto& e : g.edges()) {
      allowed_[e.u] |= bit(e.v);
      allowed_[e.v] |= bit(e.u);
    }
    projection_.resize(n_);
    std::iota(projection_.begin(), projection_.end(), 0);
    adj_.assign(static_cast<std::size_t>(std::max(k_, 0)) * n_, 0);
    bag_edges_.assign(std::max(k_, 0), 0);
    remaining_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) remaining_[v] = g.degree(v);
    cap_ = degree_cap(tag);
    per_bag_edges_ = acyclic_class(tag)    ? nonisolated_vertices(g) - nontrivial_components(g)
                     : tag == ClassTag::pseudoforest ? nonisolated_vertices(g)
                                                     : std::numeric_limits<int>::max() / 4;
  }

  SolveStatus run() {
    if (g_.edge_count() == 0) return SolveStatus::feasible;
    if (k_ <= 0) return SolveStatus::infeasible;
    if (recurse(0)) return SolveStatus::feasible;
    return clock_.exhausted() ? SolveStatus::unknown : SolveStatus::infeasible;
  }

  CoverCertificate certificate() const {
    CoverCertificate cert;
    cert.host_vertex_count = n_;
    for (int b = 0; b < opened_; ++b) {
      const Mask* adj = &adj_[static_cast<std::size_t>(b) * n_];
      Mask verts = 0;
      for (Vertex v = 0; v < n_; ++v)
        if (adj[v]) verts |= bit(v);
      cert.components.push_back(make_component(tag_, verts, adj, allowed_, projection_));
    }
    return cert;
  }

 private:
  Mask* bag(int b) { return &adj_[static_cast<std::size_t>(b) * n_]; }

  bool pruned() const {
    const int rest = g_.edge_count() - placed_;
    if (per_bag_edges_ < std::numeric_limits<int>::max() / 4) {
      long room = 0;
      for (int b = 0; b < k_; ++b) room += per_bag_edges_ - (b < opened_ ? bag_edges_[b] : 0);
      if (room < rest) return true;
    }
    if (cap_ < 3) {
      for (Vertex v = 0; v < n_; ++v) {
        if (!remaining_[v]) continue;
        int room = (k_ - opened_) * cap_;
        for (int b = 0; b < opened_; ++b) room += cap_ - std::popcount(adj_[static_cast<std::size_t>(b) * n_ + v]);
        if (room < remaining_[v]) return true;
      }
    }
    return false;
  }

  bool recurse(int idx) {
    if (!clock_.step()) return false;
    if (idx == g_.edge_count()) return true;
    if (pruned()) return false;
    const Edge e = g_.edges()[order_[idx]];
    const int limit = std::min(opened_ + 1, k_);
    for (int b = 0; b < limit; ++b) {
      Mask* adj = bag(b);
      if (std::popcount(adj[e.u]) >= cap_ || std::popcount(adj[e.v]) >= cap_) continue;
      const bool fresh = b == opened_;
      adj[e.u] |= bit(e.v);
      adj[e.v] |= bit(e.u);
      ++bag_edges_[b];
      --remaining_[e.u];
      --remaining_[e.v];
      ++placed_;
      if (fresh) ++opened_;
      if (component_admissible(tag_, adj, component_of(adj, e.u), allowed_) && recurse(idx + 1)) return true;
      if (fresh) --opened_;
      --placed_;
      ++remaining_[e.u];
      ++remaining_[e.v];
      --bag_edges_[b];
      adj[e.u] &= ~bit(e.v);
      adj[e.v] &= ~bit(e.u);
      if (clock_.exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  ClassTag tag_;
  int k_, n_;
  SearchClock& clock_;
  std::vector<int> order_;
  std::vector<Mask> allowed_, adj_;
  std::vector<Vertex> projection_;
  std::vector<int> bag_edges_, remaining_;
  int cap_ = 0, per_bag_edges_ = 0, opened_ = 0, placed_ = 0;
};

// ------------------------------------------------- local and folded covers

// bound[v] interchangeable copies of v; copy c of v is universe vertex base[v] + c.
struct CopyLayout {
  std::vector<int> base, bound;
  std::vector<Vertex> projection;
  std::vector<Mask> allowed;
  int size = 0;
};

inline CopyLayout make_layout(const Graph& g, const std::vector<int>& bounds) {
  CopyLayout l;
  const int n = g.vertex_count();
  l.base.resize(n);
  l.bound.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    l.base[v] = l.size;
    l.bound[v] = std::max(0, std::min(bounds[v], g.degree(v)));
    l.size += l.bound[v];
  }
  if (l.size > max_universe)
    throw std::invalid_argument("copy universe has " + std::to_string(l.size) + " vertices; the limit is 64");
  l.projection.resize(l.size);
  for (Vertex v = 0; v < n; ++v)
    for (int c = 0; c < l.bound[v]; ++c) l.projection[l.base[v] + c] = v;
  l.allowed.assign(l.size, 0);
  for (const auto& e : g.edges())
    for (int a = 0; a < l.bound[e.u]; ++a)
      for (int b = 0; b < l.bound[e.v]; ++b) {
        l.allowed[l.base[e.u] + a] |= bit(l.base[e.v] + b);
        l.allowed[l.base[e.v] + b] |= bit(l.base[e.u] + a);
      }
  return l;
}

class CopySearch {
 public:
  CopySearch(const Graph& g, ClassTag tag, CopyLayout layout, bool injective, SearchClock& clock)
      : g_(g), tag_(tag), l_(std::move(layout)), injective_(injective), clock_(clock),
        order_(search_edge_order(g)) {
    const int n = g.vertex_count();
    adj_.assign(l_.size, 0);
    used_.assign(n, 0);
    remaining_.resize(n);
    for (Vertex v = 0; v < n; ++v) remaining_[v] = g.degree(v);
    cap_ = degree_cap(tag);
    host_components_ = nontrivial_components(g);
  }

  SolveStatus run() {
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (g_.degree(v) > 0 && l_.bound[v] == 0) return SolveStatus::infeasible;
    if (recurse(0)) return SolveStatus::feasible;
    return clock_.exhausted() ? SolveStatus::unknown : SolveStatus::infeasible;
  }

  CoverCertificate certificate() const {
    CoverCertificate cert;
    cert.host_vertex_count = g_.vertex_count();
    Mask left = 0;
    for (int x = 0; x < l_.size; ++x)
      if (adj_[x]) left |= bit(x);
    while (left) {
      const Mask comp = component_of(adj_.data(), low(left));
      left &= ~comp;
      cert.components.push_back(make_component(tag_, comp, adj_.data(), l_.allowed, l_.projection));
    }
    return cert;
  }

 private:
  bool pruned() const {
    const int n = g_.vertex_count();
    if (cap_ < 3) {
      for (Vertex v = 0; v < n; ++v) {
        if (!remaining_[v]) continue;
        int room = (l_.bound[v] - used_[v]) * cap_;
        for (int c = 0; c < used_[v]; ++c) room += cap_ - std::popcount(adj_[l_.base[v] + c]);
        if (room < remaining_[v]) return true;
      }
    }
    const bool acyclic = acyclic_class(tag_);
    if (acyclic || tag_ == ClassTag::pseudoforest) {
      // every copy still to be opened needs a remaining edge at its vertex
      int reachable = used_total_;
      for (Vertex v = 0; v < n; ++v) reachable += std::min(l_.bound[v] - used_[v], remaining_[v]);
      const int m = g_.edge_count();
      if (acyclic ? reachable < m + host_components_ : reachable < m) return true;
    }
    return false;
  }

  bool admissible(int x) const {
    const Mask comp = component_of(adj_.data(), x);
    if (injective_) {
      Mask seen = 0;
      for (Mask r = comp; r; r &= r - 1) {
        const Vertex h = l_.projection[low(r)];
        if (seen & bit(h)) return false;
        seen |= bit(h);
      }
    }
    return component_admissible(tag_, adj_.data(), comp, l_.allowed);
  }

  bool recurse(int idx) {
    if (!clock_.step()) return false;
    if (idx == g_.edge_count()) return true;
    if (pruned()) return false;
    const Edge e = g_.edges()[order_[idx]];
    const int top_u = std::min(used_[e.u], l_.bound[e.u] - 1);
    const int top_v = std::min(used_[e.v], l_.bound[e.v] - 1);
    for (int a = 0; a <= top_u; ++a) {
      const int x = l_.base[e.u] + a;
      if (std::popcount(adj_[x]) >= cap_) continue;
      for (int b = 0; b <= top_v; ++b) {
        const int y = l_.base[e.v] + b;
        if (std::popcount(adj_[y]) >= cap_) continue;
        const bool fresh_x = a == used_[e.u], fresh_y = b == used_[e.v];
        adj_[x] |= bit(y);
        adj_[y] |= bit(x);
        used_[e.u] += fresh_x;
        used_[e.v] += fresh_y;
        used_total_ += fresh_x + fresh_y;
        --remaining_[e.u];
        --remaining_[e.v];
        if (admissible(x) && recurse(idx + 1)) return true;
        ++remaining_[e.u];
        ++remaining_[e.v];
        used_total_ -= fresh_x + fresh_y;
        used_[e.u] -= fresh_x;
        used_[e.v] -= fresh_y;
        adj_[x] &= ~bit(y);
        adj_[y] &= ~bit(x);
        if (clock_.exhausted()) return false;
      }
    }
    return false;
  }

  const Graph& g_;
  ClassTag tag_;
  CopyLayout l_;
  bool injective_;
  SearchClock& clock_;
  std::vector<int> order_;
  std::vector<Mask> adj_;
  std::vector<int> used_, remaining_;
  int used_total_ = 0, cap_ = 0, host_components_ = 0;
};

// ---------------------------------------------------------- cycle covers

inline bool is_bridge(const Graph& g, const Edge& e) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{e.u};
  seen[e.u] = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (seen[y] || (x == e.u && y == e.v)) continue;
      if (y == e.v) return false;
      seen[y] = 1;
      stack.push_back(y);
    }
  }
  return true;
}

inline bool has_bridge(const Graph& g) {
  for (const auto& e : g.edges())
    if (is_bridge(g, e)) return true;
  return false;
}

// Global: simple cycles, each with one of k colours, equal colours vertex-disjoint.
// Local: simple cycles, every vertex on at most `limit` of them.
// Each step covers the first uncovered edge with a cycle through it.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, CoverMode mode, int limit, SearchClock& clock)
      : g_(g), mode_(mode), limit_(limit), clock_(clock), order_(search_edge_order(g)) {
    const int n = g.vertex_count();
    if (n > max_universe) throw std::invalid_argument("cycle search supports at most 64 vertices");
    cover_.assign(g.edge_count(), 0);
    uncovered_at_.resize(n);
    for (Vertex v = 0; v < n; ++v) uncovered_at_[v] = g.degree(v);
    uncovered_ = g.edge_count();
    on_cycles_.assign(n, 0);
    colour_mask_.assign(std::max(limit, 0), 0);
  }

  SolveStatus run() {
    if (recurse()) return SolveStatus::feasible;
    return clock_.exhausted() ? SolveStatus::unknown : SolveStatus::infeasible;
  }

  CoverCertificate certificate() const {
    CoverCertificate cert;
    cert.host_vertex_count = g_.vertex_count();
    if (mode_ == CoverMode::local) {
      for (const auto& p : pieces_) cert.components.push_back({cycle_graph(static_cast<int>(p.size())), p});
      return cert;
    }
    for (int c = 0; c < opened_; ++c) {
      CoverComponent comp;
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (colour_[i] != c) continue;
        const int off = static_cast<int>(comp.map.size());
        const int len = static_cast<int>(pieces_[i].size());
        for (int p = 0; p < len; ++p) {
          comp.map.push_back(pieces_[i][p]);
          edges.push_back(make_edge(off + p, off + (p + 1) % len));
        }
      }
      comp.graph = Graph(static_cast<int>(comp.map.size()), std::move(edges));
      cert.components.push_back(std::move(comp));
    }
    return cert;
  }

 private:
  // a cycle through v covers two of its edges
  bool starved() const {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (!uncovered_at_[v]) continue;
      int slots = 0;
      if (mode_ == CoverMode::global) {
        const int usable = std::min(opened_ + 1, limit_);
        for (int c = 0; c < usable; ++c) slots += !(colour_mask_[c] & bit(v));
        slots += limit_ - usable;
      } else {
        slots = limit_ - on_cycles_[v];
      }
      if (2 * slots < uncovered_at_[v]) return true;
    }
    return false;
  }

  void apply(const std::vector<Vertex>& cycle, int delta) {
    const int len = static_cast<int>(cycle.size());
    for (int p = 0; p < len; ++p) {
      const Vertex a = cycle[p], b = cycle[(p + 1) % len];
      const int idx = g_.edge_index(a, b);
      const bool flips = delta > 0 ? cover_[idx]++ == 0 : --cover_[idx] == 0;
      if (!flips) continue;
      uncovered_ -= delta;
      uncovered_at_[a] -= delta;
      uncovered_at_[b] -= delta;
    }
  }

  bool commit(const std::vector<Vertex>& cycle) {
    if (mode_ == CoverMode::global) {
      Mask m = 0;
      for (Vertex v : cycle) m |= bit(v);
      const int usable = std::min(opened_ + 1, limit_);
      for (int c = 0; c < usable; ++c) {
        if (colour_mask_[c] & m) continue;
        const bool fresh = c == opened_;
        colour_mask_[c] |= m;
        opened_ += fresh;
        pieces_.push_back(cycle);
        colour_.push_back(c);
        apply(cycle, +1);
        if (recurse()) return true;
        apply(cycle, -1);
        colour_.pop_back();
        pieces_.pop_back();
        opened_ -= fresh;
        colour_mask_[c] &= ~m;
        if (clock_.exhausted()) return false;
      }
      return false;
    }
    for (Vertex v : cycle) ++on_cycles_[v];
    pieces_.push_back(cycle);
    apply(cycle, +1);
    if (recurse()) return true;
    apply(cycle, -1);
    pieces_.pop_back();
    for (Vertex v : cycle) --on_cycles_[v];
    return false;
  }

  bool usable(Vertex v, Mask path) const {
    if (path & bit(v)) return false;
    if (mode_ == CoverMode::local) return on_cycles_[v] < limit_;
    const Mask m = path | bit(v);
    const int open = std::min(opened_ + 1, limit_);
    for (int c = 0; c < open; ++c)
      if (!(colour_mask_[c] & m)) return true;
    return false;
  }

  // simple paths start -> ... -> current, closed by the edge current-start
  bool extend(std::vector<Vertex>& cycle, Mask path) {
    if (!clock_.step()) return false;
    const Vertex cur = cycle.back(), start = cycle.front();
    if (cycle.size() >= 3 && g_.has_edge(cur, start) && commit(cycle)) return true;
    if (clock_.exhausted()) return false;
    for (Vertex y : g_.neighbors(cur)) {
      if (y == start || !usable(y, path)) continue;
      cycle.push_back(y);
      const bool done = extend(cycle, path | bit(y));
      cycle.pop_back();
      if (done) return true;
      if (clock_.exhausted()) return false;
    }
    return false;
  }

  bool recurse() {
    if (!clock_.step()) return false;
    if (uncovered_ == 0) return true;
    if (starved()) return false;
    int first = -1;
    for (int i : order_)
      if (!cover_[i]) {
        first = i;
        break;
      }
    const Edge e = g_.edges()[first];
    if (!usable(e.u, 0) || !usable(e.v, bit(e.u))) return false;
    std::vector<Vertex> cycle{e.u, e.v};
    return extend(cycle, bit(e.u) | bit(e.v));
  }

  const Graph& g_;
  CoverMode mode_;
  int limit_;
  SearchClock& clock_;
  std::vector<int> order_;
  std::vector<int> cover_, uncovered_at_, on_cycles_;
  int uncovered_ = 0;
  std::vector<Mask> colour_mask_;
  int opened_ = 0;
  std::vector<std::vector<Vertex>> pieces_;
  std::vector<int> colour_;
};

// Folded cycle covers. A disjoint union of cycles in the blowup projects to
// an edge multiplicity mu >= 1 with every mu-degree even and at most twice the
// copy bound; conversely, pairing the mu-incidences at each vertex yields the
// copies and the cycles, and a pairing without digons (two parallel copies
// paired at both ends) exists unless some edge has mu = 2 and mu-degree 2 at
// both ends. The search runs over mu.
class FoldedCycleSearch {
 public:
  FoldedCycleSearch(const Graph& g, std::vector<int> bounds, SearchClock& clock)
      : g_(g), bounds_(std::move(bounds)), clock_(clock), order_(search_edge_order(g)) {
    const int n = g.vertex_count();
    mu_.assign(g.edge_count(), 0);
    load_.assign(n, 0);
    remaining_.resize(n);
    for (Vertex v = 0; v < n; ++v) remaining_[v] = g.degree(v);
  }

  SolveStatus run() {
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (g_.degree(v) > 2 * bounds_[v]) return SolveStatus::infeasible;
    if (recurse(0)) return SolveStatus::feasible;
    return clock_.exhausted() ? SolveStatus::unknown : SolveStatus::infeasible;
  }

  CoverCertificate certificate() const {
    // half-edge h = 2 * (copy id) + side; copies of edge i are consecutive
    std::vector<int> first_copy(g_.edge_count() + 1, 0);
    for (int i = 0; i < g_.edge_count(); ++i) first_copy[i + 1] = first_copy[i] + mu_[i];
    const int copies = first_copy.back();
    std::vector<int> edge_of(copies);
    for (int i = 0; i < g_.edge_count(); ++i)
      for (int c = first_copy[i]; c < first_copy[i + 1]; ++c) edge_of[c] = i;
    auto vertex_at = [&](int h) {
      const Edge& e = g_.edges()[edge_of[h / 2]];
      return h % 2 == 0 ? e.u : e.v;
    };
    // pair half-edges at every vertex, spreading copies of one edge apart
    std::vector<int> mate(2 * copies, -1);
    std::vector<std::vector<int>> at(g_.vertex_count());
    for (int h = 0; h < 2 * copies; ++h) at[vertex_at(h)].push_back(h);
    for (auto& hs : at) {
      std::stable_sort(hs.begin(), hs.end(), [&](int a, int b) { return edge_of[a / 2] < edge_of[b / 2]; });
      const std::size_t half = hs.size() / 2;
      for (std::size_t i = 0; i < half; ++i) {
        mate[hs[i]] = hs[i + half];
        mate[hs[i + half]] = hs[i];
      }
    }
    // a digon is a copy pair mated at both ends; swap it with another pair
    for (bool changed = true; changed;) {
      changed = false;
      for (int c = 0; c < copies && !changed; ++c) {
        const int h = 2 * c, other = mate[h] / 2;
        if (other == c || mate[h + 1] / 2 != other) continue;
        for (int end = 0; end < 2 && !changed; ++end) {
          const int a = h + end, b = mate[a];
          for (int x : at[vertex_at(a)]) {
            if (x == a || x == b) continue;
            const int y = mate[x];
            mate[a] = x;
            mate[x] = a;
            mate[b] = y;
            mate[y] = b;
            changed = true;
            break;
          }
        }
        if (!changed) throw std::logic_error("digon cannot be resolved");
      }
    }
    CoverCertificate cert;
    cert.host_vertex_count = g_.vertex_count();
    std::vector<char> done(copies, 0);
    for (int c = 0; c < copies; ++c) {
      if (done[c]) continue;
      std::vector<Vertex> cycle;
      // enter each copy at half-edge h, leave at h ^ 1, continue via the mate
      for (int h = 2 * c; !done[h / 2]; h = mate[h ^ 1]) {
        done[h / 2] = 1;
        cycle.push_back(vertex_at(h ^ 1));
      }
      cert.components.push_back({cycle_graph(static_cast<int>(cycle.size())), cycle});
    }
    return cert;
  }

 private:
  bool recurse(int idx) {
    if (!clock_.step()) return false;
    if (idx == g_.edge_count()) return true;
    const int i = order_[idx];
    const Edge e = g_.edges()[i];
    --remaining_[e.u];
    --remaining_[e.v];
    // every later edge at a vertex needs multiplicity at least one
    const int top = std::min(2 * bounds_[e.u] - load_[e.u] - remaining_[e.u],
                             2 * bounds_[e.v] - load_[e.v] - remaining_[e.v]);
    bool found = false;
    for (int m = 1; m <= top && !found; ++m) {
      load_[e.u] += m;
      load_[e.v] += m;
      mu_[i] = m;
      bool ok = true;
      for (Vertex x : {e.u, e.v})
        if (remaining_[x] == 0 && load_[x] % 2 != 0) ok = false;
      // an isolated doubled edge only lifts to a digon
      if (ok && m == 2 && remaining_[e.u] == 0 && remaining_[e.v] == 0 && load_[e.u] == 2 && load_[e.v] == 2)
        ok = false;
      if (ok) found = recurse(idx + 1);
      if (!found) {
        load_[e.u] -= m;
        load_[e.v] -= m;
        mu_[i] = 0;
      }
      if (clock_.exhausted()) break;
    }
    if (!found) {
      ++remaining_[e.u];
      ++remaining_[e.v];
    }
    return found;
  }

  const Graph& g_;
  std::vector<int> bounds_;
  SearchClock& clock_;
  std::vector<int> order_;
  std::vector<int> mu_, load_, remaining_;
};

// ------------------------------------------------------------- packings

// Brute force. Every template component carries at least one edge: with
// isolated template vertices the local and folded values would be unbounded.
class PackingSearch {
 public:
  PackingSearch(const Graph& g, ClassTag tag, CoverMode mode, SearchClock& clock)
      : g_(g), tag_(tag), mode_(mode), clock_(clock), order_(search_edge_order(g)) {
    const int n = g.vertex_count();
    remaining_.resize(n);
    for (Vertex v = 0; v < n; ++v) remaining_[v] = g.degree(v);
    if (mode == CoverMode::folded) {
      std::vector<int> bounds(n);
      for (Vertex v = 0; v < n; ++v) bounds[v] = g.degree(v);
      layout_ = make_layout(g, bounds);
      adj_.assign(layout_.size, 0);
      used_.assign(n, 0);
    } else {
      on_bags_.assign(n, 0);
    }
  }

  // value is -1 when the search stopped before anything was evaluated
  int run() {
    if (mode_ == CoverMode::folded) folded(0);
    else grouped(0);
    return best_;
  }

  CoverCertificate certificate() const { return best_cert_; }

 private:
  int upper_bound(int idx) const {
    if (mode_ == CoverMode::global) return static_cast<int>(placed_) + (g_.edge_count() - idx);
    int ub = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      ub = std::min(ub, (mode_ == CoverMode::local ? on_bags_[v] : used_[v]) + remaining_[v]);
    return g_.vertex_count() == 0 ? 0 : ub;
  }

  static Graph bag_graph(const std::vector<Edge>& edges, std::vector<Vertex>& map) {
    map.clear();
    for (const auto& e : edges) {
      map.push_back(e.u);
      map.push_back(e.v);
    }
    std::sort(map.begin(), map.end());
    map.erase(std::unique(map.begin(), map.end()), map.end());
    std::vector<Edge> local;
    for (const auto& e : edges) {
      const int a = static_cast<int>(std::lower_bound(map.begin(), map.end(), e.u) - map.begin());
      const int b = static_cast<int>(std::lower_bound(map.begin(), map.end(), e.v) - map.begin());
      local.push_back(make_edge(a, b));
    }
    return Graph(static_cast<int>(map.size()), std::move(local));
  }

  void evaluate_grouped() {
    CoverCertificate cert;
    cert.host_vertex_count = g_.vertex_count();
    int components = 0;
    for (const auto& bag : bags_) {
      CoverComponent c;
      c.graph = bag_graph(bag, c.map);
      if (!recognize(tag_, c.graph)) return;
      const auto comp = c.graph.components();
      components += c.graph.vertex_count() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
      cert.components.push_back(std::move(c));
    }
    int value = components;
    if (mode_ == CoverMode::local) {
      value = g_.vertex_count() == 0 ? 0 : *std::min_element(on_bags_.begin(), on_bags_.end());
    }
    if (value > best_) {
      best_ = value;
      best_cert_ = std::move(cert);
    }
  }

  void grouped(int idx) {
    if (!clock_.step()) return;
    if (upper_bound(idx) <= best_) return;
    if (idx == g_.edge_count()) {
      evaluate_grouped();
      return;
    }
    const Edge e = g_.edges()[order_[idx]];
    --remaining_[e.u];
    --remaining_[e.v];
    const int bags = static_cast<int>(bags_.size());
    for (int b = 0; b <= bags && !clock_.exhausted(); ++b) {
      if (b == bags) bags_.emplace_back();
      auto& bag = bags_[b];
      auto contains = [&](Vertex v) {
        return std::any_of(bag.begin(), bag.end(), [&](const Edge& f) { return f.u == v || f.v == v; });
      };
      const bool new_u = !contains(e.u), new_v = !contains(e.v);
      on_bags_[e.u] += new_u;
      on_bags_[e.v] += new_v;
      bag.push_back(e);
      ++placed_;
      grouped(idx + 1);
      --placed_;
      bags_[b].pop_back();
      on_bags_[e.u] -= new_u;
      on_bags_[e.v] -= new_v;
      if (b == bags) bags_.pop_back();
    }
    if (!clock_.exhausted()) grouped(idx + 1);  // edge left unused
    ++remaining_[e.u];
    ++remaining_[e.v];
  }

  void folded(int idx) {
    if (!clock_.step()) return;
    if (upper_bound(idx) <= best_) return;
    if (idx == g_.edge_count()) {
      std::vector<Edge> edges;
      std::vector<Vertex> map;
      for (int x = 0; x < layout_.size; ++x)
        for (Mask r = adj_[x]; r; r &= r - 1)
          if (x < low(r)) edges.push_back({x, low(r)});
      CoverComponent c;
      c.graph = bag_graph(edges, map);
      if (!recognize(tag_, c.graph)) return;
      for (Vertex x : map) c.map.push_back(layout_.projection[x]);
      const int value = g_.vertex_count() == 0 ? 0 : *std::min_element(used_.begin(), used_.end());
      if (value > best_) {
        best_ = value;
        best_cert_ = CoverCertificate{g_.vertex_count(), {}};
        if (c.graph.vertex_count() > 0) best_cert_.components.push_back(std::move(c));
      }
      return;
    }
    const Edge e = g_.edges()[order_[idx]];
    --remaining_[e.u];
    --remaining_[e.v];
    const int top_u = std::min(used_[e.u], layout_.bound[e.u] - 1);
    const int top_v = std::min(used_[e.v], layout_.bound[e.v] - 1);
    for (int a = 0; a <= top_u && !clock_.exhausted(); ++a)
      for (int b = 0; b <= top_v && !clock_.exhausted(); ++b) {
        const int x = layout_.base[e.u] + a, y = layout_.base[e.v] + b;
        const bool fresh_x = a == used_[e.u], fresh_y = b == used_[e.v];
        adj_[x] |= bit(y);
        adj_[y] |= bit(x);
        used_[e.u] += fresh_x;
        used_[e.v] += fresh_y;
        folded(idx + 1);
        used_[e.u] -= fresh_x;
        used_[e.v] -= fresh_y;
        adj_[x] &= ~bit(y);
        adj_[y] &= ~bit(x);
      }
    if (!clock_.exhausted()) folded(idx + 1);
    ++remaining_[e.u];
    ++remaining_[e.v];
  }

  const Graph& g_;
  ClassTag tag_;
  CoverMode mode_;
  SearchClock& clock_;
  std::vector<int> order_;
  std::vector<int> remaining_, on_bags_, used_;
  std::vector<std::vector<Edge>> bags_;
  long placed_ = 0;
  CopyLayout layout_;
  std::vector<Mask> adj_;
  int best_ = -1;
  CoverCertificate best_cert_;
};

struct Decision {
  SolveStatus status;
  std::optional<CoverCertificate> certificate;
};

inline Decision decide(const Graph& g, ClassTag tag, CoverMode mode, const std::vector<int>& bounds,
                       SearchClock& clock) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) return {SolveStatus::feasible, CoverCertificate{n, {}}};
  const int param = bounds.empty() ? 0 : bounds[0];
  if (tag == ClassTag::cycle_collection) {
    if (mode == CoverMode::folded) {
      FoldedCycleSearch search(g, bounds, clock);
      const auto st = search.run();
      if (st == SolveStatus::feasible) return {st, search.certificate()};
      return {st, std::nullopt};
    }
    if (has_bridge(g)) return {SolveStatus::infinite, std::nullopt};
    CycleSearch search(g, mode, param, clock);
    const auto st = search.run();
    if (st == SolveStatus::feasible) return {st, search.certificate()};
    return {st, std::nullopt};
  }
  if (mode == CoverMode::global) {
    ColorSearch search(g, tag, param, clock);
    const auto st = search.run();
    if (st == SolveStatus::feasible) return {st, search.certificate()};
    return {st, std::nullopt};
  }
  CopySearch search(g, tag, make_layout(g, bounds), mode == CoverMode::local, clock);
  const auto st = search.run();
  if (st == SolveStatus::feasible) return {st, search.certificate()};
  return {st, std::nullopt};
}

inline SolveResult to_result(Decision d, std::optional<int> value, const SearchClock& clock) {
  SolveResult r;
  r.status = d.status;
  if (d.status == SolveStatus::feasible) r.value = value;
  r.certificate = std::move(d.certificate);
  r.nodes_explored = clock.nodes();
  r.time_limit_hit = clock.exhausted();
  return r;
}

inline void require_non_negative(int k, const char* what) {
  if (k < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
}

}  // namespace detail

// Is there a cover by at most k template graphs?
inline SolveResult decide_global(const Graph& g, ClassTag cls, int k, Budget budget = {}) {
  detail::require_non_negative(k, "k");
  detail::SearchClock clock(budget);
  return detail::to_result(detail::decide(g, cls, CoverMode::global, {k}, clock), k, clock);
}

// Is there an injective cover with every vertex in at most j template graphs?
inline SolveResult decide_local(const Graph& g, ClassTag cls, int j, Budget budget = {}) {
  detail::require_non_negative(j, "j");
  detail::SearchClock clock(budget);
  return detail::to_result(
      detail::decide(g, cls, CoverMode::local, std::vector<int>(std::max(1, g.vertex_count()), j), clock), j,
      clock);
}

// Folded cover with |phi^-1(v)| <= bounds[v]; a subgraph of the heterogeneous blowup.
inline SolveResult decide_constrained_folded(const Graph& g, ClassTag cls, const std::vector<int>& bounds,
                                             Budget budget = {}) {
  if (static_cast<int>(bounds.size()) != g.vertex_count())
    throw std::invalid_argument("bounds must give a value for every vertex");
  for (int b : bounds) detail::require_non_negative(b, "bound");
  detail::SearchClock clock(budget);
  const int value = bounds.empty() ? 0 : *std::max_element(bounds.begin(), bounds.end());
  return detail::to_result(detail::decide(g, cls, CoverMode::folded, bounds, clock), value, clock);
}

inline SolveResult decide_folded(const Graph& g, ClassTag cls, int j, Budget budget = {}) {
  if (j < 1) throw std::invalid_argument("j must be at least 1");
  return decide_constrained_folded(g, cls, std::vector<int>(g.vertex_count(), j), budget);
}

inline SolveResult decide(const Graph& g, ClassTag cls, CoverMode mode, int k, Budget budget = {}) {
  switch (mode) {
    case CoverMode::global: return decide_global(g, cls, k, budget);
    case CoverMode::local: return decide_local(g, cls, k, budget);
    case CoverMode::folded: return decide_folded(g, cls, k, budget);
  }
  throw std::invalid_argument("unknown mode");
}

// A lower bound valid in all three modes: a matching uses one edge at each
// vertex copy, paths and cycles use two.
inline int covering_lower_bound(const Graph& g, ClassTag cls) {
  if (g.edge_count() == 0) return 0;
  switch (cls) {
    case ClassTag::matching: return g.max_degree();
    case ClassTag::linear_forest:
    case ClassTag::cycle_collection: return (g.max_degree() + 1) / 2;
    default: return 1;
  }
}

// Iterative deepening from covering_lower_bound; the budget covers all rounds.
inline SolveResult compute_number(const Graph& g, ClassTag cls, CoverMode mode, Budget budget = {}) {
  detail::SearchClock clock(budget);
  const int n = g.vertex_count();
  if (g.edge_count() == 0) {
    return detail::to_result({SolveStatus::feasible, CoverCertificate{n, {}}}, 0, clock);
  }
  const int upper = mode == CoverMode::folded
                        ? (cls == ClassTag::cycle_collection ? 2 * g.max_degree() : g.max_degree())
                        : g.edge_count();
  for (int k = covering_lower_bound(g, cls); k <= upper; ++k) {
    if (mode == CoverMode::folded && k == 0) continue;
    auto d = detail::decide(g, cls, mode, std::vector<int>(n, k), clock);
    if (d.status == SolveStatus::infeasible) continue;
    return detail::to_result(std::move(d), k, clock);
  }
  throw std::logic_error("no cover found below the trivial upper bound");
}

// Packing numbers by brute force (desk scale only).
inline SolveResult compute_packing(const Graph& g, ClassTag cls, CoverMode mode, Budget budget = {}) {
  detail::SearchClock clock(budget);
  detail::PackingSearch search(g, cls, mode, clock);
  const int best = search.run();
  SolveResult r;
  r.nodes_explored = clock.nodes();
  r.time_limit_hit = clock.exhausted();
  if (clock.exhausted()) {
    r.status = SolveStatus::unknown;
    return r;
  }
  r.status = SolveStatus::feasible;
  r.value = std::max(best, 0);
  r.certificate = search.certificate();
  if (r.certificate->host_vertex_count != g.vertex_count()) r.certificate = CoverCertificate{g.vertex_count(), {}};
  return r;
}

}  // namespace covering
