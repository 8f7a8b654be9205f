#pragma once

// Simple undirected graphs on dense vertex ids, the named families used
// throughout the toolkit, and the derived graphs (line graph, blowup).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covering {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class Graph {
 public:
  Graph() = default;

  // Edges are normalized to u < v and sorted. Loops, duplicates and
  // out-of-range endpoints are rejected.
  explicit Graph(int vertex_count, std::vector<Edge> edges = {},
                 std::vector<std::string> labels = {})
      : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                    std::to_string(e.v));
      if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
      e = make_edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("duplicate edge");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
      throw std::invalid_argument("label count does not match vertex count");
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }

  int max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
  }

  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

  // Position of {a,b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const { return labels_.empty() ? std::string{} : labels_.at(v); }

  // Component id per vertex, numbered in order of smallest member.
  std::vector<int> components() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
      if (comp[s] != -1) continue;
      comp[s] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : adj_[x])
          if (comp[y] == -1) {
            comp[y] = next;
            stack.push_back(y);
          }
      }
      ++next;
    }
    return comp;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
};

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) pos.at(keep[i]) = i;
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (pos[e.u] >= 0 && pos[e.v] >= 0) edges.push_back(make_edge(pos[e.u], pos[e.v]));
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex v : keep) labels.push_back(g.label(v));
  return Graph(static_cast<int>(keep.size()), std::move(edges), std::move(labels));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.vertex_count();
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (Vertex v = 0; v < a.vertex_count(); ++v) labels.push_back(a.label(v));
    for (Vertex v = 0; v < b.vertex_count(); ++v) labels.push_back(b.label(v));
  }
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges), std::move(labels));
}

// ---------------------------------------------------------------- walks

// Consecutive vertices must be adjacent in the reference graph.
struct Walk {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  bool closed() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
};

inline void validate_walk(const Graph& g, const Walk& w) {
  for (Vertex v : w.vertices)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("walk vertex out of range: " + std::to_string(v));
  for (std::size_t i = 1; i < w.vertices.size(); ++i)
    if (!g.has_edge(w.vertices[i - 1], w.vertices[i]))
      throw std::invalid_argument("invalid walk step " + std::to_string(w.vertices[i - 1]) + " -> " +
                                  std::to_string(w.vertices[i]));
}

// ------------------------------------------------------------- families
//
// Numbering:
//   path(n)                 0-1-...-(n-1)
//   cycle(n)                path plus {n-1, 0}
//   complete(n)             all pairs
//   complete_bipartite(m,n) A = 0..m-1, B = m..m+n-1, labels "A"/"B"
//   star(n)                 K_{1,n}, center 0, leaves 1..n, labels "A"/"B"
//   petersen                outer cycle 0..4, spokes i-(i+5), inner pentagram 5+i - 5+(i+2)%5
//   spider(legs, len)       center 0, leg l is 1+l*len, ..., (l+1)*len (outwards)
//   hypercube(d)            vertices 0..2^d-1, adjacent iff ids differ in one bit

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace detail

inline Graph path_graph(int n) {
  detail::require(n >= 1, "path needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  detail::require(n >= 3, "cycle length must be at least 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  detail::require(n >= 1, "complete graph needs at least 1 vertex");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

inline Graph complete_bipartite_graph(int m, int n) {
  detail::require(m >= 1 && n >= 1, "complete bipartite graph needs both sides non-empty");
  std::vector<Edge> e;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) e.push_back({a, m + b});
  std::vector<std::string> labels(m, "A");
  labels.resize(m + n, "B");
  return Graph(m + n, e, labels);
}

inline Graph star_graph(int leaves) {
  detail::require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  std::vector<std::string> labels(1, "A");
  labels.resize(leaves + 1, "B");
  return Graph(leaves + 1, e, labels);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back(make_edge(i, (i + 1) % 5));
    e.push_back(make_edge(i, i + 5));
    e.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, e);
}

inline Graph spider_graph(int legs, int leg_length) {
  detail::require(legs >= 1 && leg_length >= 1, "spider needs legs >= 1 and leg_length >= 1");
  std::vector<Edge> e;
  for (int l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (int i = 0; i < leg_length; ++i) {
      Vertex cur = 1 + l * leg_length + i;
      e.push_back(make_edge(prev, cur));
      prev = cur;
    }
  }
  return Graph(1 + legs * leg_length, e);
}

inline Graph hypercube_graph(int d) {
  detail::require(d >= 1 && d <= 16, "hypercube dimension must be in 1..16");
  const int n = 1 << d;
  std::vector<Edge> e;
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < d; ++b)
      if (int y = x ^ (1 << b); x < y) e.push_back({x, y});
  return Graph(n, e);
}

inline Graph generate(std::string_view family, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    detail::require(params.size() == k, std::string(family) + " expects " + std::to_string(k) +
                                            " parameter(s)");
  };
  if (family == "path") return need(1), path_graph(params[0]);
  if (family == "cycle") return need(1), cycle_graph(params[0]);
  if (family == "complete") return need(1), complete_graph(params[0]);
  if (family == "complete_bipartite") return need(2), complete_bipartite_graph(params[0], params[1]);
  if (family == "star") return need(1), star_graph(params[0]);
  if (family == "petersen") return need(0), petersen_graph();
  if (family == "spider") return need(2), spider_graph(params[0], params[1]);
  if (family == "hypercube") return need(1), hypercube_graph(params[0]);
  throw std::invalid_argument("unknown graph family: " + std::string(family));
}

// -------------------------------------------------------- derived graphs

struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of;  // vertex i of graph is edge_of[i] of the source
};

// Vertex i of the line graph is the i-th edge of h in sorted order.
inline LineGraph line_graph(const Graph& h) {
  LineGraph out;
  out.edge_of = h.edges();
  std::vector<Edge> e;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    std::vector<int> inc;
    for (Vertex w : h.neighbors(v)) inc.push_back(h.edge_index(v, w));
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) e.push_back(make_edge(inc[i], inc[j]));
  }
  // in a simple graph two edges share at most one endpoint, so no duplicates arise
  out.graph = Graph(h.edge_count(), std::move(e));
  return out;
}

struct Blowup {
  Graph graph;
  std::vector<Vertex> projection;  // copy -> original
  int copies = 1;

  static Vertex copy_of(Vertex original, int index, int copies) { return original * copies + index; }
};

// j copies per vertex; copy a of u is u*j + a. Copies of one vertex are never adjacent.
inline Blowup blowup(const Graph& g, int j) {
  detail::require(j >= 1, "blowup factor must be positive");
  Blowup out;
  out.copies = j;
  out.projection.resize(static_cast<std::size_t>(g.vertex_count()) * j);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (int a = 0; a < j; ++a) out.projection[v * j + a] = v;
  std::vector<Edge> e;
  for (const auto& ed : g.edges())
    for (int a = 0; a < j; ++a)
      for (int b = 0; b < j; ++b) e.push_back(make_edge(ed.u * j + a, ed.v * j + b));
  out.graph = Graph(g.vertex_count() * j, std::move(e));
  return out;
}

// ---------------------------------------------------------- euler tours

// One closed walk per component with at least one edge (Hierholzer). The
// walk of a component starts at `start` when it lies in that component,
// otherwise at a minimum-degree vertex of the component (smallest id on ties).
inline std::vector<Walk> euler_tours(const Graph& g, std::optional<Vertex> start = std::nullopt) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has odd degree");
  const auto comp = g.components();
  const int comp_count = g.vertex_count() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<Vertex> root(comp_count, -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    Vertex& r = root[comp[v]];
    if (r == -1 || g.degree(v) < g.degree(r)) r = v;
  }
  if (start && *start >= 0 && *start < g.vertex_count() && g.degree(*start) > 0)
    root[comp[*start]] = *start;

  std::vector<char> used(g.edge_count(), 0);
  std::vector<std::size_t> next(g.vertex_count(), 0);
  std::vector<Walk> tours;
  for (Vertex r : root) {
    if (r == -1) continue;
    std::vector<Vertex> stack{r};
    std::vector<Vertex> circuit;
    while (!stack.empty()) {
      Vertex x = stack.back();
      const auto& nb = g.neighbors(x);
      while (next[x] < nb.size() && used[g.edge_index(x, nb[next[x]])]) ++next[x];
      if (next[x] == nb.size()) {
        circuit.push_back(x);
        stack.pop_back();
      } else {
        Vertex y = nb[next[x]];
        used[g.edge_index(x, y)] = 1;
        stack.push_back(y);
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    tours.push_back(Walk{std::move(circuit)});
  }
  return tours;
}

// ------------------------------------------------------------ text format
//
//   # comment
//   n <vertex_count>
//   e <u> <v>
//   label <v> <text>

namespace detail {
inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return trim(pos == std::string::npos ? line : line.substr(0, pos));
}

[[noreturn]] inline void parse_error(int line_no, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}
}  // namespace detail

inline Graph read_graph(std::istream& in) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::vector<std::pair<Vertex, std::string>> labels;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    // labels may contain '#', so they are handled before comment stripping
    std::string line = detail::trim(raw);
    if (line.rfind("label", 0) == 0 && line.size() > 5 && (line[5] == ' ' || line[5] == '\t')) {
      std::istringstream ls(line.substr(5));
      Vertex v;
      if (!(ls >> v)) detail::parse_error(line_no, "bad label line");
      std::string rest;
      std::getline(ls, rest);
      labels.emplace_back(v, detail::trim(rest));
      continue;
    }
    line = detail::strip_comment(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "n") {
      int value;
      if (!(ls >> value) || value < 0) detail::parse_error(line_no, "bad vertex count");
      if (n) detail::parse_error(line_no, "duplicate vertex count");
      n = value;
    } else if (tag == "e") {
      Vertex u, v;
      if (!(ls >> u >> v)) detail::parse_error(line_no, "bad edge line");
      edges.push_back({u, v});
    } else {
      detail::parse_error(line_no, "unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) detail::parse_error(line_no, "trailing input '" + extra + "'");
  }
  if (!n) throw std::invalid_argument("missing 'n <vertex_count>' line");
  std::vector<std::string> label_vec;
  if (!labels.empty()) {
    label_vec.assign(*n, "");
    for (auto& [v, text] : labels) {
      if (v < 0 || v >= *n) throw std::invalid_argument("label for vertex out of range");
      label_vec[v] = std::move(text);
    }
  }
  return Graph(*n, std::move(edges), std::move(label_vec));
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  if (g.has_labels())
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "label " << v << ' ' << g.label(v) << '\n';
}

inline std::string to_string(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

inline Graph graph_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

}  // namespace covering
