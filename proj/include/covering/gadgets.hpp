#pragma once

// Lower-bound gadgets for caterpillar covers. Each vertex carries a label
// such as "b12" whose leading letters name its role.

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covering/constructions.hpp"
#include "covering/graph.hpp"

namespace covering {

enum class GadgetKind { t_deg, i_tw, t_stw, fca };

inline std::string_view gadget_name(GadgetKind g) {
  switch (g) {
    case GadgetKind::t_deg: return "t_deg";
    case GadgetKind::i_tw: return "i_tw";
    case GadgetKind::t_stw: return "t_stw";
    case GadgetKind::fca: return "fca";
  }
  return "?";
}

inline GadgetKind parse_gadget(std::string_view s) {
  for (GadgetKind g : {GadgetKind::t_deg, GadgetKind::i_tw, GadgetKind::t_stw, GadgetKind::fca})
    if (gadget_name(g) == s) return g;
  throw std::invalid_argument("unknown gadget: " + std::string(s));
}

struct Gadget {
  Graph graph;
  std::optional<ConstructionSequence> sequence;
  std::vector<std::string> notes;
};

inline std::string role_of(std::string_view label) {
  std::size_t i = 0;
  while (i < label.size() && !std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
  return std::string(label.substr(0, i));
}

inline constexpr int default_gadget_vertex_limit = 20000;

namespace detail {

// Vertices and edges collected by name, then frozen into a labelled graph.
class GadgetBuilder {
 public:
  Vertex add(const std::string& label) {
    labels_.push_back(label);
    return static_cast<Vertex>(labels_.size()) - 1;
  }
  void join(Vertex a, Vertex b) { edges_.push_back({a, b}); }
  void join_all(const std::vector<Vertex>& as, const std::vector<Vertex>& bs) {
    for (Vertex a : as)
      for (Vertex b : bs) join(a, b);
  }
  int size() const { return static_cast<int>(labels_.size()); }
  Graph build() const { return Graph(size(), edges_, labels_); }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// A stacking step whose kept edges are exactly those present in g.
inline StackStep step_in(const Graph& g, Vertex v, std::vector<Vertex> base) {
  StackStep s{v, std::move(base), 0};
  for (std::size_t i = 0; i < s.base.size(); ++i)
    if (g.has_edge(v, s.base[i])) s.keep |= std::uint64_t{1} << i;
  return s;
}

inline std::uint64_t init_mask_in(const Graph& g, const std::vector<Vertex>& init) {
  std::uint64_t m = 0;
  const int size = static_cast<int>(init.size());
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (g.has_edge(init[i], init[j])) m |= std::uint64_t{1} << init_pair_index(i, j, size);
  return m;
}

// K_{k,n} with n just above (k-1) C(2k-1,k-1) + 2k(2k-1), plus a
// K_{k,(k-1)^2+1} on every k-subset S of B.
inline Gadget gadget_t_deg(int k, int limit) {
  require(k >= 1, "t_deg needs k >= 1");
  const std::int64_t n = (k - 1) * binomial(2 * k - 1, k - 1) + 2 * k * (2 * k - 1) + 1;
  const std::int64_t per = static_cast<std::int64_t>(k - 1) * (k - 1) + 1;
  const std::int64_t total = k + n + binomial(static_cast<int>(n), k) * per;
  if (total > limit)
    throw std::invalid_argument("t_deg(" + std::to_string(k) + ") has " + std::to_string(total) + " vertices, above the limit " +
                                std::to_string(limit));
  GadgetBuilder b;
  std::vector<Vertex> a, big;
  for (int i = 1; i <= k; ++i) a.push_back(b.add("a" + std::to_string(i)));
  for (int i = 1; i <= n; ++i) big.push_back(b.add("b" + std::to_string(i)));
  b.join_all(a, big);
  // k-subsets of B in lexicographic order
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  int subset = 0;
  while (true) {
    ++subset;
    std::vector<Vertex> s;
    for (int i : pick) s.push_back(big[i]);
    std::vector<Vertex> bs;
    for (int j = 1; j <= per; ++j) bs.push_back(b.add("x" + std::to_string(subset) + "_" + std::to_string(j)));
    b.join_all(s, bs);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {b.build(), std::nullopt, {}};
}

// K_{k,n} with n = 2k^2+1 and a private leaf at every vertex of B.
inline Gadget gadget_i_tw(int k, int limit) {
  require(k >= 1, "i_tw needs k >= 1");
  const int n = 2 * k * k + 1;
  if (k + 2 * n > limit) throw std::invalid_argument("i_tw above the vertex limit");
  GadgetBuilder b;
  std::vector<Vertex> a, big;
  for (int i = 1; i <= k; ++i) a.push_back(b.add("a" + std::to_string(i)));
  for (int i = 1; i <= n; ++i) big.push_back(b.add("b" + std::to_string(i)));
  b.join_all(a, big);
  for (int i = 1; i <= n; ++i) b.join(big[i - 1], b.add("p" + std::to_string(i)));
  return {b.build(), std::nullopt, {}};
}

inline Gadget gadget_t_stw(int k, int limit) {
  require(k >= 3, "t_stw needs k >= 3");
  const int m1 = 2 * (2 * k * k - 2 * k + 1);
  const int half = m1 / 2;
  const int m2 = (k - 2) * (k - 2) + 1;
  const std::int64_t total = (k - 1) + m1 + static_cast<std::int64_t>(half) * 5 * ((k - 1) + m2);
  if (total > limit) throw std::invalid_argument("t_stw above the vertex limit");
  GadgetBuilder g;
  std::vector<Vertex> a, u(half + 1), v(half + 1);
  for (int i = 1; i <= k - 1; ++i) a.push_back(g.add("a" + std::to_string(i)));
  for (int i = 1; i <= half; ++i) {
    u[i] = g.add("u" + std::to_string(i));
    v[i] = g.add("v" + std::to_string(i));
    g.join_all(a, {u[i], v[i]});
  }
  // b[i][j][l] for j in 1..5, l in 1..k-1; c[i][j][l] for l in 1..m2
  std::vector<std::vector<std::vector<Vertex>>> bv(half + 1, std::vector<std::vector<Vertex>>(6)), cv = bv;
  for (int i = 1; i <= half; ++i)
    for (int j = 1; j <= 5; ++j) {
      bv[i][j].push_back(-1);
      for (int l = 1; l <= k - 1; ++l) {
        const Vertex x = g.add("b" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(l));
        bv[i][j].push_back(x);
        g.join_all({u[i], v[i]}, {x});
      }
      cv[i][j].push_back(-1);
      for (int l = 1; l <= m2; ++l) {
        const Vertex x = g.add("c" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(l));
        cv[i][j].push_back(x);
        g.join_all({bv[i][j].begin() + 1, bv[i][j].end()}, {x});
      }
    }
  const Graph graph = g.build();

  ConstructionSequence seq;
  seq.width = k;
  seq.init = a;
  seq.init.push_back(u[1]);
  seq.init.push_back(v[1]);
  seq.init_keep = init_mask_in(graph, seq.init);
  auto add = [&](Vertex x, std::vector<Vertex> base) { seq.steps.push_back(step_in(graph, x, std::move(base))); };
  for (int i = 2; i <= half; ++i) {
    auto base = a;
    base.push_back(v[i - 1]);
    add(u[i], base);
    base.back() = u[i];
    add(v[i], base);
  }
  for (int i = 1; i <= half; ++i) {
    for (int l = 1; l <= k - 1; ++l) {
      std::vector<Vertex> base(a.begin(), a.begin() + (k - l - 1));
      base.push_back(u[i]);
      base.push_back(v[i]);
      for (int p = 1; p < l; ++p) base.push_back(bv[i][1][p]);
      add(bv[i][1][l], base);
    }
    for (int j = 2; j <= 5; ++j)
      for (int l = 1; l <= k - 1; ++l) {
        std::vector<Vertex> base{u[i], v[i]};
        for (int p = l + 1; p <= k - 1; ++p) base.push_back(bv[i][j - 1][p]);
        for (int p = 1; p < l; ++p) base.push_back(bv[i][j][p]);
        add(bv[i][j][l], base);
      }
    for (int j = 1; j <= 5; ++j)
      for (int l = 1; l <= m2; ++l) {
        std::vector<Vertex> base(bv[i][j].begin() + 1, bv[i][j].end());
        base.push_back(l == 1 ? u[i] : cv[i][j][l - 1]);
        add(cv[i][j][l], base);
      }
  }
  Gadget out{graph, std::move(seq), {}};
  out.notes.push_back(
      "groups j >= 2 stack b_l onto u, v, the last k-l-1 vertices of group j-1 and b_1..b_{l-1}; "
      "taking the first k-l-1 instead would stack b_{k-1} of group j-1 and b_1 of group j onto one base");
  return out;
}

// Star l_1..l_{k-1} + c_1 inside a k-clique, c_i stacked on l's + c_{i-1},
// s_i on l_1..l_{k-2}, c_{i-1}, c_i, and a leaf a_i at each s_i.
struct FcaLayout {
  std::vector<Vertex> l, c, s, a;  // c, s, a indexed from 1; s[1], a[1] unused
};

inline FcaLayout fca_layout(int k, int n, GadgetBuilder& g) {
  FcaLayout f;
  for (int i = 1; i <= k - 1; ++i) f.l.push_back(g.add("l" + std::to_string(i)));
  f.c.assign(n + 1, -1);
  f.s.assign(n + 1, -1);
  f.a.assign(n + 1, -1);
  for (int i = 1; i <= n; ++i) {
    f.c[i] = g.add("c" + std::to_string(i));
    g.join_all(f.l, {f.c[i]});
    if (i > 1) g.join(f.c[i - 1], f.c[i]);
  }
  for (int i = 2; i <= n; ++i) {
    f.s[i] = g.add("s" + std::to_string(i));
    g.join_all({f.l.begin(), f.l.begin() + (k - 2)}, {f.s[i]});
    g.join(f.c[i - 1], f.s[i]);
    g.join(f.c[i], f.s[i]);
  }
  for (int i = 2; i <= n; ++i) {
    f.a[i] = g.add("a" + std::to_string(i));
    g.join(f.s[i], f.a[i]);
  }
  return f;
}

inline int fca_n(int k) { return 16 * k * k - 16 * k + 4; }

inline Gadget gadget_fca(int k, int limit) {
  require(k >= 2, "fca needs k >= 2");
  const int n = fca_n(k);
  if ((k - 1) + 3 * n - 2 > limit) throw std::invalid_argument("fca above the vertex limit");
  GadgetBuilder g;
  const FcaLayout f = fca_layout(k, n, g);
  const Graph graph = g.build();
  ConstructionSequence seq;
  seq.width = k;
  seq.init = f.l;
  seq.init.push_back(f.c[1]);
  seq.init.push_back(f.c[2]);
  seq.init_keep = init_mask_in(graph, seq.init);
  const std::vector<Vertex> head(f.l.begin(), f.l.begin() + (k - 2));
  for (int i = 3; i <= n; ++i) {
    auto base = f.l;
    base.push_back(f.c[i - 1]);
    seq.steps.push_back(step_in(graph, f.c[i], base));
  }
  for (int i = 2; i <= n; ++i) {
    auto base = head;
    base.push_back(f.c[i - 1]);
    base.push_back(f.c[i]);
    seq.steps.push_back(step_in(graph, f.s[i], base));
  }
  for (int i = 2; i <= n; ++i) {
    auto base = head;
    base.push_back(f.c[i - 1]);
    base.push_back(f.s[i]);
    seq.steps.push_back(step_in(graph, f.a[i], base));
  }
  return {graph, std::move(seq), {}};
}

}  // namespace detail

inline Gadget gadget(GadgetKind kind, int k, int vertex_limit = default_gadget_vertex_limit) {
  switch (kind) {
    case GadgetKind::t_deg: return detail::gadget_t_deg(k, vertex_limit);
    case GadgetKind::i_tw: return detail::gadget_i_tw(k, vertex_limit);
    case GadgetKind::t_stw: return detail::gadget_t_stw(k, vertex_limit);
    case GadgetKind::fca: return detail::gadget_fca(k, vertex_limit);
  }
  throw std::invalid_argument("unknown gadget");
}

// The 10-vertex graph on c_i..c_{i+3}, s_{i+1..i+3}, a_{i+1..i+3} of the fca gadget.
inline Graph fca_core(int k, int i) {
  detail::require(k >= 2, "fca needs k >= 2");
  const int n = detail::fca_n(k);
  if (i < 1 || i + 3 > n) throw std::invalid_argument("core index outside 1.." + std::to_string(n - 3));
  detail::GadgetBuilder g;
  const auto f = detail::fca_layout(k, n, g);
  const Graph whole = g.build();
  std::vector<Vertex> keep;
  for (int j = 0; j <= 3; ++j) keep.push_back(f.c[i + j]);
  for (int j = 1; j <= 3; ++j) keep.push_back(f.s[i + j]);
  for (int j = 1; j <= 3; ++j) keep.push_back(f.a[i + j]);
  return induced_subgraph(whole, keep);
}

// Copy bounds for the core: c at most 1, s and a at most 2.
inline std::vector<int> fca_core_bounds(const Graph& core) {
  std::vector<int> bounds;
  for (Vertex v = 0; v < core.vertex_count(); ++v) bounds.push_back(role_of(core.label(v)) == "c" ? 1 : 2);
  return bounds;
}

}  // namespace covering
