#pragma once

// Constructive upper bounds: folded linear covers from Euler tours, slug
// covers along simple k-tree sequences, the lift from k-trees to simple
// (k+1)-trees, star forests from segment contacts, and Krausz clique covers.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covering/cover.hpp"
#include "covering/graph.hpp"
#include "covering/orientations.hpp"

namespace covering {

// ------------------------------------------------ folded linear forests

// Per component: join an auxiliary vertex to every odd-degree vertex, take an
// Euler tour and cut it at the auxiliary vertex. Eulerian components keep
// their closed tour, started at a minimum-degree vertex.
inline CoverCertificate flac_cover(const Graph& g) {
  const int n = g.vertex_count();
  const auto comp = g.components();
  const int comp_count = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<Vertex> aux(comp_count, -1);
  std::vector<Edge> edges = g.edges();
  int next = n;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 0) continue;
    if (aux[comp[v]] == -1) aux[comp[v]] = next++;
    edges.push_back({v, aux[comp[v]]});
  }
  const Graph h(next, std::move(edges));

  std::vector<Walk> walks;
  for (Walk& tour : euler_tours(h)) {
    auto& vs = tour.vertices;
    const auto at = std::find_if(vs.begin(), vs.end(), [&](Vertex v) { return v >= n; });
    if (at == vs.end()) {
      walks.push_back(std::move(tour));
      continue;
    }
    vs.pop_back();  // closed tour: drop the repeated start, rotate to the auxiliary vertex
    std::rotate(vs.begin(), vs.begin() + (at - vs.begin()), vs.end());
    vs.push_back(vs.front());
    Walk piece;
    for (std::size_t i = 1; i < vs.size(); ++i) {
      if (vs[i] >= n) {
        walks.push_back(std::move(piece));
        piece = Walk{};
      } else {
        piece.vertices.push_back(vs[i]);
      }
    }
  }
  return walks_to_certificate(g, walks);
}

// ------------------------------------------------- construction sequences
//
//   width <k>
//   init <v0> ... <vk> [keep <mask>]
//   stack <v> : <c1> ... <ck> keep <mask>
//
// Stack masks: bit i keeps the edge to c_{i+1}. The init mask runs over the
// pairs (0,1), (0,2), ..., (0,k), (1,2), ... of the init list.

inline constexpr int max_sequence_width = 10;

struct StackStep {
  Vertex vertex = 0;
  std::vector<Vertex> base;
  std::uint64_t keep = 0;

  bool kept(int i) const { return (keep >> i) & 1u; }
};

struct ConstructionSequence {
  int width = 0;
  std::vector<Vertex> init;
  std::uint64_t init_keep = ~std::uint64_t{0};
  std::vector<StackStep> steps;

  int vertex_count() const { return static_cast<int>(init.size() + steps.size()); }
};

namespace detail {

inline std::uint64_t low_bits(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

inline int init_pair_index(int i, int j, int size) { return i * size - i * (i + 1) / 2 + (j - i - 1); }

inline std::vector<Vertex> sorted_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::string set_text(const std::vector<Vertex>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace detail

inline bool init_pair_kept(const ConstructionSequence& seq, int i, int j) {
  const int size = static_cast<int>(seq.init.size());
  if (i > j) std::swap(i, j);
  return (seq.init_keep >> detail::init_pair_index(i, j, size)) & 1u;
}

struct SequenceCheck {
  bool ok = false;
  bool simple = true;
  std::vector<std::string> violations;
  Graph graph;  // kept edges only
  Graph full;   // the k-tree itself
};

inline SequenceCheck validate_sequence(const ConstructionSequence& seq, bool require_simple) {
  SequenceCheck out;
  auto fail = [&](const std::string& msg) { out.violations.push_back(msg); };
  const int k = seq.width;
  const int n = seq.vertex_count();
  if (k < 1 || k > max_sequence_width) {
    fail("width " + std::to_string(k) + " outside 1.." + std::to_string(max_sequence_width));
    out.graph = Graph(0);
    out.full = Graph(0);
    return out;
  }
  std::vector<char> present(n, 0);
  auto introduce = [&](Vertex v) {
    if (v < 0 || v >= n) {
      fail("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
      return false;
    }
    if (present[v]) {
      fail("vertex " + std::to_string(v) + " introduced twice");
      return false;
    }
    present[v] = 1;
    return true;
  };
  std::set<Edge> full, kept;
  std::set<std::vector<Vertex>> used;

  if (static_cast<int>(seq.init.size()) != k + 1) fail("init lists " + std::to_string(seq.init.size()) + " vertices, expected " + std::to_string(k + 1));
  bool init_ok = true;
  for (Vertex v : seq.init) init_ok = introduce(v) && init_ok;
  if (init_ok) {
    const int size = static_cast<int>(seq.init.size());
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) {
        const Edge e = make_edge(seq.init[i], seq.init[j]);
        full.insert(e);
        if (init_pair_kept(seq, i, j)) kept.insert(e);
      }
  }

  for (const auto& step : seq.steps) {
    const std::string where = "stack " + std::to_string(step.vertex) + ": ";
    if (static_cast<int>(step.base.size()) != k) {
      fail(where + "base has " + std::to_string(step.base.size()) + " vertices, expected " + std::to_string(k));
      introduce(step.vertex);
      continue;
    }
    bool base_ok = true;
    for (Vertex c : step.base)
      if (c < 0 || c >= n || !present[c]) {
        fail(where + "base vertex " + std::to_string(c) + " does not exist yet");
        base_ok = false;
      }
    const auto key = detail::sorted_set(step.base);
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
      fail(where + "base repeats a vertex");
      base_ok = false;
    }
    if (base_ok)
      for (std::size_t i = 0; i < key.size() && base_ok; ++i)
        for (std::size_t j = i + 1; j < key.size(); ++j)
          if (!full.count(make_edge(key[i], key[j]))) {
            fail(where + "base " + detail::set_text(key) + " is not a clique");
            base_ok = false;
            break;
          }
    if (k < 64 && (step.keep >> k) != 0) fail(where + "keep mask has bits beyond the base");
    if (base_ok && !used.insert(key).second) {
      out.simple = false;
      if (require_simple) fail(where + "base " + detail::set_text(key) + " used twice");
    }
    if (!introduce(step.vertex) || !base_ok) continue;
    for (int i = 0; i < k; ++i) {
      const Edge e = make_edge(step.vertex, step.base[i]);
      full.insert(e);
      if (step.kept(i)) kept.insert(e);
    }
  }
  out.ok = out.violations.empty();
  out.graph = Graph(n, {kept.begin(), kept.end()});
  out.full = Graph(n, {full.begin(), full.end()});
  return out;
}

// Every k-tree lies in a simple (k+1)-tree. A dummy vertex d joins the init
// clique. Each k-clique C of the input carries a partner p with C + p a
// fresh (k+1)-clique of the output; stacking v onto C becomes stacking v
// onto C + p with the edge to p omitted. Afterwards C's partner is v and
// each new k-clique (C - c) + v takes p, so no base is reused.
inline ConstructionSequence lift_to_simple(const ConstructionSequence& seq) {
  const auto check = validate_sequence(seq, false);
  if (!check.ok) throw std::invalid_argument("invalid sequence: " + check.violations.front());
  const int k = seq.width;
  if (k + 1 > max_sequence_width) throw std::invalid_argument("lifted width exceeds " + std::to_string(max_sequence_width));
  const Vertex dummy = seq.vertex_count();

  ConstructionSequence out;
  out.width = k + 1;
  out.init = seq.init;
  out.init.push_back(dummy);
  out.init_keep = 0;
  const int size = k + 2;
  for (int i = 0; i < k + 1; ++i)
    for (int j = i + 1; j < k + 1; ++j)
      if (init_pair_kept(seq, i, j)) out.init_keep |= std::uint64_t{1} << detail::init_pair_index(i, j, size);

  std::map<std::vector<Vertex>, Vertex> partner;
  for (std::size_t a = 0; a < seq.init.size(); ++a) {
    std::vector<Vertex> facet;
    for (std::size_t b = 0; b < seq.init.size(); ++b)
      if (b != a) facet.push_back(seq.init[b]);
    partner[detail::sorted_set(facet)] = dummy;
  }
  for (const auto& step : seq.steps) {
    const auto key = detail::sorted_set(step.base);
    const Vertex p = partner.at(key);
    StackStep lifted{step.vertex, step.base, step.keep & detail::low_bits(k)};
    lifted.base.push_back(p);
    out.steps.push_back(std::move(lifted));
    partner[key] = step.vertex;
    for (Vertex c : step.base) {
      std::vector<Vertex> facet{step.vertex};
      for (Vertex x : step.base)
        if (x != c) facet.push_back(x);
      partner[detail::sorted_set(facet)] = p;
    }
  }
  return out;
}

// Random partial simple k-tree on n >= k+1 vertices: every stackable clique
// is used at most once and each potential edge survives with probability keep.
template <class Rng>
ConstructionSequence random_simple_ktree(Rng& rng, int k, int n, double keep = 1.0) {
  detail::require(k >= 1 && k <= max_sequence_width, "width out of range");
  detail::require(n >= k + 1, "need at least k+1 vertices");
  std::bernoulli_distribution coin(keep);
  ConstructionSequence seq;
  seq.width = k;
  for (Vertex v = 0; v <= k; ++v) seq.init.push_back(v);
  seq.init_keep = 0;
  for (int i = 0; i < (k + 1) * k / 2; ++i)
    if (coin(rng)) seq.init_keep |= std::uint64_t{1} << i;
  std::vector<std::vector<Vertex>> open;
  for (Vertex a = 0; a <= k; ++a) {
    std::vector<Vertex> facet;
    for (Vertex b = 0; b <= k; ++b)
      if (b != a) facet.push_back(b);
    open.push_back(facet);
  }
  for (Vertex v = k + 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const std::size_t at = pick(rng);
    const std::vector<Vertex> base = open[at];
    open[at] = open.back();
    open.pop_back();
    StackStep step{v, base, 0};
    for (int i = 0; i < k; ++i)
      if (coin(rng)) step.keep |= std::uint64_t{1} << i;
    seq.steps.push_back(step);
    for (Vertex c : base) {
      std::vector<Vertex> facet{v};
      for (Vertex x : base)
        if (x != c) facet.push_back(x);
      open.push_back(facet);
    }
  }
  return seq;
}

inline void write_sequence(std::ostream& out, const ConstructionSequence& seq) {
  out << "width " << seq.width << '\n' << "init";
  for (Vertex v : seq.init) out << ' ' << v;
  const int size = static_cast<int>(seq.init.size());
  const std::uint64_t all = detail::low_bits(size * (size - 1) / 2);
  if ((seq.init_keep & all) != all) out << " keep " << (seq.init_keep & all);
  out << '\n';
  for (const auto& s : seq.steps) {
    out << "stack " << s.vertex << " :";
    for (Vertex c : s.base) out << ' ' << c;
    out << " keep " << s.keep << '\n';
  }
}

inline ConstructionSequence read_sequence(std::istream& in) {
  ConstructionSequence seq;
  bool have_width = false, have_init = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "width") {
      if (!(ls >> seq.width)) detail::parse_error(line_no, "bad width line");
      have_width = true;
    } else if (tag == "init") {
      std::string tok;
      while (ls >> tok) {
        if (tok == "keep") {
          if (!(ls >> seq.init_keep)) detail::parse_error(line_no, "bad init keep mask");
          break;
        }
        try {
          seq.init.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          detail::parse_error(line_no, "bad init vertex '" + tok + "'");
        }
      }
      have_init = true;
    } else if (tag == "stack") {
      StackStep step;
      std::string colon;
      if (!(ls >> step.vertex >> colon) || colon != ":") detail::parse_error(line_no, "expected 'stack <v> :'");
      std::string tok;
      bool have_keep = false;
      while (ls >> tok) {
        if (tok == "keep") {
          if (!(ls >> step.keep)) detail::parse_error(line_no, "bad keep mask");
          have_keep = true;
          break;
        }
        try {
          step.base.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          detail::parse_error(line_no, "bad base vertex '" + tok + "'");
        }
      }
      if (!have_keep) detail::parse_error(line_no, "stack line without keep mask");
      seq.steps.push_back(std::move(step));
    } else {
      detail::parse_error(line_no, "unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) detail::parse_error(line_no, "trailing input '" + extra + "'");
  }
  if (!have_width || !have_init) throw std::invalid_argument("sequence needs width and init lines");
  return seq;
}

inline std::string to_string(const ConstructionSequence& seq) {
  std::ostringstream out;
  write_sequence(out, seq);
  return out.str();
}

inline ConstructionSequence sequence_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_sequence(in);
}

// ---------------------------------------------------------------- slugs
//
// A slug is a spline path whose leaves at each spline vertex induce a linear
// forest; every slug is an interval graph. Stacking w onto a clique C puts
// k copies of w into slugs and keeps two invariants:
//   1) every vertex v has a spline vertex sp(v) in a slug I(v), and adjacent
//      vertices own different slugs;
//   2) every stackable clique C has an end e(C), a copy of some w1 in C that
//      is either the spline end of a slug owned by no vertex of C, or a leaf
//      with at most one leaf neighbour hanging at sp(w2) for some w2 in C.
// An end serves two cliques only while it is a lone vertex or a leaf without
// leaf neighbours.

namespace detail {

class SlugBuilder {
 public:
  explicit SlugBuilder(const ConstructionSequence& seq) : k_(seq.width), sp_(seq.vertex_count(), -1) {
    bootstrap(seq);
    for (const auto& step : seq.steps) stack(step);
  }

  CoverCertificate certificate(int host_vertex_count) const {
    CoverCertificate cert;
    cert.host_vertex_count = host_vertex_count;
    std::vector<std::vector<int>> members(slug_edges_.size());
    for (int x = 0; x < static_cast<int>(nodes_.size()); ++x) members[nodes_[x].slug].push_back(x);
    for (std::size_t s = 0; s < slug_edges_.size(); ++s) {
      if (slug_edges_[s].empty()) continue;
      std::map<int, int> local;
      CoverComponent comp;
      for (int x : members[s]) {
        local[x] = static_cast<int>(comp.map.size());
        comp.map.push_back(nodes_[x].host);
      }
      std::vector<Edge> edges;
      for (const auto& e : slug_edges_[s]) edges.push_back({local[e.u], local[e.v]});
      comp.graph = Graph(static_cast<int>(comp.map.size()), std::move(edges));
      cert.components.push_back(std::move(comp));
    }
    return cert;
  }

 private:
  struct Node {
    int slug;
    Vertex host;
    bool spline;
    int anchor;  // spline vertex a leaf hangs at
    int spline_degree = 0;
    int leaf_degree = 0;
  };

  // A copy of the new vertex that may become an end. Leaves forbid the
  // cliques missing their anchor's host (and, in the bootstrap, their own host).
  struct Candidate {
    int node;  // -1: a lone vertex of `host`, created on first use
    Vertex host;
    std::vector<Vertex> forbid;
    int cap;
  };

  int new_slug() {
    slug_edges_.emplace_back();
    return static_cast<int>(slug_edges_.size()) - 1;
  }

  int add_node(int slug, Vertex host, bool spline, int anchor = -1) {
    nodes_.push_back({slug, host, spline, anchor});
    return static_cast<int>(nodes_.size()) - 1;
  }

  int lone(Vertex host) { return add_node(new_slug(), host, true); }

  void link(int a, int b) {
    if (nodes_[a].slug != nodes_[b].slug) throw std::logic_error("slug edge across slugs");
    slug_edges_[nodes_[a].slug].push_back(make_edge(a, b));
    for (int x : {a, b}) {
      const int y = x == a ? b : a;
      if (nodes_[x].spline && nodes_[y].spline) ++nodes_[x].spline_degree;
      if (!nodes_[x].spline && !nodes_[y].spline) ++nodes_[x].leaf_degree;
    }
  }

  int leaf_at(int spline, Vertex host) {
    const int x = add_node(nodes_[spline].slug, host, false, spline);
    link(spline, x);
    return x;
  }

  // The copy of w covering the edge to u, or a lone vertex if it is omitted.
  Candidate copy_for(Vertex w, Vertex u, bool kept) {
    if (!kept) return {lone(w), w, {}, 2};
    return {leaf_at(sp_[u], w), w, {u}, 2};
  }

  int capacity(const Candidate& c) const {
    if (c.node < 0 || nodes_[c.node].spline) return c.cap;
    return nodes_[c.node].leaf_degree == 0 ? std::min(c.cap, 2) : 1;
  }

  // Give every clique (key, missing vertex) an end among the candidates.
  void assign(const std::vector<std::pair<std::vector<Vertex>, Vertex>>& cliques, std::vector<Candidate> cand) {
    std::vector<std::pair<int, int>> slots;  // (candidate, copy index for lone vertices)
    for (int c = 0; c < static_cast<int>(cand.size()); ++c)
      for (int s = 0; s < capacity(cand[c]); ++s) slots.push_back({c, 0});
    const int q = static_cast<int>(cliques.size());
    std::vector<int> owner(slots.size(), -1);
    auto allowed = [&](int clique, int slot) {
      const auto& f = cand[slots[slot].first].forbid;
      return std::find(f.begin(), f.end(), cliques[clique].second) == f.end();
    };
    std::vector<char> seen;
    auto augment = [&](auto&& self, int clique) -> bool {
      for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
        if (seen[s] || !allowed(clique, s)) continue;
        seen[s] = 1;
        if (owner[s] == -1 || self(self, owner[s])) {
          owner[s] = clique;
          return true;
        }
      }
      return false;
    };
    for (int c = 0; c < q; ++c) {
      seen.assign(slots.size(), 0);
      if (!augment(augment, c)) throw std::logic_error("no end available for clique " + set_text(cliques[c].first));
    }
    for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
      if (owner[s] == -1) continue;
      Candidate& c = cand[slots[s].first];
      if (c.node < 0) c.node = lone(c.host);
      end_[cliques[owner[s]].first] = c.node;
    }
  }

  // Init clique: a lone spline vertex per vertex; each kept edge becomes a
  // leaf of one endpoint at the other's spline vertex, oriented by a
  // minimum max-out-degree orientation; spare copies become lone ends.
  void bootstrap(const ConstructionSequence& seq) {
    const auto& init = seq.init;
    const int size = static_cast<int>(init.size());
    for (Vertex v : init) sp_[v] = lone(v);
    std::vector<Edge> local;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        if (init_pair_kept(seq, i, j)) local.push_back({i, j});
    const Graph h(size, local);
    const auto orient = pseudoarboricity(h).orientation;
    std::vector<int> copies(size, 1);
    std::vector<Candidate> cand;
    for (int e = 0; e < h.edge_count(); ++e) {
      const int head = orient.head[e];
      const int tail = h.edges()[e].u == head ? h.edges()[e].v : h.edges()[e].u;
      ++copies[tail];
      const int x = leaf_at(sp_[init[head]], init[tail]);
      cand.push_back({x, init[tail], {init[tail], init[head]}, 2});
    }
    for (int i = 0; i < size; ++i) {
      if (copies[i] > k_) throw std::logic_error("init clique needs more than k copies");
      for (int spare = copies[i]; spare < k_; ++spare) cand.push_back({-1, init[i], {init[i]}, 2});
    }
    std::vector<std::pair<std::vector<Vertex>, Vertex>> cliques;
    for (int i = 0; i < size; ++i) {
      std::vector<Vertex> facet;
      for (int j = 0; j < size; ++j)
        if (j != i) facet.push_back(init[j]);
      cliques.push_back({sorted_set(facet), init[i]});
    }
    assign(cliques, std::move(cand));
  }

  void stack(const StackStep& step) {
    const Vertex w = step.vertex;
    const auto& base = step.base;
    const auto it = end_.find(sorted_set(base));
    if (it == end_.end()) throw std::logic_error("clique " + set_text(sorted_set(base)) + " has no end");
    const int e = it->second;
    end_.erase(it);
    auto kept = [&](Vertex u) {
      for (int i = 0; i < k_; ++i)
        if (base[i] == u) return step.kept(i);
      return false;
    };
    const Vertex w1 = nodes_[e].host;
    std::vector<Vertex> done{w1};
    std::vector<Candidate> cand;
    if (nodes_[e].spline) {
      // the end is a spline end of a slug no vertex of C owns: extend it
      if (nodes_[e].spline_degree > 1) throw std::logic_error("spline end is interior");
      if (kept(w1)) {
        sp_[w] = add_node(nodes_[e].slug, w, true);
        link(e, sp_[w]);
      } else {
        sp_[w] = lone(w);
      }
    } else {
      // the end is a leaf at sp(w2): w gets a fresh slug, and one copy hangs
      // next to the end, covering both w1 and w2 where present
      const int s = nodes_[e].anchor;
      const Vertex w2 = nodes_[s].host;
      if (std::find(base.begin(), base.end(), w2) == base.end()) throw std::logic_error("leaf end outside its clique");
      if (nodes_[e].leaf_degree > 1) throw std::logic_error("leaf end has two leaf neighbours");
      done.push_back(w2);
      sp_[w] = lone(w);
      if (kept(w2)) {
        const int x = leaf_at(s, w);
        if (kept(w1)) link(x, e);
        cand.push_back({x, w, {w2}, 2});
      } else {
        cand.push_back(copy_for(w, w1, kept(w1)));
      }
    }
    for (Vertex u : base)
      if (std::find(done.begin(), done.end(), u) == done.end()) cand.push_back(copy_for(w, u, kept(u)));
    std::vector<std::pair<std::vector<Vertex>, Vertex>> cliques;
    for (Vertex u : base) {
      std::vector<Vertex> facet{w};
      for (Vertex x : base)
        if (x != u) facet.push_back(x);
      cliques.push_back({sorted_set(facet), u});
    }
    assign(cliques, std::move(cand));
  }

  int k_;
  std::vector<int> sp_;
  std::vector<Node> nodes_;
  std::vector<std::vector<Edge>> slug_edges_;
  std::map<std::vector<Vertex>, int> end_;
};

}  // namespace detail

// Injective interval cover with at most max(3, width) copies per vertex.
// Sequences of width 1 or 2 are lifted to width 3 first; the dummy vertices
// this adds stay isolated and are dropped.
inline CoverCertificate slug_cover(const Graph& g, const ConstructionSequence& seq) {
  const auto check = validate_sequence(seq, true);
  if (!check.ok) throw std::invalid_argument("invalid sequence: " + check.violations.front());
  if (check.graph.vertex_count() != g.vertex_count() || check.graph.edges() != g.edges())
    throw std::invalid_argument("sequence does not realize the graph");
  ConstructionSequence s = seq;
  while (s.width < 3) s = lift_to_simple(s);
  const detail::SlugBuilder builder(s);
  return builder.certificate(g.vertex_count());
}

// -------------------------------------------------------- segment contacts
//
//   seg <v> <h|v>
//   touch <owner> <up|down|left|right> <other>
//
// A touch says that the owner's segment end of that type lies in the
// interior of the other segment. Only the combinatorial data is checked.

enum class Axis { horizontal, vertical };
enum class SegmentEnd { up, down, left, right };

inline std::string_view segment_end_name(SegmentEnd e) {
  switch (e) {
    case SegmentEnd::up: return "up";
    case SegmentEnd::down: return "down";
    case SegmentEnd::left: return "left";
    case SegmentEnd::right: return "right";
  }
  return "?";
}

inline SegmentEnd parse_segment_end(std::string_view s) {
  for (SegmentEnd e : {SegmentEnd::up, SegmentEnd::down, SegmentEnd::left, SegmentEnd::right})
    if (segment_end_name(e) == s) return e;
  throw std::invalid_argument("unknown segment end: " + std::string(s));
}

inline Axis axis_of(SegmentEnd e) {
  return e == SegmentEnd::up || e == SegmentEnd::down ? Axis::vertical : Axis::horizontal;
}

struct Touch {
  Vertex owner = 0;
  SegmentEnd end = SegmentEnd::up;
  Vertex other = 0;
};

struct ContactRepresentation {
  std::map<Vertex, Axis> axis;
  std::vector<Touch> touches;
};

inline std::vector<std::string> contact_violations(const Graph& g, const ContactRepresentation& rep) {
  std::vector<std::string> out;
  const int n = g.vertex_count();
  for (const auto& [v, a] : rep.axis)
    if (v < 0 || v >= n) out.push_back("segment for unknown vertex " + std::to_string(v));
  std::set<std::pair<Vertex, SegmentEnd>> ends;
  std::set<Edge> realized;
  for (const auto& t : rep.touches) {
    const std::string what = "touch " + std::to_string(t.owner) + " " + std::string(segment_end_name(t.end)) + " " +
                             std::to_string(t.other) + ": ";
    const auto ao = rep.axis.find(t.owner), at = rep.axis.find(t.other);
    if (ao == rep.axis.end() || at == rep.axis.end()) {
      out.push_back(what + "endpoint without a segment");
      continue;
    }
    if (ao->second != axis_of(t.end)) out.push_back(what + "end type does not fit the owner's axis");
    if (ao->second == at->second) out.push_back(what + "segments are parallel");
    if (!ends.insert({t.owner, t.end}).second) out.push_back(what + "segment end used twice");
    if (!g.has_edge(t.owner, t.other)) out.push_back(what + "not an edge of the graph");
    else if (!realized.insert(make_edge(t.owner, t.other)).second) out.push_back(what + "edge realized twice");
  }
  for (const auto& e : g.edges())
    if (!realized.count(e)) out.push_back("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has no contact");
  return out;
}

// One star forest per end type: owners of a given end type are leaves, since
// each owner has one such end, and the touched segments are the centres.
inline CoverCertificate contact_star_forests(const Graph& g, const ContactRepresentation& rep) {
  const auto bad = contact_violations(g, rep);
  if (!bad.empty()) throw std::invalid_argument("invalid contact representation: " + bad.front());
  CoverCertificate cert;
  cert.host_vertex_count = g.vertex_count();
  for (SegmentEnd end : {SegmentEnd::up, SegmentEnd::down, SegmentEnd::left, SegmentEnd::right}) {
    std::map<Vertex, int> local;
    CoverComponent comp;
    std::vector<Edge> edges;
    auto id = [&](Vertex v) {
      auto [it, fresh] = local.emplace(v, static_cast<int>(comp.map.size()));
      if (fresh) comp.map.push_back(v);
      return it->second;
    };
    for (const auto& t : rep.touches)
      if (t.end == end) edges.push_back({id(t.owner), id(t.other)});
    if (edges.empty()) continue;
    comp.graph = Graph(static_cast<int>(comp.map.size()), std::move(edges));
    cert.components.push_back(std::move(comp));
  }
  return cert;
}

inline void write_contacts(std::ostream& out, const ContactRepresentation& rep) {
  for (const auto& [v, a] : rep.axis) out << "seg " << v << ' ' << (a == Axis::horizontal ? 'h' : 'v') << '\n';
  for (const auto& t : rep.touches) out << "touch " << t.owner << ' ' << segment_end_name(t.end) << ' ' << t.other << '\n';
}

inline ContactRepresentation read_contacts(std::istream& in) {
  ContactRepresentation rep;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "seg") {
      Vertex v;
      std::string a;
      if (!(ls >> v >> a) || (a != "h" && a != "v")) detail::parse_error(line_no, "bad seg line");
      if (!rep.axis.emplace(v, a == "h" ? Axis::horizontal : Axis::vertical).second)
        detail::parse_error(line_no, "segment declared twice");
    } else if (tag == "touch") {
      Touch t;
      std::string end;
      if (!(ls >> t.owner >> end >> t.other)) detail::parse_error(line_no, "bad touch line");
      try {
        t.end = parse_segment_end(end);
      } catch (const std::invalid_argument& e) {
        detail::parse_error(line_no, e.what());
      }
      rep.touches.push_back(t);
    } else {
      detail::parse_error(line_no, "unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) detail::parse_error(line_no, "trailing input '" + extra + "'");
  }
  return rep;
}

// ------------------------------------------------------------ line graphs

// Krausz cover of L(H): the edges at each vertex of H form a clique of L(H),
// and every vertex of L(H) lies in the cliques of its two endpoints.
inline CoverCertificate krausz_cover(const Graph& h) {
  const LineGraph lg = line_graph(h);
  CoverCertificate cert;
  cert.host_vertex_count = lg.graph.vertex_count();
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) == 0) continue;
    CoverComponent comp;
    for (Vertex w : h.neighbors(v)) comp.map.push_back(h.edge_index(v, w));
    comp.graph = complete_graph(h.degree(v));
    cert.components.push_back(std::move(comp));
  }
  return cert;
}
}  // namespace covering
