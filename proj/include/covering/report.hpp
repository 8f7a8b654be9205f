#pragma once

// Desk-scale reproduction checks. Each check runs a fixed workload (seeded),
// compares exact values, and reports pass/fail together with its runtime
// against a pinned limit. Used by the acceptance binary and `covering_cli report`.

#include <chrono>
#include <climits>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "covering/constructions.hpp"
#include "covering/cover.hpp"
#include "covering/gadgets.hpp"
#include "covering/graph.hpp"
#include "covering/orientations.hpp"
#include "covering/solvers.hpp"
#include "covering/templates.hpp"

namespace covering {

struct CheckOutcome {
  int id = 0;
  std::string title;
  std::string claim;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct ReportOptions {
  std::uint32_t seed = 20240607;
  // per-solve node budget for the corpus check; solves that run out are skipped and counted
  std::uint64_t corpus_node_budget = 2'000'000;
};

namespace report {

// Pinned workloads and limits.
inline constexpr int bracket_graphs = 200;
inline constexpr int bracket_max_n = 9;
inline constexpr int flac_graphs = 200;
inline constexpr int flac_max_n = 30;
inline constexpr int slug_trees = 50;
inline constexpr int slug_max_n = 40;
inline constexpr int corpus_graphs = 400;
inline constexpr int corpus_max_n = 8;
inline constexpr int krausz_max_n = 6;

namespace detail {

using Clock = std::chrono::steady_clock;

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) e.push_back({a, b});
  return Graph(n, e);
}

// Drops a spanning forest's odd-parity edges so that every degree becomes even.
inline Graph even_part(const Graph& g) {
  std::vector<int> parent(g.vertex_count(), -1), parent_edge(g.vertex_count(), -1), order;
  std::vector<char> seen(g.vertex_count(), 0), drop(g.edge_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (Vertex y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          parent_edge[y] = g.edge_index(x, y);
          stack.push_back(y);
        }
    }
  }
  std::vector<int> deg(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (deg[*it] % 2 && parent[*it] >= 0) {
      drop[parent_edge[*it]] = 1;
      --deg[*it];
      --deg[parent[*it]];
    }
  std::vector<Edge> kept;
  for (int i = 0; i < g.edge_count(); ++i)
    if (!drop[i]) kept.push_back(g.edges()[i]);
  return Graph(g.vertex_count(), kept);
}

inline CheckOutcome outcome(int id, std::string title, std::string claim, double limit_seconds) {
  CheckOutcome o;
  o.id = id;
  o.title = std::move(title);
  o.claim = std::move(claim);
  o.limit_seconds = limit_seconds;
  return o;
}

inline bool certificate_ok(const Graph& g, const SolveResult& r, ClassTag cls, CoverMode mode) {
  return r.certificate && verify_cover(g, *r.certificate, cls, mode).valid;
}

// Solved number, INT_MAX for infinite, -1 when the budget ran out.
inline int number_or_flag(const Graph& g, ClassTag cls, CoverMode mode, Budget budget, std::string& error) {
  const auto r = compute_number(g, cls, mode, budget);
  if (r.status == SolveStatus::infinite) return INT_MAX;
  if (r.status != SolveStatus::feasible) return -1;
  if (!certificate_ok(g, r, cls, mode)) error = "certificate failed to verify";
  return *r.value;
}

// Independent global clique-collection number: colour the edges so that every colour
// class is a disjoint union of cliques. When uw and vw share a colour, uv must get it too.
inline int cluster_colouring_number(const Graph& g) {
  const int m = g.edge_count();
  if (m == 0) return 0;
  std::vector<int> colour(m, -1);
  const auto& edges = g.edges();
  auto consistent = [&](int e, int c) {
    const Vertex u = edges[e].u, v = edges[e].v;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (w == u || w == v) continue;
      const int uw = g.edge_index(u, w), vw = g.edge_index(v, w);
      const int cu = uw >= 0 ? colour[uw] : -1, cv = vw >= 0 ? colour[vw] : -1;
      // a path through e in colour c needs its closing edge in c
      if (cu == c && !(vw >= 0 && (cv == c || cv == -1))) return false;
      if (cv == c && !(uw >= 0 && (cu == c || cu == -1))) return false;
      // a path u-w-v in another colour needs e in that colour
      if (cu >= 0 && cu == cv && cu != c) return false;
    }
    return true;
  };
  std::function<bool(int, int, int)> place = [&](int e, int used, int k) {
    if (e == m) return true;
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      if (!consistent(e, c)) continue;
      colour[e] = c;
      if (place(e + 1, std::max(used, c + 1), k)) return true;
    }
    colour[e] = -1;
    return false;
  };
  for (int k = 1;; ++k)
    if (place(0, 0, k)) return k;
}

inline CheckOutcome petersen_cycles() {
  auto o = outcome(1, "Petersen cycle covers", "global = local = 3 > folded = 2 for cycle collections", 300);
  const Graph g = petersen_graph();
  std::ostringstream d;
  bool ok = true;
  const int want[3] = {3, 3, 2};
  const CoverMode modes[3] = {CoverMode::global, CoverMode::local, CoverMode::folded};
  for (int i = 0; i < 3; ++i) {
    const auto r = compute_number(g, ClassTag::cycle_collection, modes[i]);
    const bool good = r.status == SolveStatus::feasible && *r.value == want[i] &&
                      certificate_ok(g, r, ClassTag::cycle_collection, modes[i]);
    ok = ok && good;
    d << mode_name(modes[i]) << "=" << (r.value ? std::to_string(*r.value) : std::string(status_name(r.status)))
      << (i < 2 ? " " : "");
  }
  o.pass = ok;
  o.detail = d.str();
  return o;
}

inline CheckOutcome bipartite_formulas() {
  auto o = outcome(2, "Complete bipartite caterpillar numbers",
                   "global = ceil(mn/(m+n-1)), folded = ceil((mn+1)/(m+n))", 600);
  const std::pair<int, int> sizes[] = {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {3, 5}};
  std::ostringstream d;
  bool ok = true;
  for (auto [m, n] : sizes) {
    const Graph g = complete_bipartite_graph(m, n);
    const int want_g = (m * n + m + n - 2) / (m + n - 1);
    const int want_f = (m * n + 1 + m + n - 1) / (m + n);
    const auto rg = compute_number(g, ClassTag::caterpillar_forest, CoverMode::global);
    const auto rf = compute_number(g, ClassTag::caterpillar_forest, CoverMode::folded);
    const bool good = rg.status == SolveStatus::feasible && rf.status == SolveStatus::feasible &&
                      *rg.value == want_g && *rf.value == want_f &&
                      certificate_ok(g, rg, ClassTag::caterpillar_forest, CoverMode::global) &&
                      certificate_ok(g, rf, ClassTag::caterpillar_forest, CoverMode::folded);
    ok = ok && good;
    d << "K" << m << "," << n << ":" << (rg.value ? *rg.value : -1) << "/" << (rf.value ? *rf.value : -1) << " ";
  }
  o.pass = ok;
  o.detail = d.str() + "(global/folded)";
  return o;
}

inline CheckOutcome local_folded_separation() {
  auto o = outcome(3, "Local and folded caterpillar numbers separate", "K3,5: local = 3 > folded = 2", 600);
  const Graph g = complete_bipartite_graph(3, 5);
  const auto rl = compute_number(g, ClassTag::caterpillar_forest, CoverMode::local);
  const auto rf = compute_number(g, ClassTag::caterpillar_forest, CoverMode::folded);
  o.pass = rl.status == SolveStatus::feasible && rf.status == SolveStatus::feasible && *rl.value == 3 &&
           *rf.value == 2 && certificate_ok(g, rl, ClassTag::caterpillar_forest, CoverMode::local) &&
           certificate_ok(g, rf, ClassTag::caterpillar_forest, CoverMode::folded);
  o.detail = "local=" + (rl.value ? std::to_string(*rl.value) : std::string(status_name(rl.status))) +
             " folded=" + (rf.value ? std::to_string(*rf.value) : std::string(status_name(rf.status)));
  return o;
}

inline CheckOutcome star_bracket(std::uint32_t seed) {
  auto o = outcome(4, "Pseudoarboricity bracket", "p <= a <= local star arboricity <= p+1, orientation value exact", 900);
  std::mt19937 rng(seed);
  int bad = 0, plus_one = 0;
  std::string first;
  for (int t = 0; t < bracket_graphs; ++t) {
    const int n = 2 + t % (bracket_max_n - 1);
    const Graph g = random_graph(rng, n, 0.2 + 0.1 * (t % 7));
    const int p = pseudoarboricity(g).value;
    const int a = arboricity(g).value;
    const auto lsa = local_star_arboricity(g);
    const auto exact = compute_number(g, ClassTag::star_forest, CoverMode::local);
    const bool cert = verify_cover(g, lsa.certificate, ClassTag::star_forest, CoverMode::local).valid &&
                      (g.edge_count() == 0 || verify_cover(g, lsa.certificate, ClassTag::star_forest, CoverMode::local)
                                                      .max_preimage <= lsa.value);
    const bool good = p <= a && a <= lsa.value && lsa.value <= p + 1 && exact.status == SolveStatus::feasible &&
                      *exact.value == lsa.value && cert;
    plus_one += lsa.value == p + 1 && g.edge_count() > 0;
    if (!good) {
      ++bad;
      if (first.empty()) first = " first failure: " + to_string(g);
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(bracket_graphs) + " graphs, " + std::to_string(bad) + " violations, " +
             std::to_string(plus_one) + " with value p+1" + first;
  return o;
}

inline CheckOutcome flac_bound(std::uint32_t seed) {
  auto o = outcome(5, "Euler tour linear forest cover", "max preimage <= ceil((D+1)/2), <= ceil(D/2) with odd vertices", 300);
  std::mt19937 rng(seed);
  int bad = 0, odd_case = 0;
  for (int t = 0; t < flac_graphs; ++t) {
    const int n = 2 + t % (flac_max_n - 1);
    Graph g = random_graph(rng, n, 0.05 + 0.05 * (t % 10));
    if (t % 3 == 0) g = even_part(g);
    const auto r = verify_cover(g, flac_cover(g), ClassTag::linear_forest, CoverMode::folded);
    const int delta = g.max_degree();
    bool good = r.valid && r.max_preimage <= (delta + 2) / 2;
    const auto comp = g.components();
    std::vector<char> has_edge(n, 0), has_odd(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      has_edge[comp[v]] |= g.degree(v) > 0;
      has_odd[comp[v]] |= g.degree(v) % 2;
    }
    bool all_odd = true;
    for (Vertex c = 0; c < n; ++c) all_odd = all_odd && (!has_edge[c] || has_odd[c]);
    if (all_odd) {
      ++odd_case;
      good = good && r.max_preimage <= (delta + 1) / 2;
    }
    bad += !good;
  }
  o.pass = bad == 0;
  o.detail = std::to_string(flac_graphs) + " graphs (" + std::to_string(odd_case) + " with an odd vertex per component), " +
             std::to_string(bad) + " violations";
  return o;
}

inline CheckOutcome slug_bound(std::uint32_t seed) {
  auto o = outcome(6, "Slug interval covers of partial simple k-trees", "injective interval cover, max preimage <= k", 600);
  std::mt19937 rng(seed);
  int bad = 0;
  for (int t = 0; t < slug_trees; ++t) {
    const int k = 3 + t % 2;
    const int n = k + 1 + static_cast<int>(rng() % (slug_max_n - k));
    const auto seq = random_simple_ktree(rng, k, n, t % 4 == 0 ? 1.0 : 0.5 + 0.1 * (t % 5));
    const Graph g = validate_sequence(seq, true).graph;
    const auto r = verify_cover(g, slug_cover(g, seq), ClassTag::interval, CoverMode::local);
    bad += !(r.valid && r.injective && r.max_preimage <= k);
  }
  o.pass = bad == 0;
  o.detail = std::to_string(slug_trees) + " sequences, " + std::to_string(bad) + " violations";
  return o;
}

inline CheckOutcome fca_core_check() {
  auto o = outcome(7, "Caterpillar gadget core", "core with bounds c:1 s:2 a:2 has no folded caterpillar cover", 1800);
  const int n = 16 * 2 * 2 - 16 * 2 + 4;
  int feasible = 0, unknown = 0;
  for (int i = 1; i + 3 <= n; ++i) {
    const Graph core = fca_core(2, i);
    const auto r = decide_constrained_folded(core, ClassTag::caterpillar_forest, fca_core_bounds(core));
    feasible += r.status == SolveStatus::feasible;
    unknown += r.status == SolveStatus::unknown;
  }
  o.pass = feasible == 0 && unknown == 0;
  o.detail = std::to_string(n - 3) + " cores, " + std::to_string(feasible) + " feasible, " + std::to_string(unknown) +
             " unknown";
  return o;
}

inline CheckOutcome spider_check() {
  auto o = outcome(8, "Interval number gadget at k = 1", "spider(3,2) folded caterpillar number = 2", 60);
  const Graph g = spider_graph(3, 2);
  const auto r = compute_number(g, ClassTag::caterpillar_forest, CoverMode::folded);
  o.pass = r.status == SolveStatus::feasible && *r.value == 2 &&
           certificate_ok(g, r, ClassTag::caterpillar_forest, CoverMode::folded);
  o.detail = "value=" + (r.value ? std::to_string(*r.value) : std::string(status_name(r.status)));
  return o;
}

inline CheckOutcome stw_witness() {
  auto o = outcome(9, "Simple tree-width gadget witness", "emitted width-3 sequence is simple and realizes the gadget", 60);
  const auto gd = gadget(GadgetKind::t_stw, 3);
  const auto r = validate_sequence(*gd.sequence, true);
  o.pass = r.ok && r.simple && gd.sequence->width == 3 && r.graph.edges() == gd.graph.edges() &&
           r.graph.vertex_count() == gd.graph.vertex_count();
  o.detail = std::to_string(gd.graph.vertex_count()) + " vertices, " + std::to_string(gd.sequence->steps.size()) +
             " steps, " + std::to_string(r.violations.size()) + " violations";
  return o;
}

inline CheckOutcome krausz_check() {
  auto o = outcome(10, "Krausz covers of line graphs", "L(K_n) local clique number <= 2; exact global values agree", 600);
  bool ok = true;
  std::ostringstream d;
  for (int n = 2; n <= krausz_max_n; ++n) {
    const Graph h = complete_graph(n);
    const auto r = verify_cover(line_graph(h).graph, krausz_cover(h), ClassTag::clique_collection, CoverMode::local);
    ok = ok && r.valid && r.max_preimage <= 2;
  }
  for (int n : {4, 5}) {
    const Graph lg = line_graph(complete_graph(n)).graph;
    const auto r = compute_number(lg, ClassTag::clique_collection, CoverMode::global);
    const int brute = cluster_colouring_number(lg);
    const bool good = r.status == SolveStatus::feasible && *r.value == brute &&
                      certificate_ok(lg, r, ClassTag::clique_collection, CoverMode::global);
    ok = ok && good;
    d << "L(K" << n << "): solver=" << (r.value ? *r.value : -1) << " colouring=" << brute << " ";
  }
  o.pass = ok;
  o.detail = d.str();
  return o;
}

inline CheckOutcome inequality_suite(std::uint32_t seed, std::uint64_t node_budget) {
  auto o = outcome(11, "Covering number inequalities", "global >= local >= folded; star local = folded; "
                                                     "caterpillar >= interval; equal on bipartite graphs", 1800);
  std::mt19937 rng(seed);
  const CoverMode modes[3] = {CoverMode::global, CoverMode::local, CoverMode::folded};
  int solves = 0, skipped = 0, violations = 0;
  std::string first;
  auto flag = [&](const std::string& what, const Graph& g) {
    ++violations;
    if (first.empty()) first = " first: " + what + " on " + to_string(g);
  };
  for (int t = 0; t < corpus_graphs; ++t) {
    const int n = 2 + t % (corpus_max_n - 1);
    const Graph g = random_graph(rng, n, 0.25 + 0.1 * (t % 6));
    std::vector<std::array<int, 3>> value(all_classes.size());
    for (std::size_t c = 0; c < all_classes.size(); ++c)
      for (int m = 0; m < 3; ++m) {
        std::string error;
        value[c][m] = number_or_flag(g, all_classes[c], modes[m], Budget{node_budget, 0}, error);
        ++solves;
        skipped += value[c][m] < 0;
        if (!error.empty()) flag(std::string(class_name(all_classes[c])) + " " + error, g);
      }
    auto known = [](int a, int b) { return a >= 0 && b >= 0; };
    for (std::size_t c = 0; c < all_classes.size(); ++c) {
      const auto& v = value[c];
      if (known(v[0], v[1]) && v[0] < v[1]) flag(std::string(class_name(all_classes[c])) + " global < local", g);
      if (known(v[1], v[2]) && v[1] < v[2]) flag(std::string(class_name(all_classes[c])) + " local < folded", g);
    }
    const auto idx = [](ClassTag t) {
      for (std::size_t c = 0; c < all_classes.size(); ++c)
        if (all_classes[c] == t) return c;
      return std::size_t{0};
    };
    const auto& star = value[idx(ClassTag::star_forest)];
    if (known(star[1], star[2]) && star[1] != star[2]) flag("star local != folded", g);
    const auto& cat = value[idx(ClassTag::caterpillar_forest)];
    const auto& itv = value[idx(ClassTag::interval)];
    const bool bip = is_bipartite(g);
    for (int m = 0; m < 3; ++m) {
      if (!known(cat[m], itv[m])) continue;
      if (cat[m] < itv[m]) flag("caterpillar < interval", g);
      if (bip && cat[m] != itv[m]) flag("bipartite caterpillar != interval", g);
    }
  }
  o.pass = violations == 0;
  o.detail = std::to_string(corpus_graphs) + " graphs, " + std::to_string(solves) + " solves, " +
             std::to_string(skipped) + " over budget, " + std::to_string(violations) + " violations" + first;
  return o;
}

}  // namespace detail

inline constexpr int check_count = 11;

// Runs one check by number (1..11) and records its wall time.
inline CheckOutcome run_check(int id, const ReportOptions& opt = {}) {
  const auto start = detail::Clock::now();
  CheckOutcome o;
  switch (id) {
    case 1: o = detail::petersen_cycles(); break;
    case 2: o = detail::bipartite_formulas(); break;
    case 3: o = detail::local_folded_separation(); break;
    case 4: o = detail::star_bracket(opt.seed + 4); break;
    case 5: o = detail::flac_bound(opt.seed + 5); break;
    case 6: o = detail::slug_bound(opt.seed + 6); break;
    case 7: o = detail::fca_core_check(); break;
    case 8: o = detail::spider_check(); break;
    case 9: o = detail::stw_witness(); break;
    case 10: o = detail::krausz_check(); break;
    case 11: o = detail::inequality_suite(opt.seed + 11, opt.corpus_node_budget); break;
    default: throw std::invalid_argument("no check numbered " + std::to_string(id));
  }
  o.seconds = std::chrono::duration<double>(detail::Clock::now() - start).count();
  if (o.seconds > o.limit_seconds) {
    o.pass = false;
    o.detail += " (over the time limit)";
  }
  return o;
}

inline std::string format_outcome(const CheckOutcome& o) {
  std::ostringstream out;
  out << (o.pass ? "PASS" : "FAIL") << " " << o.id << " " << o.title << ": " << o.claim << " | " << o.detail << " | "
      << std::fixed;
  out.precision(1);
  out << o.seconds << "s of " << o.limit_seconds << "s";
  return out.str();
}

}  // namespace report
}  // namespace covering
