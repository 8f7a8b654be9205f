#include <gtest/gtest.h>

#include <array>
#include <climits>
#include <random>

#include "covering/cover.hpp"
#include "covering/orientations.hpp"
#include "covering/solvers.hpp"
#include "support.hpp"

using namespace covering;
using covering::testing::all_graphs;
using covering::testing::random_graph;

namespace {

constexpr CoverMode kModes[3] = {CoverMode::global, CoverMode::local, CoverMode::folded};

// INT_MAX for infinite, -1 when the budget runs out.
int number(const Graph& g, ClassTag cls, CoverMode mode) {
  const auto r = compute_number(g, cls, mode, Budget{300'000, 0});
  if (r.status == SolveStatus::infinite) return INT_MAX;
  if (r.status != SolveStatus::feasible) return -1;
  EXPECT_TRUE(verify_cover(g, *r.certificate, cls, mode).valid) << class_name(cls) << " " << to_string(g);
  return *r.value;
}

std::array<int, 3> numbers(const Graph& g, ClassTag cls) {
  return {number(g, cls, kModes[0]), number(g, cls, kModes[1]), number(g, cls, kModes[2])};
}

bool known(int a, int b) { return a >= 0 && b >= 0; }

void check_inequalities(const Graph& g) {
  for (ClassTag cls : all_classes) {
    const auto v = numbers(g, cls);
    if (known(v[0], v[1])) {
      EXPECT_GE(v[0], v[1]) << class_name(cls) << " " << to_string(g);
    }
    if (known(v[1], v[2])) {
      EXPECT_GE(v[1], v[2]) << class_name(cls) << " " << to_string(g);
    }
  }
  const auto star = numbers(g, ClassTag::star_forest);
  if (known(star[1], star[2])) {
    EXPECT_EQ(star[1], star[2]) << to_string(g);
  }
  const auto cat = numbers(g, ClassTag::caterpillar_forest);
  const auto itv = numbers(g, ClassTag::interval);
  for (int m = 0; m < 3; ++m) {
    if (!known(cat[m], itv[m])) continue;
    EXPECT_GE(cat[m], itv[m]) << to_string(g);
    if (is_bipartite(g)) {
      EXPECT_EQ(cat[m], itv[m]) << to_string(g);
    }
  }
}

}  // namespace

TEST(CoveringInequalities, AllGraphsOnFourVertices) {
  for (const auto& g : all_graphs(4)) check_inequalities(g);
}

TEST(CoveringInequalities, RandomGraphs) {
  std::mt19937 rng(314);
  for (int t = 0; t < 40; ++t) check_inequalities(random_graph(rng, 5 + t % 3, 0.3 + 0.1 * (t % 5)));
}

TEST(CoveringInequalities, StarLocalEqualsFoldedOnFamilies) {
  for (const Graph& g : {petersen_graph(), complete_graph(5), complete_bipartite_graph(3, 4), cycle_graph(7)}) {
    const auto local = compute_number(g, ClassTag::star_forest, CoverMode::local);
    const auto folded = compute_number(g, ClassTag::star_forest, CoverMode::folded);
    EXPECT_EQ(*local.value, *folded.value) << to_string(g);
  }
}

TEST(StarArboricityBracket, RandomGraphs) {
  std::mt19937 rng(99);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(rng, 3 + t % 5, 0.3 + 0.1 * (t % 6));
    const int p = pseudoarboricity(g).value;
    const int a = arboricity(g).value;
    const auto lsa = local_star_arboricity(g);
    EXPECT_LE(p, a);
    EXPECT_LE(a, lsa.value);
    EXPECT_LE(lsa.value, p + 1);
    const auto exact = compute_number(g, ClassTag::star_forest, CoverMode::local);
    EXPECT_EQ(*exact.value, lsa.value) << to_string(g);
  }
}

// A caterpillar cover of a host with an induced K_{m,n} (sides A, B): after removing
// the K_{m,n} edges, at least n - 2sm vertices of B lose m or more preimages, where s
// is the largest preimage count on A.
TEST(BipartiteRestriction, CaterpillarCoversLoseMPreimagesOnB) {
  int binding = 0;
  for (const auto& [m, n] : {std::pair{1, 4}, {1, 6}, {1, 7}, {2, 5}, {2, 6}}) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < m; ++a)
      for (Vertex b = m; b < m + n; ++b) edges.push_back({a, b});
    std::vector<Edge> core = edges;
    for (Vertex b = m; b < m + n; ++b) edges.push_back({b, b + n});
    const Graph host(m + 2 * n, edges);
    for (CoverMode mode : kModes) {
      const auto r = compute_number(host, ClassTag::caterpillar_forest, mode);
      ASSERT_EQ(r.status, SolveStatus::feasible);
      const auto& phi = *r.certificate;
      const auto before = preimage_counts(phi);
      const auto after = preimage_counts(restrict_cover(phi, core));
      int s = 0;
      for (Vertex a = 0; a < m; ++a) s = std::max(s, before[a]);
      int dropped = 0;
      for (Vertex b = m; b < m + n; ++b) dropped += after[b] <= before[b] - m;
      EXPECT_GE(dropped, n - 2 * s * m) << mode_name(mode) << " m=" << m << " n=" << n;
      binding += n - 2 * s * m > 0;
    }
  }
  EXPECT_GT(binding, 0);
}

TEST(BipartiteRestriction, RestrictedCoverStillCoversTheRest) {
  const Graph host = complete_bipartite_graph(2, 5);
  const auto r = compute_number(host, ClassTag::caterpillar_forest, CoverMode::folded);
  ASSERT_EQ(r.status, SolveStatus::feasible);
  const std::vector<Edge> removed{{0, 2}, {1, 3}};
  std::vector<Edge> rest;
  for (const auto& e : host.edges())
    if (e != Edge{0, 2} && e != Edge{1, 3}) rest.push_back(e);
  const Graph smaller(host.vertex_count(), rest);
  EXPECT_TRUE(verify_cover(smaller, restrict_cover(*r.certificate, removed), ClassTag::caterpillar_forest,
                           CoverMode::folded)
                  .valid);
}
