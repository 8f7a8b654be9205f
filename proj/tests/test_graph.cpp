#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "covering/graph.hpp"

using namespace covering;

namespace {

bool is_regular(const Graph& g, int d) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) e.push_back({a, b});
  return Graph(n, e);
}

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(-1, {}), std::invalid_argument);
}

TEST(Graph, Families) {
  const Graph p = petersen_graph();
  EXPECT_EQ(p.vertex_count(), 10);
  EXPECT_EQ(p.edge_count(), 15);
  EXPECT_TRUE(is_regular(p, 3));

  const Graph k33 = complete_bipartite_graph(3, 3);
  EXPECT_EQ(k33.vertex_count(), 6);
  EXPECT_EQ(k33.edge_count(), 9);
  EXPECT_EQ(k33.label(0), "A");
  EXPECT_EQ(k33.label(5), "B");

  const Graph p5 = path_graph(5);
  EXPECT_EQ(p5.vertex_count(), 5);
  EXPECT_EQ(p5.edge_count(), 4);
  EXPECT_EQ(p5.max_degree(), 2);

  EXPECT_EQ(spider_graph(3, 2).vertex_count(), 7);
  EXPECT_EQ(hypercube_graph(3).edge_count(), 12);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
  EXPECT_THROW(generate("moebius", {}), std::invalid_argument);
  EXPECT_EQ(generate("cycle", {6}), cycle_graph(6));
}

TEST(Graph, LineGraph) {
  EXPECT_EQ(line_graph(path_graph(4)).graph, path_graph(3));
  EXPECT_EQ(line_graph(star_graph(3)).graph, complete_graph(3));

  const auto lk4 = line_graph(complete_graph(4));
  EXPECT_EQ(lk4.graph.vertex_count(), 6);
  EXPECT_EQ(lk4.graph.edge_count(), 12);
  EXPECT_TRUE(is_regular(lk4.graph, 4));
}

TEST(Graph, LineGraphEdgeCountMatchesPairEnumeration) {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph h = random_graph(rng, 7, 0.4);
    const auto lg = line_graph(h);
    int pairs = 0;
    for (int a = 0; a < h.edge_count(); ++a)
      for (int b = a + 1; b < h.edge_count(); ++b) {
        const Edge x = h.edges()[a], y = h.edges()[b];
        pairs += x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
      }
    EXPECT_EQ(lg.graph.edge_count(), pairs);
    std::set<Edge> back(lg.edge_of.begin(), lg.edge_of.end());
    EXPECT_EQ(static_cast<int>(back.size()), h.edge_count());
  }
}

TEST(Graph, Blowup) {
  const Graph edge = path_graph(2);
  EXPECT_EQ(blowup(edge, 1).graph, edge);
  const auto b2 = blowup(edge, 2);
  EXPECT_EQ(b2.graph.vertex_count(), 4);
  EXPECT_EQ(b2.graph.edge_count(), 4);
  const auto t2 = blowup(complete_graph(3), 2);
  EXPECT_EQ(t2.graph.vertex_count(), 6);
  EXPECT_EQ(t2.graph.edge_count(), 12);
}

TEST(Graph, BlowupProjectsEachEdgeJSquaredTimes) {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = random_graph(rng, 6, 0.5);
    for (int j = 1; j <= 3; ++j) {
      const auto b = blowup(g, j);
      std::map<Edge, int> hits;
      for (const auto& e : b.graph.edges()) {
        const Edge p = make_edge(b.projection[e.u], b.projection[e.v]);
        ASSERT_TRUE(g.has_edge(p.u, p.v));
        ++hits[p];
      }
      EXPECT_EQ(static_cast<int>(hits.size()), g.edge_count());
      for (const auto& [e, c] : hits) EXPECT_EQ(c, j * j);
    }
  }
}

TEST(Graph, EulerTours) {
  auto c5 = euler_tours(cycle_graph(5));
  ASSERT_EQ(c5.size(), 1u);
  EXPECT_EQ(c5[0].length(), 5);
  EXPECT_TRUE(c5[0].closed());

  auto k5 = euler_tours(complete_graph(5));
  ASSERT_EQ(k5.size(), 1u);
  EXPECT_EQ(k5[0].length(), 10);

  EXPECT_THROW(euler_tours(path_graph(3)), std::invalid_argument);
}

TEST(Graph, EulerToursCoverEachEdgeOnce) {
  // disjoint union of Eulerian pieces plus isolated vertices
  const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const Graph g =
      disjoint_union(disjoint_union(disjoint_union(complete_graph(5), cycle_graph(4)), Graph(2, {})), bowtie);
  const auto tours = euler_tours(g);
  std::map<Edge, int> used;
  for (const auto& w : tours) {
    validate_walk(g, w);
    EXPECT_TRUE(w.closed());
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) ++used[make_edge(w.vertices[i], w.vertices[i + 1])];
  }
  EXPECT_EQ(static_cast<int>(used.size()), g.edge_count());
  for (const auto& [e, c] : used) EXPECT_EQ(c, 1);
}

TEST(Graph, EulerTourStartsAtMinimumDegreeVertex) {
  // bowtie: vertex 2 has degree 4, the rest degree 2
  const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const auto tours = euler_tours(bowtie);
  ASSERT_EQ(tours.size(), 1u);
  EXPECT_EQ(tours[0].vertices.front(), 0);
  EXPECT_EQ(euler_tours(bowtie, 2)[0].vertices.front(), 2);
}

TEST(Graph, TextRoundTrip) {
  const Graph g = complete_bipartite_graph(2, 3);
  const std::string text = to_string(g);
  const Graph back = graph_from_string(text);
  EXPECT_EQ(back, g);
  EXPECT_EQ(to_string(back), text);
  EXPECT_EQ(back.label(4), "B");

  const Graph c = graph_from_string("# comment\nn 3\ne 0 1 # trailing\ne 2 1\nlabel 0 left end\n");
  EXPECT_EQ(c.edge_count(), 2);
  EXPECT_EQ(c.label(0), "left end");
  EXPECT_THROW(graph_from_string("n 2\ne 0 5\n"), std::invalid_argument);
  EXPECT_THROW(graph_from_string("e 0 1\n"), std::invalid_argument);
}

TEST(Graph, WalkValidation) {
  const Graph p = path_graph(3);
  EXPECT_NO_THROW(validate_walk(p, {{0, 1, 2, 1}}));
  EXPECT_THROW(validate_walk(p, {{0, 2}}), std::invalid_argument);
}
