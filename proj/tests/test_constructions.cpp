#include <gtest/gtest.h>

#include <random>

#include "covering/constructions.hpp"
#include "covering/solvers.hpp"
#include "support.hpp"

using namespace covering;
using covering::testing::random_graph;

namespace {

int ceil_half(int x) { return (x + 1) / 2; }

bool every_component_has_odd_vertex(const Graph& g) {
  const auto comp = g.components();
  std::vector<char> has_edge(g.vertex_count(), 0), has_odd(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) has_edge[comp[v]] = 1;
    if (g.degree(v) % 2) has_odd[comp[v]] = 1;
  }
  for (Vertex c = 0; c < g.vertex_count(); ++c)
    if (has_edge[c] && !has_odd[c]) return false;
  return true;
}

// A k-tree that may stack several vertices onto one clique.
ConstructionSequence random_ktree(std::mt19937& rng, int k, int n) {
  ConstructionSequence seq;
  seq.width = k;
  for (Vertex v = 0; v <= k; ++v) seq.init.push_back(v);
  std::vector<std::vector<Vertex>> cliques;
  for (Vertex a = 0; a <= k; ++a) {
    std::vector<Vertex> f;
    for (Vertex b = 0; b <= k; ++b)
      if (b != a) f.push_back(b);
    cliques.push_back(f);
  }
  for (Vertex v = k + 1; v < n; ++v) {
    const auto base = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
    seq.steps.push_back({v, base, (std::uint64_t{1} << k) - 1});
    for (Vertex c : base) {
      std::vector<Vertex> f{v};
      for (Vertex x : base)
        if (x != c) f.push_back(x);
      cliques.push_back(f);
    }
  }
  return seq;
}

bool contains_edges(const Graph& big, const Graph& small) {
  for (const auto& e : small.edges())
    if (!big.has_edge(e.u, e.v)) return false;
  return true;
}

void expect_slug_cover(const Graph& g, const ConstructionSequence& seq, int bound) {
  const auto cert = slug_cover(g, seq);
  const auto rep = verify_cover(g, cert, ClassTag::interval, CoverMode::local);
  EXPECT_TRUE(rep.valid) << (rep.violations.empty() ? "" : rep.violations.front());
  EXPECT_TRUE(rep.injective);
  EXPECT_LE(rep.max_preimage, bound);
  EXPECT_EQ(rep.covered_edge_count, g.edge_count());
  for (const auto& c : cert.components) EXPECT_TRUE(recognize(ClassTag::interval, c.graph));
}

}  // namespace

TEST(Flac, Examples) {
  const auto p = verify_cover(path_graph(5), flac_cover(path_graph(5)), ClassTag::linear_forest, CoverMode::folded);
  EXPECT_TRUE(p.valid);
  EXPECT_EQ(p.max_preimage, 1);
  const auto c = verify_cover(cycle_graph(4), flac_cover(cycle_graph(4)), ClassTag::linear_forest, CoverMode::folded);
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.max_preimage, 2);
  const auto k = verify_cover(complete_graph(4), flac_cover(complete_graph(4)), ClassTag::linear_forest, CoverMode::folded);
  EXPECT_TRUE(k.valid);
  EXPECT_EQ(k.max_preimage, 2);
}

TEST(Flac, EulerianComponentsStartAtMinimumDegree) {
  // bowtie: the centre has degree 4, the revisit must land on a degree-2 vertex
  const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  const auto cert = flac_cover(bowtie);
  EXPECT_TRUE(verify_cover(bowtie, cert, ClassTag::linear_forest, CoverMode::folded).valid);
  EXPECT_EQ(preimage_counts(cert)[0], 2);
}

TEST(Flac, DegreeBoundsOnRandomGraphs) {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 250; ++rep) {
    const Graph g = random_graph(rng, 2 + rep % 29, 0.04 + 0.01 * (rep % 25));
    if (g.edge_count() == 0) continue;
    const auto r = verify_cover(g, flac_cover(g), ClassTag::linear_forest, CoverMode::folded);
    ASSERT_TRUE(r.valid) << to_string(g);
    EXPECT_LE(r.max_preimage, ceil_half(g.max_degree() + 1));
    if (every_component_has_odd_vertex(g)) {
      EXPECT_LE(r.max_preimage, ceil_half(g.max_degree()));
    }
  }
}

TEST(Flac, BracketedByExactValue) {
  std::mt19937 rng(8);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = random_graph(rng, 4 + rep % 4, 0.5);
    if (g.edge_count() == 0) continue;
    const auto exact = compute_number(g, ClassTag::linear_forest, CoverMode::folded);
    ASSERT_EQ(exact.status, SolveStatus::feasible);
    EXPECT_GE(*exact.value, ceil_half(g.max_degree()));
    const auto r = verify_cover(g, flac_cover(g), ClassTag::linear_forest, CoverMode::folded);
    EXPECT_GE(r.max_preimage, *exact.value);
  }
}

TEST(Sequence, TextRoundTrip) {
  std::mt19937 rng(4);
  const auto seq = random_simple_ktree(rng, 3, 12, 0.7);
  const auto back = sequence_from_string(to_string(seq));
  EXPECT_EQ(to_string(back), to_string(seq));
  EXPECT_EQ(validate_sequence(back, true).graph, validate_sequence(seq, true).graph);
  EXPECT_THROW(sequence_from_string("width 2\ninit 0 1 2\nstack 3 : 0 1\n"), std::invalid_argument);
  EXPECT_THROW(sequence_from_string("init 0 1\n"), std::invalid_argument);
  EXPECT_THROW(sequence_from_string("width 1\ninit 0 1\nstack 2 0 keep 1\n"), std::invalid_argument);
}

TEST(Sequence, Violations) {
  ConstructionSequence twice;
  twice.width = 1;
  twice.init = {0, 1};
  twice.steps = {{2, {0}, 1}, {3, {0}, 1}};
  EXPECT_TRUE(validate_sequence(twice, false).ok);
  const auto strict = validate_sequence(twice, true);
  EXPECT_FALSE(strict.ok);
  EXPECT_FALSE(strict.simple);

  ConstructionSequence loose;
  loose.width = 2;
  loose.init = {0, 1, 2};
  loose.steps = {{3, {0, 1}, 3}, {4, {2, 3}, 3}};
  const auto r = validate_sequence(loose, false);
  EXPECT_FALSE(r.ok);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_NE(r.violations.front().find("not a clique"), std::string::npos);

  ConstructionSequence short_init;
  short_init.width = 2;
  short_init.init = {0, 1};
  EXPECT_FALSE(validate_sequence(short_init, false).ok);

  ConstructionSequence unknown = twice;
  unknown.steps = {{2, {5}, 1}};
  EXPECT_FALSE(validate_sequence(unknown, false).ok);
}

TEST(Sequence, RandomSimpleTreesValidate) {
  std::mt19937 rng(17);
  for (int k = 1; k <= 5; ++k) {
    const auto seq = random_simple_ktree(rng, k, 30, 0.8);
    const auto r = validate_sequence(seq, true);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.full.edge_count(), k * (k + 1) / 2 + (30 - k - 1) * k);
  }
}

TEST(Lift, SimpleInputKeepsItsGraph) {
  std::mt19937 rng(2);
  const auto seq = random_simple_ktree(rng, 2, 15, 0.8);
  const auto lifted = lift_to_simple(seq);
  const auto r = validate_sequence(lifted, true);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(lifted.width, 3);
  const Graph before = validate_sequence(seq, true).graph;
  EXPECT_EQ(r.graph.vertex_count(), before.vertex_count() + 1);
  EXPECT_EQ(r.graph.edges(), before.edges());
}

TEST(Lift, StarAsOneTree) {
  ConstructionSequence star;
  star.width = 1;
  star.init = {0, 1};
  star.steps = {{2, {0}, 1}, {3, {0}, 1}};
  const auto lifted = lift_to_simple(star);
  const auto r = validate_sequence(lifted, true);
  ASSERT_TRUE(r.ok) << r.violations.front();
  EXPECT_EQ(lifted.width, 2);
  EXPECT_TRUE(contains_edges(r.graph, star_graph(3)));
}

TEST(Lift, DoubleStackOnTriangle) {
  ConstructionSequence seq;
  seq.width = 2;
  seq.init = {0, 1, 2};
  seq.steps = {{3, {0, 1}, 3}, {4, {0, 1}, 3}, {5, {3, 0}, 3}};
  const auto lifted = lift_to_simple(seq);
  const auto r = validate_sequence(lifted, true);
  ASSERT_TRUE(r.ok) << r.violations.front();
  EXPECT_TRUE(contains_edges(r.graph, validate_sequence(seq, false).graph));
}

TEST(Lift, RandomKTrees) {
  std::mt19937 rng(44);
  for (int rep = 0; rep < 60; ++rep) {
    const int k = 1 + rep % 4;
    const auto seq = random_ktree(rng, k, k + 2 + rep % 20);
    const auto lifted = lift_to_simple(seq);
    const auto r = validate_sequence(lifted, true);
    ASSERT_TRUE(r.ok) << r.violations.front();
    EXPECT_EQ(lifted.width, k + 1);
    EXPECT_TRUE(contains_edges(r.graph, validate_sequence(seq, false).graph));
  }
  ConstructionSequence broken;
  broken.width = 1;
  broken.init = {0};
  EXPECT_THROW(lift_to_simple(broken), std::invalid_argument);
}

TEST(Slug, CompleteGraphOnFour) {
  ConstructionSequence seq;
  seq.width = 3;
  seq.init = {0, 1, 2, 3};
  expect_slug_cover(complete_graph(4), seq, 3);
}

// The octahedron has minimum degree 4, so its tree-width is 4 and it needs
// a width-4 sequence: the init clique minus two opposite pairs, then the
// last vertex onto 0,1,2,3.
TEST(Slug, Octahedron) {
  ConstructionSequence seq;
  seq.width = 4;
  seq.init = {0, 1, 2, 3, 4};
  seq.init_keep = ~std::uint64_t{0};
  seq.init_keep &= ~(std::uint64_t{1} << 0);  // pair (0,1)
  seq.init_keep &= ~(std::uint64_t{1} << 7);  // pair (2,3)
  seq.steps = {{5, {0, 1, 2, 3}, 15}};
  const Graph octahedron(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  ASSERT_EQ(validate_sequence(seq, true).graph, octahedron);
  expect_slug_cover(octahedron, seq, 4);
}

TEST(Slug, StackedTriangulation) {
  // planar 3-tree: K4 with a vertex stacked into three of its faces, each once
  ConstructionSequence seq;
  seq.width = 3;
  seq.init = {0, 1, 2, 3};
  seq.steps = {{4, {0, 1, 2}, 7}, {5, {0, 1, 4}, 7}, {6, {1, 2, 4}, 7}, {7, {1, 3, 2}, 7}};
  const auto r = validate_sequence(seq, true);
  ASSERT_TRUE(r.ok);
  expect_slug_cover(r.graph, seq, 3);
}

TEST(Slug, RandomPartialSimpleTrees) {
  std::mt19937 rng(91);
  for (int rep = 0; rep < 60; ++rep) {
    const int k = 3 + rep % 2;
    const auto seq = random_simple_ktree(rng, k, 40, rep % 3 == 0 ? 1.0 : 0.6);
    expect_slug_cover(validate_sequence(seq, true).graph, seq, k);
  }
}

TEST(Slug, LowWidthsAreLiftedToThree) {
  std::mt19937 rng(5);
  for (int k = 1; k <= 2; ++k) {
    const auto seq = random_simple_ktree(rng, k, 25, 0.9);
    expect_slug_cover(validate_sequence(seq, true).graph, seq, 3);
  }
}

TEST(Slug, Errors) {
  ConstructionSequence twice;
  twice.width = 3;
  twice.init = {0, 1, 2, 3};
  twice.steps = {{4, {0, 1, 2}, 7}, {5, {0, 1, 2}, 7}};
  const auto g = validate_sequence(twice, false).graph;
  EXPECT_THROW(slug_cover(g, twice), std::invalid_argument);
  ConstructionSequence k4;
  k4.width = 3;
  k4.init = {0, 1, 2, 3};
  EXPECT_THROW(slug_cover(cycle_graph(4), k4), std::invalid_argument);
}

TEST(Contacts, PinwheelFourCycle) {
  ContactRepresentation rep;
  rep.axis = {{0, Axis::vertical}, {1, Axis::horizontal}, {2, Axis::vertical}, {3, Axis::horizontal}};
  rep.touches = {{0, SegmentEnd::up, 1}, {1, SegmentEnd::right, 2}, {2, SegmentEnd::down, 3}, {3, SegmentEnd::left, 0}};
  const Graph c4 = cycle_graph(4);
  const auto cert = contact_star_forests(c4, rep);
  EXPECT_EQ(cert.size(), 4);
  for (const auto& c : cert.components) EXPECT_EQ(c.graph.edge_count(), 1);
  const auto r = verify_cover(c4, cert, ClassTag::star_forest, CoverMode::global);
  EXPECT_TRUE(r.valid);

  std::ostringstream out;
  write_contacts(out, rep);
  std::istringstream in(out.str());
  EXPECT_EQ(contact_violations(c4, read_contacts(in)).size(), 0u);
}

// Combinatorial data for the cube: even vertices horizontal, odd vertical.
TEST(Contacts, Cube) {
  ContactRepresentation rep;
  for (Vertex v = 0; v < 8; ++v) rep.axis[v] = __builtin_popcount(v) % 2 ? Axis::vertical : Axis::horizontal;
  rep.touches = {{0, SegmentEnd::left, 2}, {0, SegmentEnd::right, 4}, {6, SegmentEnd::left, 2}, {6, SegmentEnd::right, 4},
                 {3, SegmentEnd::left, 1}, {3, SegmentEnd::right, 7}, {5, SegmentEnd::left, 1}, {5, SegmentEnd::right, 7},
                 {1, SegmentEnd::down, 0}, {2, SegmentEnd::up, 3},    {4, SegmentEnd::up, 5},    {7, SegmentEnd::down, 6}};
  const Graph q3 = hypercube_graph(3);
  const auto cert = contact_star_forests(q3, rep);
  EXPECT_LE(cert.size(), 4);
  EXPECT_TRUE(verify_cover(q3, cert, ClassTag::star_forest, CoverMode::global).valid);
}

TEST(Contacts, Errors) {
  ContactRepresentation rep;
  rep.axis = {{0, Axis::vertical}, {1, Axis::horizontal}, {2, Axis::horizontal}};
  rep.touches = {{0, SegmentEnd::up, 1}, {0, SegmentEnd::up, 2}};
  const Graph g(3, {{0, 1}, {0, 2}});
  EXPECT_THROW(contact_star_forests(g, rep), std::invalid_argument);
  rep.touches = {{0, SegmentEnd::left, 1}, {0, SegmentEnd::up, 2}};
  EXPECT_THROW(contact_star_forests(g, rep), std::invalid_argument);
  rep.touches = {{0, SegmentEnd::up, 1}};
  EXPECT_THROW(contact_star_forests(g, rep), std::invalid_argument);
  std::istringstream in("seg 0 x\n");
  EXPECT_THROW(read_contacts(in), std::invalid_argument);
}

TEST(Krausz, Examples) {
  const Graph p3 = path_graph(3);
  const auto lp = line_graph(p3);
  EXPECT_EQ(lp.graph, path_graph(2));
  const auto rp = verify_cover(lp.graph, krausz_cover(p3), ClassTag::clique_collection, CoverMode::local);
  EXPECT_TRUE(rp.valid);
  EXPECT_EQ(rp.max_preimage, 2);

  const auto cert4 = krausz_cover(complete_graph(4));
  EXPECT_EQ(cert4.size(), 4);
  for (int c : preimage_counts(cert4)) EXPECT_EQ(c, 2);
  for (const auto& c : cert4.components) EXPECT_EQ(c.graph.vertex_count(), 3);
  EXPECT_TRUE(verify_cover(line_graph(complete_graph(4)).graph, cert4, ClassTag::clique_collection, CoverMode::local).valid);

  const auto cert5 = krausz_cover(complete_graph(5));
  EXPECT_EQ(cert5.size(), 5);
  const auto r5 = verify_cover(line_graph(complete_graph(5)).graph, cert5, ClassTag::clique_collection, CoverMode::local);
  EXPECT_TRUE(r5.valid);
  EXPECT_EQ(r5.max_preimage, 2);
}

TEST(Krausz, RandomGraphs) {
  std::mt19937 rng(70);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph h = random_graph(rng, 3 + rep % 8, 0.4);
    const auto r = verify_cover(line_graph(h).graph, krausz_cover(h), ClassTag::clique_collection, CoverMode::local);
    EXPECT_TRUE(r.valid);
    EXPECT_LE(r.max_preimage, 2);
  }
}
