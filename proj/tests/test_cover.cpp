#include <gtest/gtest.h>

#include "covering/cover.hpp"

using namespace covering;

namespace {

CoverCertificate identity_cover(const Graph& g) {
  CoverCertificate c;
  c.host_vertex_count = g.vertex_count();
  std::vector<Vertex> map(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) map[v] = v;
  c.components.push_back({g, map});
  return c;
}

bool has_violation(const CoverReport& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(VerifyCover, IdentityIntervalCover) {
  const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  ASSERT_TRUE(recognize(ClassTag::interval, g));
  const auto r = verify_cover(g, identity_cover(g), ClassTag::interval, CoverMode::global);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.size, 1);
  EXPECT_EQ(r.max_preimage, 1);
  EXPECT_TRUE(r.injective);
  EXPECT_EQ(r.covered_edge_count, g.edge_count());
}

TEST(VerifyCover, UncoveredEdge) {
  const Graph g = path_graph(3);
  CoverCertificate c;
  c.host_vertex_count = 3;
  c.components.push_back({path_graph(2), {0, 1}});
  const auto r = verify_cover(g, c, ClassTag::linear_forest, CoverMode::global);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(has_violation(r, "uncovered edge 1-2"));
}

TEST(VerifyCover, ReportsEveryViolation) {
  const Graph g = path_graph(4);
  CoverCertificate c;
  c.host_vertex_count = 4;
  c.components.push_back({cycle_graph(3), {0, 1, 3}});
  const auto r = verify_cover(g, c, ClassTag::linear_forest, CoverMode::global);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(has_violation(r, "is not a linear_forest"));
  EXPECT_TRUE(has_violation(r, "non-edge"));
  EXPECT_TRUE(has_violation(r, "uncovered edge 1-2"));
}

TEST(VerifyCover, Errors) {
  const Graph g = path_graph(3);
  CoverCertificate c;
  c.host_vertex_count = 4;
  EXPECT_THROW(verify_cover(g, c, ClassTag::matching, CoverMode::global), std::invalid_argument);
  c.host_vertex_count = 3;
  c.components.push_back({path_graph(2), {0, 7}});
  EXPECT_THROW(verify_cover(g, c, ClassTag::matching, CoverMode::global), std::invalid_argument);
}

TEST(VerifyCover, FoldedAllowsNonInjectiveMaps) {
  const Graph g = path_graph(2);
  const auto c = walks_to_certificate(g, {Walk{{0, 1, 0}}});
  const auto folded = verify_cover(g, c, ClassTag::linear_forest, CoverMode::folded);
  EXPECT_TRUE(folded.valid);
  EXPECT_FALSE(folded.injective);
  EXPECT_EQ(folded.max_preimage, 2);
  EXPECT_FALSE(verify_cover(g, c, ClassTag::linear_forest, CoverMode::local).valid);
}

TEST(Walks, ToCertificate) {
  const Graph tri = cycle_graph(3);
  const auto c = walks_to_certificate(tri, {Walk{{0, 1, 2, 0}}});
  ASSERT_EQ(c.size(), 1);
  EXPECT_EQ(c.components[0].graph.vertex_count(), 4);
  EXPECT_EQ(preimage_counts(c)[0], 2);
  EXPECT_TRUE(verify_cover(tri, c, ClassTag::linear_forest, CoverMode::folded).valid);

  const auto single = walks_to_certificate(path_graph(2), {Walk{{0, 1}}});
  EXPECT_EQ(single.components[0].graph.edge_count(), 1);
  EXPECT_THROW(walks_to_certificate(tri, {Walk{{0, 0}}}), std::invalid_argument);
}

TEST(Restrict, EmptyRemovalKeepsComponents) {
  const Graph g = cycle_graph(5);
  const auto c = identity_cover(g);
  const auto r = restrict_cover(c, {});
  ASSERT_EQ(r.size(), 1);
  EXPECT_EQ(r.components[0].graph, g);
  EXPECT_EQ(r.components[0].map, c.components[0].map);
}

TEST(Restrict, MiddleEdgeSplitsPath) {
  // path on four vertices, middle edge 1-2
  const Graph g = path_graph(4);
  const auto r = restrict_cover(identity_cover(g), {{1, 2}});
  ASSERT_EQ(r.size(), 2);
  for (const auto& c : r.components) EXPECT_EQ(c.graph.edge_count(), 1);
  EXPECT_TRUE(verify_cover(Graph(4, {{0, 1}, {2, 3}}), r, ClassTag::linear_forest, CoverMode::global).valid);
}

TEST(Restrict, RemovingEverythingEmptiesCertificate) {
  const Graph g = complete_bipartite_graph(1, 2);
  const auto r = restrict_cover(identity_cover(g), g.edges());
  EXPECT_EQ(r.size(), 0);
}

TEST(Restrict, OriginallyIsolatedVerticesSurvive) {
  CoverCertificate c;
  c.host_vertex_count = 3;
  c.components.push_back({Graph(3, {{0, 1}}), {0, 1, 2}});
  const auto r = restrict_cover(c, {{0, 2}});
  ASSERT_EQ(r.size(), 1);
  EXPECT_EQ(r.components[0].graph.vertex_count(), 3);
}

TEST(CertificateFormat, RoundTrip) {
  const Graph g = cycle_graph(4);
  const auto c = walks_to_certificate(g, {Walk{{0, 1, 2}}, Walk{{2, 3, 0}}});
  const std::string text = to_string(c);
  const auto back = certificate_from_string(text);
  EXPECT_EQ(to_string(back), text);
  EXPECT_TRUE(verify_cover(g, back, ClassTag::linear_forest, CoverMode::global).valid);

  const auto no_host = certificate_from_string("# hand written\ncomponent\ntv 0 0\ntv 1 1\nte 0 1\n", 2);
  EXPECT_EQ(no_host.host_vertex_count, 2);
  EXPECT_THROW(certificate_from_string("tv 0 0\n", 2), std::invalid_argument);
  EXPECT_THROW(certificate_from_string("component\ntv 0 0\n"), std::invalid_argument);
  EXPECT_THROW(certificate_from_string("host 2\ncomponent\ntv 1 0\n"), std::invalid_argument);
}
