#include "fractri/preprocess.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fractri/flow_decomposer.hpp"
#include "fractri/lp_oracle.hpp"
#include "fractri/verifier.hpp"
#include "test_support.hpp"

namespace fractri {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

// Reference peel: recount degrees from the edge set and scan all triples
// after every removal.
std::vector<Triangle> reference_peel(const Graph& g, std::set<std::pair<Vertex, Vertex>>* residual_edges) {
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges()) edges.insert({e.u, e.v});
  const Vertex n = g.vertex_count();
  int min_degree = n;
  for (Vertex v = 0; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));
  const int threshold = min_degree + 2;  // (1 - delta) n + 2 with delta = 1 - min_degree / n
  auto has = [&](Vertex a, Vertex b) { return edges.count({std::min(a, b), std::max(a, b)}) > 0; };
  auto degree = [&](Vertex v) {
    int d = 0;
    for (const auto& [a, b] : edges) d += (a == v || b == v) ? 1 : 0;
    return d;
  };
  std::vector<Triangle> removed;
  while (true) {
    bool found = false;
    for (Vertex a = 0; a < n && !found; ++a)
      for (Vertex b = a + 1; b < n && !found; ++b)
        for (Vertex c = b + 1; c < n && !found; ++c) {
          if (!(has(a, b) && has(a, c) && has(b, c))) continue;
          if (degree(a) < threshold || degree(b) < threshold || degree(c) < threshold) continue;
          removed.push_back({a, b, c});
          edges.erase({a, b});
          edges.erase({a, c});
          edges.erase({b, c});
          found = true;
        }
    if (!found) break;
  }
  if (residual_edges != nullptr) *residual_edges = edges;
  return removed;
}

Graph peel_fixture() {
  const Pairs pairs{{0, 2}, {0, 6}, {1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4},
                    {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};
  return Graph::from_edge_list(pairs, 7);
}

void expect_peel_invariants(const Graph& g, const PeelResult& r) {
  // Removed triangles and residual partition the original edge set.
  std::multiset<std::pair<Vertex, Vertex>> covered;
  for (const Triangle& t : r.removed) {
    covered.insert({t.a, t.b});
    covered.insert({t.a, t.c});
    covered.insert({t.b, t.c});
  }
  for (const Edge& e : r.residual.edges()) covered.insert({e.u, e.v});
  std::multiset<std::pair<Vertex, Vertex>> original;
  for (const Edge& e : g.edges()) original.insert({e.u, e.v});
  EXPECT_EQ(covered, original);

  const Rational floor = (Rational(1) - r.delta) * Rational(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_GE(Rational(r.residual.degree(v)), floor);
  EXPECT_FALSE(has_heavy_triangle(r.residual, r.threshold));
}

TEST(PeelHeavyTriangles, CompleteGraphsAreNeverPeeled) {
  for (Vertex n : {4, 7, 11}) {
    const Graph g = testing::complete_graph(n);
    const PeelResult r = peel_heavy_triangles(g);
    EXPECT_TRUE(r.removed.empty()) << "n=" << n;
    EXPECT_EQ(r.residual, g);
    EXPECT_EQ(r.delta, make_rational(1, n));
    EXPECT_EQ(r.threshold, Rational(n + 1));
  }
}

TEST(PeelHeavyTriangles, PinnedFixture) {
  const Graph g = peel_fixture();
  const PeelResult r = peel_heavy_triangles(g);
  EXPECT_EQ(r.delta, make_rational(5, 7));
  EXPECT_EQ(r.threshold, Rational(4));
  EXPECT_EQ(r.removed, (std::vector<Triangle>{{1, 2, 3}, {2, 4, 5}}));
  std::set<std::pair<Vertex, Vertex>> reference_residual;
  EXPECT_EQ(reference_peel(g, &reference_residual), r.removed);
  std::set<std::pair<Vertex, Vertex>> residual;
  for (const Edge& e : r.residual.edges()) residual.insert({e.u, e.v});
  EXPECT_EQ(residual, reference_residual);
  expect_peel_invariants(g, r);
}

TEST(PeelHeavyTriangles, PinnedFixtureDecomposesAfterMerge) {
  const Graph g = peel_fixture();
  const DecomposeReport report = decompose<Rational>(g);
  ASSERT_TRUE(report.ok());
  const auto& d = std::get<Decomposition>(report.outcome);
  EXPECT_TRUE(verify(g, d).pass);
  // Residual is three edge-disjoint triangles, each at weight 1.
  EXPECT_EQ(d.entries.size(), 5u);
  for (const auto& e : d.entries) EXPECT_EQ(e.weight, Rational(1));
}

TEST(PeelHeavyTriangles, MatchesReferenceOnRandomGraphs) {
  std::mt19937_64 rng(29);
  int peeled_cases = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Vertex n = static_cast<Vertex>(5 + trial % 8);
    const Graph g = testing::random_graph(n, 0.55 + 0.003 * trial, rng);
    const PeelResult r = peel_heavy_triangles(g);
    EXPECT_EQ(r.removed, reference_peel(g, nullptr));
    expect_peel_invariants(g, r);
    if (!r.removed.empty()) ++peeled_cases;
  }
  EXPECT_GT(peeled_cases, 10);
}

TEST(PeelHeavyTriangles, Idempotent) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(static_cast<Vertex>(6 + trial % 7), 0.7, rng);
    const PeelResult once = peel_heavy_triangles(g);
    // Re-peeling against the original threshold removes nothing.
    EXPECT_FALSE(has_heavy_triangle(once.residual, once.threshold));
  }
}

TEST(PeelHeavyTriangles, WeightOneCompletionVerifies) {
  // Any exact decomposition of the residual plus the peeled triangles at
  // weight 1 decomposes the original graph.
  std::mt19937_64 rng(37);
  int merged = 0;
  for (int trial = 0; trial < 400 && merged < 15; ++trial) {
    const Graph g = testing::random_graph(static_cast<Vertex>(6 + trial % 5), 0.8, rng);
    const PeelResult r = peel_heavy_triangles(g);
    if (r.removed.empty()) continue;
    const FeasibilityVerdict verdict = lp_feasible(r.residual);
    if (!verdict.feasible()) continue;
    Decomposition d = *verdict.witness;
    for (const Triangle& t : r.removed) d.entries.push_back({t, Rational(1)});
    EXPECT_TRUE(verify(g, d).pass);
    ++merged;
  }
  EXPECT_GT(merged, 0);
}

}  // namespace
}  // namespace fractri
