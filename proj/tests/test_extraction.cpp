#include <gtest/gtest.h>

#include "twd/detection.hpp"
#include "twd/errors.hpp"
#include "twd/extraction.hpp"
#include "twd/generators.hpp"
#include "twd/transform.hpp"

namespace twd {
namespace {

std::vector<std::vector<Vertex>> singletons(int n) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < n; ++v) out.push_back({v});
  return out;
}

SubdivisionModel trivial_model(const Graph& g) {
  Subdivided s = subdivide(g, 0);
  return s.model;
}

TEST(LemmaClique, CliqueOfSingletons) {
  for (int b = 1; b <= 4; ++b) {
    Graph g = generate(complete(2 * b));
    auto sets = singletons(2 * b);
    auto out = lemma_clique_extract(g, sets, 1, b);
    ASSERT_EQ(out.kind, OutcomeKind::kBicliqueSubgraph) << b;
    EXPECT_EQ(out.biclique->map.size(), static_cast<std::size_t>(2 * b));
    EXPECT_TRUE(verify_outcome(g, out, 0));
  }
}

TEST(LemmaClique, MatchingInBiclique) {
  const int m = 6;
  Graph g = generate(complete_bipartite(m, m));
  std::vector<std::vector<Vertex>> sets;
  for (int i = 0; i < m; ++i) sets.push_back({i, m + i});
  auto out = lemma_clique_extract(g, sets, 2, 2);
  ASSERT_EQ(out.kind, OutcomeKind::kBicliqueSubgraph);
  EXPECT_TRUE(verify_outcome(g, out, 0));
  EXPECT_FALSE(find_clique(g, 3).found());
  EXPECT_FALSE(out.trace.empty());
}

TEST(LemmaClique, TooFewSets) {
  Graph g = generate(complete(2));
  auto sets = singletons(2);
  auto out = lemma_clique_extract(g, sets, 1, 2);
  EXPECT_EQ(out.kind, OutcomeKind::kInsufficient);
  EXPECT_EQ(out.stage, "family");
}

TEST(LemmaClique, Preconditions) {
  Graph g = generate(path(3));
  std::vector<std::vector<Vertex>> unlinked{{0}, {2}};
  EXPECT_THROW(lemma_clique_extract(g, unlinked, 1, 1), ContractError);
  std::vector<std::vector<Vertex>> overlapping{{0, 1}, {1, 2}};
  EXPECT_THROW(lemma_clique_extract(g, overlapping, 2, 1), ContractError);
  std::vector<std::vector<Vertex>> large{{0, 1}, {2}};
  EXPECT_THROW(lemma_clique_extract(g, large, 1, 1), ContractError);
}

TEST(Bigclique, SubdividedK4GivesInducedC8) {
  Subdivided s = subdivide(generate(complete(4)), 1);
  auto out = bigclique_extract(s.graph, s.model, 1, 2);
  ASSERT_EQ(out.kind, OutcomeKind::kInducedSubdivision) << out.shortfall;
  EXPECT_TRUE(verify_outcome(s.graph, out, 1));
  EXPECT_EQ(out.model->pattern.order(), 4);
  Graph c8 = s.graph.induced(out.model->vertices());
  EXPECT_TRUE(is_isomorphic(c8, generate(cycle(8))));
}

TEST(Bigclique, CliqueHostGivesBiclique) {
  Graph k4 = generate(complete(4));
  auto out = bigclique_extract(k4, trivial_model(k4), 2, 5);
  ASSERT_EQ(out.kind, OutcomeKind::kBicliqueSubgraph);
  EXPECT_TRUE(verify_outcome(k4, out, 2));
}

TEST(Bigclique, SinglePathIsTooSmall) {
  Subdivided s = subdivide(generate(complete(2)), 1);
  auto out = bigclique_extract(s.graph, s.model, 1, 2);
  EXPECT_EQ(out.kind, OutcomeKind::kInsufficient);
  EXPECT_EQ(out.stage, "branch");
}

TEST(Bigclique, ChordsAreShortcut) {
  Subdivided s = subdivide(generate(complete(6)), 2);
  std::vector<Edge> edges = s.graph.edges();
  edges.push_back({s.model.paths[0][0], s.model.paths[0][2]});
  Graph chorded(s.graph.order(), edges);
  auto out = bigclique_extract(chorded, s.model, 2, 2);
  if (out.sufficient()) EXPECT_TRUE(verify_outcome(chorded, out, 2));
}

TEST(Bigclique, RejectsBadModels) {
  Subdivided s = subdivide(generate(cycle(4)), 1);
  EXPECT_THROW(bigclique_extract(s.graph, s.model, 1, 1), ContractError);
  Subdivided k3 = subdivide(generate(complete(3)), 2);
  EXPECT_THROW(bigclique_extract(k3.graph, k3.model, 1, 1), ContractError);
}

TEST(Bigclique, RandomSubdivisionsAreSound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph k = generate(complete(5 + static_cast<int>(seed % 3)));
    Subdivided s = subdivide(k, 1 + static_cast<int>(seed % 2));
    std::vector<Edge> edges = s.graph.edges();
    Graph noise = random_graph(s.graph.order(), 0.05, seed);
    for (const Edge& e : noise.edges()) edges.push_back(e);
    Graph host(s.graph.order(), edges);
    const int p = 2;
    if (!verify_subdivision_model(host, s.model, false, false, p)) continue;
    auto out = bigclique_extract(host, s.model, p, 2);
    if (out.sufficient()) EXPECT_TRUE(verify_outcome(host, out, p)) << seed;
  }
}

TEST(BlockSubdivision, Examples) {
  Graph k5 = generate(complete(5));
  std::vector<Vertex> all{0, 1, 2, 3, 4};
  auto out = block_subdivision_extract(k5, all, 0, 5);
  ASSERT_EQ(out.kind, OutcomeKind::kKmSubdivision);
  EXPECT_TRUE(verify_outcome(k5, out, 0));
  EXPECT_EQ(out.model->max_internal(), 0);

  Subdivided s = subdivide(generate(complete(4)), 1);
  std::vector<Vertex> branch{0, 1, 2, 3};
  auto sub = block_subdivision_extract(s.graph, branch, 1, 4);
  ASSERT_EQ(sub.kind, OutcomeKind::kKmSubdivision);
  EXPECT_TRUE(verify_outcome(s.graph, sub, 1));
  EXPECT_EQ(sub.model->paths, s.model.paths);

  std::vector<Vertex> opposite{0, 3};
  auto small = block_subdivision_extract(generate(cycle(6)), opposite, 2, 3);
  EXPECT_EQ(small.kind, OutcomeKind::kInsufficient);
  EXPECT_EQ(small.stage, "block");
}

TEST(BlockSubdivision, ShortPathBudget) {
  Subdivided s = subdivide(generate(complete(4)), 2);
  std::vector<Vertex> branch{0, 1, 2, 3};
  auto out = block_subdivision_extract(s.graph, branch, 1, 4);
  EXPECT_EQ(out.kind, OutcomeKind::kInsufficient);
  EXPECT_EQ(out.stage, "paths");
  EXPECT_TRUE(block_subdivision_extract(s.graph, branch, 2, 4).sufficient());
}

TEST(BlockSubdivision, RejectsSeparableSets) {
  Graph c6 = generate(cycle(6));
  std::vector<Vertex> three{0, 2, 4};
  EXPECT_TRUE(block_subdivision_extract(c6, three, 1, 3).sufficient());
  Graph p5 = generate(path(5));
  EXPECT_THROW(block_subdivision_extract(p5, three, 1, 3), ContractError);
}

TEST(TripodProbe, CenterOfTripod) {
  Graph s = generate(tripod(2, 2, 2));
  std::vector<std::vector<Vertex>> prefixes{{1, 2}, {3, 4}, {5, 6}};
  auto probe = long_path_tripod_probe(s, 0, prefixes);
  ASSERT_TRUE(probe.tripod.has_value());
  EXPECT_TRUE(verify_embedding(s, s, *probe.tripod));
  EXPECT_TRUE(probe.linked.empty());
}

TEST(TripodProbe, FullyLinkedPrefixes) {
  Graph s = generate(tripod(2, 2, 2));
  std::vector<Edge> edges = s.edges();
  edges.push_back({2, 4});
  edges.push_back({4, 6});
  edges.push_back({2, 6});
  Graph g(7, edges);
  std::vector<std::vector<Vertex>> prefixes{{1, 2}, {3, 4}, {5, 6}};
  auto probe = long_path_tripod_probe(g, 0, prefixes);
  EXPECT_FALSE(probe.tripod.has_value());
  EXPECT_EQ(probe.linked.size(), 3u);
}

TEST(TripodProbe, AgreesWithInducedSearch) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph s = generate(tripod(2, 2, 2));
    std::vector<Edge> edges = s.edges();
    Graph noise = random_graph(7, 0.15, seed);
    for (const Edge& e : noise.edges()) {
      if (e.u != 0 && ((e.u - 1) / 2 != (e.v - 1) / 2)) edges.push_back(e);
    }
    Graph g(7, edges);
    std::vector<std::vector<Vertex>> prefixes{{1, 2}, {3, 4}, {5, 6}};
    auto probe = long_path_tripod_probe(g, 0, prefixes);
    const bool direct = find_induced(generate(tripod(2, 2, 2)), g).found();
    EXPECT_EQ(probe.tripod.has_value(), probe.linked.empty());
    if (probe.tripod) {
      EXPECT_TRUE(direct);
      EXPECT_TRUE(verify_embedding(generate(tripod(2, 2, 2)), g, *probe.tripod));
    }
  }
}

TEST(TripodProbe, NeedsThreePrefixes) {
  Graph s = generate(tripod(2, 2, 2));
  std::vector<std::vector<Vertex>> two{{1, 2}, {3, 4}};
  EXPECT_THROW(long_path_tripod_probe(s, 0, two), ContractError);
}

TEST(Shortcut, RemovesChords) {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 3}});
  std::vector<Vertex> path{0, 1, 2, 3, 4};
  EXPECT_EQ(shortcut_to_chordless(g, path), (std::vector<Vertex>{0, 3, 4}));
}

}  // namespace
}  // namespace twd
