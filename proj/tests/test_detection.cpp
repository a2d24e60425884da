#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "twd/detection.hpp"
#include "twd/errors.hpp"
#include "twd/generators.hpp"
#include "twd/transform.hpp"

namespace twd {
namespace {

// Exhaustive induced-subgraph test over injective maps.
bool brute_induced(const Graph& pattern, const Graph& host) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<Vertex> chosen;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) chosen.push_back(i);
    }
    if (oracle::isomorphic(host.induced(chosen), pattern)) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

bool brute_biclique(const Graph& g, int t) {
  const int n = g.order();
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if (std::popcount(a) != t) continue;
    std::uint32_t common = (1u << n) - 1;
    for (int v = 0; v < n; ++v) {
      if ((a >> v) & 1) {
        std::uint32_t row = 0;
        for (Vertex w : g.neighbors(v)) row |= 1u << w;
        common &= row;
      }
    }
    if (std::popcount(common & ~a) >= t) return true;
  }
  return false;
}

TEST(FindInduced, Examples) {
  auto k3 = find_induced(generate(complete(3)), generate(complete(4)));
  ASSERT_TRUE(k3.found());
  EXPECT_TRUE(verify_embedding(generate(complete(3)), generate(complete(4)), *k3.embedding));
  EXPECT_EQ(find_induced(generate(tripod(1, 1, 1)), generate(cycle(6))).status,
            SearchStatus::kNotFound);
  EXPECT_EQ(find_induced(generate(path(4)), generate(complete_bipartite(3, 3))).status,
            SearchStatus::kNotFound);
  EXPECT_FALSE(brute_induced(generate(path(4)), generate(complete_bipartite(3, 3))));
}

TEST(FindInduced, AgreesWithExhaustiveSearch) {
  std::vector<Graph> patterns;
  for (int k = 1; k <= 4; ++k) {
    for (const Graph& p : oracle::all_graphs(k)) patterns.push_back(p);
  }
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph host = random_graph(4 + static_cast<int>(seed % 4), 0.45, seed);
    for (const Graph& p : patterns) {
      auto r = find_induced(p, host);
      EXPECT_EQ(r.found(), brute_induced(p, host));
      if (r.found()) EXPECT_TRUE(verify_embedding(p, host, *r.embedding));
    }
  }
}

TEST(FindInduced, BudgetIsNotNotFound) {
  Graph host = generate(complete_bipartite(6, 6));
  auto r = find_induced(generate(complete(3)), host, 3);
  EXPECT_EQ(r.status, SearchStatus::kBudgetExceeded);
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(generate(cycle(6)), subdivide(generate(complete(3)), 1).graph));
  EXPECT_FALSE(is_isomorphic(generate(tripod(1, 1, 1)), generate(path(4))));
  EXPECT_THROW(is_isomorphic(Graph(13), Graph(13)), ContractError);
  EXPECT_TRUE(find_isomorphism(generate(grid(4, 4)), generate(grid(4, 4))).found());
}

TEST(Clique, Examples) {
  EXPECT_TRUE(find_clique(generate(complete(5)), 5).found());
  EXPECT_FALSE(find_clique(generate(cycle(5)), 3).found());
  Graph g = random_graph(20, 0.5, 7);
  EXPECT_EQ(find_clique(g, 4).found(), oracle::has_clique(g, 4));
}

TEST(Clique, AgreesWithComplementIndependentSets) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(10, 0.5, seed);
    for (int k = 1; k <= 6; ++k) {
      auto r = find_clique(g, k);
      EXPECT_EQ(r.found(), oracle::has_clique(g.complement().complement(), k));
      if (r.found()) {
        const auto& c = r.embedding->map;
        for (std::size_t i = 0; i < c.size(); ++i) {
          for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_TRUE(g.adjacent(c[i], c[j]));
        }
      }
    }
    EXPECT_EQ(static_cast<int>(maximum_independent_set(g).size()),
              static_cast<int>(maximum_clique(g.complement()).size()));
  }
}

TEST(Biclique, Examples) {
  EXPECT_TRUE(find_biclique_subgraph(generate(complete_bipartite(3, 3)), 3).found());
  EXPECT_TRUE(find_biclique_subgraph(generate(complete(4)), 2).found());
  EXPECT_FALSE(find_biclique_subgraph(generate(wall(4)), 2).found());
  EXPECT_FALSE(find_biclique_subgraph(generate(complete(4)), 2, EmbedMode::kInduced).found());
}

TEST(Biclique, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(8 + static_cast<int>(seed % 5), 0.5, seed);
    for (int t = 1; t <= 3; ++t) {
      auto r = find_biclique_subgraph(g, t);
      EXPECT_EQ(r.found(), brute_biclique(g, t)) << "seed " << seed << " t " << t;
      if (r.found()) {
        EXPECT_TRUE(verify_embedding(generate(complete_bipartite(t, t)), g, *r.embedding));
      }
    }
  }
}

TEST(Freeness, Examples) {
  std::vector<Graph> triangle{generate(complete(3))};
  EXPECT_TRUE(is_f_free(generate(cycle(7)), triangle).is_free());
  auto k4 = is_f_free(generate(complete(4)), triangle);
  EXPECT_FALSE(k4.is_free());
  ASSERT_TRUE(k4.embedding.has_value());
  EXPECT_EQ(k4.member, 0u);
  std::vector<Graph> f{generate(complete(3)), generate(complete_bipartite(2, 2))};
  EXPECT_TRUE(is_f_free(generate(wall(3)), f).is_free());
}

TEST(SubdivisionModel, VerifiesConstructedModels) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& p : oracle::all_graphs(n)) {
      for (int times = 0; times <= 2; ++times) {
        Subdivided s = subdivide(p, times);
        EXPECT_TRUE(verify_subdivision_model(s.graph, s.model, true, times >= 1, times));
      }
    }
  }
}

TEST(SubdivisionModel, MixedCountsVerify) {
  Graph p = generate(complete(4));
  std::map<Edge, int> counts;
  int i = 0;
  for (const Edge& e : p.edges()) counts[e] = i++ % 3;
  Subdivided s = subdivide(p, counts);
  EXPECT_TRUE(verify_subdivision_model(s.graph, s.model, true, false, 2));
  EXPECT_FALSE(verify_subdivision_model(s.graph, s.model, true, true, 2));
  EXPECT_FALSE(verify_subdivision_model(s.graph, s.model, true, false, 1));
}

TEST(SubdivisionModel, ChordBreaksInducedness) {
  Subdivided s = subdivide(generate(complete_bipartite(2, 2)), 1);
  EXPECT_TRUE(verify_subdivision_model(s.graph, s.model, true, true, 1));
  std::vector<Edge> edges = s.graph.edges();
  edges.push_back({s.model.paths[0][1], s.model.paths[1][1]});
  Graph chorded(s.graph.order(), edges);
  auto check = verify_subdivision_model(chorded, s.model, true, true, 1);
  EXPECT_FALSE(check);
  EXPECT_TRUE(verify_subdivision_model(chorded, s.model, false, true, 1));
}

TEST(SubdivisionModel, ShortPathIsNotProper) {
  Subdivided s = subdivide(generate(complete(3)), std::map<Edge, int>{{{0, 1}, 1}});
  EXPECT_TRUE(verify_subdivision_model(s.graph, s.model, true, false, 1));
  auto check = verify_subdivision_model(s.graph, s.model, true, true, 1);
  ASSERT_FALSE(check);
  EXPECT_FALSE(check.violation->condition.empty());
}

}  // namespace
}  // namespace twd
