#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twd/detection.hpp"
#include "twd/generators.hpp"
#include "twd/recognition.hpp"
#include "twd/transform.hpp"

namespace twd {
namespace {

Graph k5_minus_edge() {
  std::vector<Edge> edges;
  for (const Edge& e : generate(complete(5)).edges()) {
    if (!(e.u == 1 && e.v == 3)) edges.push_back(e);
  }
  return Graph(5, edges);
}

TEST(Complete, Examples) {
  EXPECT_TRUE(is_complete(generate(complete(5))).member);
  auto v = is_complete(k5_minus_edge());
  EXPECT_FALSE(v.member);
  EXPECT_NE(v.reason.find("1 and 3"), std::string::npos);
  EXPECT_TRUE(is_complete(Graph(1)).member);
  EXPECT_TRUE(is_complete(Graph(0)).member);
}

TEST(CompleteBipartite, Examples) {
  EXPECT_TRUE(is_complete_bipartite(generate(complete_bipartite(3, 3))).member);
  EXPECT_FALSE(is_complete_bipartite(generate(cycle(5))).member);
  EXPECT_FALSE(is_complete_bipartite(Graph(3)).member);
  EXPECT_TRUE(is_complete_bipartite(Graph(1)).member);
  EXPECT_TRUE(is_complete_bipartite(generate(complete_bipartite(1, 4))).member);
  EXPECT_TRUE(is_complete_bipartite(generate(cycle(4))).member);
}

TEST(CompleteAndBipartite, OnlyTinyGraphsAreBoth) {
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      const bool both = is_complete(g).member && is_complete_bipartite(g).member;
      EXPECT_EQ(both, n <= 2 && g.size() == n * (n - 1) / 2) << "n=" << n;
    }
  }
}

TEST(Tripod, Examples) {
  auto s234 = is_tripod(generate(tripod(2, 3, 4)));
  ASSERT_TRUE(s234.member);
  ASSERT_EQ(s234.shapes.size(), 1u);
  EXPECT_EQ(s234.shapes[0].tag, ShapeTag::kTripodArm3);
  EXPECT_EQ(s234.shapes[0].params, (std::array<int, 3>{2, 3, 4}));

  std::vector<Graph> parts{generate(path(7)), generate(tripod(1, 1, 1))};
  EXPECT_TRUE(is_tripod(disjoint_union(parts)).member);
  auto k14 = is_tripod(generate(complete_bipartite(1, 4)));
  EXPECT_FALSE(k14.member);
  EXPECT_FALSE(k14.reason.empty());
}

TEST(Tripod, AgreesWithDefinitionUpToSevenVertices) {
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      EXPECT_EQ(is_tripod(g).member, oracle::is_tripod(g));
    }
  }
}

TEST(LineTripod, Examples) {
  Graph t111 = generate(line_tripod(1, 1, 1));
  EXPECT_TRUE(is_line_of_tripod(t111, false).member);
  EXPECT_TRUE(is_line_of_tripod(t111, true).member);
  EXPECT_FALSE(is_line_of_tripod(generate(cycle(4))).member);
  EXPECT_TRUE(is_line_of_tripod(generate(path(4))).member);
  EXPECT_FALSE(is_line_of_tripod(generate(path(4)), true).member);
  EXPECT_TRUE(is_line_of_tripod(generate(complete(3)), true).member);
}

TEST(LineTripod, LineGraphsOfSmallTripodsAreMembers) {
  for (int i = 0; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) {
      for (int k = j; i + j + k <= 9; ++k) {
        Graph s = generate(tripod(i, j, k));
        EXPECT_TRUE(is_line_of_tripod(line_graph(s)).member) << i << j << k;
      }
    }
  }
}

TEST(LineTripod, AgreesWithLineGraphOracleUpToSevenVertices) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      EXPECT_EQ(is_line_of_tripod(g).member, oracle::is_line_of_tripod(g));
    }
  }
}

TEST(Shapes, ReconstructMembers) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      for (const auto& v : {is_tripod(g), is_line_of_tripod(g)}) {
        if (v.member) EXPECT_TRUE(is_isomorphic(reconstruct(v.shapes), g));
      }
    }
  }
}

TEST(Shapes, OtherComponentHasNoGenerator) {
  auto shapes = component_shapes(generate(complete(4)));
  ASSERT_EQ(shapes.size(), 1u);
  EXPECT_EQ(shapes[0].tag, ShapeTag::kOther);
  EXPECT_THROW(shape_spec(shapes[0]), std::exception);
}

}  // namespace
}  // namespace twd
