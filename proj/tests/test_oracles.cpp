#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twd/generators.hpp"

namespace twd {
namespace {

// OEIS A000088 and A001349.
TEST(Oracle, CountsGraphsUpToIsomorphism) {
  const int expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(static_cast<int>(oracle::all_graphs(n).size()), expected[n]) << n;
  }
}

TEST(Oracle, CountsConnectedGraphs) {
  const int expected[] = {1, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(static_cast<int>(oracle::connected_graphs(n).size()), expected[n]) << n;
  }
}

TEST(Oracle, IsomorphismDistinguishesSmallCases) {
  EXPECT_TRUE(oracle::isomorphic(generate(cycle(5)), generate(cycle(5)).complement()));
  EXPECT_FALSE(oracle::isomorphic(generate(path(4)), generate(tripod(1, 1, 1))));
  EXPECT_FALSE(oracle::isomorphic(Graph(3), Graph(4)));
}

TEST(Oracle, TreewidthOfSmallFamilies) {
  EXPECT_EQ(oracle::treewidth_by_orderings(generate(complete(5))), 4);
  EXPECT_EQ(oracle::treewidth_by_orderings(generate(cycle(6))), 2);
  EXPECT_EQ(oracle::treewidth_by_orderings(generate(grid(3, 3))), 3);
  EXPECT_EQ(oracle::treewidth_by_orderings(generate(complete_bipartite(3, 4))), 3);
  EXPECT_EQ(oracle::treewidth_by_orderings(generate(tripod(2, 2, 2))), 1);
  EXPECT_EQ(oracle::treewidth_by_orderings(Graph(3)), 0);
}

TEST(Oracle, MinSeparator) {
  EXPECT_EQ(oracle::min_separator(generate(cycle(6)), 0, 3).size(), 2u);
  EXPECT_EQ(oracle::min_separator(generate(path(3)), 0, 2), (std::vector<Vertex>{1}));
  EXPECT_TRUE(oracle::min_separator(Graph(2), 0, 1).empty());
}

TEST(Oracle, TripodDefinitions) {
  EXPECT_TRUE(oracle::is_tripod(generate(tripod(1, 2, 3))));
  EXPECT_FALSE(oracle::is_tripod(generate(complete_bipartite(1, 4))));
  EXPECT_FALSE(oracle::is_tripod(generate(cycle(3))));
  EXPECT_TRUE(oracle::is_line_of_tripod(generate(line_tripod(1, 0, 2))));
  EXPECT_TRUE(oracle::is_line_of_tripod(generate(path(3))));
  EXPECT_FALSE(oracle::is_line_of_tripod(generate(cycle(4))));
}

TEST(Oracle, RamseySmallValues) {
  EXPECT_EQ(oracle::ramsey(3, 3, 6), 6);
  EXPECT_EQ(oracle::ramsey(2, 4, 6), 4);
  EXPECT_EQ(oracle::ramsey(3, 3, 5), std::nullopt);
}

TEST(Oracle, BlockNumber) {
  EXPECT_EQ(oracle::block_number(generate(complete(4))), 4);
  EXPECT_EQ(oracle::block_number(generate(cycle(5))), 2);
  EXPECT_EQ(oracle::block_number(generate(complete_bipartite(3, 3))), 3);
}

}  // namespace
}  // namespace twd
