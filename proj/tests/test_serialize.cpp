#include <gtest/gtest.h>

#include "twd/errors.hpp"
#include "twd/generators.hpp"
#include "twd/serialize.hpp"
#include "twd/transform.hpp"

namespace twd {
namespace {

TEST(Json, DecompositionRoundTrip) {
  Graph g = random_graph(9, 0.4, 8);
  TreeDecomposition td = exact_treewidth(g).decomposition;
  Json j = td;
  EXPECT_EQ(j.at("nodes"), td.node_count());
  EXPECT_EQ(decomposition_from_json(j), td);
  EXPECT_EQ(decomposition_from_json(Json::parse(j.dump())), td);
}

TEST(Json, DecompositionErrors) {
  EXPECT_THROW(decomposition_from_json(Json::parse(R"({"bags": [[0]]})")), ParseError);
  EXPECT_THROW(decomposition_from_json(Json::parse(R"({"bags": [[0]], "tree_edges": [[0]]})")),
               ParseError);
  EXPECT_THROW(
      decomposition_from_json(Json::parse(R"({"nodes": 2, "bags": [[0]], "tree_edges": []})")),
      ParseError);
}

TEST(Json, GraphForms) {
  EXPECT_EQ(graph_from_json(Json::parse(R"({"graph6": "A_"})")), Graph(2, {{0, 1}}));
  EXPECT_EQ(graph_from_json(Json::parse(R"({"spec": "cycle:5"})")), generate(cycle(5)));
  EXPECT_EQ(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1], [2, 1]]})")),
            generate(path(3)));
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"([1, 2])")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"spec": "bogus:1"})")), SpecError);
}

TEST(Json, ModelRoundTrip) {
  Subdivided s = subdivide(generate(complete(4)), 1);
  Json j = s.model;
  EXPECT_EQ(j.at("pattern_n"), 4);
  EXPECT_EQ(model_from_json(j), s.model);
  Subdivided b = subdivide(generate(complete_bipartite(2, 2)), 1);
  Json with_pattern = b.model;
  with_pattern["pattern"] = Json{{"spec", "bipartite:2,2"}};
  EXPECT_EQ(model_from_json(with_pattern), b.model);
}

TEST(Json, SeparatorKappaIsNullWhenInfinite) {
  Json adjacent = pair_connectivity(generate(path(2)), 0, 1);
  EXPECT_TRUE(adjacent.at("kappa").is_null());
  Json far = pair_connectivity(generate(cycle(6)), 0, 3);
  EXPECT_EQ(far.at("kappa"), 2);
}

TEST(Json, VerdictShape) {
  ForbiddenSet f;
  f.members.push_back({"complete:4", generate(complete(4))});
  Json j = decide_bounded(f);
  EXPECT_EQ(j.at("overall"), "unbounded");
  EXPECT_EQ(j.at("criteria").at("complete"), "complete:4");
  EXPECT_TRUE(j.at("criteria").at("tripod").is_null());
  EXPECT_EQ(j.at("missing").size(), 3u);
  EXPECT_EQ(j.at("suggested_p"), "1");
}

TEST(Json, RecognitionAndOutcome) {
  Json r = is_tripod(generate(tripod(1, 2, 3)));
  EXPECT_EQ(r.at("member"), true);
  EXPECT_EQ(r.at("shapes").at(0).at("params"), Json::parse("[1,2,3]"));
  Graph k4 = generate(complete(4));
  std::vector<std::vector<Vertex>> sets{{0}, {1}, {2}, {3}};
  Json o = lemma_clique_extract(k4, sets, 1, 2);
  EXPECT_EQ(o.at("kind"), "biclique-subgraph");
  EXPECT_EQ(o.at("biclique").at("map").size(), 4u);
  EXPECT_FALSE(o.contains("stage"));
}

TEST(Dot, DecompositionBags) {
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  const std::string dot = write_decomposition_dot(td);
  EXPECT_NE(dot.find("0 [label=\"0 1\"]"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
}

}  // namespace
}  // namespace twd
