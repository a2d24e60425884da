#include <gtest/gtest.h>

#include <algorithm>

#include "twd/decomposition.hpp"
#include "twd/detection.hpp"
#include "twd/dichotomy.hpp"
#include "twd/errors.hpp"
#include "twd/generators.hpp"
#include "twd/transform.hpp"

namespace twd {
namespace {

ForbiddenSet from_specs(std::initializer_list<const char*> specs) {
  ForbiddenSet f;
  for (const char* s : specs) f.members.push_back({s, generate(parse_generator_spec(s))});
  return f;
}

const std::vector<const char*> kFull = {"complete:4", "bipartite:3,3", "tripod:1,1,1",
                                        "line-tripod:1,1,1"};

TEST(DecideBounded, FullSetIsBounded) {
  auto v = decide_bounded(from_specs({"complete:4", "bipartite:3,3", "tripod:1,1,1",
                                      "line-tripod:1,1,1"}));
  EXPECT_TRUE(v.bounded);
  EXPECT_TRUE(v.missing.empty());
  EXPECT_EQ(v.witness_name[0], "complete:4");
  EXPECT_EQ(v.witness_name[3], "line-tripod:1,1,1");
  EXPECT_EQ(v.suggested_p.str(), "10");
}

TEST(DecideBounded, DropOneCriterion) {
  for (std::size_t drop = 0; drop < 4; ++drop) {
    ForbiddenSet f;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != drop) f.members.push_back({kFull[i], generate(parse_generator_spec(kFull[i]))});
    }
    auto v = decide_bounded(f);
    if (kCriteria[drop] == Criterion::kCompleteBipartite) {
      // S_{1,1,1} is K_{1,3}, so it fills the slot left by K_{3,3}.
      EXPECT_TRUE(v.bounded);
      EXPECT_EQ(v.witness_name[1], "tripod:1,1,1");
      continue;
    }
    EXPECT_FALSE(v.bounded);
    ASSERT_EQ(v.missing.size(), 1u);
    EXPECT_EQ(v.missing[0], kCriteria[drop]);
  }
}

TEST(DecideBounded, DropBicliqueWithoutClaw) {
  auto v = decide_bounded(from_specs({"complete:4", "tripod:1,1,2", "line-tripod:1,1,1"}));
  EXPECT_FALSE(v.bounded);
  EXPECT_EQ(v.missing, (std::vector<Criterion>{Criterion::kCompleteBipartite}));
}

TEST(DecideBounded, PathServesTwoCriteria) {
  auto v = decide_bounded(from_specs({"path:5", "complete:3", "bipartite:2,2"}));
  EXPECT_TRUE(v.bounded);
  EXPECT_EQ(v.witness[2], 0u);
  EXPECT_EQ(v.witness[3], 0u);
}

TEST(DecideBounded, OrderIndependentVerdict) {
  std::vector<const char*> specs{"complete:3", "bipartite:2,3", "tripod:1,2,2", "path:4"};
  std::sort(specs.begin(), specs.end());
  const bool first = [&] {
    ForbiddenSet f;
    for (const char* s : specs) f.members.push_back({s, generate(parse_generator_spec(s))});
    return decide_bounded(f).bounded;
  }();
  do {
    ForbiddenSet f;
    for (const char* s : specs) f.members.push_back({s, generate(parse_generator_spec(s))});
    EXPECT_EQ(decide_bounded(f).bounded, first);
  } while (std::next_permutation(specs.begin(), specs.end()));
}

TEST(DecideBounded, EdgelessMembers) {
  ForbiddenSet f = from_specs({"tripod:1,1,2", "line-tripod:1,1,1"});
  f.members.push_back({"empty3", Graph(3)});
  auto strict = decide_bounded(f);
  EXPECT_FALSE(strict.bounded);
  auto lenient = decide_bounded(f, {.lenient_bipartite = true});
  EXPECT_EQ(lenient.witness_name[1], "empty3");
  EXPECT_FALSE(lenient.notes.empty());

  f.members.push_back({"complete:3", generate(complete(3))});
  auto finite = decide_bounded(f);
  EXPECT_TRUE(finite.bounded);
  EXPECT_FALSE(finite.notes.empty());
}

TEST(Criterion, NamesRoundTrip) {
  for (Criterion c : kCriteria) EXPECT_EQ(parse_criterion(to_string(c)), c);
  EXPECT_EQ(parse_criterion("line-tripod"), Criterion::kLineOfTripod);
  EXPECT_EQ(parse_criterion("bipartite"), Criterion::kCompleteBipartite);
  EXPECT_THROW(parse_criterion("cycle"), SpecError);
}

TEST(UnboundednessFamily, Examples) {
  EXPECT_EQ(unboundedness_family(Criterion::kComplete, 2), generate(complete(4)));
  Graph t2 = unboundedness_family(Criterion::kTripod, 2);
  EXPECT_EQ(exact_treewidth(t2).width, 3);
  EXPECT_TRUE(is_isomorphic(unboundedness_family(Criterion::kLineOfTripod, 1),
                            generate(cycle(6))));
  EXPECT_THROW(unboundedness_family(Criterion::kComplete, 0), ContractError);
}

TEST(UnboundednessFamily, CliqueAndBicliqueWidths) {
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(exact_treewidth(unboundedness_family(Criterion::kComplete, i)).width, i + 1);
    EXPECT_EQ(exact_treewidth(unboundedness_family(Criterion::kCompleteBipartite, i)).width,
              i + 2);
  }
}

TEST(UnboundednessFamily, MembersAvoidTheOtherCriteria) {
  // Members of the K_{n,n} family contain a claw, and line graphs of larger
  // subdivided cliques contain K_4, so those pairs are skipped.
  for (std::size_t drop = 0; drop < 4; ++drop) {
    std::vector<Graph> members;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == drop) continue;
      if (kCriteria[drop] == Criterion::kCompleteBipartite && i == 2) continue;
      members.push_back(generate(parse_generator_spec(kFull[i])));
    }
    for (int i = 1; i <= 3; ++i) {
      if (kCriteria[drop] == Criterion::kLineOfTripod && i == 3) continue;
      Graph g = unboundedness_family(kCriteria[drop], i);
      EXPECT_TRUE(is_f_free(g, members).is_free()) << to_string(kCriteria[drop]) << " " << i;
    }
  }
}

TEST(Survey, ZeroSamplesGivesNoRows) {
  SurveyOptions options;
  options.samples = 0;
  EXPECT_TRUE(survey(from_specs({"complete:3"}), options).empty());
}

TEST(Survey, ReproducibleAndConsistent) {
  SurveyOptions options;
  options.n_max = 8;
  options.samples = 20;
  auto f = from_specs({"complete:3", "bipartite:2,2", "tripod:1,1,1", "line-tripod:1,1,1"});
  auto a = survey(f, options);
  auto b = survey(f, options);
  ASSERT_EQ(a.size(), 8u);
  EXPECT_EQ(survey_csv(a), survey_csv(b));
  for (const auto& row : a) {
    EXPECT_EQ(row.samples, 20);
    EXPECT_LE(row.accepted + row.budget_exceeded, row.samples);
    if (row.tw_min >= 0) {
      EXPECT_LE(row.tw_min, row.tw_med);
      EXPECT_LE(row.tw_med, row.tw_max);
    }
  }
  EXPECT_EQ(survey_csv(a).substr(0, 51),
            "n,samples,accepted,tw_min,tw_med,tw_max,budget_exce");
}

TEST(Survey, FamilyWidthsIncrease) {
  auto rows = survey_family(from_specs({"complete:4"}), Criterion::kTripod, 3);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i - 1].width, rows[i].width);
}

}  // namespace
}  // namespace twd
