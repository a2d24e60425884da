#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twd/constants.hpp"
#include "twd/decomposition.hpp"
#include "twd/detection.hpp"
#include "twd/graph.hpp"

namespace twd {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Members of F in the order given; witnesses are chosen first-in-list.
struct ForbiddenSet {
  std::vector<NamedGraph> members;
};

enum class Criterion { kComplete, kCompleteBipartite, kTripod, kLineOfTripod };

inline constexpr std::array<Criterion, 4> kCriteria = {
    Criterion::kComplete, Criterion::kCompleteBipartite, Criterion::kTripod,
    Criterion::kLineOfTripod};

/// "complete", "complete_bipartite", "tripod", "line_of_tripod".
const char* to_string(Criterion c);
/// Accepts the names above and the CLI family names (bipartite, line-tripod).
/// SpecError otherwise.
Criterion parse_criterion(std::string_view text);

struct DichotomyOptions {
  /// Let an edgeless member fill the complete-bipartite slot on its own.
  bool lenient_bipartite = false;
};

struct DichotomyVerdict {
  /// Index into F.members of the witness per criterion (kCriteria order).
  std::array<std::optional<std::size_t>, 4> witness;
  std::array<std::string, 4> witness_name;
  bool bounded = false;
  std::vector<Criterion> missing;
  /// Smallest p with every tripod component inside S_p, every line-tripod
  /// component inside T_p, and p at least the biclique threshold
  /// R(s, c) for the smallest complete member K_c and the complete bipartite
  /// member with the smallest larger side s. Informational only.
  Bound suggested_p;
  std::vector<std::string> notes;
};

/// Runs the four recognizers (line-of-tripod in its non-strict form) on
/// every member. An edgeless member on n >= 2 vertices fills the
/// complete-bipartite slot when `lenient_bipartite` is set, or when F also
/// has a complete member: F-free graphs then have fewer than R(n, c)
/// vertices, so the class is finite.
DichotomyVerdict decide_bounded(const ForbiddenSet& f, const DichotomyOptions& options = {});

/// i-th member (i >= 1) of a family with growing tree-width that avoids the
/// given criterion: K_{i+2}, K_{i+2,i+2}, the 1-subdivision of K_{i+2}, and
/// the line graph of that subdivision.
Graph unboundedness_family(Criterion missing, int i);

struct SurveyOptions {
  int n_min = 1;
  int n_max = 14;
  int samples = 200;
  std::uint64_t seed = 42;
  /// Edge probability for G(n, p); unset means 2/n (1 when n <= 2).
  std::optional<double> edge_probability;
  /// Per-member budget of the F-freeness test.
  std::uint64_t freeness_budget = kDefaultBudget;
  std::uint64_t treewidth_budget = kDefaultTreewidthBudget;
};

struct SurveyRow {
  int n = 0;
  int samples = 0;
  /// Draws proven F-free.
  int accepted = 0;
  /// -1 when no accepted draw was solved exactly.
  int tw_min = -1;
  int tw_med = -1;
  int tw_max = -1;
  /// Draws whose freeness test or tree-width run ran out of budget. They are
  /// excluded from the statistics.
  int budget_exceeded = 0;
};

/// Seed of the index-th draw for order n.
std::uint64_t survey_draw_seed(std::uint64_t seed, int n, int index);

/// One row per n in [n_min, n_max]; empty when samples == 0. Draw `index`
/// at order n is random_graph(n, p, survey_draw_seed(seed, n, index)). The
/// median is the lower median.
std::vector<SurveyRow> survey(const ForbiddenSet& f, const SurveyOptions& options);

/// Header plus one line per row: n,samples,accepted,tw_min,tw_med,tw_max,
/// budget_exceeded (empty fields for missing widths).
std::string survey_csv(const std::vector<SurveyRow>& rows);

struct FamilyRow {
  int index = 0;
  int n = 0;
  SearchStatus freeness = SearchStatus::kNotFound;
  TreewidthStatus status = TreewidthStatus::kExact;
  int width = -1;
};

/// Members 1..count of unboundedness_family(missing, .), each with its
/// F-freeness status and tree-width.
std::vector<FamilyRow> survey_family(const ForbiddenSet& f, Criterion missing, int count,
                                     const SurveyOptions& options = {});

}  // namespace twd
