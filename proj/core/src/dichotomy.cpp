#include "twd/dichotomy.hpp"

#include <algorithm>
#include <sstream>

#include "twd/errors.hpp"
#include "twd/generators.hpp"
#include "twd/recognition.hpp"
#include "twd/transform.hpp"

namespace twd {
namespace {

int ceil_half(int x) { return x <= 0 ? 0 : (x + 1) / 2; }

// Smallest p such that every component embeds in S_p (or T_p).
int arm_requirement(const std::vector<ComponentShape>& shapes, bool line) {
  int p = 0;
  for (const auto& s : shapes) {
    if (s.tag == ShapeTag::kPath) {
      // S_p holds induced paths of up to 2p+1 vertices, T_p of up to 2p+2.
      p = std::max(p, ceil_half(s.params[0] - (line ? 2 : 1)));
    } else {
      p = std::max(p, s.params[2]);
    }
  }
  return p;
}

// Larger side of a complete bipartite member (the whole order when edgeless).
int larger_side(const Graph& g) {
  if (g.size() == 0) return g.order();
  int side = 0;
  for (const auto& part : connected_components(g.complement())) {
    side = std::max(side, static_cast<int>(part.size()));
  }
  return side;
}

}  // namespace

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::kComplete: return "complete";
    case Criterion::kCompleteBipartite: return "complete_bipartite";
    case Criterion::kTripod: return "tripod";
    case Criterion::kLineOfTripod: return "line_of_tripod";
  }
  return "complete";
}

Criterion parse_criterion(std::string_view text) {
  if (text == "complete") return Criterion::kComplete;
  if (text == "complete_bipartite" || text == "bipartite" || text == "complete-bipartite") {
    return Criterion::kCompleteBipartite;
  }
  if (text == "tripod") return Criterion::kTripod;
  if (text == "line_of_tripod" || text == "line-tripod" || text == "line-of-tripod") {
    return Criterion::kLineOfTripod;
  }
  throw SpecError("unknown criterion '" + std::string(text) + "'");
}

DichotomyVerdict decide_bounded(const ForbiddenSet& f, const DichotomyOptions& options) {
  DichotomyVerdict verdict;
  int p = 1;
  std::optional<int> smallest_complete;
  std::optional<int> smallest_side;
  std::optional<std::size_t> edgeless;

  auto fill = [&](Criterion c, std::size_t i) {
    auto& slot = verdict.witness[static_cast<std::size_t>(c)];
    if (!slot) {
      slot = i;
      verdict.witness_name[static_cast<std::size_t>(c)] = f.members[i].name;
    }
  };

  for (std::size_t i = 0; i < f.members.size(); ++i) {
    const Graph& g = f.members[i].graph;
    if (is_complete(g).member) {
      fill(Criterion::kComplete, i);
      if (!smallest_complete || g.order() < *smallest_complete) smallest_complete = g.order();
    }
    if (is_complete_bipartite(g).member) {
      fill(Criterion::kCompleteBipartite, i);
      const int s = larger_side(g);
      if (!smallest_side || s < *smallest_side) smallest_side = s;
    } else if (g.size() == 0 && !edgeless) {
      edgeless = i;
    }
    if (auto v = is_tripod(g); v.member) {
      fill(Criterion::kTripod, i);
      p = std::max(p, arm_requirement(v.shapes, false));
    }
    if (auto v = is_line_of_tripod(g, false); v.member) {
      fill(Criterion::kLineOfTripod, i);
      p = std::max(p, arm_requirement(v.shapes, true));
    }
  }

  const auto bip = static_cast<std::size_t>(Criterion::kCompleteBipartite);
  if (!verdict.witness[bip] && edgeless) {
    const std::string& name = f.members[*edgeless].name;
    if (options.lenient_bipartite) {
      fill(Criterion::kCompleteBipartite, *edgeless);
      verdict.notes.push_back("edgeless member '" + name +
                              "' accepted as a degenerate complete bipartite graph");
    } else if (smallest_complete) {
      fill(Criterion::kCompleteBipartite, *edgeless);
      verdict.notes.push_back("edgeless member '" + name +
                              "' fills the complete_bipartite slot: together with a "
                              "complete member it leaves only finitely many F-free graphs");
    }
    if (verdict.witness[bip]) {
      const int s = f.members[*edgeless].graph.order();
      if (!smallest_side || s < *smallest_side) smallest_side = s;
    }
  }

  Bound suggested{BigInt(p)};
  if (smallest_complete && smallest_side) {
    Bound threshold = constants::ramsey_upper(Bound(BigInt(std::max(*smallest_side, 1))),
                                              Bound(BigInt(std::max(*smallest_complete, 1))));
    if (threshold.value > suggested.value) suggested = threshold;
  }
  verdict.suggested_p = suggested;

  for (Criterion c : kCriteria) {
    if (!verdict.witness[static_cast<std::size_t>(c)]) verdict.missing.push_back(c);
  }
  verdict.bounded = verdict.missing.empty();
  return verdict;
}

Graph unboundedness_family(Criterion missing, int i) {
  if (i < 1) throw ContractError("unboundedness_family: index must be >= 1");
  switch (missing) {
    case Criterion::kComplete: return generate(complete(i + 2));
    case Criterion::kCompleteBipartite: return generate(complete_bipartite(i + 2, i + 2));
    case Criterion::kTripod: return generate(subdivided_complete(i + 2, 1));
    case Criterion::kLineOfTripod:
      return line_graph(generate(subdivided_complete(i + 2, 1)));
  }
  throw ContractError("unboundedness_family: unknown criterion");
}

std::uint64_t survey_draw_seed(std::uint64_t seed, int n, int index) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(n));
  return splitmix64(h ^ static_cast<std::uint64_t>(index));
}

std::vector<SurveyRow> survey(const ForbiddenSet& f, const SurveyOptions& options) {
  std::vector<SurveyRow> rows;
  if (options.samples <= 0) return rows;
  if (options.n_min < 0 || options.n_max > kExactTreewidthCap || options.n_min > options.n_max) {
    throw ContractError("survey: need 0 <= n_min <= n_max <= " +
                        std::to_string(kExactTreewidthCap));
  }
  std::vector<Graph> forbidden;
  for (const auto& m : f.members) forbidden.push_back(m.graph);

  for (int n = options.n_min; n <= options.n_max; ++n) {
    const double prob = options.edge_probability.value_or(n <= 2 ? 1.0 : 2.0 / n);
    SurveyRow row;
    row.n = n;
    row.samples = options.samples;
    std::vector<int> widths;
    for (int index = 0; index < options.samples; ++index) {
      const Graph g = random_graph(n, prob, survey_draw_seed(options.seed, n, index));
      FreenessResult freeness = is_f_free(g, forbidden, options.freeness_budget);
      if (freeness.status == SearchStatus::kBudgetExceeded) {
        ++row.budget_exceeded;
        continue;
      }
      if (!freeness.is_free()) continue;
      ++row.accepted;
      TreewidthResult tw = exact_treewidth(g, options.treewidth_budget);
      if (tw.status != TreewidthStatus::kExact) {
        ++row.budget_exceeded;
        continue;
      }
      widths.push_back(tw.width);
    }
    if (!widths.empty()) {
      std::sort(widths.begin(), widths.end());
      row.tw_min = widths.front();
      row.tw_max = widths.back();
      row.tw_med = widths[(widths.size() - 1) / 2];
    }
    rows.push_back(row);
  }
  return rows;
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream out;
  out << "n,samples,accepted,tw_min,tw_med,tw_max,budget_exceeded\n";
  auto width = [](int w) { return w < 0 ? std::string() : std::to_string(w); };
  for (const auto& r : rows) {
    out << r.n << ',' << r.samples << ',' << r.accepted << ',' << width(r.tw_min) << ','
        << width(r.tw_med) << ',' << width(r.tw_max) << ',' << r.budget_exceeded << '\n';
  }
  return out.str();
}

std::vector<FamilyRow> survey_family(const ForbiddenSet& f, Criterion missing, int count,
                                     const SurveyOptions& options) {
  std::vector<Graph> forbidden;
  for (const auto& m : f.members) forbidden.push_back(m.graph);
  std::vector<FamilyRow> rows;
  for (int i = 1; i <= count; ++i) {
    const Graph g = unboundedness_family(missing, i);
    FamilyRow row;
    row.index = i;
    row.n = g.order();
    row.freeness = is_f_free(g, forbidden, options.freeness_budget).status;
    if (g.order() <= kExactTreewidthCap) {
      TreewidthResult tw = exact_treewidth(g, options.treewidth_budget);
      row.status = tw.status;
      row.width = tw.width;
    } else {
      row.status = TreewidthStatus::kBudgetExceeded;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace twd
