#include "twd/extraction.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "twd/blocks.hpp"
#include "twd/errors.hpp"
#include "twd/generators.hpp"
#include "twd/recognition.hpp"

namespace twd {
namespace {

ExtractionOutcome insufficient(std::string stage, std::string shortfall,
                               std::vector<TraceStep> trace = {}) {
  ExtractionOutcome out;
  out.kind = OutcomeKind::kInsufficient;
  out.stage = std::move(stage);
  out.shortfall = std::move(shortfall);
  out.trace = std::move(trace);
  return out;
}

bool linked(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  for (Vertex u : x) {
    for (Vertex v : y) {
      if (g.adjacent(u, v)) return true;
    }
  }
  return false;
}

// Lowest vertex of x adjacent to some vertex of y, or -1.
Vertex first_contact(const Graph& g, const std::vector<Vertex>& x,
                     std::span<const Vertex> y) {
  Vertex best = -1;
  for (Vertex u : x) {
    if ((best < 0 || u < best) && linked(g, std::span<const Vertex>(&u, 1), y)) best = u;
  }
  return best;
}

Embedding biclique_embedding(std::vector<Vertex> left, std::vector<Vertex> right) {
  Embedding e;
  e.mode = EmbedMode::kSubgraph;
  e.map = std::move(left);
  e.map.insert(e.map.end(), right.begin(), right.end());
  return e;
}

// Sub-path of pattern edge {i, j} oriented from branch i to branch j.
std::vector<Vertex> oriented_path(const SubdivisionModel& model,
                                  const std::map<std::pair<int, int>, int>& index,
                                  int i, int j) {
  const auto& path = model.paths[index.at({std::min(i, j), std::max(i, j)})];
  if (i < j) return path;
  return {path.rbegin(), path.rend()};
}

std::vector<std::vector<Vertex>> as_sets(std::span<const Vertex> vertices) {
  std::vector<std::vector<Vertex>> out;
  out.push_back({vertices.begin(), vertices.end()});
  return out;
}

}  // namespace

const char* to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kBicliqueSubgraph: return "biclique-subgraph";
    case OutcomeKind::kInducedSubdivision: return "induced-subdivision";
    case OutcomeKind::kKmSubdivision: return "km-subdivision";
    case OutcomeKind::kInsufficient: return "insufficient";
  }
  return "insufficient";
}

CheckResult verify_outcome(const Graph& host, const ExtractionOutcome& outcome, int p) {
  switch (outcome.kind) {
    case OutcomeKind::kBicliqueSubgraph: {
      if (!outcome.biclique) return CheckResult::Fail("biclique outcome without embedding");
      const int t = static_cast<int>(outcome.biclique->map.size()) / 2;
      if (t < 1 || outcome.biclique->map.size() % 2 != 0) {
        return CheckResult::Fail("biclique embedding has an odd or empty map");
      }
      return verify_embedding(generate(complete_bipartite(t, t)), host, *outcome.biclique);
    }
    case OutcomeKind::kInducedSubdivision: {
      if (!outcome.model) return CheckResult::Fail("subdivision outcome without model");
      if (!is_complete_bipartite(outcome.model->pattern).member) {
        return CheckResult::Fail("pattern is not complete bipartite");
      }
      return verify_subdivision_model(host, *outcome.model, true, true, p);
    }
    case OutcomeKind::kKmSubdivision: {
      if (!outcome.model) return CheckResult::Fail("subdivision outcome without model");
      if (!is_complete(outcome.model->pattern).member) {
        return CheckResult::Fail("pattern is not complete");
      }
      return verify_subdivision_model(host, *outcome.model, false, false, p);
    }
    case OutcomeKind::kInsufficient: break;
  }
  return CheckResult::Fail("insufficient outcome carries no witness");
}

std::vector<Vertex> shortcut_to_chordless(const Graph& g, std::span<const Vertex> path) {
  std::vector<Vertex> out;
  if (path.empty()) return out;
  std::size_t i = 0;
  out.push_back(path[0]);
  while (i + 1 < path.size()) {
    std::size_t next = i + 1;
    for (std::size_t j = path.size() - 1; j > i + 1; --j) {
      if (g.adjacent(path[i], path[j])) {
        next = j;
        break;
      }
    }
    out.push_back(path[next]);
    i = next;
  }
  return out;
}

ExtractionOutcome lemma_clique_extract(const Graph& g,
                                       std::span<const std::vector<Vertex>> sets,
                                       int a, int b) {
  if (a < 1 || b < 1) throw ContractError("lemma_clique_extract: a and b must be >= 1");
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty() || static_cast<int>(sets[i].size()) > a) {
      throw ContractError("lemma_clique_extract: set " + std::to_string(i) +
                          " must have between 1 and a vertices");
    }
    for (Vertex v : sets[i]) {
      if (v < 0 || v >= g.order()) {
        throw ContractError("lemma_clique_extract: vertex out of range");
      }
      if (used[v]) throw ContractError("lemma_clique_extract: sets are not disjoint");
      used[v] = 1;
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!linked(g, sets[i], sets[j])) {
        throw ContractError("lemma_clique_extract: no edge between sets " +
                            std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }

  const int n = static_cast<int>(sets.size());
  if (n < 2 * b) {
    return insufficient("family", "family too small: " + std::to_string(n) +
                                      " sets, need " + std::to_string(2 * b));
  }

  for (int r = b; r <= n - b; ++r) {
    // Colour each remaining set by its first contact in each of the r A-sets.
    std::map<std::vector<Vertex>, std::vector<int>> classes;
    std::vector<std::vector<Vertex>> order;
    for (int y = r; y < n; ++y) {
      std::vector<Vertex> colour;
      for (int x = 0; x < r; ++x) colour.push_back(first_contact(g, sets[x], sets[y]));
      auto [it, inserted] = classes.try_emplace(colour);
      if (inserted) order.push_back(colour);
      it->second.push_back(y);
    }
    for (const auto& u : order) {
      const auto& members = classes[u];
      if (static_cast<int>(members.size()) < b) continue;
      std::vector<int> chosen(members.begin(), members.begin() + b);

      std::map<std::vector<Vertex>, std::vector<Vertex>> u_classes;
      std::vector<std::vector<Vertex>> u_order;
      for (Vertex vertex : u) {
        std::vector<Vertex> colour;
        for (int y : chosen) {
          colour.push_back(first_contact(g, sets[y], std::span<const Vertex>(&vertex, 1)));
        }
        auto [it, inserted] = u_classes.try_emplace(colour);
        if (inserted) u_order.push_back(colour);
        it->second.push_back(vertex);
      }
      for (const auto& u2 : u_order) {
        const auto& u1_all = u_classes[u2];
        if (static_cast<int>(u1_all.size()) < b) continue;
        std::vector<Vertex> u1(u1_all.begin(), u1_all.begin() + b);

        ExtractionOutcome out;
        out.kind = OutcomeKind::kBicliqueSubgraph;
        out.biclique = biclique_embedding(u1, u2);
        std::vector<std::vector<Vertex>> a_sets(sets.begin(), sets.begin() + r);
        std::vector<std::vector<Vertex>> b_sets;
        for (int y : chosen) b_sets.push_back(sets[y]);
        out.trace = {{"A", std::move(a_sets)},
                     {"B", std::move(b_sets)},
                     {"U", as_sets(u)},
                     {"U_1", as_sets(u1)},
                     {"U_2", as_sets(u2)}};
        if (verify_outcome(g, out, 0)) return out;
      }
    }
  }
  return insufficient("colouring", "no split of the family gave colour classes of size " +
                                       std::to_string(b));
}

ExtractionOutcome bigclique_extract(const Graph& host, const SubdivisionModel& input,
                                    int p, int r) {
  if (p < 1 || r < 1) throw ContractError("bigclique_extract: p and r must be >= 1");
  if (!is_complete(input.pattern).member) {
    throw ContractError("bigclique_extract: model pattern is not complete");
  }
  if (auto check = verify_subdivision_model(host, input, false, false, p); !check) {
    throw ContractError("bigclique_extract: model does not verify: " +
                        check.violation->condition);
  }
  SubdivisionModel model = input;
  for (auto& path : model.paths) path = shortcut_to_chordless(host, path);

  std::map<std::pair<int, int>, int> index;
  {
    const auto edges = model.pattern.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) index[{edges[e].u, edges[e].v}] = static_cast<int>(e);
  }
  std::vector<TraceStep> trace;

  // Stage 1: Ramsey step on the branch vertices.
  const Graph branch_graph = host.induced(model.branch);
  if (SearchResult clique = find_clique(branch_graph, 2 * p); clique.found()) {
    std::vector<Vertex> left, right;
    for (int i = 0; i < 2 * p; ++i) {
      Vertex v = model.branch[clique.embedding->map[i]];
      (i < p ? left : right).push_back(v);
    }
    ExtractionOutcome out;
    out.kind = OutcomeKind::kBicliqueSubgraph;
    out.biclique = biclique_embedding(left, right);
    trace.push_back({"clique", as_sets(out.biclique->map)});
    out.trace = std::move(trace);
    return out;
  }
  const std::vector<Vertex> a_local = maximum_independent_set(branch_graph);
  std::vector<Vertex> a_host;
  for (Vertex i : a_local) a_host.push_back(model.branch[i]);
  trace.push_back({"A", as_sets(a_host)});
  const int size_a = static_cast<int>(a_local.size());
  if (size_a < 2 * r) {
    return insufficient("branch", "branch set too small: independent set of " +
                                      std::to_string(size_a) + " branch vertices, need " +
                                      std::to_string(2 * r),
                        std::move(trace));
  }

  // P_{u,v} - u as host vertices, u and v pattern vertices.
  auto tail = [&](int u, int v) {
    auto path = oriented_path(model, index, u, v);
    return std::vector<Vertex>(path.begin() + 1, path.end());
  };
  auto try_lemma = [&](const std::vector<std::vector<Vertex>>& sets,
                       std::vector<TraceStep>& steps) -> std::optional<ExtractionOutcome> {
    std::size_t largest = 1;
    for (const auto& s : sets) largest = std::max(largest, s.size());
    ExtractionOutcome sub = lemma_clique_extract(host, sets, static_cast<int>(largest), p);
    if (!sub.sufficient()) return std::nullopt;
    for (auto& step : sub.trace) steps.push_back(std::move(step));
    sub.trace = std::move(steps);
    return sub;
  };

  std::string last_shortfall;
  for (int size_b = r; size_b <= size_a - r; ++size_b) {
    std::vector<int> b_set(a_local.begin(), a_local.begin() + size_b);
    std::vector<int> c_set(a_local.begin() + size_b, a_local.end());
    std::vector<TraceStep> steps = trace;
    steps.push_back({"B", as_sets(b_set)});
    steps.push_back({"C", as_sets(c_set)});

    // The claim's induction: thin C so that paths from each u in B are
    // pairwise edge-free beyond u.
    bool failed = false;
    for (int u : b_set) {
      const int k = static_cast<int>(c_set.size());
      std::vector<std::vector<Vertex>> tails;
      for (int v : c_set) tails.push_back(tail(u, v));
      std::vector<Edge> edges;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          if (linked(host, tails[i], tails[j])) edges.push_back({i, j});
        }
      }
      const Graph linkage(k, edges);
      const auto clique = maximum_clique(linkage);
      if (static_cast<int>(clique.size()) >= 2 * p) {
        std::vector<std::vector<Vertex>> sets;
        for (Vertex i : clique) sets.push_back(tails[i]);
        auto local_steps = steps;
        local_steps.push_back({"linked", sets});
        if (auto found = try_lemma(sets, local_steps)) return *found;
      }
      std::vector<int> next;
      for (Vertex i : maximum_independent_set(linkage)) next.push_back(c_set[i]);
      c_set = std::move(next);
      steps.push_back({"C_i", as_sets(c_set)});
      if (static_cast<int>(c_set.size()) < r) {
        last_shortfall = "C_i shrank to " + std::to_string(c_set.size()) +
                         " vertices with |B| = " + std::to_string(size_b);
        failed = true;
        break;
      }
    }
    if (failed) continue;

    // Final step: V from C_q, W from B via S(u)-linkage.
    std::vector<int> v_set(c_set.begin(), c_set.begin() + r);
    std::vector<std::vector<Vertex>> s_sets;
    for (int u : b_set) {
      std::vector<Vertex> s{model.branch[u]};
      for (int v : v_set) {
        auto path = oriented_path(model, index, u, v);
        s.insert(s.end(), path.begin() + 1, path.end() - 1);
      }
      s_sets.push_back(std::move(s));
    }
    steps.push_back({"V", as_sets(v_set)});
    steps.push_back({"S(u)", s_sets});
    const int kb = static_cast<int>(b_set.size());
    std::vector<Edge> edges;
    for (int i = 0; i < kb; ++i) {
      for (int j = i + 1; j < kb; ++j) {
        if (linked(host, s_sets[i], s_sets[j])) edges.push_back({i, j});
      }
    }
    const Graph linkage(kb, edges);
    const auto clique = maximum_clique(linkage);
    if (static_cast<int>(clique.size()) >= 2 * p) {
      std::vector<std::vector<Vertex>> sets;
      for (Vertex i : clique) sets.push_back(s_sets[i]);
      auto local_steps = steps;
      local_steps.push_back({"linked", sets});
      if (auto found = try_lemma(sets, local_steps)) return *found;
    }
    const auto independent = maximum_independent_set(linkage);
    if (static_cast<int>(independent.size()) < r) {
      last_shortfall = "independent set W of " + std::to_string(independent.size()) +
                       " vertices in the S(u)-linkage graph, need " + std::to_string(r);
      continue;
    }
    std::vector<int> w_set;
    for (int i = 0; i < r; ++i) w_set.push_back(b_set[independent[i]]);
    steps.push_back({"W", as_sets(w_set)});

    SubdivisionModel result;
    result.pattern = generate(complete_bipartite(r, r));
    for (int u : w_set) result.branch.push_back(model.branch[u]);
    for (int v : v_set) result.branch.push_back(model.branch[v]);
    for (const Edge& e : result.pattern.edges()) {
      result.paths.push_back(oriented_path(model, index, w_set[e.u], v_set[e.v - r]));
    }
    ExtractionOutcome out;
    out.kind = OutcomeKind::kInducedSubdivision;
    out.model = std::move(result);
    out.trace = std::move(steps);
    if (verify_outcome(host, out, p)) return out;
    last_shortfall = "assembled K_{r,r} subdivision failed verification: " +
                     verify_outcome(host, out, p).violation->condition;
  }
  return insufficient("final", last_shortfall.empty() ? "no split of A succeeded"
                                                      : last_shortfall,
                      std::move(trace));
}

ExtractionOutcome block_subdivision_extract(const Graph& g, std::span<const Vertex> block,
                                            int p, int m_target) {
  if (p < 0 || m_target < 1) {
    throw ContractError("block_subdivision_extract: need p >= 0 and m_target >= 1");
  }
  std::vector<Vertex> sorted(block.begin(), block.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (v < 0 || v >= g.order()) {
      throw ContractError("block_subdivision_extract: vertex out of range");
    }
  }
  if (static_cast<int>(sorted.size()) < m_target) {
    return insufficient("block", "block has " + std::to_string(sorted.size()) +
                                     " vertices, need " + std::to_string(m_target));
  }
  std::vector<Vertex> branch(sorted.begin(), sorted.begin() + m_target);

  std::map<std::pair<Vertex, Vertex>, std::vector<std::vector<Vertex>>> menger;
  for (int i = 0; i < m_target; ++i) {
    for (int j = i + 1; j < m_target; ++j) {
      if (g.adjacent(branch[i], branch[j])) continue;
      SeparatorResult sep = pair_connectivity(g, branch[i], branch[j]);
      if (sep.kappa < m_target - 1) {
        throw ContractError("block_subdivision_extract: vertices " +
                            std::to_string(branch[i]) + " and " +
                            std::to_string(branch[j]) + " are only " +
                            std::to_string(sep.kappa) + "-connected");
      }
      menger[{i, j}] = std::move(sep.paths);
    }
  }

  std::vector<char> is_branch(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : branch) is_branch[v] = 1;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);

  SubdivisionModel model;
  model.pattern = generate(complete(m_target));
  model.branch = branch;
  std::vector<TraceStep> trace{{"B", as_sets(branch)}};
  for (const Edge& e : model.pattern.edges()) {
    const Vertex x = branch[e.u];
    const Vertex y = branch[e.v];
    if (g.adjacent(x, y)) {
      model.paths.push_back({x, y});
      continue;
    }
    std::vector<std::vector<Vertex>> candidates;
    for (const auto& raw : menger[{e.u, e.v}]) {
      auto path = shortcut_to_chordless(g, raw);
      if (static_cast<int>(path.size()) - 1 > p + 1) continue;
      bool clean = std::none_of(path.begin() + 1, path.end() - 1,
                                [&](Vertex w) { return is_branch[w]; });
      if (clean) candidates.push_back(std::move(path));
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& l, const auto& r) {
      return l.size() != r.size() ? l.size() < r.size() : l < r;
    });
    trace.push_back({"P(" + std::to_string(x) + "," + std::to_string(y) + ")", candidates});
    auto chosen = std::find_if(candidates.begin(), candidates.end(), [&](const auto& path) {
      return std::none_of(path.begin() + 1, path.end() - 1, [&](Vertex w) { return used[w]; });
    });
    if (chosen == candidates.end()) {
      return insufficient("paths",
                          "no short path for pair " + std::to_string(x) + "," +
                              std::to_string(y) + " avoiding earlier paths",
                          std::move(trace));
    }
    for (auto it = chosen->begin() + 1; it != chosen->end() - 1; ++it) used[*it] = 1;
    model.paths.push_back(*chosen);
  }

  ExtractionOutcome out;
  out.kind = OutcomeKind::kKmSubdivision;
  out.model = std::move(model);
  out.trace = std::move(trace);
  if (auto check = verify_outcome(g, out, p); !check) {
    return insufficient("verify", check.violation->condition, std::move(out.trace));
  }
  return out;
}

TripodProbe long_path_tripod_probe(const Graph& g, Vertex x,
                                   std::span<const std::vector<Vertex>> prefixes) {
  if (prefixes.size() < 3) {
    throw ContractError("long_path_tripod_probe: need at least three prefixes");
  }
  if (x < 0 || x >= g.order()) throw ContractError("long_path_tripod_probe: x out of range");
  const std::size_t p = prefixes[0].size();
  if (p == 0) throw ContractError("long_path_tripod_probe: prefixes must be non-empty");
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  used[x] = 1;
  for (const auto& prefix : prefixes) {
    if (prefix.size() != p) {
      throw ContractError("long_path_tripod_probe: prefixes must have equal length");
    }
    std::vector<Vertex> walk{x};
    for (Vertex v : prefix) {
      if (v < 0 || v >= g.order() || used[v]) {
        throw ContractError("long_path_tripod_probe: prefixes must be disjoint and avoid x");
      }
      used[v] = 1;
      walk.push_back(v);
    }
    for (std::size_t i = 0; i < walk.size(); ++i) {
      for (std::size_t j = i + 1; j < walk.size(); ++j) {
        if (g.adjacent(walk[i], walk[j]) != (j == i + 1)) {
          throw ContractError("long_path_tripod_probe: x plus a prefix must induce a path");
        }
      }
    }
  }

  TripodProbe probe;
  const int k = static_cast<int>(prefixes.size());
  std::vector<std::vector<char>> link(static_cast<std::size_t>(k),
                                      std::vector<char>(static_cast<std::size_t>(k), 0));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (linked(g, prefixes[i], prefixes[j])) {
        link[i][j] = link[j][i] = 1;
        probe.linked.push_back({i, j});
      }
    }
  }
  for (int i = 0; i < k && !probe.tripod; ++i) {
    for (int j = i + 1; j < k && !probe.tripod; ++j) {
      if (link[i][j]) continue;
      for (int l = j + 1; l < k; ++l) {
        if (link[i][l] || link[j][l]) continue;
        Embedding e;
        e.mode = EmbedMode::kInduced;
        e.map.push_back(x);
        for (int arm : {i, j, l}) {
          e.map.insert(e.map.end(), prefixes[arm].begin(), prefixes[arm].end());
        }
        const int pi = static_cast<int>(p);
        if (verify_embedding(generate(tripod(pi, pi, pi)), g, e)) {
          probe.tripod = std::move(e);
          probe.chosen = std::array<int, 3>{i, j, l};
          break;
        }
      }
    }
  }
  return probe;
}

}  // namespace twd
