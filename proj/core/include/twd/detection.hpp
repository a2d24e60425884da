#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "twd/check.hpp"
#include "twd/graph.hpp"
#include "twd/subdivision_model.hpp"

namespace twd {

enum class EmbedMode { kInduced, kSubgraph };

/// Injective map from pattern vertices to host vertices.
struct Embedding {
  std::vector<Vertex> map;
  EmbedMode mode = EmbedMode::kInduced;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

enum class SearchStatus { kFound, kNotFound, kBudgetExceeded };

/// kNotFound is only reported after the search space was exhausted.
struct SearchResult {
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<Embedding> embedding;
  std::uint64_t expansions = 0;

  bool found() const noexcept { return status == SearchStatus::kFound; }
};

/// Budgets count backtracking node expansions.
inline constexpr std::uint64_t kDefaultBudget = 50'000'000;
inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

/// Backtracking embedding search. Pattern vertices are placed
/// connectivity-first; host candidates are tried by descending degree, then
/// index, so witnesses are reproducible.
SearchResult find_induced(const Graph& pattern, const Graph& host,
                          std::uint64_t budget = kDefaultBudget,
                          EmbedMode mode = EmbedMode::kInduced);

/// Exact isomorphism test for graphs of at most kIsomorphismCap vertices;
/// ContractError above that.
inline constexpr int kIsomorphismCap = 12;
bool is_isomorphic(const Graph& a, const Graph& b);

/// Uncapped variant; returns the vertex bijection a -> b when one exists.
SearchResult find_isomorphism(const Graph& a, const Graph& b,
                              std::uint64_t budget = kUnlimited);

/// Exact search for a clique of size k (k >= 1), branch-and-bound with a
/// greedy coloring bound. The witness lists the clique in ascending order.
SearchResult find_clique(const Graph& g, int k);

/// A maximum clique, ascending. Empty for the empty graph.
std::vector<Vertex> maximum_clique(const Graph& g);

/// A maximum independent set, ascending.
std::vector<Vertex> maximum_independent_set(const Graph& g);

/// Disjoint A, B with |A| = |B| = t and every A x B pair adjacent. In subgraph
/// mode the parts may contain edges; in induced mode both must be independent.
/// The witness maps K_{t,t} (parts 0..t-1 and t..2t-1) onto A and B; the
/// first A in lexicographic order is reported.
SearchResult find_biclique_subgraph(const Graph& g, int t,
                                    EmbedMode mode = EmbedMode::kSubgraph);

struct FreenessResult {
  /// kNotFound: g is F-free. kFound: `member` embeds. kBudgetExceeded: no
  /// member was found but at least one search was inconclusive.
  SearchStatus status = SearchStatus::kNotFound;
  std::optional<std::size_t> member;
  std::optional<Embedding> embedding;

  bool is_free() const noexcept { return status == SearchStatus::kNotFound; }
};

/// `budget` applies to each member separately.
FreenessResult is_f_free(const Graph& g, std::span<const Graph> forbidden,
                         std::uint64_t budget = kDefaultBudget);

/// Checks that `embedding` is an injective map satisfying its mode.
CheckResult verify_embedding(const Graph& pattern, const Graph& host,
                             const Embedding& embedding);

/// Checks a subdivision model against the host:
///   branch map injective and in range; one host path per pattern edge with
///   the right endpoints; paths internally disjoint from each other and from
///   branch vertices; at most p internal vertices per path; with
///   require_proper at least one; with require_induced the model vertices
///   induce exactly the union of the path edges.
CheckResult verify_subdivision_model(const Graph& host,
                                     const SubdivisionModel& model,
                                     bool require_induced, bool require_proper,
                                     int p);

}  // namespace twd
