#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "twd/check.hpp"
#include "twd/graph.hpp"

namespace twd {

/// Tree of bags. Node i owns bags[i]; tree_edges join node indices.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int node_count() const noexcept { return static_cast<int>(bags.size()); }

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Largest bag size minus one; -1 when there are no non-empty bags.
int width(const TreeDecomposition& td);

/// Checks that the tree is a tree, bags are in range, and the three axioms:
/// vertex cover, edge cover, and connected occurrence sets.
CheckResult validate(const Graph& g, const TreeDecomposition& td);

/// For a tree edge xy: Z = V_x & V_y and the unions of bags on either side of
/// the edge.
struct SeparatorView {
  std::vector<Vertex> separator;
  std::vector<Vertex> side_x;
  std::vector<Vertex> side_y;
};

SeparatorView separator_view(const TreeDecomposition& td, int x, int y);

/// Width of an elimination ordering: the largest number of later neighbours
/// a vertex has in the filled graph at the moment it is eliminated.
int ordering_width(const Graph& g, std::span<const Vertex> order);

/// Bag of order[i] = {order[i]} plus its later neighbours in the filled
/// graph; node i hangs below the node of its earliest later neighbour.
/// Roots are chained so the result is a single tree. Node i belongs to
/// order[i].
TreeDecomposition decomposition_from_ordering(const Graph& g,
                                              std::span<const Vertex> order);

/// Greedy minimum fill-in ordering (ties: minimum degree, then index).
std::vector<Vertex> min_fill_ordering(const Graph& g);

/// Degeneracy-style lower bound: repeatedly delete a minimum-degree vertex
/// and report the largest minimum degree seen.
int degeneracy_lower_bound(const Graph& g);

enum class TreewidthStatus { kExact, kBudgetExceeded };

struct TreewidthResult {
  TreewidthStatus status = TreewidthStatus::kExact;
  /// Exact width when status is kExact; otherwise equal to `upper`.
  int width = -1;
  int lower = -1;
  int upper = -1;
  /// Always valid; achieves `upper`.
  TreeDecomposition decomposition;
  std::vector<Vertex> ordering;
  std::uint64_t states = 0;
};

inline constexpr std::uint64_t kDefaultTreewidthBudget = 5'000'000;
/// Vertex cap of exact_treewidth (subsets are held in 64-bit masks).
inline constexpr int kExactTreewidthCap = 64;

/// Exact tree-width by dynamic programming over eliminated vertex sets,
/// pruned by a min-fill upper bound and a degeneracy lower bound, run per
/// connected component. `budget` bounds the number of DP transitions. Throws
/// ContractError above kExactTreewidthCap vertices.
TreewidthResult exact_treewidth(const Graph& g,
                                std::uint64_t budget = kDefaultTreewidthBudget);

/// Requires a valid td. For every tree edge xy and u, v in Z_xy, both sides
/// must contain a u-v path whose internal vertices avoid Z_xy. The witness
/// of a violation is {x, y, u, v, side} with side 0 for x and 1 for y.
CheckResult is_tight(const Graph& g, const TreeDecomposition& td);

/// The torso at `node`: G[V_x] plus a clique on V_x & V_y for each tree
/// neighbour y. Local vertex i is vertices[i] (the bag in ascending order).
struct TorsoView {
  int node = 0;
  std::vector<Vertex> vertices;
  Graph graph;
};

/// Throws ContractError for an unknown node.
TorsoView torso(const Graph& g, const TreeDecomposition& td, int node);

/// Ok iff every torso has fewer than k vertices of torso-degree at least
/// 2(k-1)(k-2). A violation's witness lists the node followed by those
/// vertices (host labels).
CheckResult check_torso_degree_profile(const Graph& g, const TreeDecomposition& td,
                                       int k);

/// Combines decompositions of the torsos (per_torso[x] uses the local labels
/// of torso(g, td, x)) into one decomposition of g. For every tree edge xy a
/// fresh bag Z_xy is attached to the lowest-index torso-x bag containing it,
/// another to the lowest-index torso-y bag containing it, and the two are
/// linked. Throws ContractError when an input does not validate or a
/// per-torso decomposition has no bag covering some Z_xy.
TreeDecomposition glue_torso_decompositions(
    const Graph& g, const TreeDecomposition& td,
    std::span<const TreeDecomposition> per_torso);

}  // namespace twd
