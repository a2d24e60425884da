#pragma once

#include <optional>
#include <vector>

#include "twd/graph.hpp"

namespace twd {

/// Local vertex connectivity between two vertices.
struct SeparatorResult {
  /// True for adjacent pairs: no vertex set separates them.
  bool infinite = false;
  /// Minimum number of vertices (other than u, v) whose removal separates u
  /// from v. Meaningless when infinite.
  int kappa = 0;
  /// A minimum separator, ascending. Empty when infinite.
  std::vector<Vertex> cut;
  /// kappa internally disjoint u-v paths, each listed from u to v.
  std::vector<std::vector<Vertex>> paths;
};

/// Unit-capacity max flow on the vertex-split digraph (in-node -> out-node of
/// capacity 1; source u's out-node, sink v's in-node). Throws ContractError
/// when u == v or either vertex is out of range.
SeparatorResult pair_connectivity(const Graph& g, Vertex u, Vertex v);

/// Kappa for every unordered pair; entry [u][v] is -1 for adjacent pairs
/// (infinite) and for the diagonal.
std::vector<std::vector<int>> connectivity_table(const Graph& g);

/// u and v are inseparable at level k: adjacent, or kappa(u, v) >= k.
/// Graph whose edges join the pairs inseparable at level k.
Graph inseparability_graph(const Graph& g, int k);
Graph inseparability_graph(const std::vector<std::vector<int>>& table, const Graph& g,
                           int k);

/// Some k-block: a maximal pairwise k-inseparable set of at least k vertices,
/// ascending. nullopt when none exists. Throws ContractError for k < 1.
std::optional<std::vector<Vertex>> exists_k_block(const Graph& g, int k);

struct BlockNumber {
  int value = 0;
  std::vector<Vertex> witness;
};

/// Largest b such that g has a b-block, with one such block. Requires n >= 1.
BlockNumber block_number(const Graph& g);

struct BlockReport {
  int k = 0;
  /// All k-blocks, each ascending, in lexicographic order.
  std::vector<std::vector<Vertex>> blocks;
  int block_number = 0;
};

/// Enumerates every k-block. With k unset, k defaults to the block number.
BlockReport block_report(const Graph& g, std::optional<int> k = std::nullopt);

}  // namespace twd
