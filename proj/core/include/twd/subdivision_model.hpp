#pragma once

#include <vector>

#include "twd/graph.hpp"

namespace twd {

/// Witness that a host graph contains a subdivision of `pattern`.
///
/// `branch[i]` is the host image of pattern vertex i. `paths[e]` is the host
/// path for the e-th edge of pattern.edges() (lexicographic order), running
/// from branch[u] to branch[v] inclusive.
struct SubdivisionModel {
  Graph pattern;
  std::vector<Vertex> branch;
  std::vector<std::vector<Vertex>> paths;

  /// Largest number of internal vertices on any path (0 when there are none).
  int max_internal() const;

  /// True iff every path has at least one internal vertex.
  bool proper() const;

  /// Branch vertices followed by internal path vertices, duplicates removed.
  std::vector<Vertex> vertices() const;

  friend bool operator==(const SubdivisionModel&,
                         const SubdivisionModel&) = default;
};

}  // namespace twd
