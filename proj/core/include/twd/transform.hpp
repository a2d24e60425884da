#pragma once

#include <map>
#include <span>
#include <utility>

#include "twd/graph.hpp"
#include "twd/subdivision_model.hpp"

namespace twd {

/// L(G): vertex i is the i-th edge of g.edges(); two vertices are adjacent
/// iff the edges share an endpoint.
Graph line_graph(const Graph& g);

struct Subdivided {
  Graph graph;
  SubdivisionModel model;
};

/// Replaces every edge uv of g by a path with times[uv] internal vertices
/// (missing entries mean 0). Original vertices keep their labels; new vertices
/// are appended edge by edge in lexicographic edge order, from u towards v.
/// Keys may be given in either orientation. Throws ContractError for a key
/// that is not an edge of g or a negative count.
Subdivided subdivide(const Graph& g, const std::map<Edge, int>& times);

/// Uniform variant: every edge is subdivided `times` times.
Subdivided subdivide(const Graph& g, int times);

/// Relabels the inputs consecutively: graph t occupies the block right after
/// graph t-1.
Graph disjoint_union(std::span<const Graph> graphs);

}  // namespace twd
