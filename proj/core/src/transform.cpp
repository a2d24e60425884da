#include "twd/transform.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "twd/errors.hpp"

namespace twd {

Graph line_graph(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  // incident[v] lists the indices of edges touching v.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(static_cast<int>(i));
    incident[edges[i].v].push_back(static_cast<int>(i));
  }
  std::vector<Edge> out;
  for (const auto& list : incident) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        out.push_back({list[a], list[b]});
      }
    }
  }
  return Graph(static_cast<int>(edges.size()), out);
}

Subdivided subdivide(const Graph& g, const std::map<Edge, int>& times) {
  std::map<Edge, int> normalized;
  for (const auto& [edge, count] : times) {
    Edge e{std::min(edge.u, edge.v), std::max(edge.u, edge.v)};
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) {
      throw ContractError("subdivide: " + std::to_string(edge.u) + "-" +
                          std::to_string(edge.v) + " is not an edge");
    }
    if (count < 0) {
      throw ContractError("subdivide: negative count on edge " +
                          std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    normalized[e] = count;
  }

  Subdivided result;
  result.model.pattern = g;
  result.model.branch.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) result.model.branch[v] = v;

  int next = g.order();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    auto it = normalized.find(e);
    int count = it == normalized.end() ? 0 : it->second;
    std::vector<Vertex> path{e.u};
    for (int i = 0; i < count; ++i) path.push_back(next++);
    path.push_back(e.v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      edges.push_back({path[i], path[i + 1]});
    }
    result.model.paths.push_back(std::move(path));
  }
  result.graph = Graph(next, edges);
  return result;
}

Subdivided subdivide(const Graph& g, int times) {
  std::map<Edge, int> counts;
  for (const Edge& e : g.edges()) counts[e] = times;
  return subdivide(g, counts);
}

Graph disjoint_union(std::span<const Graph> graphs) {
  int offset = 0;
  std::vector<Edge> edges;
  for (const Graph& g : graphs) {
    for (const Edge& e : g.edges()) edges.push_back({e.u + offset, e.v + offset});
    offset += g.order();
  }
  return Graph(offset, edges);
}

}  // namespace twd
