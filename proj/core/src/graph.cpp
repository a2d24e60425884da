#include "twd/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "twd/errors.hpp"

namespace twd {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw ContractError("vertex count " + std::to_string(n) +
                        " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  build(edges);
}

void Graph::build(std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw ContractError("edge " + std::to_string(e.u) + "-" +
                          std::to_string(e.v) + " has an endpoint outside [0, " +
                          std::to_string(n_) + ")");
    }
    if (e.u == e.v) {
      throw ContractError("self-loop at vertex " + std::to_string(e.u));
    }
    auto set = [&](Vertex a, Vertex b) {
      bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |=
          std::uint64_t{1} << (b & 63);
    };
    set(e.u, e.v);
    set(e.v, e.u);
  }

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  targets_.clear();
  for (Vertex v = 0; v < n_; ++v) {
    auto r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = r[w];
      while (word) {
        int bit = std::countr_zero(word);
        targets_.push_back(static_cast<Vertex>(w * 64 + bit));
        word &= word - 1;
      }
    }
    offsets_[v + 1] = targets_.size();
  }
  m_ = static_cast<int>(targets_.size() / 2);
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) {
        sub.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return Graph(static_cast<int>(vertices.size()), sub);
}

Graph Graph::complement() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) out.push_back({u, v});
    }
  }
  return Graph(n_, out);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

}  // namespace twd
