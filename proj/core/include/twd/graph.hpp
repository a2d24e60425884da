#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace twd {

using Vertex = int;

/// Undirected edge. Graph always reports edges normalized to u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Library-wide cap on the number of vertices.
inline constexpr int kMaxVertices = 4096;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency is held twice: as bitset rows for
/// O(1) pair queries and as sorted neighbor lists (CSR) for iteration.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Duplicate edges (in either orientation) are collapsed. Throws
  /// ContractError on self-loops, out-of-range endpoints or n > kMaxVertices.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  bool empty() const noexcept { return n_ == 0; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ +
                  (static_cast<std::size_t>(v) >> 6)] >>
            (v & 63)) &
           1u;
  }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v],
            targets_.data() + offsets_[v + 1]};
  }

  int degree(Vertex v) const noexcept {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }

  int max_degree() const noexcept;

  /// Bitset row of v: bit w of word w/64 is set iff v ~ w.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  std::size_t words_per_row() const noexcept { return words_; }

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// G[vertices]; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void build(std::span<const Edge> edges);

  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace twd
