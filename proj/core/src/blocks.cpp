#include "twd/blocks.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "bitset.hpp"
#include "twd/detection.hpp"
#include "twd/errors.hpp"

namespace twd {
namespace {

// Vertex-split unit-capacity network. in(x) = 2x, out(x) = 2x + 1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * static_cast<std::size_t>(g.order()), -1) {
    for (Vertex x = 0; x < g.order(); ++x) add_arc(in(x), out(x), 1);
    // Edge arcs never saturate, so every minimum cut consists of vertex arcs.
    for (Vertex x = 0; x < g.order(); ++x) {
      for (Vertex y : g.neighbors(x)) add_arc(out(x), in(y), g.order() + 1);
    }
  }

  static int in(Vertex x) { return 2 * x; }
  static int out(Vertex x) { return 2 * x + 1; }

  int max_flow(int source, int sink) {
    int flow = 0;
    while (augment(source, sink)) ++flow;
    return flow;
  }

  std::vector<char> reachable(int source) const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int a = head_[x]; a >= 0; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          queue.push_back(to_[a]);
        }
      }
    }
    return seen;
  }

  // Walks one unit of flow from source to sink, consuming it.
  std::vector<int> take_flow_path(int source, int sink) {
    std::vector<int> nodes{source};
    int x = source;
    while (x != sink) {
      int chosen = -1;
      for (int a = head_[x]; a >= 0; a = next_[a]) {
        if (is_forward_[a] && flow_[a] > 0) {
          chosen = a;
          break;
        }
      }
      if (chosen < 0) break;
      --flow_[chosen];
      x = to_[chosen];
      nodes.push_back(x);
    }
    return nodes;
  }

 private:
  void add_arc(int from, int to, int cap) {
    push(from, to, cap, true);
    push(to, from, 0, false);
  }

  void push(int from, int to, int cap, bool forward) {
    to_.push_back(to);
    cap_.push_back(cap);
    flow_.push_back(0);
    is_forward_.push_back(forward);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }

  bool augment(int source, int sink) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      int x = queue.front();
      queue.pop_front();
      for (int a = first_arc(x); a >= 0; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          via[to_[a]] = a;
          queue.push_back(to_[a]);
        }
      }
    }
    if (!seen[sink]) return false;
    for (int x = sink; x != source;) {
      int a = via[x];
      cap_[a] -= 1;
      cap_[a ^ 1] += 1;
      if (is_forward_[a]) {
        flow_[a] += 1;
      } else {
        flow_[a ^ 1] -= 1;
      }
      x = to_[a ^ 1];
    }
    return true;
  }

  int first_arc(int x) const { return head_[x]; }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> flow_;
  std::vector<char> is_forward_;
  std::vector<int> next_;
};

void check_pair(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw ContractError("pair_connectivity: vertex out of range");
  }
  if (u == v) throw ContractError("pair_connectivity: u and v must differ");
}

// Bron-Kerbosch with pivoting; reports maximal cliques of size >= min_size.
void maximal_cliques(const Graph& h, std::vector<Vertex>& r, detail::Bitset p,
                     detail::Bitset x, int min_size,
                     std::vector<std::vector<Vertex>>& out) {
  if (!p.any() && !x.any()) {
    if (static_cast<int>(r.size()) >= min_size) {
      auto clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  if (static_cast<int>(r.size()) + p.count() < min_size) return;
  int pivot = -1;
  int best = -1;
  auto consider = [&](int w) {
    detail::Bitset t = p;
    t.intersect(h.row(w));
    int c = t.count();
    if (c > best) {
      best = c;
      pivot = w;
    }
  };
  p.for_each(consider);
  x.for_each(consider);
  detail::Bitset branch = p;
  branch.subtract(h.row(pivot));
  for (int v : branch.to_vector()) {
    detail::Bitset np = p;
    np.intersect(h.row(v));
    detail::Bitset nx = x;
    nx.intersect(h.row(v));
    r.push_back(v);
    maximal_cliques(h, r, np, nx, min_size, out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

std::vector<Vertex> extend_to_maximal(const Graph& h, std::vector<Vertex> clique) {
  for (Vertex v = 0; v < h.order(); ++v) {
    if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
    bool all = std::all_of(clique.begin(), clique.end(),
                           [&](Vertex w) { return h.adjacent(v, w); });
    if (all) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace

SeparatorResult pair_connectivity(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  SeparatorResult result;
  if (g.adjacent(u, v)) {
    result.infinite = true;
    return result;
  }
  SplitNetwork net(g);
  const int source = SplitNetwork::out(u);
  const int sink = SplitNetwork::in(v);
  result.kappa = net.max_flow(source, sink);

  auto seen = net.reachable(source);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == u || x == v) continue;
    if (seen[SplitNetwork::in(x)] && !seen[SplitNetwork::out(x)]) result.cut.push_back(x);
  }

  for (int i = 0; i < result.kappa; ++i) {
    std::vector<int> nodes = net.take_flow_path(source, sink);
    std::vector<Vertex> path{u};
    for (std::size_t j = 1; j < nodes.size(); ++j) {
      if (nodes[j] % 2 == 0) path.push_back(nodes[j] / 2);
    }
    result.paths.push_back(std::move(path));
  }
  std::sort(result.paths.begin(), result.paths.end());
  return result;
}

std::vector<std::vector<int>> connectivity_table(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n), -1));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      SplitNetwork net(g);
      int kappa = net.max_flow(SplitNetwork::out(u), SplitNetwork::in(v));
      table[u][v] = table[v][u] = kappa;
    }
  }
  return table;
}

Graph inseparability_graph(const std::vector<std::vector<int>>& table,
                           const Graph& g, int k) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v) || table[u][v] >= k) edges.push_back({u, v});
    }
  }
  return Graph(g.order(), edges);
}

Graph inseparability_graph(const Graph& g, int k) {
  return inseparability_graph(connectivity_table(g), g, k);
}

std::optional<std::vector<Vertex>> exists_k_block(const Graph& g, int k) {
  if (k < 1) throw ContractError("exists_k_block: k must be >= 1");
  if (k > g.order()) return std::nullopt;
  const Graph h = inseparability_graph(g, k);
  SearchResult clique = find_clique(h, k);
  if (!clique.found()) return std::nullopt;
  return extend_to_maximal(h, clique.embedding->map);
}

BlockNumber block_number(const Graph& g) {
  if (g.order() < 1) throw ContractError("block_number: graph must be non-empty");
  const auto table = connectivity_table(g);
  for (int k = g.order(); k >= 1; --k) {
    const Graph h = inseparability_graph(table, g, k);
    SearchResult clique = find_clique(h, k);
    if (clique.found()) return {k, extend_to_maximal(h, clique.embedding->map)};
  }
  return {};
}

BlockReport block_report(const Graph& g, std::optional<int> k) {
  BlockReport report;
  if (g.order() == 0) return report;
  report.block_number = block_number(g).value;
  report.k = k.value_or(report.block_number);
  if (report.k < 1) throw ContractError("block_report: k must be >= 1");
  const Graph h = inseparability_graph(g, report.k);
  std::vector<Vertex> r;
  detail::Bitset p(h.order());
  p.fill();
  maximal_cliques(h, r, p, detail::Bitset(h.order()), report.k, report.blocks);
  std::sort(report.blocks.begin(), report.blocks.end());
  return report;
}

}  // namespace twd
