#include "twd/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "bitset.hpp"
#include "twd/errors.hpp"

namespace twd {
namespace {

// Mutable adjacency for simulating vertex elimination.
class EliminationGraph {
 public:
  explicit EliminationGraph(const Graph& g) : alive_(g.order()) {
    alive_.fill();
    rows_.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
      detail::Bitset row(g.order());
      for (Vertex w : g.neighbors(v)) row.set(w);
      rows_.push_back(std::move(row));
    }
  }

  const detail::Bitset& neighbors(Vertex v) const { return rows_[v]; }

  int fill_in(Vertex v) const {
    const auto nb = rows_[v].to_vector();
    int missing = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!rows_[nb[i]].test(nb[j])) ++missing;
      }
    }
    return missing;
  }

  // Turns the neighbourhood of v into a clique and removes v; returns the
  // former neighbourhood.
  std::vector<Vertex> eliminate(Vertex v) {
    auto nb = rows_[v].to_vector();
    for (Vertex a : nb) {
      for (Vertex b : nb) {
        if (a != b) rows_[a].set(b);
      }
      rows_[a].reset(v);
    }
    rows_[v] = detail::Bitset(alive_.bits());
    alive_.reset(v);
    return nb;
  }

  const detail::Bitset& alive() const { return alive_; }

 private:
  detail::Bitset alive_;
  std::vector<detail::Bitset> rows_;
};

// Exact search on one connected graph of at most 64 vertices. Sets are
// bitmasks over local labels.
class SubsetDp {
 public:
  SubsetDp(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {
    n_ = g.order();
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t row = 0;
      for (Vertex w : g.neighbors(v)) row |= std::uint64_t{1} << w;
      adj_.push_back(row);
    }
  }

  // Returns true when finished. On success `best_` is the tree-width and
  // `order_` an ordering achieving it whenever best_ < initial_upper.
  bool run(int lower, int upper) {
    best_ = upper;
    if (lower >= upper) return true;
    layers_.push_back({{0, {-1, -1}}});
    for (int size = 0; size < n_; ++size) {
      auto& layer = layers_.back();
      std::unordered_map<std::uint64_t, Entry> next;
      for (const auto& [set, entry] : layer) {
        const int rest = n_ - size - 1;
        const int finish = std::max(entry.value, rest);
        if (finish < best_) {
          best_ = finish;
          best_set_ = set;
          best_size_ = size;
          if (best_ <= lower) return true;
        }
        for (Vertex v = 0; v < n_; ++v) {
          const std::uint64_t bit = std::uint64_t{1} << v;
          if (set & bit) continue;
          const int value = std::max(entry.value, q_size(set, v));
          if (value >= best_) continue;
          if (++states_ > budget_) return false;
          auto [it, inserted] = next.try_emplace(set | bit, Entry{value, v});
          if (!inserted && value < it->second.value) it->second = Entry{value, v};
        }
      }
      if (next.empty()) break;
      layers_.push_back(std::move(next));
    }
    return true;
  }

  int best() const { return best_; }
  std::uint64_t states() const { return states_; }
  bool improved() const { return best_size_ >= 0; }

  // Ordering for the recorded best set: its stored prefix, then the rest in
  // ascending order.
  std::vector<Vertex> ordering() const {
    std::vector<Vertex> prefix;
    std::uint64_t set = best_set_;
    for (int size = best_size_; size > 0; --size) {
      const Entry& e = layers_[size].at(set);
      prefix.push_back(e.last);
      set &= ~(std::uint64_t{1} << e.last);
    }
    std::reverse(prefix.begin(), prefix.end());
    for (Vertex v = 0; v < n_; ++v) {
      if (!((best_set_ >> v) & 1)) prefix.push_back(v);
    }
    return prefix;
  }

 private:
  struct Entry {
    int value;
    Vertex last;
  };

  // |Q(S, v)|: vertices outside S + v reachable from v through S.
  int q_size(std::uint64_t set, Vertex v) const {
    std::uint64_t comp = std::uint64_t{1} << v;
    std::uint64_t frontier = comp;
    std::uint64_t reach = 0;
    while (frontier) {
      std::uint64_t nb = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) nb |= adj_[std::countr_zero(f)];
      reach |= nb;
      frontier = nb & set & ~comp;
      comp |= frontier;
    }
    return std::popcount(reach & ~set & ~(std::uint64_t{1} << v));
  }

  const Graph& g_;
  std::uint64_t budget_;
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::unordered_map<std::uint64_t, Entry>> layers_;
  int best_ = 0;
  std::uint64_t best_set_ = 0;
  int best_size_ = -1;
  std::uint64_t states_ = 0;
};

// Nodes on x's side once the tree edge xy is removed.
std::vector<char> side_of(const TreeDecomposition& td, int x, int y) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(td.node_count()));
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> side(static_cast<std::size_t>(td.node_count()), 0);
  std::vector<int> stack{x};
  side[x] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : adj[a]) {
      if (side[b] || (a == x && b == y)) continue;
      side[b] = 1;
      stack.push_back(b);
    }
  }
  return side;
}

std::vector<Vertex> sorted_intersection(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_node(const TreeDecomposition& td, int node) {
  if (node < 0 || node >= td.node_count()) {
    throw ContractError("unknown decomposition node " + std::to_string(node));
  }
}

}  // namespace

int width(const TreeDecomposition& td) {
  std::size_t largest = 0;
  for (const auto& bag : td.bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

CheckResult validate(const Graph& g, const TreeDecomposition& td) {
  const int nodes = td.node_count();
  if (nodes == 0) {
    return g.order() == 0 ? CheckResult::Ok()
                          : CheckResult::Fail("vertex not covered by any bag", {0});
  }
  if (static_cast<int>(td.tree_edges.size()) != nodes - 1) {
    return CheckResult::Fail("tree must have exactly nodes-1 edges");
  }
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) {
      return CheckResult::Fail("tree edge references an unknown node", {a, b});
    }
    if (find(a) == find(b)) return CheckResult::Fail("tree contains a cycle", {a, b});
    parent[find(a)] = find(b);
  }

  std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(g.order()));
  for (int t = 0; t < nodes; ++t) {
    for (Vertex v : td.bags[t]) {
      if (v < 0 || v >= g.order()) return CheckResult::Fail("bag vertex out of range", {t, v});
      occurrences[v].push_back(t);
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (occurrences[v].empty()) return CheckResult::Fail("vertex not covered by any bag", {v});
  }
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (int t : occurrences[e.u]) {
      const auto& bag = td.bags[t];
      if (std::find(bag.begin(), bag.end(), e.v) != bag.end()) {
        covered = true;
        break;
      }
    }
    if (!covered) return CheckResult::Fail("edge not covered by any bag", {e.u, e.v});
  }

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> holds(static_cast<std::size_t>(nodes), 0);
  std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::fill(holds.begin(), holds.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    for (int t : occurrences[v]) holds[t] = 1;
    std::vector<int> stack{occurrences[v].front()};
    seen[stack.back()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : adj[a]) {
        if (holds[b] && !seen[b]) {
          seen[b] = 1;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    if (reached != occurrences[v].size()) {
      return CheckResult::Fail("bags containing the vertex are not connected in the tree", {v});
    }
  }
  return CheckResult::Ok();
}

SeparatorView separator_view(const TreeDecomposition& td, int x, int y) {
  require_node(td, x);
  require_node(td, y);
  SeparatorView view;
  view.separator = sorted_intersection(td.bags[x], td.bags[y]);
  auto side = side_of(td, x, y);
  std::vector<Vertex> ux, uy;
  for (int t = 0; t < td.node_count(); ++t) {
    auto& target = side[t] ? ux : uy;
    target.insert(target.end(), td.bags[t].begin(), td.bags[t].end());
  }
  for (auto* s : {&ux, &uy}) {
    std::sort(s->begin(), s->end());
    s->erase(std::unique(s->begin(), s->end()), s->end());
  }
  view.side_x = std::move(ux);
  view.side_y = std::move(uy);
  return view;
}

int ordering_width(const Graph& g, std::span<const Vertex> order) {
  EliminationGraph eg(g);
  int best = -1;
  for (Vertex v : order) best = std::max(best, static_cast<int>(eg.eliminate(v).size()));
  return best;
}

TreeDecomposition decomposition_from_ordering(const Graph& g,
                                              std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != g.order()) {
    throw ContractError("elimination ordering must list every vertex once");
  }
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= g.order() || position[order[i]] >= 0) {
      throw ContractError("elimination ordering must list every vertex once");
    }
    position[order[i]] = static_cast<int>(i);
  }
  TreeDecomposition td;
  EliminationGraph eg(g);
  int previous_root = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto later = eg.eliminate(order[i]);
    std::vector<Vertex> bag = later;
    bag.push_back(order[i]);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    if (later.empty()) {
      if (previous_root >= 0) td.tree_edges.push_back({previous_root, static_cast<int>(i)});
      previous_root = static_cast<int>(i);
    } else {
      int parent = position[*std::min_element(
          later.begin(), later.end(),
          [&](Vertex a, Vertex b) { return position[a] < position[b]; })];
      td.tree_edges.push_back({static_cast<int>(i), parent});
    }
  }
  return td;
}

std::vector<Vertex> min_fill_ordering(const Graph& g) {
  EliminationGraph eg(g);
  std::vector<Vertex> order;
  for (int step = 0; step < g.order(); ++step) {
    Vertex best = -1;
    int best_fill = 0;
    int best_degree = 0;
    eg.alive().for_each([&](int v) {
      int fill = eg.fill_in(v);
      int degree = eg.neighbors(v).count();
      if (best < 0 || fill < best_fill || (fill == best_fill && degree < best_degree)) {
        best = v;
        best_fill = fill;
        best_degree = degree;
      }
    });
    eg.eliminate(best);
    order.push_back(best);
  }
  return order;
}

int degeneracy_lower_bound(const Graph& g) {
  std::vector<int> degree(static_cast<std::size_t>(g.order()));
  std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) degree[v] = g.degree(v);
  int bound = g.order() > 0 ? 0 : -1;
  for (int step = 0; step < g.order(); ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!removed[v] && (best < 0 || degree[v] < degree[best])) best = v;
    }
    bound = std::max(bound, degree[best]);
    removed[best] = 1;
    for (Vertex w : g.neighbors(best)) {
      if (!removed[w]) --degree[w];
    }
  }
  return bound;
}

TreewidthResult exact_treewidth(const Graph& g, std::uint64_t budget) {
  if (g.order() > kExactTreewidthCap) {
    throw ContractError("exact_treewidth: graphs above " +
                        std::to_string(kExactTreewidthCap) +
                        " vertices are not supported");
  }
  TreewidthResult result;
  result.lower = g.order() > 0 ? 0 : -1;
  result.upper = -1;
  bool exceeded = false;
  std::uint64_t remaining = budget;

  for (const auto& component : connected_components(g)) {
    const Graph sub = g.induced(component);
    std::vector<Vertex> local = min_fill_ordering(sub);
    const int upper = ordering_width(sub, local);
    const int lower = degeneracy_lower_bound(sub);

    SubsetDp dp(sub, remaining);
    const bool finished = dp.run(lower, upper);
    remaining -= std::min(remaining, dp.states());
    result.states += dp.states();
    if (dp.improved()) local = dp.ordering();
    if (finished) {
      result.lower = std::max(result.lower, dp.best());
    } else {
      exceeded = true;
      result.lower = std::max(result.lower, lower);
    }
    result.upper = std::max(result.upper, dp.best());
    for (Vertex v : local) result.ordering.push_back(component[v]);
  }

  result.decomposition = decomposition_from_ordering(g, result.ordering);
  result.upper = width(result.decomposition);
  if (exceeded) {
    result.status = TreewidthStatus::kBudgetExceeded;
  } else {
    result.status = TreewidthStatus::kExact;
    result.lower = result.upper;
  }
  result.width = result.upper;
  return result;
}

CheckResult is_tight(const Graph& g, const TreeDecomposition& td) {
  for (auto [x, y] : td.tree_edges) {
    SeparatorView view = separator_view(td, x, y);
    const auto& z = view.separator;
    for (int side = 0; side < 2; ++side) {
      const auto& u_side = side == 0 ? view.side_x : view.side_y;
      for (std::size_t i = 0; i < z.size(); ++i) {
        for (std::size_t j = i + 1; j < z.size(); ++j) {
          const Vertex u = z[i];
          const Vertex v = z[j];
          // Reachability from u to v in G[U_side - (Z - {u, v})].
          std::vector<char> allowed(static_cast<std::size_t>(g.order()), 0);
          for (Vertex w : u_side) allowed[w] = 1;
          for (Vertex w : z) allowed[w] = 0;
          allowed[u] = allowed[v] = 1;
          std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
          std::vector<Vertex> stack{u};
          seen[u] = 1;
          while (!stack.empty() && !seen[v]) {
            Vertex a = stack.back();
            stack.pop_back();
            for (Vertex b : g.neighbors(a)) {
              if (!allowed[b] || seen[b]) continue;
              seen[b] = 1;
              // Paths may not continue through the endpoints.
              if (b != v) stack.push_back(b);
            }
          }
          if (!seen[v]) return CheckResult::Fail("separator pair not linked on one side", {x, y, u, v, side});
        }
      }
    }
  }
  return CheckResult::Ok();
}

TorsoView torso(const Graph& g, const TreeDecomposition& td, int node) {
  require_node(td, node);
  TorsoView view;
  view.node = node;
  view.vertices = td.bags[node];
  std::sort(view.vertices.begin(), view.vertices.end());
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < view.vertices.size(); ++i) {
    local[view.vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < view.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < view.vertices.size(); ++j) {
      if (g.adjacent(view.vertices[i], view.vertices[j])) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  for (auto [a, b] : td.tree_edges) {
    if (a != node && b != node) continue;
    const int other = a == node ? b : a;
    auto shared = sorted_intersection(td.bags[node], td.bags[other]);
    for (std::size_t i = 0; i < shared.size(); ++i) {
      for (std::size_t j = i + 1; j < shared.size(); ++j) {
        edges.push_back({local[shared[i]], local[shared[j]]});
      }
    }
  }
  view.graph = Graph(static_cast<int>(view.vertices.size()), edges);
  return view;
}

CheckResult check_torso_degree_profile(const Graph& g, const TreeDecomposition& td,
                                       int k) {
  const long long threshold = 2LL * (k - 1) * (k - 2);
  for (int node = 0; node < td.node_count(); ++node) {
    TorsoView view = torso(g, td, node);
    std::vector<int> heavy;
    for (Vertex v = 0; v < view.graph.order(); ++v) {
      if (view.graph.degree(v) >= threshold) heavy.push_back(view.vertices[v]);
    }
    if (static_cast<int>(heavy.size()) >= k) {
      heavy.insert(heavy.begin(), node);
      return CheckResult::Fail("torso has at least k vertices of degree >= 2(k-1)(k-2)",
                               std::move(heavy));
    }
  }
  return CheckResult::Ok();
}

TreeDecomposition glue_torso_decompositions(
    const Graph& g, const TreeDecomposition& td,
    std::span<const TreeDecomposition> per_torso) {
  if (auto check = validate(g, td); !check) {
    throw ContractError("glue: top-level decomposition invalid: " +
                        check.violation->condition);
  }
  if (static_cast<int>(per_torso.size()) != td.node_count()) {
    throw ContractError("glue: need one decomposition per node");
  }

  TreeDecomposition out;
  std::vector<int> offset(static_cast<std::size_t>(td.node_count()));
  for (int x = 0; x < td.node_count(); ++x) {
    TorsoView view = torso(g, td, x);
    const TreeDecomposition& local = per_torso[x];
    if (auto check = validate(view.graph, local); !check) {
      throw ContractError("glue: decomposition of torso " + std::to_string(x) +
                          " invalid: " + check.violation->condition);
    }
    offset[x] = out.node_count();
    if (local.node_count() == 0) {
      out.bags.push_back({});
      continue;
    }
    for (const auto& bag : local.bags) {
      std::vector<Vertex> mapped;
      for (Vertex v : bag) mapped.push_back(view.vertices[v]);
      std::sort(mapped.begin(), mapped.end());
      out.bags.push_back(std::move(mapped));
    }
    for (auto [a, b] : local.tree_edges) {
      out.tree_edges.push_back({offset[x] + a, offset[x] + b});
    }
  }

  auto covering_bag = [&](int x, const std::vector<Vertex>& z) {
    const int count = std::max(per_torso[x].node_count(), 1);
    for (int i = 0; i < count; ++i) {
      const auto& bag = out.bags[offset[x] + i];
      if (std::includes(bag.begin(), bag.end(), z.begin(), z.end())) return offset[x] + i;
    }
    throw ContractError("glue: no bag of torso " + std::to_string(x) +
                        " covers its separator with a neighbour");
  };

  for (auto [x, y] : td.tree_edges) {
    auto z = sorted_intersection(td.bags[x], td.bags[y]);
    const int at_x = covering_bag(x, z);
    const int at_y = covering_bag(y, z);
    const int leaf_x = out.node_count();
    out.bags.push_back(z);
    const int leaf_y = out.node_count();
    out.bags.push_back(z);
    out.tree_edges.push_back({at_x, leaf_x});
    out.tree_edges.push_back({leaf_x, leaf_y});
    out.tree_edges.push_back({leaf_y, at_y});
  }
  return out;
}

}  // namespace twd
