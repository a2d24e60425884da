#include "twd/detection.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bitset.hpp"
#include "twd/errors.hpp"

namespace twd {
namespace {

// Host vertices by descending degree, index tie-break.
std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host, EmbedMode mode,
                  std::uint64_t budget)
      : pattern_(pattern), host_(host), mode_(mode), budget_(budget) {
    plan_pattern_order();
    host_order_ = degree_order(host_);
    rank_.assign(static_cast<std::size_t>(host_.order()), 0);
    for (std::size_t i = 0; i < host_order_.size(); ++i) {
      rank_[host_order_[i]] = static_cast<int>(i);
    }
    by_rank_.resize(static_cast<std::size_t>(host_.order()));
    for (Vertex v = 0; v < host_.order(); ++v) {
      auto nb = host_.neighbors(v);
      by_rank_[v].assign(nb.begin(), nb.end());
      std::sort(by_rank_[v].begin(), by_rank_[v].end(),
                [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
    }
    map_.assign(static_cast<std::size_t>(pattern_.order()), -1);
    used_.assign(static_cast<std::size_t>(host_.order()), 0);
  }

  SearchResult run() {
    SearchResult result;
    if (pattern_.order() > host_.order()) {
      result.status = SearchStatus::kNotFound;
      return result;
    }
    bool found = extend(0);
    result.expansions = expansions_;
    if (found) {
      result.status = SearchStatus::kFound;
      result.embedding = Embedding{map_, mode_};
    } else {
      result.status =
          exceeded_ ? SearchStatus::kBudgetExceeded : SearchStatus::kNotFound;
    }
    return result;
  }

 private:
  // Connectivity-first: each next vertex has the most already-placed
  // neighbors, then the highest degree, then the lowest index.
  void plan_pattern_order() {
    const int n = pattern_.order();
    std::vector<int> placed_neighbors(static_cast<std::size_t>(n), 0);
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    anchor_.assign(static_cast<std::size_t>(n), -1);
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best < 0 || placed_neighbors[v] > placed_neighbors[best] ||
            (placed_neighbors[v] == placed_neighbors[best] &&
             pattern_.degree(v) > pattern_.degree(best))) {
          best = v;
        }
      }
      placed[best] = 1;
      for (Vertex w : pattern_.neighbors(best)) {
        if (placed[w] && anchor_[best] < 0) anchor_[best] = w;
        ++placed_neighbors[w];
      }
      order_.push_back(best);
    }
  }

  bool consistent(Vertex p, Vertex h, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex q = order_[i];
      bool pattern_edge = pattern_.adjacent(p, q);
      bool host_edge = host_.adjacent(h, map_[q]);
      if (mode_ == EmbedMode::kInduced ? pattern_edge != host_edge
                                       : (pattern_edge && !host_edge)) {
        return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    const std::vector<Vertex>& candidates =
        anchor_[p] >= 0 ? by_rank_[map_[anchor_[p]]] : host_order_;
    for (Vertex h : candidates) {
      if (used_[h] || host_.degree(h) < pattern_.degree(p)) continue;
      if (!consistent(p, h, depth)) continue;
      if (++expansions_ > budget_) {
        exceeded_ = true;
        return false;
      }
      map_[p] = h;
      used_[h] = 1;
      if (extend(depth + 1)) return true;
      used_[h] = 0;
      map_[p] = -1;
      if (exceeded_) return false;
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  EmbedMode mode_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool exceeded_ = false;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  std::vector<Vertex> host_order_;
  std::vector<int> rank_;
  std::vector<std::vector<Vertex>> by_rank_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

// Clique search with greedy-coloring bounds. With a finite target the search
// stops as soon as a clique of that size is assembled; otherwise it returns a
// maximum clique.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, int target) : g_(g), target_(target) {}

  std::vector<Vertex> run() {
    std::vector<Vertex> current;
    std::vector<Vertex> candidates = degree_order(g_);
    if (!candidates.empty()) expand(current, candidates);
    return best_;
  }

 private:
  void color(const std::vector<Vertex>& candidates, std::vector<Vertex>& order,
             std::vector<int>& bound) const {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : candidates) {
      bool placed = false;
      for (auto& cls : classes) {
        bool clash = std::any_of(cls.begin(), cls.end(),
                                 [&](Vertex w) { return g_.adjacent(v, w); });
        if (!clash) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    order.clear();
    bound.clear();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (Vertex v : classes[c]) {
        order.push_back(v);
        bound.push_back(static_cast<int>(c) + 1);
      }
    }
  }

  void expand(std::vector<Vertex>& current, const std::vector<Vertex>& candidates) {
    std::vector<Vertex> order;
    std::vector<int> bound;
    color(candidates, order, bound);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      const int limit = target_ > 0 ? target_ - 1 : static_cast<int>(best_.size());
      if (static_cast<int>(current.size()) + bound[idx] <= limit) return;
      Vertex v = order[idx];
      current.push_back(v);
      if (target_ > 0 && static_cast<int>(current.size()) >= target_) {
        best_ = current;
        done_ = true;
        return;
      }
      std::vector<Vertex> next;
      for (std::size_t j = 0; j < idx; ++j) {
        if (g_.adjacent(v, order[j])) next.push_back(order[j]);
      }
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
        if (done_) return;
      }
      current.pop_back();
    }
  }

  const Graph& g_;
  int target_;
  bool done_ = false;
  std::vector<Vertex> best_;
};

}  // namespace

SearchResult find_induced(const Graph& pattern, const Graph& host,
                          std::uint64_t budget, EmbedMode mode) {
  if (budget == 0) throw ContractError("find_induced: budget must be > 0");
  return EmbeddingSearch(pattern, host, mode, budget).run();
}

SearchResult find_isomorphism(const Graph& a, const Graph& b,
                              std::uint64_t budget) {
  SearchResult none;
  if (a.order() != b.order() || a.size() != b.size()) return none;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return none;
  return find_induced(a, b, budget, EmbedMode::kInduced);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kIsomorphismCap || b.order() > kIsomorphismCap) {
    throw ContractError("is_isomorphic: graphs above " +
                        std::to_string(kIsomorphismCap) +
                        " vertices are not supported");
  }
  return find_isomorphism(a, b).found();
}

SearchResult find_clique(const Graph& g, int k) {
  if (k < 1) throw ContractError("find_clique: k must be >= 1");
  SearchResult result;
  std::vector<Vertex> clique = CliqueSearch(g, k).run();
  if (static_cast<int>(clique.size()) >= k) {
    clique.resize(static_cast<std::size_t>(k));
    std::sort(clique.begin(), clique.end());
    result.status = SearchStatus::kFound;
    result.embedding = Embedding{clique, EmbedMode::kInduced};
  }
  return result;
}

std::vector<Vertex> maximum_clique(const Graph& g) {
  std::vector<Vertex> clique = CliqueSearch(g, 0).run();
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<Vertex> maximum_independent_set(const Graph& g) {
  return maximum_clique(g.complement());
}

SearchResult find_biclique_subgraph(const Graph& g, int t, EmbedMode mode) {
  if (t < 1) throw ContractError("find_biclique_subgraph: t must be >= 1");
  SearchResult result;
  const int n = g.order();
  std::vector<Vertex> a_side;
  std::vector<Vertex> b_side;

  // Depth-first over A in lexicographic order; `common` holds the common
  // neighbourhood of the current A.
  auto search = [&](auto&& self, Vertex start, const detail::Bitset& common) -> bool {
    if (static_cast<int>(a_side.size()) == t) {
      std::vector<Vertex> pool;
      common.for_each([&](int v) {
        if (std::find(a_side.begin(), a_side.end(), v) == a_side.end()) {
          pool.push_back(v);
        }
      });
      if (static_cast<int>(pool.size()) < t) return false;
      if (mode == EmbedMode::kSubgraph) {
        b_side.assign(pool.begin(), pool.begin() + t);
        return true;
      }
      auto found = find_clique(g.induced(pool).complement(), t);
      if (!found.found()) return false;
      b_side.clear();
      for (Vertex local : found.embedding->map) b_side.push_back(pool[local]);
      return true;
    }
    for (Vertex v = start; v < n; ++v) {
      ++result.expansions;
      if (mode == EmbedMode::kInduced &&
          std::any_of(a_side.begin(), a_side.end(),
                      [&](Vertex a) { return g.adjacent(a, v); })) {
        continue;
      }
      detail::Bitset next = common;
      next.intersect(g.row(v));
      int available = next.count();
      for (Vertex a : a_side) available -= next.test(a) ? 1 : 0;
      if (available < t) continue;
      a_side.push_back(v);
      if (self(self, v + 1, next)) return true;
      a_side.pop_back();
    }
    return false;
  };

  detail::Bitset all(n);
  all.fill();
  if (2 * t <= n && search(search, 0, all)) {
    result.status = SearchStatus::kFound;
    Embedding e;
    e.mode = mode;
    e.map = a_side;
    e.map.insert(e.map.end(), b_side.begin(), b_side.end());
    result.embedding = std::move(e);
  }
  return result;
}

FreenessResult is_f_free(const Graph& g, std::span<const Graph> forbidden,
                         std::uint64_t budget) {
  FreenessResult result;
  bool inconclusive = false;
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    SearchResult r = find_induced(forbidden[i], g, budget, EmbedMode::kInduced);
    if (r.status == SearchStatus::kFound) {
      result.status = SearchStatus::kFound;
      result.member = i;
      result.embedding = r.embedding;
      return result;
    }
    if (r.status == SearchStatus::kBudgetExceeded) inconclusive = true;
  }
  result.status = inconclusive ? SearchStatus::kBudgetExceeded : SearchStatus::kNotFound;
  return result;
}

CheckResult verify_embedding(const Graph& pattern, const Graph& host,
                             const Embedding& embedding) {
  const auto& map = embedding.map;
  if (static_cast<int>(map.size()) != pattern.order()) {
    return CheckResult::Fail("map size differs from pattern order");
  }
  std::set<Vertex> image;
  for (Vertex h : map) {
    if (h < 0 || h >= host.order()) return CheckResult::Fail("image out of range", {h});
    if (!image.insert(h).second) return CheckResult::Fail("map not injective", {h});
  }
  for (Vertex p = 0; p < pattern.order(); ++p) {
    for (Vertex q = p + 1; q < pattern.order(); ++q) {
      bool pe = pattern.adjacent(p, q);
      bool he = host.adjacent(map[p], map[q]);
      if (pe && !he) {
        return CheckResult::Fail("pattern edge not mapped to a host edge", {p, q});
      }
      if (embedding.mode == EmbedMode::kInduced && !pe && he) {
        return CheckResult::Fail("host edge between images of a non-edge", {p, q});
      }
    }
  }
  return CheckResult::Ok();
}

CheckResult verify_subdivision_model(const Graph& host,
                                     const SubdivisionModel& model,
                                     bool require_induced, bool require_proper,
                                     int p) {
  const Graph& pattern = model.pattern;
  if (static_cast<int>(model.branch.size()) != pattern.order()) {
    return CheckResult::Fail("branch map size differs from pattern order");
  }
  std::vector<int> owner(static_cast<std::size_t>(host.order()), -1);
  constexpr int kBranch = -2;
  for (Vertex b : model.branch) {
    if (b < 0 || b >= host.order()) return CheckResult::Fail("branch vertex out of range", {b});
    if (owner[b] != -1) return CheckResult::Fail("branch map not injective", {b});
    owner[b] = kBranch;
  }

  const std::vector<Edge> edges = pattern.edges();
  if (model.paths.size() != edges.size()) {
    return CheckResult::Fail("path count differs from pattern edge count");
  }
  std::set<Edge> path_edges;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& path = model.paths[e];
    const Vertex from = model.branch[edges[e].u];
    const Vertex to = model.branch[edges[e].v];
    if (path.size() < 2 || path.front() != from || path.back() != to) {
      return CheckResult::Fail("path endpoints do not match branch vertices",
                               {edges[e].u, edges[e].v});
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      Vertex x = path[i];
      if (x < 0 || x >= host.order()) return CheckResult::Fail("path vertex out of range", {x});
      if (i + 1 < path.size()) {
        Vertex y = path[i + 1];
        if (y < 0 || y >= host.order() || !host.adjacent(x, y)) {
          return CheckResult::Fail("consecutive path vertices are not adjacent", {x, y});
        }
        path_edges.insert({std::min(x, y), std::max(x, y)});
      }
      if (i == 0 || i + 1 == path.size()) continue;
      if (owner[x] == kBranch) {
        return CheckResult::Fail("path passes through a branch vertex", {x});
      }
      if (owner[x] != -1) {
        return CheckResult::Fail("paths share an internal vertex", {x});
      }
      owner[x] = static_cast<int>(e);
    }
    const int internal = static_cast<int>(path.size()) - 2;
    if (internal > p) {
      return CheckResult::Fail("path has more than p internal vertices", path);
    }
    if (require_proper && internal < 1) {
      return CheckResult::Fail("path has no internal vertex (not proper)", path);
    }
  }

  if (require_induced) {
    std::vector<Vertex> all = model.vertices();
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        Vertex x = std::min(all[i], all[j]);
        Vertex y = std::max(all[i], all[j]);
        if (host.adjacent(x, y) && !path_edges.count({x, y})) {
          return CheckResult::Fail("host edge between model vertices outside the paths (not induced)",
                                   {x, y});
        }
      }
    }
  }
  return CheckResult::Ok();
}

}  // namespace twd
