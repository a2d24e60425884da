#include "twd/generators.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "twd/errors.hpp"
#include "twd/transform.hpp"

namespace twd {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool condition, const std::string& message) {
  if (!condition) throw SpecError(message);
}

void require_nonnegative(std::initializer_list<int> values,
                         const char* family_name) {
  for (int v : values) {
    require(v >= 0, std::string(family_name) + ": parameters must be >= 0");
  }
}

std::vector<int> parse_ints(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  while (true) {
    auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} ||
        ptr != token.data() + token.size()) {
      throw SpecError("generator spec '" + std::string(whole) +
                      "': bad integer '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

// Appends a pendant path of `length` vertices hanging off `anchor`.
void append_arm(int anchor, int length, int& next, std::vector<Edge>& edges) {
  int prev = anchor;
  for (int t = 0; t < length; ++t) {
    edges.push_back({prev, next});
    prev = next++;
  }
}

}  // namespace

GeneratorSpec complete(int n) { return {family::Complete{n}}; }
GeneratorSpec complete_bipartite(int a, int b) {
  return {family::CompleteBipartite{a, b}};
}
GeneratorSpec tripod(int i, int j, int k) { return {family::Tripod{i, j, k}}; }
GeneratorSpec line_tripod(int i, int j, int k) {
  return {family::LineTripod{i, j, k}};
}
GeneratorSpec disjoint_copies(int copies, GeneratorSpec inner) {
  return {family::DisjointCopies{
      copies, std::make_shared<const GeneratorSpec>(std::move(inner))}};
}
GeneratorSpec path(int n) { return {family::Path{n}}; }
GeneratorSpec cycle(int n) { return {family::Cycle{n}}; }
GeneratorSpec grid(int rows, int cols) { return {family::Grid{rows, cols}}; }
GeneratorSpec wall(int k) { return {family::Wall{k}}; }
GeneratorSpec subdivided_complete(int n, int times) {
  return {family::SubdividedComplete{n, times}};
}
GeneratorSpec subdivided_biclique(int a, int b, int times) {
  return {family::SubdividedBiclique{a, b, times}};
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  auto colon = text.find(':');
  require(colon != std::string_view::npos,
          "generator spec '" + std::string(text) + "' lacks ':'");
  std::string_view name = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);

  if (name == "copies") {
    auto second = rest.find(':');
    require(second != std::string_view::npos,
            "copies spec must look like copies:<k>:<inner spec>");
    auto count = parse_ints(rest.substr(0, second), text);
    require(count.size() == 1, "copies takes one count");
    return disjoint_copies(count[0], parse_generator_spec(rest.substr(second + 1)));
  }

  auto args = parse_ints(rest, text);
  auto arity = [&](std::size_t expected) {
    require(args.size() == expected,
            "generator '" + std::string(name) + "' takes " +
                std::to_string(expected) + " parameter(s)");
  };
  if (name == "complete") { arity(1); return complete(args[0]); }
  if (name == "bipartite" || name == "complete-bipartite") {
    arity(2);
    return complete_bipartite(args[0], args[1]);
  }
  if (name == "tripod") { arity(3); return tripod(args[0], args[1], args[2]); }
  if (name == "line-tripod") {
    arity(3);
    return line_tripod(args[0], args[1], args[2]);
  }
  if (name == "path") { arity(1); return path(args[0]); }
  if (name == "cycle") { arity(1); return cycle(args[0]); }
  if (name == "grid") { arity(2); return grid(args[0], args[1]); }
  if (name == "wall") { arity(1); return wall(args[0]); }
  if (name == "subdivided-complete") {
    arity(2);
    return subdivided_complete(args[0], args[1]);
  }
  if (name == "subdivided-biclique") {
    arity(3);
    return subdivided_biclique(args[0], args[1], args[2]);
  }
  throw SpecError("unknown generator family '" + std::string(name) + "'");
}

std::string to_string(const GeneratorSpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::Complete& f) { return "complete:" + std::to_string(f.n); },
          [](const family::CompleteBipartite& f) {
            return "bipartite:" + std::to_string(f.a) + "," + std::to_string(f.b);
          },
          [](const family::Tripod& f) {
            return "tripod:" + std::to_string(f.i) + "," + std::to_string(f.j) +
                   "," + std::to_string(f.k);
          },
          [](const family::LineTripod& f) {
            return "line-tripod:" + std::to_string(f.i) + "," +
                   std::to_string(f.j) + "," + std::to_string(f.k);
          },
          [](const family::DisjointCopies& f) {
            return "copies:" + std::to_string(f.copies) + ":" +
                   (f.inner ? to_string(*f.inner) : std::string("?"));
          },
          [](const family::Path& f) { return "path:" + std::to_string(f.n); },
          [](const family::Cycle& f) { return "cycle:" + std::to_string(f.n); },
          [](const family::Grid& f) {
            return "grid:" + std::to_string(f.rows) + "," + std::to_string(f.cols);
          },
          [](const family::Wall& f) { return "wall:" + std::to_string(f.k); },
          [](const family::SubdividedComplete& f) {
            return "subdivided-complete:" + std::to_string(f.n) + "," +
                   std::to_string(f.times);
          },
          [](const family::SubdividedBiclique& f) {
            return "subdivided-biclique:" + std::to_string(f.a) + "," +
                   std::to_string(f.b) + "," + std::to_string(f.times);
          },
      },
      spec.family);
}

Graph generate_wall(int k) {
  require(k >= 2, "wall: k must be >= 2");
  const int rows = k + 1;
  const int cols = 2 * k + 2;
  auto id = [cols](int r, int c) { return r * cols + c; };

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(rows * cols));
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) link(id(r, c), id(r, c + 1));
    if (r + 1 < rows) {
      for (int c = r % 2; c < cols; c += 2) link(id(r, c), id(r + 1, c));
    }
  }

  std::vector<int> alive(adj.size(), 1);
  std::vector<int> degree(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    degree[v] = static_cast<int>(adj[v].size());
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (alive[v] && degree[v] <= 1) {
        alive[v] = 0;
        for (int w : adj[v]) --degree[w];
        changed = true;
      }
    }
  }

  std::vector<int> label(adj.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (alive[v]) label[v] = next++;
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!alive[v]) continue;
    for (int w : adj[v]) {
      if (alive[w] && static_cast<int>(v) < w) {
        edges.push_back({label[v], label[w]});
      }
    }
  }
  return Graph(next, edges);
}

Graph generate(const GeneratorSpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::Complete& f) {
            require_nonnegative({f.n}, "complete");
            std::vector<Edge> edges;
            for (int u = 0; u < f.n; ++u) {
              for (int v = u + 1; v < f.n; ++v) edges.push_back({u, v});
            }
            return Graph(f.n, edges);
          },
          [](const family::CompleteBipartite& f) {
            require_nonnegative({f.a, f.b}, "bipartite");
            std::vector<Edge> edges;
            for (int u = 0; u < f.a; ++u) {
              for (int v = 0; v < f.b; ++v) edges.push_back({u, f.a + v});
            }
            return Graph(f.a + f.b, edges);
          },
          [](const family::Tripod& f) {
            require_nonnegative({f.i, f.j, f.k}, "tripod");
            std::vector<Edge> edges;
            int next = 1;
            append_arm(0, f.i, next, edges);
            append_arm(0, f.j, next, edges);
            append_arm(0, f.k, next, edges);
            return Graph(next, edges);
          },
          [](const family::LineTripod& f) {
            require_nonnegative({f.i, f.j, f.k}, "line-tripod");
            std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
            int next = 3;
            append_arm(0, f.i, next, edges);
            append_arm(1, f.j, next, edges);
            append_arm(2, f.k, next, edges);
            return Graph(next, edges);
          },
          [](const family::DisjointCopies& f) {
            require_nonnegative({f.copies}, "copies");
            require(f.inner != nullptr, "copies: missing inner spec");
            Graph one = generate(*f.inner);
            std::vector<Graph> parts(static_cast<std::size_t>(f.copies), one);
            return disjoint_union(parts);
          },
          [](const family::Path& f) {
            require_nonnegative({f.n}, "path");
            return make_path(f.n);
          },
          [](const family::Cycle& f) {
            require(f.n >= 3, "cycle: n must be >= 3");
            std::vector<Edge> edges;
            for (int v = 0; v < f.n; ++v) edges.push_back({v, (v + 1) % f.n});
            return Graph(f.n, edges);
          },
          [](const family::Grid& f) {
            require_nonnegative({f.rows, f.cols}, "grid");
            std::vector<Edge> edges;
            for (int r = 0; r < f.rows; ++r) {
              for (int c = 0; c < f.cols; ++c) {
                int v = r * f.cols + c;
                if (c + 1 < f.cols) edges.push_back({v, v + 1});
                if (r + 1 < f.rows) edges.push_back({v, v + f.cols});
              }
            }
            return Graph(f.rows * f.cols, edges);
          },
          [](const family::Wall& f) { return generate_wall(f.k); },
          [](const family::SubdividedComplete& f) {
            require_nonnegative({f.n, f.times}, "subdivided-complete");
            return subdivide(generate(complete(f.n)), f.times).graph;
          },
          [](const family::SubdividedBiclique& f) {
            require_nonnegative({f.a, f.b, f.times}, "subdivided-biclique");
            return subdivide(generate(complete_bipartite(f.a, f.b)), f.times).graph;
          },
      },
      spec.family);
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() noexcept {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

double Xorshift64Star::uniform() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw ContractError("random_graph: edge probability must lie in [0, 1]");
  }
  if (n < 0) throw ContractError("random_graph: n must be >= 0");
  Xorshift64Star rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform() < edge_probability) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace twd
