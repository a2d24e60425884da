#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "twd/graph.hpp"

namespace twd {

struct GeneratorSpec;

namespace family {

struct Complete { int n = 0; };
struct CompleteBipartite { int a = 0; int b = 0; };
/// S_{i,j,k}: a center with three pendant paths of i, j and k vertices.
struct Tripod { int i = 0; int j = 0; int k = 0; };
/// T_{i,j,k}: a triangle with pendant paths of i, j and k vertices.
struct LineTripod { int i = 0; int j = 0; int k = 0; };
struct DisjointCopies {
  int copies = 0;
  std::shared_ptr<const GeneratorSpec> inner;
};
struct Path { int n = 0; };
struct Cycle { int n = 0; };
struct Grid { int rows = 0; int cols = 0; };
struct Wall { int k = 0; };
struct SubdividedComplete { int n = 0; int times = 0; };
struct SubdividedBiclique { int a = 0; int b = 0; int times = 0; };

}  // namespace family

/// A graph family tag plus its parameters.
///
/// Canonical labelings produced by generate():
///   Complete(n)              0..n-1
///   CompleteBipartite(a,b)   part A = 0..a-1, part B = a..a+b-1
///   Tripod(i,j,k)            center 0, then arm i, arm j, arm k, each arm
///                            listed from the center outwards
///   LineTripod(i,j,k)        triangle 0,1,2; the arms hang off 0, 1 and 2
///                            in that order and are numbered from 3 onwards
///   DisjointCopies(c, s)     copy t occupies [t*|s|, (t+1)*|s|)
///   Path(n)                  0-1-...-(n-1)
///   Cycle(n)                 0-1-...-(n-1)-0
///   Grid(h,w)                vertex r*w + c
///   Wall(k)                  see generate_wall()
///   SubdividedComplete(n,t)  branch vertices 0..n-1, then t vertices per
///                            edge uv (u<v, lexicographic), ordered u to v
///   SubdividedBiclique(a,b,t) as above with branch vertices of K_{a,b}
struct GeneratorSpec {
  std::variant<family::Complete, family::CompleteBipartite, family::Tripod,
               family::LineTripod, family::DisjointCopies, family::Path,
               family::Cycle, family::Grid, family::Wall,
               family::SubdividedComplete, family::SubdividedBiclique>
      family;
};

/// Parses "name:params", e.g. "complete:4", "bipartite:3,3",
/// "tripod:1,2,3", "line-tripod:1,1,1", "copies:3:tripod:1,1,1", "path:5",
/// "cycle:6", "grid:3,3", "wall:3", "subdivided-complete:4,1",
/// "subdivided-biclique:2,3,1". Throws SpecError.
GeneratorSpec parse_generator_spec(std::string_view text);

std::string to_string(const GeneratorSpec& spec);

/// Throws SpecError on invalid parameters.
Graph generate(const GeneratorSpec& spec);

GeneratorSpec complete(int n);
GeneratorSpec complete_bipartite(int a, int b);
GeneratorSpec tripod(int i, int j, int k);
GeneratorSpec line_tripod(int i, int j, int k);
GeneratorSpec disjoint_copies(int copies, GeneratorSpec inner);
GeneratorSpec path(int n);
GeneratorSpec cycle(int n);
GeneratorSpec grid(int rows, int cols);
GeneratorSpec wall(int k);
GeneratorSpec subdivided_complete(int n, int times);
GeneratorSpec subdivided_biclique(int a, int b, int times);

/// Hexagonal brick wall with k rows of k bricks.
///
/// Start from a (k+1) x (2k+2) grid of positions (r, c). Every row is a path
/// along c. Positions (r, c) and (r+1, c) are joined iff c and r have the
/// same parity, so each pair of consecutive rows is spanned by k six-cycle
/// bricks. Vertices of degree 1 (row ends without a vertical edge) are then
/// removed, and the rest are numbered in row-major order. The result is
/// bipartite, has maximum degree 3 and girth 6 for k >= 2.
Graph generate_wall(int k);

/// xorshift64* stream seeded through one splitmix64 step.
///
/// state_0 = splitmix64(seed), or 0x9E3779B97F4A7C15 if that is zero.
/// next(): x ^= x >> 12; x ^= x << 25; x ^= x >> 27;
///         return x * 0x2545F4914F6CDD1D.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next() noexcept;

  /// Uniform double in [0, 1): the top 53 bits of next() times 2^-53.
  double uniform() noexcept;

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// G(n, p). Pairs (u, v), u < v, are visited in lexicographic order and the
/// edge is kept iff uniform() < edge_probability. Reproducible per
/// (n, edge_probability, seed). Throws ContractError if p is outside [0,1].
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

}  // namespace twd
