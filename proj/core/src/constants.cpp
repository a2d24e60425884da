#include "twd/constants.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "twd/detection.hpp"
#include "twd/errors.hpp"
#include "twd/graph.hpp"

namespace twd {
namespace {

using boost::multiprecision::msb;

const BigInt& ceiling() {
  static const BigInt value = BigInt(1) << kBoundBits;
  return value;
}

Bound clamp(BigInt v, bool exact) {
  if (v >= ceiling()) return Bound(ceiling(), false);
  return Bound(std::move(v), exact);
}

Bound minus(const Bound& a, long long k) { return Bound(a.value - k, a.exact); }

Bound power(const Bound& base, const Bound& exponent) {
  const bool exact = base.exact && exponent.exact;
  if (base.value <= 1 || exponent.value == 0) {
    return Bound(exponent.value == 0 ? BigInt(1) : base.value, exact);
  }
  // base >= 2, so base^e >= 2^(msb(base) * e).
  if (exponent.value >= kBoundBits ||
      BigInt(msb(base.value)) * exponent.value >= kBoundBits) {
    return Bound(ceiling(), false);
  }
  return clamp(boost::multiprecision::pow(base.value,
                                          exponent.value.convert_to<unsigned>()),
               exact);
}

// binom(n, k) for 0 <= k <= n/2. Stops as soon as a partial product passes
// the ceiling: binom(n, i) increases in i on that range.
Bound binomial(const Bound& n, const Bound& k) {
  BigInt result = 1;
  for (BigInt i = 0; i < k.value; ++i) {
    result = result * (n.value - i) / (i + 1);
    if (result >= ceiling()) return Bound(ceiling(), false);
  }
  return Bound(std::move(result), n.exact && k.exact);
}

void require_positive(const Bound& x, const char* what) {
  if (x.value < 1) throw ContractError(std::string(what) + " must be >= 1");
}

// Graphs with no independent p-set and no q-clique on n vertices, grown from
// those on n - 1 vertices. One representative per isomorphism class.
std::vector<Graph> extend_good(const std::vector<Graph>& previous, int p, int q) {
  std::map<std::vector<int>, std::vector<Graph>> classes;
  std::vector<Graph> out;
  for (const Graph& g : previous) {
    const int n = g.order();
    const auto base_edges = g.edges();
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
      std::vector<Vertex> in, out_set;
      for (Vertex v = 0; v < n; ++v) ((subset >> v) & 1 ? in : out_set).push_back(v);
      if (static_cast<int>(in.size()) >= q - 1 &&
          find_clique(g.induced(in), q - 1).found()) {
        continue;
      }
      if (static_cast<int>(out_set.size()) >= p - 1 &&
          find_clique(g.induced(out_set).complement(), p - 1).found()) {
        continue;
      }
      std::vector<Edge> edges = base_edges;
      for (Vertex v : in) edges.push_back({v, n});
      Graph h(n + 1, edges);
      std::vector<int> key;
      for (Vertex v = 0; v <= n; ++v) key.push_back(h.degree(v));
      std::sort(key.begin(), key.end());
      auto& bucket = classes[key];
      bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const Graph& other) {
        return find_isomorphism(h, other).found();
      });
      if (!seen) {
        bucket.push_back(h);
        out.push_back(std::move(h));
      }
    }
  }
  return out;
}

}  // namespace

Bound::Bound(BigInt v, bool is_exact) : value(std::move(v)), exact(is_exact) {}

std::string Bound::str() const { return (exact ? "" : ">= ") + value.str(); }

Bound operator+(const Bound& a, const Bound& b) {
  return clamp(a.value + b.value, a.exact && b.exact);
}

Bound operator*(const Bound& a, const Bound& b) {
  if (a.value != 0 && b.value != 0 &&
      msb(a.value) + msb(b.value) >= kBoundBits) {
    return Bound(ceiling(), false);
  }
  return clamp(a.value * b.value, a.exact && b.exact);
}

namespace constants {

Bound pigeonhole(const Bound& r, const Bound& m) {
  require_positive(r, "P: r");
  require_positive(m, "P: m");
  return r * minus(m, 1) + Bound(1);
}

Bound ramsey_upper(const Bound& p, const Bound& q) {
  require_positive(p, "R: p");
  require_positive(q, "R: q");
  // R(1, q) = R(p, 1) = 1 holds whatever the other argument is.
  if ((p.exact && p.value == 1) || (q.exact && q.value == 1)) return Bound(1);
  const Bound& low = p.value <= q.value ? p : q;
  const bool exact = p.exact && q.exact;
  Bound n(p.value + q.value - 2, exact);
  Bound k(low.value - 1, exact);
  return binomial(n, k);
}

int ramsey_exact(int p, int q) {
  if (p < 1 || q < 1) throw ContractError("R_exact: arguments must be >= 1");
  if (p == 1 || q == 1) return 1;
  if (p == 2) return q;
  if (q == 2) return p;
  if (p + q > 7) {
    throw ContractError("R_exact: exhaustive search supported only for p + q <= 7");
  }
  std::vector<Graph> good{Graph(1)};
  int n = 1;
  while (!good.empty()) {
    good = extend_good(good, p, q);
    ++n;
  }
  return n;
}

Bound biclique_family(const Bound& a, const Bound& b) {
  require_positive(a, "C: a");
  require_positive(b, "C: b");
  const Bound r = pigeonhole(power(a, b), b);
  return Bound(2) * pigeonhole(power(a, r), b);
}

Bound ramsey_iterated(const Bound& i, const Bound& a, const Bound& b) {
  if (i.value < 0) throw ContractError("R_iter: i must be >= 0");
  Bound x = ramsey_upper(a, b);
  for (BigInt j = 0; j < i.value; ++j) {
    Bound next = ramsey_upper(x, b);
    // R(x, b) > x whenever b >= 3 and x >= 2, so a repeat is either a true
    // fixed point (further steps change nothing) or the ceiling.
    if (next.value == x.value) return next.exact ? x : next;
    x = std::move(next);
  }
  x.exact = x.exact && i.exact;
  return x;
}

Bound q(const Bound& r, const Bound& p) {
  return ramsey_upper(r, biclique_family(r * p, p));
}

Bound c(const Bound& r, const Bound& p) {
  return ramsey_iterated(q(r, p), r, biclique_family(p, p));
}

Bound d(const Bound& r, const Bound& p) { return c(r, p) + q(r, p); }

Bound m(const Bound& r, const Bound& p) {
  return ramsey_upper(d(r, p), Bound(2) * p);
}

Bound block_bound(const Bound& p) {
  const Bound mm = m(p, p);
  const Bound cc = biclique_family(p, p);
  Bound pairs = mm * minus(mm, 1);
  pairs.value /= 2;
  return pairs * p + minus(mm, 2) + ramsey_upper(Bound(3), cc);
}

Bound degree_bound(const Bound& b) {
  return Bound(2) * minus(b, 1) * minus(b, 2);
}

Bound delete_bound(const Bound& k, const Bound& p) {
  const Bound width = Bound(3) * p + Bound(1);
  return width * ramsey_upper(k, biclique_family(width, p));
}

Bound evaluate(std::string_view name, std::span<const long long> args) {
  struct Entry {
    std::string_view name;
    std::size_t arity;
  };
  static constexpr Entry kTable[] = {
      {"R", 2}, {"R_exact", 2}, {"P", 2}, {"C", 2}, {"R_iter", 3}, {"q", 2},
      {"c", 2}, {"d", 2},       {"m", 2}, {"b", 1}, {"deg", 1},    {"delete", 2}};
  const auto* entry = std::find_if(std::begin(kTable), std::end(kTable),
                                   [&](const Entry& e) { return e.name == name; });
  if (entry == std::end(kTable)) {
    throw SpecError("unknown constant '" + std::string(name) + "'");
  }
  if (args.size() != entry->arity) {
    throw SpecError("constant '" + std::string(name) + "' takes " +
                    std::to_string(entry->arity) + " argument(s)");
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    const long long low = (name == "R_iter" && i == 0) ? 0 : 1;
    if (args[i] < low) {
      throw SpecError("constant '" + std::string(name) + "': argument " +
                      std::to_string(i + 1) + " must be >= " + std::to_string(low));
    }
  }
  auto arg = [&](std::size_t i) { return Bound(BigInt(args[i])); };
  if (name == "R") return ramsey_upper(arg(0), arg(1));
  if (name == "R_exact") {
    try {
      return Bound(ramsey_exact(static_cast<int>(args[0]), static_cast<int>(args[1])));
    } catch (const ContractError& e) {
      throw SpecError(e.what());
    }
  }
  if (name == "P") return pigeonhole(arg(0), arg(1));
  if (name == "C") return biclique_family(arg(0), arg(1));
  if (name == "R_iter") return ramsey_iterated(arg(0), arg(1), arg(2));
  if (name == "q") return q(arg(0), arg(1));
  if (name == "c") return c(arg(0), arg(1));
  if (name == "d") return d(arg(0), arg(1));
  if (name == "m") return m(arg(0), arg(1));
  if (name == "b") return block_bound(arg(0));
  if (name == "deg") return degree_bound(arg(0));
  return delete_bound(arg(0), arg(1));
}

}  // namespace constants
}  // namespace twd
