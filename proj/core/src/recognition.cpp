#include "twd/recognition.hpp"

#include <algorithm>

#include "twd/errors.hpp"
#include "twd/transform.hpp"

namespace twd {
namespace {

// Vertices on the walk starting at `from` and leaving `prev`, stopping at a
// vertex whose degree is not 2 (inclusive). Used on paths hanging off a
// center, where every inner vertex has degree 2.
int arm_length(const Graph& g, Vertex prev, Vertex from) {
  int length = 1;
  while (g.degree(from) == 2) {
    auto nb = g.neighbors(from);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = from;
    from = next;
    ++length;
  }
  return length;
}

ComponentShape classify(const Graph& g, std::vector<Vertex> component) {
  ComponentShape shape;
  const int nc = static_cast<int>(component.size());
  long long twice_edges = 0;
  int deg3 = 0;
  int higher = 0;
  Vertex center = -1;
  for (Vertex v : component) {
    twice_edges += g.degree(v);
    if (g.degree(v) == 3) {
      ++deg3;
      center = v;
    } else if (g.degree(v) > 3) {
      ++higher;
    }
  }
  const long long mc = twice_edges / 2;
  shape.vertices = std::move(component);

  if (mc == nc - 1) {
    if (higher == 0 && deg3 == 0) {
      shape.tag = ShapeTag::kPath;
      shape.params = {nc, 0, 0};
    } else if (higher == 0 && deg3 == 1) {
      shape.tag = ShapeTag::kTripodArm3;
      auto nb = g.neighbors(center);
      for (int a = 0; a < 3; ++a) shape.params[a] = arm_length(g, center, nb[a]);
      std::sort(shape.params.begin(), shape.params.end());
    }
    return shape;
  }

  if (mc == nc && higher == 0) {
    // Peel leaves to find the unique cycle.
    std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack;
    for (Vertex v : shape.vertices) {
      degree[v] = g.degree(v);
      if (degree[v] == 1) stack.push_back(v);
    }
    std::vector<char> peeled(static_cast<std::size_t>(g.order()), 0);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      peeled[v] = 1;
      for (Vertex w : g.neighbors(v)) {
        if (!peeled[w] && --degree[w] == 1) stack.push_back(w);
      }
    }
    std::vector<Vertex> cycle;
    for (Vertex v : shape.vertices) {
      if (!peeled[v]) cycle.push_back(v);
    }
    if (cycle.size() != 3) return shape;
    for (Vertex v : shape.vertices) {
      bool on_cycle = !peeled[v];
      if (!on_cycle && g.degree(v) > 2) return shape;
    }
    shape.tag = ShapeTag::kTriangle3Arms;
    for (int a = 0; a < 3; ++a) {
      Vertex c = cycle[a];
      shape.params[a] = 0;
      for (Vertex w : g.neighbors(c)) {
        if (peeled[w]) shape.params[a] = arm_length(g, c, w);
      }
    }
    std::sort(shape.params.begin(), shape.params.end());
  }
  return shape;
}

RecognitionVerdict from_shapes(const Graph& g, bool (*accept)(ShapeTag),
                               const char* family_name) {
  RecognitionVerdict verdict;
  verdict.shapes = component_shapes(g);
  verdict.member = true;
  for (const auto& s : verdict.shapes) {
    if (!accept(s.tag)) {
      verdict.member = false;
      verdict.reason = "component containing vertex " +
                       std::to_string(s.vertices.front()) + " is " +
                       to_string(s.tag) + ", not a " + family_name + " component";
      break;
    }
  }
  return verdict;
}

}  // namespace

const char* to_string(ShapeTag tag) {
  switch (tag) {
    case ShapeTag::kPath: return "path";
    case ShapeTag::kTripodArm3: return "tripod";
    case ShapeTag::kTriangle3Arms: return "triangle";
    case ShapeTag::kOther: return "other";
  }
  return "other";
}

std::vector<ComponentShape> component_shapes(const Graph& g) {
  std::vector<ComponentShape> shapes;
  for (auto& comp : connected_components(g)) {
    shapes.push_back(classify(g, std::move(comp)));
  }
  return shapes;
}

RecognitionVerdict is_complete(const Graph& g) {
  RecognitionVerdict verdict;
  verdict.shapes = component_shapes(g);
  verdict.member = true;
  for (Vertex u = 0; u < g.order() && verdict.member; ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) {
        verdict.member = false;
        verdict.reason = "vertices " + std::to_string(u) + " and " +
                         std::to_string(v) + " are not adjacent";
        break;
      }
    }
  }
  return verdict;
}

RecognitionVerdict is_complete_bipartite(const Graph& g) {
  RecognitionVerdict verdict;
  verdict.shapes = component_shapes(g);
  if (g.order() <= 1) {
    verdict.member = true;
    return verdict;
  }
  const Graph co = g.complement();
  auto parts = connected_components(co);
  if (parts.size() != 2) {
    verdict.reason = parts.size() == 1
                         ? "complement is connected, so the parts cannot both be non-empty"
                         : "complement has " + std::to_string(parts.size()) +
                               " components, more than two parts";
    return verdict;
  }
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        if (!co.adjacent(part[i], part[j])) {
          verdict.reason = "vertices " + std::to_string(part[i]) + " and " +
                           std::to_string(part[j]) +
                           " lie on the same side but are adjacent";
          return verdict;
        }
      }
    }
  }
  verdict.member = true;
  return verdict;
}

RecognitionVerdict is_tripod(const Graph& g) {
  return from_shapes(
      g,
      [](ShapeTag t) { return t == ShapeTag::kPath || t == ShapeTag::kTripodArm3; },
      "tripod");
}

RecognitionVerdict is_line_of_tripod(const Graph& g, bool strict) {
  if (strict) {
    return from_shapes(
        g, [](ShapeTag t) { return t == ShapeTag::kTriangle3Arms; },
        "T_{i,j,k}");
  }
  return from_shapes(
      g,
      [](ShapeTag t) { return t == ShapeTag::kPath || t == ShapeTag::kTriangle3Arms; },
      "line-of-tripod");
}

GeneratorSpec shape_spec(const ComponentShape& shape) {
  const auto& p = shape.params;
  switch (shape.tag) {
    case ShapeTag::kPath: return path(p[0]);
    case ShapeTag::kTripodArm3: return tripod(p[0], p[1], p[2]);
    case ShapeTag::kTriangle3Arms: return line_tripod(p[0], p[1], p[2]);
    case ShapeTag::kOther: break;
  }
  throw ContractError("shape_spec: component of kind 'other' has no generator");
}

Graph reconstruct(std::span<const ComponentShape> shapes) {
  std::vector<Graph> parts;
  for (const auto& s : shapes) parts.push_back(generate(shape_spec(s)));
  return disjoint_union(parts);
}

}  // namespace twd
