#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "twd/generators.hpp"
#include "twd/graph.hpp"

namespace twd {

enum class ShapeTag {
  kPath,           ///< a path (includes K_1 and K_2)
  kTripodArm3,     ///< S_{i,j,k}, i,j,k >= 1: one degree-3 center
  kTriangle3Arms,  ///< T_{i,j,k}, i,j,k >= 0: a triangle with pendant paths
  kOther,
};

/// Structural classification of one connected component.
struct ComponentShape {
  ShapeTag tag = ShapeTag::kOther;
  std::vector<Vertex> vertices;
  /// Path: {vertex count, 0, 0}. Tripod / triangle: arm lengths, ascending.
  std::array<int, 3> params{};
};

struct RecognitionVerdict {
  bool member = false;
  std::vector<ComponentShape> shapes;
  /// First violated condition when member is false; empty otherwise.
  std::string reason;
};

/// Classifies every component of g; components ordered by smallest vertex.
std::vector<ComponentShape> component_shapes(const Graph& g);

/// Every pair adjacent. K_0 and K_1 are members.
RecognitionVerdict is_complete(const Graph& g);

/// The complement is a disjoint union of exactly two cliques (both parts
/// non-empty) for n >= 2; K_0 and K_1 are members.
RecognitionVerdict is_complete_bipartite(const Graph& g);

/// Acyclic with at most 3 leaves per component (class S).
RecognitionVerdict is_tripod(const Graph& g);

/// Line graph of a tripod (class T). With strict=false every component must
/// be a path or a T_{i,j,k}; with strict=true paths are rejected.
RecognitionVerdict is_line_of_tripod(const Graph& g, bool strict = false);

/// Generator for one path / tripod / triangle shape. Throws ContractError for
/// kOther.
GeneratorSpec shape_spec(const ComponentShape& shape);

/// Disjoint union of shape_spec() over the shapes.
Graph reconstruct(std::span<const ComponentShape> shapes);

const char* to_string(ShapeTag tag);

}  // namespace twd
