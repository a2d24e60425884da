#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twd/check.hpp"
#include "twd/detection.hpp"
#include "twd/graph.hpp"
#include "twd/subdivision_model.hpp"

namespace twd {

enum class OutcomeKind {
  kBicliqueSubgraph,
  kInducedSubdivision,
  kKmSubdivision,
  kInsufficient,
};

const char* to_string(OutcomeKind kind);

/// One named intermediate set (or family of sets) recorded during a run.
struct TraceStep {
  std::string label;
  std::vector<std::vector<Vertex>> sets;
};

struct ExtractionOutcome {
  OutcomeKind kind = OutcomeKind::kInsufficient;
  /// kBicliqueSubgraph: K_{b,b} (parts 0..b-1 and b..2b-1) in subgraph mode.
  std::optional<Embedding> biclique;
  /// kInducedSubdivision (pattern K_{r,r}) and kKmSubdivision (pattern K_m).
  std::optional<SubdivisionModel> model;
  /// kInsufficient: the stage that ran short, and by how much.
  std::string stage;
  std::string shortfall;
  std::vector<TraceStep> trace;

  bool sufficient() const noexcept { return kind != OutcomeKind::kInsufficient; }
};

/// Checks a non-insufficient outcome with the detection verifiers: a biclique
/// embedding of K_{b,b}; an induced proper (<= p)-subdivision of some
/// K_{r,r}; a (<= p)-subdivision of some K_m in subgraph mode.
CheckResult verify_outcome(const Graph& host, const ExtractionOutcome& outcome, int p);

/// Shortcuts a host path along chords: from each vertex jump to the furthest
/// later path vertex adjacent to it. The result is chordless and keeps both
/// endpoints.
std::vector<Vertex> shortcut_to_chordless(const Graph& g, std::span<const Vertex> path);

/// Pairwise-linked disjoint sets to a K_{b,b} subgraph. Sets must be
/// non-empty, pairwise disjoint, of size <= a and with an edge between any
/// two (ContractError otherwise). The family is split into a prefix A and the
/// rest; the rest is coloured by which vertex of each A-set it reaches first,
/// a large class gives B and one vertex per A-set gives U; U is coloured the
/// same way against B to obtain U_1 and U_2. Every split size is tried.
ExtractionOutcome lemma_clique_extract(const Graph& g,
                                       std::span<const std::vector<Vertex>> sets,
                                       int a, int b);

/// From a (<= p)-subdivision of K_m (subgraph mode) either a K_{p,p}
/// subgraph or an induced proper (<= p)-subdivision of K_{r,r}. Model paths
/// are first shortcut to chordless paths. ContractError if the model does
/// not verify or its pattern is not complete.
ExtractionOutcome bigclique_extract(const Graph& host, const SubdivisionModel& model,
                                    int p, int r);

/// Builds a (<= p)-subdivision of K_m on the m_target smallest vertices of
/// `block`: adjacent pairs use their edge, other pairs take a chordless
/// Menger path of at most p + 1 edges avoiding the chosen branch vertices
/// and all previously used internal vertices (pairs in lexicographic order,
/// candidates by length then vertex sequence). ContractError unless the
/// chosen vertices are pairwise (m_target - 1)-inseparable.
ExtractionOutcome block_subdivision_extract(const Graph& g, std::span<const Vertex> block,
                                            int p, int m_target);

struct TripodProbe {
  /// Induced S_{p,p,p} (generator labelling) when three prefixes are
  /// pairwise edge-free; p is the prefix length.
  std::optional<Embedding> tripod;
  /// Indices of the three prefixes used.
  std::optional<std::array<int, 3>> chosen;
  /// Every pair of prefixes joined by at least one edge.
  std::vector<std::pair<int, int>> linked;
};

/// `prefixes` are vertex-disjoint paths of equal length p >= 1, each listed
/// from the neighbour of x outwards, such that x plus each prefix induces a
/// path. ContractError with fewer than three prefixes or when the shape is
/// wrong.
TripodProbe long_path_tripod_probe(const Graph& g, Vertex x,
                                   std::span<const std::vector<Vertex>> prefixes);

}  // namespace twd
