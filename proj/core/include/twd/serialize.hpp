#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "twd/blocks.hpp"
#include "twd/check.hpp"
#include "twd/decomposition.hpp"
#include "twd/detection.hpp"
#include "twd/dichotomy.hpp"
#include "twd/extraction.hpp"
#include "twd/recognition.hpp"
#include "twd/subdivision_model.hpp"

namespace twd {

using Json = nlohmann::json;

// Output schemas (all arrays of vertex labels are ascending unless noted):
//   RecognitionVerdict  {member, shapes: [{tag, vertices, params}], reason}
//   Embedding           {pattern_n, mode, map, paths: []}
//   SubdivisionModel    {pattern_n, pattern_edges, map, paths}
//   SeparatorResult     {infinite, kappa, cut, paths}
//   BlockReport         {k, blocks, block_number}
//   TreeDecomposition   {nodes, tree_edges, bags}
//   ExtractionOutcome   {kind, biclique?, model?, stage?, shortfall?, trace}
//   DichotomyVerdict    {overall, criteria: {name: witness|null}, missing,
//                        suggested_p, notes}
void to_json(Json& j, const Violation& v);
void to_json(Json& j, const ComponentShape& s);
void to_json(Json& j, const RecognitionVerdict& v);
void to_json(Json& j, const Embedding& e);
void to_json(Json& j, const SubdivisionModel& m);
void to_json(Json& j, const SeparatorResult& s);
void to_json(Json& j, const BlockReport& r);
void to_json(Json& j, const TreeDecomposition& td);
void to_json(Json& j, const TraceStep& t);
void to_json(Json& j, const ExtractionOutcome& o);
void to_json(Json& j, const DichotomyVerdict& v);
void to_json(Json& j, const SurveyRow& r);

/// {"nodes", "tree_edges", "bags"}; ParseError on a malformed document.
TreeDecomposition decomposition_from_json(const Json& j);

/// A graph given as {"graph6": "..."}, {"n": N, "edges": [[u,v],...]} or
/// {"spec": "family:params"}. ParseError / SpecError on bad input.
Graph graph_from_json(const Json& j);

/// {"pattern": graph?, "pattern_n": m?, "map": [...], "paths": [[...]]}.
/// Without "pattern" the pattern is K_{pattern_n} (pattern_n defaults to
/// the map size).
SubdivisionModel model_from_json(const Json& j);

/// DOT with one node per bag, labelled by its vertices.
std::string write_decomposition_dot(const TreeDecomposition& td);

}  // namespace twd
