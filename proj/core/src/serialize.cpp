#include "twd/serialize.hpp"

#include <sstream>

#include "twd/errors.hpp"
#include "twd/generators.hpp"
#include "twd/io.hpp"

namespace twd {
namespace {

Json edge_array(const Graph& g) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'", 0);
  }
  return j.at(key);
}

template <typename T>
T read_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + what + "' has the wrong type", 0);
  }
}

}  // namespace

void to_json(Json& j, const Violation& v) {
  j = Json{{"condition", v.condition}, {"witness", v.witness}};
}

void to_json(Json& j, const ComponentShape& s) {
  j = Json{{"tag", to_string(s.tag)}, {"vertices", s.vertices}, {"params", s.params}};
}

void to_json(Json& j, const RecognitionVerdict& v) {
  j = Json{{"member", v.member}, {"shapes", v.shapes}, {"reason", v.reason}};
}

void to_json(Json& j, const Embedding& e) {
  j = Json{{"pattern_n", e.map.size()},
           {"mode", e.mode == EmbedMode::kInduced ? "induced" : "subgraph"},
           {"map", e.map},
           {"paths", Json::array()}};
}

void to_json(Json& j, const SubdivisionModel& m) {
  j = Json{{"pattern_n", m.pattern.order()},
           {"pattern_edges", edge_array(m.pattern)},
           {"map", m.branch},
           {"paths", m.paths}};
}

void to_json(Json& j, const SeparatorResult& s) {
  j = Json{{"infinite", s.infinite}, {"cut", s.cut}, {"paths", s.paths}};
  j["kappa"] = s.infinite ? Json(nullptr) : Json(s.kappa);
}

void to_json(Json& j, const BlockReport& r) {
  j = Json{{"k", r.k}, {"blocks", r.blocks}, {"block_number", r.block_number}};
}

void to_json(Json& j, const TreeDecomposition& td) {
  Json edges = Json::array();
  for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
  j = Json{{"nodes", td.node_count()}, {"tree_edges", edges}, {"bags", td.bags}};
}

void to_json(Json& j, const TraceStep& t) {
  j = Json{{"label", t.label}, {"sets", t.sets}};
}

void to_json(Json& j, const ExtractionOutcome& o) {
  j = Json{{"kind", to_string(o.kind)}, {"trace", o.trace}};
  if (o.biclique) j["biclique"] = *o.biclique;
  if (o.model) j["model"] = *o.model;
  if (!o.sufficient()) {
    j["stage"] = o.stage;
    j["shortfall"] = o.shortfall;
  }
}

void to_json(Json& j, const DichotomyVerdict& v) {
  Json criteria = Json::object();
  for (Criterion c : kCriteria) {
    const auto i = static_cast<std::size_t>(c);
    criteria[to_string(c)] = v.witness[i] ? Json(v.witness_name[i]) : Json(nullptr);
  }
  Json missing = Json::array();
  for (Criterion c : v.missing) missing.push_back(to_string(c));
  j = Json{{"overall", v.bounded ? "bounded" : "unbounded"},
           {"criteria", criteria},
           {"missing", missing},
           {"suggested_p", v.suggested_p.str()},
           {"notes", v.notes}};
}

void to_json(Json& j, const SurveyRow& r) {
  auto width = [](int w) { return w < 0 ? Json(nullptr) : Json(w); };
  j = Json{{"n", r.n},
           {"samples", r.samples},
           {"accepted", r.accepted},
           {"tw_min", width(r.tw_min)},
           {"tw_med", width(r.tw_med)},
           {"tw_max", width(r.tw_max)},
           {"budget_exceeded", r.budget_exceeded}};
}

TreeDecomposition decomposition_from_json(const Json& j) {
  TreeDecomposition td;
  td.bags = read_as<std::vector<std::vector<Vertex>>>(field(j, "bags"), "bags");
  for (const auto& e : field(j, "tree_edges")) {
    auto pair = read_as<std::vector<int>>(e, "tree_edges");
    if (pair.size() != 2) throw ParseError("tree edge must have two endpoints", 0);
    td.tree_edges.push_back({pair[0], pair[1]});
  }
  if (j.contains("nodes") && read_as<int>(j.at("nodes"), "nodes") != td.node_count()) {
    throw ParseError("'nodes' does not match the number of bags", 0);
  }
  return td;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph must be a JSON object", 0);
  if (j.contains("graph6")) return parse_graph6(read_as<std::string>(j.at("graph6"), "graph6"));
  if (j.contains("spec")) {
    return generate(parse_generator_spec(read_as<std::string>(j.at("spec"), "spec")));
  }
  const int n = read_as<int>(field(j, "n"), "n");
  if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range", 0);
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      auto pair = read_as<std::vector<int>>(e, "edges");
      if (pair.size() != 2) throw ParseError("edge must have two endpoints", 0);
      if (pair[0] < 0 || pair[1] < 0 || pair[0] >= n || pair[1] >= n || pair[0] == pair[1]) {
        throw ParseError("edge endpoint out of range or self-loop", 0);
      }
      edges.push_back({pair[0], pair[1]});
    }
  }
  return Graph(n, edges);
}

SubdivisionModel model_from_json(const Json& j) {
  SubdivisionModel m;
  m.branch = read_as<std::vector<Vertex>>(field(j, "map"), "map");
  m.paths = read_as<std::vector<std::vector<Vertex>>>(field(j, "paths"), "paths");
  if (j.contains("pattern")) {
    m.pattern = graph_from_json(j.at("pattern"));
  } else {
    const int n = j.contains("pattern_n") ? read_as<int>(j.at("pattern_n"), "pattern_n")
                                          : static_cast<int>(m.branch.size());
    m.pattern = generate(complete(n));
  }
  return m;
}

std::string write_decomposition_dot(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "graph decomposition {\n";
  for (int i = 0; i < td.node_count(); ++i) {
    out << "  " << i << " [label=\"";
    for (std::size_t k = 0; k < td.bags[i].size(); ++k) {
      out << (k ? " " : "") << td.bags[i][k];
    }
    out << "\"];\n";
  }
  for (auto [a, b] : td.tree_edges) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace twd
