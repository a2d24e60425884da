// twd: command-line front end for the tree-width dichotomy library.

#include <CLI11.hpp>

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twd/blocks.hpp"
#include "twd/constants.hpp"
#include "twd/decomposition.hpp"
#include "twd/detection.hpp"
#include "twd/dichotomy.hpp"
#include "twd/errors.hpp"
#include "twd/extraction.hpp"
#include "twd/generators.hpp"
#include "twd/io.hpp"
#include "twd/recognition.hpp"
#include "twd/serialize.hpp"

namespace {

using namespace twd;

constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

GraphFormat parse_format(const std::string& name) {
  if (name == "graph6") return GraphFormat::kGraph6;
  if (name == "edges") return GraphFormat::kEdgeList;
  return GraphFormat::kAuto;
}

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_text(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return slurp(in);
}

Graph load_graph(const std::string& path, const std::string& format = "auto") {
  return parse_graph(read_text(path), parse_format(format));
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c); });
}

// Comma-separated list of files or generator specs. A purely numeric token
// continues the previous spec ("bipartite:3,3").
ForbiddenSet parse_forbidden(const std::vector<std::string>& args) {
  std::vector<std::string> tokens;
  for (const std::string& arg : args) {
    std::stringstream ss(arg);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token.empty()) continue;
      if (all_digits(token) && !tokens.empty() &&
          tokens.back().find(':') != std::string::npos) {
        tokens.back() += "," + token;
      } else {
        tokens.push_back(token);
      }
    }
  }
  if (tokens.empty()) throw SpecError("--forbidden: no members given");
  ForbiddenSet f;
  for (const std::string& t : tokens) {
    if (std::filesystem::exists(t)) {
      f.members.push_back({t, load_graph(t)});
    } else {
      f.members.push_back({t, generate(parse_generator_spec(t))});
    }
  }
  return f;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json read_json(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

template <typename T>
T json_get(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'", 0);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type", 0);
  }
}

int run_extract(const std::string& procedure, const std::string& inputs) {
  const Json j = read_json(inputs);
  if (!j.contains("graph")) throw ParseError("missing field 'graph'", 0);
  const Graph g = graph_from_json(j.at("graph"));
  ExtractionOutcome out;
  int p = 0;
  if (procedure == "clique") {
    auto sets = json_get<std::vector<std::vector<Vertex>>>(j, "sets");
    out = lemma_clique_extract(g, sets, json_get<int>(j, "a"), json_get<int>(j, "b"));
  } else if (procedure == "bigclique") {
    if (!j.contains("model")) throw ParseError("missing field 'model'", 0);
    p = json_get<int>(j, "p");
    out = bigclique_extract(g, model_from_json(j.at("model")), p, json_get<int>(j, "r"));
  } else {
    auto block = json_get<std::vector<Vertex>>(j, "block");
    p = json_get<int>(j, "p");
    out = block_subdivision_extract(g, block, p, json_get<int>(j, "m_target"));
  }
  print_json(out);
  return out.sufficient() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-width dichotomy toolkit for finitely defined graph classes"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Decide bounded tree-width of Free(F)");
  std::vector<std::string> forbidden;
  bool as_json = false;
  bool lenient = false;
  analyze->add_option("--forbidden", forbidden, "Files or specs, comma-separated")->required();
  analyze->add_flag("--json", as_json, "Print the verdict as JSON");
  analyze->add_flag("--lenient-bipartite", lenient,
                    "Accept edgeless members as complete bipartite");

  // treewidth
  auto* treewidth = app.add_subcommand("treewidth", "Exact tree-width of a graph");
  std::string graph_path;
  std::string format = "auto";
  std::string decomposition_out;
  std::uint64_t budget = kDefaultTreewidthBudget;
  treewidth->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  treewidth->add_option("--format", format)->check(CLI::IsMember({"auto", "graph6", "edges"}));
  treewidth->add_option("--decomposition", decomposition_out, "Write the decomposition JSON");
  treewidth->add_option("--budget", budget, "DP transition budget");

  // recognize
  auto* recognize = app.add_subcommand("recognize", "Membership in a target family");
  std::string family;
  bool strict = false;
  recognize->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"complete", "bipartite", "tripod", "line-tripod"}));
  recognize->add_flag("--strict", strict, "line-tripod: reject path components");
  recognize->add_option("graph", graph_path)->required();

  // detect
  auto* detect = app.add_subcommand("detect", "Find a pattern in a host graph");
  std::string pattern_path;
  std::string host_path;
  bool subgraph = false;
  std::uint64_t search_budget = kDefaultBudget;
  detect->add_option("--pattern", pattern_path)->required();
  detect->add_option("--host", host_path)->required();
  detect->add_flag("--subgraph", subgraph, "Non-induced embedding");
  detect->add_option("--budget", search_budget, "Node expansion budget");

  // blocks
  auto* blocks = app.add_subcommand("blocks", "k-blocks and the block number");
  std::optional<int> k;
  blocks->add_option("graph", graph_path)->required();
  blocks->add_option("--k", k)->check(CLI::PositiveNumber);

  // generate
  auto* gen = app.add_subcommand("generate", "Emit a generated graph");
  std::string spec;
  std::string out_format = "graph6";
  gen->add_option("--spec", spec, "family:params")->required();
  gen->add_option("--out", out_format)->check(CLI::IsMember({"graph6", "edges", "dot"}));

  // constants
  auto* consts = app.add_subcommand("constants", "Evaluate a constant exactly");
  std::string name;
  std::vector<long long> const_args;
  consts->add_option("--name", name)->required();
  consts->add_option("--args", const_args)->delimiter(',')->required();

  // extract
  auto* extract = app.add_subcommand("extract", "Run an extraction procedure");
  std::string procedure;
  std::string inputs;
  extract->add_option("--procedure", procedure)
      ->required()
      ->check(CLI::IsMember({"clique", "bigclique", "block"}));
  extract->add_option("--inputs", inputs, "JSON input file")->required();

  // survey
  auto* surv = app.add_subcommand("survey", "Sample F-free graphs and measure tree-width");
  SurveyOptions options;
  std::string csv_out;
  std::optional<double> probability;
  surv->add_option("--forbidden", forbidden)->required();
  surv->add_option("--n-min", options.n_min)->check(CLI::Range(1, kExactTreewidthCap));
  surv->add_option("--n-max", options.n_max)->check(CLI::Range(1, kExactTreewidthCap));
  surv->add_option("--samples", options.samples)->check(CLI::NonNegativeNumber);
  surv->add_option("--seed", options.seed);
  surv->add_option("--edge-probability", probability)->check(CLI::Range(0.0, 1.0));
  surv->add_option("--budget", options.treewidth_budget, "Tree-width budget per draw");
  surv->add_option("--csv", csv_out, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*analyze) {
      DichotomyVerdict v = decide_bounded(parse_forbidden(forbidden), {lenient});
      if (as_json) {
        print_json(v);
      } else {
        std::cout << (v.bounded ? "bounded" : "unbounded") << "\n";
        for (std::size_t i = 0; i < kCriteria.size(); ++i) {
          std::cout << "  " << to_string(kCriteria[i]) << ": "
                    << (v.witness[i] ? v.witness_name[i] : "missing") << "\n";
        }
        std::cout << "  suggested_p: " << v.suggested_p.str() << "\n";
        for (const auto& note : v.notes) std::cout << "  note: " << note << "\n";
      }
      return v.bounded ? 0 : 1;
    }
    if (*treewidth) {
      const Graph g = load_graph(graph_path, format);
      TreewidthResult r = exact_treewidth(g, budget);
      if (!decomposition_out.empty()) {
        std::ofstream out(decomposition_out);
        if (!out) throw ParseError("cannot write '" + decomposition_out + "'", 0);
        out << Json(r.decomposition).dump(2) << "\n";
      }
      if (r.status == TreewidthStatus::kBudgetExceeded) {
        std::cout << "budget exceeded: " << r.lower << " <= tw <= " << r.upper << "\n";
        return kExitBudget;
      }
      std::cout << r.width << "\n";
      return 0;
    }
    if (*recognize) {
      const Graph g = load_graph(graph_path);
      RecognitionVerdict v;
      if (family == "complete") {
        v = is_complete(g);
      } else if (family == "bipartite") {
        v = is_complete_bipartite(g);
      } else if (family == "tripod") {
        v = is_tripod(g);
      } else {
        v = is_line_of_tripod(g, strict);
      }
      print_json(v);
      return v.member ? 0 : 1;
    }
    if (*detect) {
      const Graph pattern = load_graph(pattern_path);
      const Graph host = load_graph(host_path);
      SearchResult r = find_induced(pattern, host, search_budget,
                                    subgraph ? EmbedMode::kSubgraph : EmbedMode::kInduced);
      Json j{{"status", r.found() ? "found"
                        : r.status == SearchStatus::kNotFound ? "not-found"
                                                              : "budget-exceeded"},
             {"expansions", r.expansions}};
      if (r.embedding) j["embedding"] = *r.embedding;
      print_json(j);
      if (r.status == SearchStatus::kBudgetExceeded) return kExitBudget;
      return r.found() ? 0 : 1;
    }
    if (*blocks) {
      const Graph g = load_graph(graph_path);
      if (g.order() == 0) throw ContractError("blocks: graph has no vertices");
      print_json(block_report(g, k));
      return 0;
    }
    if (*gen) {
      const Graph g = generate(parse_generator_spec(spec));
      if (out_format == "edges") {
        std::cout << write_edge_list(g);
      } else if (out_format == "dot") {
        std::cout << write_dot(g);
      } else {
        std::cout << write_graph6(g) << "\n";
      }
      return 0;
    }
    if (*consts) {
      std::cout << constants::evaluate(name, const_args).str() << "\n";
      return 0;
    }
    if (*extract) return run_extract(procedure, inputs);
    if (*surv) {
      options.edge_probability = probability;
      if (options.n_min > options.n_max) throw SpecError("--n-min exceeds --n-max");
      const std::string csv = survey_csv(survey(parse_forbidden(forbidden), options));
      if (csv_out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(csv_out);
        if (!out) throw ParseError("cannot write '" + csv_out + "'", 0);
        out << csv;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "twd: parse error at " << e.position() << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const SpecError& e) {
    std::cerr << "twd: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ContractError& e) {
    std::cerr << "twd: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
