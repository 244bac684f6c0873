// milnor: exact monodromy certificates for central hyperplane arrangements.
//
// Subcommands: gen, lattice, graph, aomoto, analyze, check. Every command
// reads an arrangement document from a file or stdin ("-") and writes
// deterministic JSON (or DOT) to stdout. Errors go to stderr as one JSON
// object and exit with status 2.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "milnor/analyzer.hpp"
#include "milnor/aomoto.hpp"
#include "milnor/arrangement.hpp"
#include "milnor/graph.hpp"
#include "milnor/lattice.hpp"
#include "milnor/version.hpp"

namespace {

using milnor::Arrangement;
using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw milnor::InputError("no-such-file", "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw milnor::InputError("cannot-write", "cannot write '" + path + "'");
  }
  out << text;
}

Arrangement load_arrangement(const std::string& path) {
  return milnor::parse_arrangement(read_input(path));
}

milnor::SimpleGraph load_graph_input(const std::string& path) {
  if (path.rfind("graphic:", 0) == 0) {
    return milnor::SimpleGraph::from_edge_list(path.substr(8));
  }
  return milnor::SimpleGraph::from_edge_list(read_input(path));
}

ordered_json flats_json(const Arrangement& a, const milnor::FlatList& flats) {
  ordered_json j;
  j["d"] = a.size();
  j["rank"] = a.ambient_rank();
  ordered_json list = ordered_json::array();
  for (const milnor::Rank2Flat& flat : flats.flats()) {
    ordered_json labels = ordered_json::array();
    for (int m : flat.members) labels.push_back(a.label(m));
    list.push_back(ordered_json{{"members", flat.members},
                                {"labels", std::move(labels)},
                                {"multiplicity", flat.multiplicity}});
  }
  j["flats"] = std::move(list);
  ordered_json multiset = ordered_json::object();
  for (const auto& [mult, count] : flats.multiplicity_multiset()) {
    multiset[std::to_string(mult)] = count;
  }
  j["multiplicity_multiset"] = std::move(multiset);
  if (a.ambient_rank() == 3) {
    j["euler_char_projective"] = milnor::euler_char_projective(a, flats);
  }
  j["tool_version"] = milnor::kVersion;
  return j;
}

int cmd_gen(const std::string& spec, const std::string& output) {
  std::optional<Arrangement> arrangement;
  if (spec.rfind("braid:", 0) == 0) {
    arrangement = milnor::gen_braid(std::stoi(spec.substr(6)));
  } else if (spec.rfind("graphic:", 0) == 0) {
    arrangement =
        milnor::gen_graphic(milnor::SimpleGraph::from_edge_list(spec.substr(8)));
  } else {
    arrangement = milnor::gen_named(spec);
  }
  write_output(output, milnor::to_document(*arrangement));
  return 0;
}

int cmd_lattice(const std::string& input, bool as_json) {
  Arrangement a = load_arrangement(input);
  milnor::FlatList flats = milnor::rank2_flats(a);
  if (as_json) {
    std::cout << flats_json(a, flats).dump(2) << "\n";
    return 0;
  }
  std::cout << "d = " << a.size() << ", rank-2 flats: " << flats.flats().size()
            << "\n";
  for (size_t f = 0; f < flats.flats().size(); ++f) {
    const milnor::Rank2Flat& flat = flats.flats()[f];
    std::cout << "flat " << f << " (multiplicity " << flat.multiplicity
              << "):";
    for (int m : flat.members) std::cout << " [" << a.label(m) << "]";
    std::cout << "\n";
  }
  if (a.ambient_rank() == 3) {
    std::cout << "euler characteristic of the projective complement: "
              << milnor::euler_char_projective(a, flats) << "\n";
  }
  return 0;
}

int cmd_graph(const std::string& input, const std::string& dot_path) {
  Arrangement a = load_arrangement(input);
  milnor::FlatList flats = milnor::rank2_flats(a);
  milnor::ArrGraph graph = milnor::build_graph(flats);
  if (!dot_path.empty()) {
    write_output(dot_path, milnor::to_dot(graph, a.labels()));
    if (dot_path == "-") return 0;
  }
  ordered_json j;
  j["d"] = a.size();
  ordered_json edges = ordered_json::array();
  for (const auto& [x, y] : graph.edges) {
    edges.push_back(ordered_json::array(
        {ordered_json(a.label(x)), ordered_json(a.label(y))}));
  }
  j["edges"] = std::move(edges);
  j["edge_count"] = graph.edges.size();
  j["components"] = graph.components;
  j["component_count"] = graph.component_count();
  j["connected"] = milnor::is_connected(graph);
  j["tool_version"] = milnor::kVersion;
  std::cout << j.dump(2) << "\n";
  return 0;
}

std::vector<long long> read_weights_file(const std::string& path, int d) {
  std::istringstream in(read_input(path));
  std::vector<long long> weights;
  long long w = 0;
  while (in >> w) weights.push_back(w);
  if (static_cast<int>(weights.size()) != d) {
    throw milnor::InputError(
        "weight-length", "weights file holds " + std::to_string(weights.size()) +
                             " integers, expected " + std::to_string(d));
  }
  return weights;
}

int cmd_aomoto(const std::string& input, long long characteristic,
               bool rational, const std::string& weights_path, bool all_ones) {
  Arrangement a = load_arrangement(input);
  milnor::FlatList flats = milnor::rank2_flats(a);
  milnor::CoefficientRing ring =
      rational ? milnor::CoefficientRing::rational()
               : milnor::CoefficientRing::prime(characteristic);
  milnor::WeightVector weights =
      all_ones ? milnor::WeightVector::all_ones(a.size(), ring)
               : milnor::WeightVector::from_integers(
                     read_weights_file(weights_path, a.size()), ring);
  milnor::AomotoReport report = milnor::aomoto_h1(flats, weights);
  ordered_json j;
  j["d"] = a.size();
  j["ring"] = report.ring;
  j["weights"] = report.weight;
  j["os2_dim"] = milnor::os2_basis(flats).dimension;
  j["kernel_dim"] = report.kernel_dim;
  j["h1_dim"] = report.h1_dim;
  j["tool_version"] = milnor::kVersion;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_analyze(const std::string& input, unsigned long long seed,
                const std::string& output) {
  Arrangement a = load_arrangement(input);
  milnor::MilnorReport report = milnor::analyze(a, seed);
  std::string text = milnor::to_json_string(report);
  std::cout << text;
  std::string path = output;
  if (path.empty()) {
    if (const char* dir = std::getenv("MILNOR_REPORT_DIR")) {
      path = std::string(dir) + "/report.json";
    }
  }
  if (!path.empty() && path != "-") write_output(path, text);
  return 0;
}

int cmd_check(const std::string& input, bool theorem1, bool double_triple,
              bool graphic) {
  if (!theorem1 && !double_triple && !graphic) {
    throw milnor::InputError("missing-check",
                             "pass --theorem1, --double-triple or --graphic");
  }
  ordered_json j;
  if (graphic) {
    milnor::SimpleGraph gamma = load_graph_input(input);
    milnor::GraphicReport report = milnor::graphic_check(gamma);
    j["gamma_vertices"] = report.gamma_vertices;
    j["gamma_connected"] = report.gamma_connected;
    j["d"] = report.d;
    j["arrangement_graph_connected"] = report.arr_graph_connected;
    j["h1"] = ordered_json{{"GF(2)", report.h1_f2},
                           {"GF(3)", report.h1_f3},
                           {"Q", report.h1_q}};
    j["vanishing_forced"] = report.vanishing_forced;
  } else {
    Arrangement a = load_arrangement(input);
    milnor::FlatList flats = milnor::rank2_flats(a);
    milnor::ArrGraph graph = milnor::build_graph(flats);
    if (theorem1) {
      milnor::Theorem1Report report = milnor::theorem1_check(a, flats, graph);
      j["hypotheses"] =
          ordered_json{{"graph_connected", report.graph_connected},
                       {"multiplicity_at_most_9", report.multiplicity_bounded},
                       {"six_condition", report.six_condition}};
      if (report.six_witness) {
        j["six_witness"] = ordered_json{{"index", *report.six_witness},
                                        {"label", a.label(*report.six_witness)}};
      } else {
        j["six_witness"] = nullptr;
      }
      j["six_via_nondivisibility"] = report.six_via_nondivisibility;
      j["verdict"] = report.overall;
      j["conclusion"] =
          report.overall ? "trivial-monodromy" : ordered_json(nullptr);
    } else {
      milnor::DoubleTripleReport report =
          milnor::double_triple_check(a, flats, graph);
      if (!report.applicable) {
        throw milnor::PreconditionError(
            "inapplicable", "arrangement has a point of multiplicity " +
                                std::to_string(report.max_multiplicity) +
                                "; only double and triple points are allowed");
      }
      j["clauses"] = ordered_json{
          {"graph_connected", report.clause_connected},
          {"one_triple_line_even_d", report.clause_triple_line_even_d},
          {"one_triple_line_d_gt_3", report.clause_triple_line_d_gt_3}};
      if (report.single_triple_line) {
        j["single_triple_line"] =
            ordered_json{{"index", *report.single_triple_line},
                         {"label", a.label(*report.single_triple_line)}};
      } else {
        j["single_triple_line"] = nullptr;
      }
      j["verdict"] = report.verdict;
    }
  }
  j["tool_version"] = milnor::kVersion;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monodromy certificates for central hyperplane arrangements"};
  app.set_version_flag("--version", milnor::kVersion);
  app.require_subcommand(1);

  auto* gen = app.add_subcommand(
      "gen", "generate an arrangement document (braid:n, graphic:edges, or a "
             "bundled name)");
  std::string gen_spec;
  std::string gen_output;
  gen->add_option("spec", gen_spec,
                  "braid:n | graphic:1-2,1-3,... | ceva | ex36 | ex37 | ex38 | "
                  "ex39 | remark311")
      ->required();
  gen->add_option("-o,--output", gen_output, "write to file instead of stdout");

  auto* lattice = app.add_subcommand("lattice", "rank-2 intersection flats");
  std::string lattice_input{"-"};
  bool lattice_json = false;
  lattice->add_option("input", lattice_input, "arrangement document (- for stdin)");
  lattice->add_flag("--json", lattice_json, "JSON output");

  auto* graph = app.add_subcommand("graph", "arrangement graph and components");
  std::string graph_input{"-"};
  std::string graph_dot;
  graph->add_option("input", graph_input, "arrangement document (- for stdin)");
  graph->add_option("--dot", graph_dot,
                    "write DOT to this path (- replaces the JSON output)");

  auto* aomoto = app.add_subcommand("aomoto", "degree-1 Aomoto cohomology");
  std::string aomoto_input{"-"};
  long long aomoto_char = 0;
  bool aomoto_rational = false;
  std::string aomoto_weights;
  bool aomoto_all_ones = false;
  aomoto->add_option("input", aomoto_input, "arrangement document (- for stdin)");
  auto* char_opt =
      aomoto->add_option("--char", aomoto_char, "prime characteristic p");
  auto* rational_flag =
      aomoto->add_flag("--rational", aomoto_rational, "coefficients in Q");
  char_opt->excludes(rational_flag);
  auto* weights_opt = aomoto->add_option("--weights", aomoto_weights,
                                         "file of d integer weights");
  auto* all_ones_flag =
      aomoto->add_flag("--all-ones", aomoto_all_ones, "use the all-ones weight");
  weights_opt->excludes(all_ones_flag);

  auto* analyze = app.add_subcommand(
      "analyze", "per-eigenvalue monodromy analysis with certificates");
  std::string analyze_input{"-"};
  unsigned long long analyze_seed = 0;
  std::string analyze_output;
  analyze->add_option("input", analyze_input, "arrangement document (- for stdin)");
  analyze->add_option("--seed", analyze_seed, "seed for the generic slice");
  analyze->add_option("-o,--output", analyze_output, "persist the report here");

  auto* check = app.add_subcommand("check", "criterion checkers");
  std::string check_input{"-"};
  bool check_theorem1 = false;
  bool check_double_triple = false;
  bool check_graphic = false;
  check->add_option("input", check_input,
                    "arrangement document, or an edge list for --graphic");
  auto* t1 = check->add_flag("--theorem1", check_theorem1,
                             "connected graph + multiplicity bounds criterion");
  auto* dt = check->add_flag("--double-triple", check_double_triple,
                             "double/triple point criteria");
  auto* gc = check->add_flag("--graphic", check_graphic,
                             "graphic arrangement criterion (input: edge list)");
  t1->excludes(dt);
  t1->excludes(gc);
  dt->excludes(gc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_spec, gen_output);
    if (lattice->parsed()) return cmd_lattice(lattice_input, lattice_json);
    if (graph->parsed()) return cmd_graph(graph_input, graph_dot);
    if (aomoto->parsed()) {
      if (!aomoto_rational && char_opt->count() == 0) {
        throw milnor::InputError("missing-ring",
                                 "pass --char p or --rational");
      }
      if (!aomoto_all_ones && weights_opt->count() == 0) {
        throw milnor::InputError("missing-weights",
                                 "pass --weights file or --all-ones");
      }
      return cmd_aomoto(aomoto_input, aomoto_char, aomoto_rational,
                        aomoto_weights, aomoto_all_ones);
    }
    if (analyze->parsed())
      return cmd_analyze(analyze_input, analyze_seed, analyze_output);
    if (check->parsed()) {
      return cmd_check(check_input, check_theorem1, check_double_triple,
                       check_graphic);
    }
  } catch (const milnor::Error& e) {
    nlohmann::ordered_json diag;
    diag["error"] = e.code();
    diag["message"] = e.what();
    std::cerr << diag.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    nlohmann::ordered_json diag;
    diag["error"] = "internal";
    diag["message"] = e.what();
    std::cerr << diag.dump() << "\n";
    return 1;
  }
  return 0;
}
