// graphmonads command line: validate matchings and triple systems, run
// the monad law checks, enumerate structures, build products and render
// DOT. Exit codes: 0 ok, 1 a law or validity check failed (with a
// witness), 2 malformed input or usage.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphmonads/errors.hpp"
#include "graphmonads/families.hpp"
#include "graphmonads/io.hpp"
#include "graphmonads/json_io.hpp"
#include "graphmonads/matching.hpp"
#include "graphmonads/steiner.hpp"

namespace {

using namespace graphmonads;
using nlohmann::json;

enum class Status { Ok, Violation, Error };

struct CommandResult {
  Status status = Status::Ok;
  std::string report;
  std::optional<json> payload;
  bool report_to_stderr = false;  // keeps stdout clean when it carries data
};

struct GlobalOpts {
  long long cap = -1;  // -1 keeps each operation's default
  bool json_output = false;
  bool quiet = false;
};

Graph load_graph(const std::string& path) { return parse_edge_list(read_text_file(path)); }

json load_json(const std::string& path) { return json::parse(read_text_file(path)); }

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw GraphError("cannot write file " + out_path);
  }
  out << content;
}

std::size_t cap_or(const GlobalOpts& g, std::size_t fallback) {
  return g.cap < 0 ? fallback : static_cast<std::size_t>(g.cap);
}

std::string matching_line(const LabelMap& partner) {
  std::string out;
  for (const auto& [v, w] : partner) {
    if (w < v) continue;  // print each pair once
    if (!out.empty()) out += ' ';
    out += v.str() + "-" + w.str();
  }
  return out.empty() ? "(empty)" : out;
}

CommandResult cmd_check_matching(const std::string& graph_file, const std::string& match_file) {
  Graph g = load_graph(graph_file);
  MatchingDoc doc = matching_doc_from_json(load_json(match_file), g,
                                           std::filesystem::path(match_file).parent_path());
  CheckResult r = is_perfect_matching(doc.graph, doc.partner);
  if (!r.ok) {
    return {Status::Violation, "violation: " + r.witness, {}};
  }
  return {Status::Ok,
          "ok: perfect matching on " + std::to_string(doc.graph.vertex_count()) + " vertices",
          matching_to_json(PerfectMatching(doc.graph, doc.partner))};
}

CommandResult cmd_check_psts(const std::string& psts_file, bool require_complete) {
  PstsDoc doc = psts_doc_from_json(load_json(psts_file));
  CheckResult r = check_psts(doc.points, doc.triples);
  if (!r.ok) {
    return {Status::Violation, "violation: " + r.witness, {}};
  }
  Psts p(doc.points, doc.triples);
  bool complete = is_complete_sts(p);
  if (require_complete && !complete) {
    return {Status::Violation, "violation: system is partial, not a complete triple system", {}};
  }
  std::string report = "ok: partial Steiner triple system with " +
                       std::to_string(p.triples().size()) + " triples on " +
                       std::to_string(p.points().size()) + " points";
  if (complete) report += " (complete)";
  return {Status::Ok, report, psts_to_json(p)};
}

CommandResult cmd_list(const std::string& kind, const std::string& graph_file,
                       const GlobalOpts& opts) {
  Graph g = load_graph(graph_file);
  json items = json::array();
  if (kind == "matchings") {
    for (const PerfectMatching& m : enumerate_matchings(g, cap_or(opts, kDefaultMatchingVertexCap)))
      items.push_back(label_map_to_json(m.partner_map()));
  } else if (kind == "algebras-T") {
    for (const TAlgebra& a : enumerate_T_algebras(g, cap_or(opts, kDefaultMatchingVertexCap)))
      items.push_back(label_map_to_json(a.alpha().map()));
  } else if (kind == "psts") {
    for (const Psts& p : enumerate_psts_on(g, cap_or(opts, kDefaultStsVertexCap)))
      items.push_back(psts_to_json(p));
  } else if (kind == "algebras-S") {
    for (const SAlgebra& a : enumerate_S_algebras(g, cap_or(opts, kDefaultStsVertexCap)))
      items.push_back(label_map_to_json(a.alpha().map()));
  } else {
    throw GraphError("unknown list kind " + kind);
  }
  std::string report = "count: " + std::to_string(items.size());
  for (const json& item : items) {
    report += "\n" + item.dump();
  }
  return {Status::Ok, report, json{{"kind", kind}, {"count", items.size()}, {"items", items}}};
}

LawReport run_laws(const std::string& monad, const Graph& g) {
  if (monad == "T") return check_monad_laws_T(g);
  if (monad == "S") return check_monad_laws_S(g);
  throw GraphError("unknown monad " + monad + ", expected T or S");
}

json law_report_json(const LawReport& report) {
  json out = json::array();
  for (const auto& e : report.entries) {
    out.push_back(json{{"law", e.law}, {"ok", e.result.ok}, {"witness", e.result.witness}});
  }
  return out;
}

CommandResult cmd_laws(const std::string& monad, const std::string& graph_file) {
  LawReport report = run_laws(monad, load_graph(graph_file));
  return {report.all_ok() ? Status::Ok : Status::Violation, report.summary(),
          law_report_json(report)};
}

CommandResult cmd_laws_sweep(const std::string& monad, std::size_t max_n, std::size_t random_count,
                             std::size_t random_min, std::size_t random_max, std::uint32_t seed) {
  std::size_t checked = 0;
  std::string failures;
  auto run_one = [&](const Graph& g) {
    LawReport report = run_laws(monad, g);
    ++checked;
    if (!report.all_ok()) {
      failures += "graph:\n" + serialize_edge_list(g) + report.summary();
    }
  };
  for (std::size_t n = 0; n <= max_n; ++n) {
    for_each_labeled_graph(n, run_one);
  }
  for (const Graph& g : random_graphs(random_count, random_min, random_max, seed)) {
    run_one(g);
  }
  if (!failures.empty()) {
    return {Status::Violation, failures, {}};
  }
  return {Status::Ok,
          "ok: " + monad + " monad laws hold on all " + std::to_string(checked) + " graphs",
          json{{"checked", checked}}};
}

CommandResult cmd_product(const std::string& kind, const std::string& file_a,
                          const std::string& file_b, const std::string& out_path) {
  if (kind == "perf") {
    auto base_a = std::filesystem::path(file_a).parent_path();
    auto base_b = std::filesystem::path(file_b).parent_path();
    PerfectMatching a = matching_from_json(load_json(file_a), {}, base_a);
    PerfectMatching b = matching_from_json(load_json(file_b), {}, base_b);
    PerfectMatching prod = product_perf(a, b);
    CheckResult valid = is_perfect_matching(prod.graph(), prod.partner_map());
    if (!valid.ok) {
      return {Status::Violation, "violation: product failed validation: " + valid.witness, {}};
    }
    write_output(out_path, matching_to_json(prod).dump(2) + "\n");
    return {Status::Ok,
            "ok: product matching on " + std::to_string(prod.graph().vertex_count()) + " vertices",
            {}, out_path.empty()};
  }
  if (kind == "psts") {
    Psts a = psts_from_json(load_json(file_a));
    Psts b = psts_from_json(load_json(file_b));
    Psts prod = product_psts(a, b);
    CheckResult valid = check_psts(prod.points(), prod.triples());
    if (!valid.ok) {
      return {Status::Violation, "violation: product failed validation: " + valid.witness, {}};
    }
    write_output(out_path, psts_to_json(prod).dump(2) + "\n");
    return {Status::Ok,
            "ok: product system with " + std::to_string(prod.triples().size()) + " triples on " +
                std::to_string(prod.points().size()) + " points",
            {}, out_path.empty()};
  }
  throw GraphError("unknown product kind " + kind + ", expected perf or psts");
}

CommandResult cmd_functor(const std::string& monad, const std::string& graph_file,
                          const std::string& out_path) {
  Graph g = load_graph(graph_file);
  Graph image;
  if (monad == "T") {
    image = T_on_objects(g);
  } else if (monad == "S") {
    image = S_on_objects(g);
  } else {
    throw GraphError("unknown monad " + monad + ", expected T or S");
  }
  write_output(out_path, serialize_edge_list(image));
  return {Status::Ok,
          "ok: image has " + std::to_string(image.vertex_count()) + " vertices and " +
              std::to_string(image.edge_count()) + " edges",
          {}, out_path.empty()};
}

CommandResult cmd_dot(const std::string& graph_file, const std::string& structure_file,
                      const std::string& out_path) {
  Graph g = load_graph(graph_file);
  DotDecorations deco;
  if (!structure_file.empty()) {
    json doc = load_json(structure_file);
    if (doc.contains("matching")) {
      MatchingDoc raw = matching_doc_from_json(doc, g,
                                               std::filesystem::path(structure_file).parent_path());
      CheckResult r = is_perfect_matching(raw.graph, raw.partner);
      if (!r.ok) {
        return {Status::Violation, "violation: " + r.witness, {}};
      }
      for (const auto& [v, w] : raw.partner) {
        if (v < w) deco.matched_edges.emplace_back(v, w);
      }
    } else if (doc.contains("triples")) {
      PstsDoc raw = psts_doc_from_json(doc);
      CheckResult r = check_psts(raw.points, raw.triples);
      if (!r.ok) {
        return {Status::Violation, "violation: " + r.witness, {}};
      }
      for (const Triple& t : raw.triples) {
        deco.triples.push_back({t[0], t[1], t[2]});
      }
    } else {
      throw GraphError("structure file must hold a matching or a triple system");
    }
  }
  write_output(out_path, to_dot(g, deco));
  return {Status::Ok, "ok: wrote DOT for " + std::to_string(g.vertex_count()) + " vertices", {},
          out_path.empty()};
}

CommandResult cmd_convert(const std::string& mode, const std::string& in_file,
                          const std::string& out_path) {
  auto base = std::filesystem::path(in_file).parent_path();
  json doc = load_json(in_file);
  json converted;
  if (mode == "matching-to-algebra") {
    converted = t_algebra_to_json(matching_to_algebra(matching_from_json(doc, {}, base)));
  } else if (mode == "algebra-to-matching") {
    converted = matching_to_json(algebra_to_matching(t_algebra_from_json(doc, base)));
  } else if (mode == "psts-to-algebra") {
    converted = s_algebra_to_json(psts_to_algebra(psts_from_json(doc)));
  } else if (mode == "algebra-to-psts") {
    converted = psts_to_json(algebra_to_psts(s_algebra_from_json(doc, base)));
  } else {
    throw GraphError("unknown conversion " + mode);
  }
  write_output(out_path, converted.dump(2) + "\n");
  return {Status::Ok, "ok: converted " + mode, {}, out_path.empty()};
}

int finish(const CommandResult& result, const GlobalOpts& opts) {
  if (!opts.quiet && !result.report.empty()) {
    (result.report_to_stderr ? std::cerr : std::cout) << result.report << "\n";
  }
  if (opts.json_output && result.payload) {
    std::cout << result.payload->dump(2) << "\n";
  }
  switch (result.status) {
    case Status::Ok: return 0;
    case Status::Violation: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two graph monads: perfect matchings and partial Steiner triple systems"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts opts;
  app.add_option("--cap", opts.cap, "override enumeration caps");
  app.add_flag("--json", opts.json_output, "print the JSON payload to stdout");
  app.add_flag("--quiet", opts.quiet, "suppress the text report");

  std::string graph_file, second_file, out_path, kind, monad, structure_file;
  bool require_complete = false;
  std::size_t max_n = 5, random_count = 0, random_min = 6, random_max = 9;
  std::uint32_t seed = 2024;

  auto* check_matching = app.add_subcommand("check-matching", "validate a matching against a graph");
  check_matching->add_option("graph", graph_file, "edge-list file")->required();
  check_matching->add_option("matching", second_file, "matching JSON file")->required();

  auto* check_psts = app.add_subcommand("check-psts", "validate a partial Steiner triple system");
  check_psts->add_option("system", graph_file, "triple-system JSON file")->required();
  check_psts->add_flag("--complete", require_complete, "require a complete system");

  auto* list = app.add_subcommand("list", "enumerate structures on a graph");
  list->add_option("kind", kind, "matchings|psts|algebras-T|algebras-S")
      ->required()
      ->check(CLI::IsMember({"matchings", "psts", "algebras-T", "algebras-S"}));
  list->add_option("graph", graph_file, "edge-list file")->required();

  auto* laws = app.add_subcommand("laws", "check the monad laws on one graph");
  laws->add_option("monad", monad, "T|S")->required()->check(CLI::IsMember({"T", "S"}));
  laws->add_option("graph", graph_file, "edge-list file")->required();

  auto* sweep = app.add_subcommand("laws-sweep", "check the monad laws on graph families");
  sweep->add_option("monad", monad, "T|S")->required()->check(CLI::IsMember({"T", "S"}));
  sweep->add_option("--max-n", max_n, "exhaustive sweep over all labeled graphs up to this size");
  sweep->add_option("--random", random_count, "additional random graphs");
  sweep->add_option("--random-min", random_min, "minimum random graph size");
  sweep->add_option("--random-max", random_max, "maximum random graph size");
  sweep->add_option("--seed", seed, "random seed");

  auto* product = app.add_subcommand("product", "product of two matched graphs or triple systems");
  product->add_option("kind", kind, "perf|psts")->required()->check(CLI::IsMember({"perf", "psts"}));
  product->add_option("a", graph_file, "first structure JSON file")->required();
  product->add_option("b", second_file, "second structure JSON file")->required();
  product->add_option("-o,--out", out_path, "output file (stdout when omitted)");

  auto* functor = app.add_subcommand("functor", "apply an endofunctor to a graph");
  functor->add_option("monad", monad, "T|S")->required()->check(CLI::IsMember({"T", "S"}));
  functor->add_option("graph", graph_file, "edge-list file")->required();
  functor->add_option("-o,--out", out_path, "output file (stdout when omitted)");

  auto* dot = app.add_subcommand("dot", "render a graph as DOT");
  dot->add_option("graph", graph_file, "edge-list file")->required();
  dot->add_option("--structure", structure_file, "matching or triple-system JSON to highlight");
  dot->add_option("-o,--out", out_path, "output file (stdout when omitted)");

  auto* convert = app.add_subcommand("convert", "convert between structures and algebras");
  convert->add_option("mode", kind,
                      "matching-to-algebra|algebra-to-matching|psts-to-algebra|algebra-to-psts")
      ->required()
      ->check(CLI::IsMember({"matching-to-algebra", "algebra-to-matching", "psts-to-algebra",
                             "algebra-to-psts"}));
  convert->add_option("input", graph_file, "input JSON file")->required();
  convert->add_option("-o,--out", out_path, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CommandResult result;
    if (check_matching->parsed()) {
      result = cmd_check_matching(graph_file, second_file);
    } else if (check_psts->parsed()) {
      result = cmd_check_psts(graph_file, require_complete);
    } else if (list->parsed()) {
      result = cmd_list(kind, graph_file, opts);
    } else if (laws->parsed()) {
      result = cmd_laws(monad, graph_file);
    } else if (sweep->parsed()) {
      result = cmd_laws_sweep(monad, max_n, random_count, random_min, random_max, seed);
    } else if (product->parsed()) {
      result = cmd_product(kind, graph_file, second_file, out_path);
    } else if (functor->parsed()) {
      result = cmd_functor(monad, graph_file, out_path);
    } else if (dot->parsed()) {
      result = cmd_dot(graph_file, structure_file, out_path);
    } else if (convert->parsed()) {
      result = cmd_convert(kind, graph_file, out_path);
    }
    return finish(result, opts);
  } catch (const InvalidMatching& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const InvalidTripleSystem& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const NotAnAlgebra& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const NotEquivariant& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
