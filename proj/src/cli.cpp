#include "dpo/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "dpo/competition.hpp"
#include "dpo/error.hpp"
#include "dpo/interval.hpp"
#include "dpo/json_io.hpp"
#include "dpo/patterns.hpp"

namespace dpo::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

// The module-level witness bound is 14; the CLI raises it so that pipelines
// over the n = 6 gadgets (16-vertex hypergraphs) stay in range.
constexpr std::size_t kCliWitnessBound = 18;

ordered_json new_doc() {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Point2> load_points(const std::string& path) {
  return points_from_json(parse_json_text(read_file(path), path));
}

Hypergraph load_hypergraph(const std::string& path) {
  return hypergraph_from_json(parse_json_text(read_file(path), path));
}

Graph load_graph(const std::string& path) {
  return graph_from_json(parse_json_text(read_file(path), path));
}

std::set<PatternFamily> parse_kinds(const std::string& spec) {
  std::set<PatternFamily> families;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::transform(item.begin(), item.end(), item.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (item == "c") {
      families.insert(PatternFamily::C);
    } else if (item == "m") {
      families.insert(PatternFamily::M);
    } else if (item == "f") {
      families.insert(PatternFamily::F);
    } else if (item == "o1") {
      families.insert(PatternFamily::O1);
    } else if (item == "o2") {
      families.insert(PatternFamily::O2);
    } else {
      fail(ErrorKind::InvalidInput, "unknown pattern kind \"" + item + "\" (use c,m,f,o1,o2)");
    }
  }
  if (families.empty()) fail(ErrorKind::InvalidInput, "no pattern kinds given");
  return families;
}

ordered_json points_doc(const std::vector<Point2>& points) {
  ordered_json doc = new_doc();
  doc.update(points_to_json(points));
  return doc;
}

ordered_json hypergraph_doc(const Hypergraph& h) {
  ordered_json doc = new_doc();
  doc.update(hypergraph_to_json(h));
  return doc;
}

struct Request {
  std::string points_path;
  std::string hyper_path;
  std::string graph_path;
  std::string pattern;
  std::string kinds = "c,m,f,o1,o2";
  std::string gadget_kind;
  int n = 1;
  int max_subset = -1;
  int grid = 8;
  int extra = 2;
  long long budget = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
};

CommandOutcome run_compete(const Request& req) {
  const auto result = competition_hypergraph(DoublyPartialOrder::build(load_points(req.points_path)));
  ordered_json doc = new_doc();
  doc.update(hypergraph_to_json(result.hypergraph));
  doc["witnesses"] = ordered_json::array();
  for (const auto& [edge, ids] : result.witnesses) {
    doc["witnesses"].push_back({{"edge", edge}, {"witnesses", ids}});
  }
  return {Status::Ok, doc};
}

CommandOutcome run_compete_graph(const Request& req) {
  const auto graph = competition_graph(DoublyPartialOrder::build(load_points(req.points_path)));
  ordered_json doc = new_doc();
  doc.update(graph_to_json(graph));
  return {Status::Ok, doc};
}

CommandOutcome run_interval(const Request& req) {
  const auto cert = is_interval(load_hypergraph(req.hyper_path));
  ordered_json doc = new_doc();
  doc["interval"] = cert.interval;
  if (cert.interval) doc["ordering"] = cert.ordering;
  return {cert.interval ? Status::Ok : Status::Falsified, doc};
}

CommandOutcome run_interval_graph(const Request& req) {
  const bool interval = is_interval_graph(load_graph(req.graph_path));
  ordered_json doc = new_doc();
  doc["interval"] = interval;
  return {interval ? Status::Ok : Status::Falsified, doc};
}

CommandOutcome run_chordal(const Request& req) {
  const auto report = is_chordal(load_hypergraph(req.hyper_path));
  ordered_json doc = new_doc();
  doc["chordal"] = report.chordal;
  if (!report.chordal) {
    doc["cycle"] = report.cycle;
    doc["support"] = report.support;
  }
  return {report.chordal ? Status::Ok : Status::Falsified, doc};
}

CommandOutcome run_witness(const Request& req) {
  const auto h = load_hypergraph(req.hyper_path);
  const std::size_t max_subset =
      req.max_subset < 0 ? h.vertex_count() : static_cast<std::size_t>(req.max_subset);
  const auto witness = find_forbidden_witness(h, parse_kinds(req.kinds), max_subset, kCliWitnessBound);
  ordered_json doc = new_doc();
  doc["found"] = witness.has_value();
  if (witness) {
    doc["pattern"] = pattern_name(witness->pattern);
    doc["subset"] = witness->subset;
    doc["map"] = witness->map;
  }
  return {witness ? Status::Ok : Status::Falsified, doc};
}

CommandOutcome run_pattern(const Request& req) {
  return {Status::Ok, hypergraph_doc(generate_pattern(parse_pattern_name(req.pattern)))};
}

CommandOutcome run_gadget(const Request& req) {
  std::string kind(req.gadget_kind);
  std::transform(kind.begin(), kind.end(), kind.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (kind != "m" && kind != "f") fail(ErrorKind::InvalidInput, "--kind must be m or f");
  const auto family = kind == "m" ? PatternFamily::M : PatternFamily::F;
  return {Status::Ok, points_doc(gadget_dpo(family, req.n))};
}

CommandOutcome run_staircase(const Request& req) {
  auto staircase = generate_staircase(req.n);
  auto points = std::move(staircase.a);
  points.insert(points.end(), staircase.b.begin(), staircase.b.end());
  return {Status::Ok, points_doc(points)};
}

CommandOutcome run_embed(const Request& req) {
  const auto h = load_hypergraph(req.hyper_path);
  const auto cert = is_interval(h);
  if (!cert.interval) {
    fail(ErrorKind::InvalidInput, "hypergraph is not interval; nothing to embed");
  }
  return {Status::Ok, points_doc(embed_interval_hypergraph(h, cert.ordering))};
}

ordered_json realization_doc(const RealizationReport& report, bool include_points) {
  ordered_json doc = new_doc();
  doc["realized"] = report.realized;
  if (report.realized) {
    if (include_points) doc.update(points_to_json(report.points));
    doc["embedding"] = report.embedding;
    doc["isolated"] = report.isolated;
  }
  return doc;
}

CommandOutcome run_check(const Request& req) {
  const auto report = check_realization(load_points(req.points_path), load_hypergraph(req.hyper_path));
  return {report.realized ? Status::Ok : Status::Falsified, realization_doc(report, false)};
}

CommandOutcome run_realize(const Request& req) {
  RealizationSearchParams params;
  params.grid = req.grid;
  params.extra = req.extra;
  params.budget = req.budget;
  params.seed = req.seed;
  params.threads = req.threads;
  const auto report = search_realization(load_hypergraph(req.hyper_path), params);
  return {report.realized ? Status::Ok : Status::Falsified, realization_doc(report, true)};
}

CommandOutcome run_lemmas(const Request& req) {
  const auto violations = verify_structure_lemmas(DoublyPartialOrder::build(load_points(req.points_path)));
  ordered_json doc = new_doc();
  doc["violations"] = ordered_json::array();
  for (const auto& v : violations) {
    doc["violations"].push_back({{"lemma", v.lemma}, {"vertices", v.vertices}});
  }
  return {violations.empty() ? Status::Ok : Status::Falsified, doc};
}

}  // namespace

CommandOutcome dispatch(const std::vector<std::string>& args) {
  CLI::App app{"competition hypergraphs of doubly partial orders"};
  app.require_subcommand(1);

  Request req;
  CommandOutcome (*handler)(const Request&) = nullptr;

  const auto add = [&](const std::string& name, const std::string& description,
                       CommandOutcome (*fn)(const Request&)) {
    auto* cmd = app.add_subcommand(name, description);
    cmd->callback([&handler, fn]() { handler = fn; });
    return cmd;
  };

  auto* compete = add("compete", "competition hypergraph of a point set", run_compete);
  compete->add_option("points", req.points_path, "point-set JSON file")->required();

  auto* compete_graph = add("compete-graph", "competition graph of a point set", run_compete_graph);
  compete_graph->add_option("points", req.points_path, "point-set JSON file")->required();

  auto* interval = add("interval", "interval certificate for a hypergraph", run_interval);
  interval->add_option("hypergraph", req.hyper_path, "hypergraph JSON file")->required();

  auto* interval_graph = add("interval-graph", "interval test for a graph", run_interval_graph);
  interval_graph->add_option("graph", req.graph_path, "graph JSON file")->required();

  auto* chordal = add("chordal", "chordality report for a hypergraph", run_chordal);
  chordal->add_option("hypergraph", req.hyper_path, "hypergraph JSON file")->required();

  auto* witness = add("witness", "search for a forbidden-pattern trace", run_witness);
  witness->add_option("hypergraph", req.hyper_path, "hypergraph JSON file")->required();
  witness->add_option("--kinds", req.kinds, "comma-separated families: c,m,f,o1,o2");
  witness->add_option("--max-subset", req.max_subset, "largest subset size to try");

  auto* pattern = add("pattern", "emit a forbidden pattern by name", run_pattern);
  pattern->add_option("name", req.pattern, "c3, c4, ..., m1, ..., f1, ..., o1, o2")->required();

  auto* gadget = add("gadget", "point set whose competition hypergraph contains M_n or F_n",
                     run_gadget);
  gadget->add_option("--kind", req.gadget_kind, "m or f")->required();
  gadget->add_option("--n", req.n, "pattern parameter, n >= 1")->required();

  auto* staircase = add("staircase", "the two staircase antichains A_n and B_n", run_staircase);
  staircase->add_option("--n", req.n, "staircase parameter, n >= 1")->required();

  auto* embed = add("embed", "embed an interval hypergraph into a point set", run_embed);
  embed->add_option("hypergraph", req.hyper_path, "hypergraph JSON file")->required();

  auto* check = add("check", "does the point set realize the hypergraph plus isolated vertices",
                    run_check);
  check->add_option("points", req.points_path, "point-set JSON file")->required();
  check->add_option("hypergraph", req.hyper_path, "hypergraph JSON file")->required();

  auto* realize = add("realize", "random search for a realizing point set", run_realize);
  realize->add_option("hypergraph", req.hyper_path, "hypergraph JSON file")->required();
  realize->add_option("--grid", req.grid, "points are sampled from {0..grid}^2");
  realize->add_option("--extra", req.extra, "isolated-vertex budget");
  realize->add_option("--budget", req.budget, "number of sampled placements");
  realize->add_option("--seed", req.seed, "random seed");
  realize->add_option("--threads", req.threads, "worker threads (default 1)");

  auto* lemmas = add("lemmas", "verify the structural facts on a point set", run_lemmas);
  lemmas->add_option("points", req.points_path, "point-set JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    return handler(req);
  } catch (const CLI::CallForHelp&) {
    ordered_json doc = new_doc();
    doc["help"] = app.help();
    return {Status::Ok, doc};
  } catch (const CLI::ParseError& e) {
    ordered_json doc = new_doc();
    doc["error"] = e.what();
    return {Status::InputError, doc};
  } catch (const Error& e) {
    ordered_json doc = new_doc();
    doc["error"] = e.what();
    return {e.kind() == ErrorKind::TooLarge ? Status::TooLarge : Status::InputError, doc};
  } catch (const std::exception& e) {
    ordered_json doc = new_doc();
    doc["error"] = e.what();
    return {Status::InputError, doc};
  }
}

}  // namespace dpo::cli
