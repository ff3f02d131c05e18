#include "cli.hpp"

#include <algorithm>
#include <filesystem>

#include "CLI11.hpp"
#include "homquot/count.hpp"
#include "homquot/error.hpp"
#include "homquot/groups.hpp"
#include "homquot/io.hpp"
#include "homquot/oracle.hpp"

namespace homquot::cli {

namespace {

using io::json;
namespace fs = std::filesystem;

constexpr int exit_input = 1;
constexpr int exit_hypothesis = 2;
constexpr int exit_invariant = 3;

struct Options {
  std::string graph, partition, group, source, target, map, out;
  std::string method = "auto";
  std::string group_spec;
  bool proper = false;
  oracle::SweepConfig sweep;
  std::string inject_fault;
};

GraphPtr load_graph(const std::string& path) { return share(io::graph_from_json(io::read_json_file(path))); }

std::optional<PermGroup> load_group(const std::string& path, const Graph& g) {
  if (path.empty()) return std::nullopt;
  return io::group_from_json(io::read_json_file(path), g);
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void write_outputs(const std::string& dir, const std::vector<std::pair<std::string, json>>& files) {
  fs::create_directories(dir);
  for (const auto& [name, doc] : files) io::write_json_file(fs::path(dir) / name, doc);
}

int cmd_components(const Options& o, std::ostream& out) {
  auto g = load_graph(o.graph);
  const auto comps = components(*g);
  json blocks = json::array();
  for (const auto& b : comps.blocks) blocks.push_back(labels_of(*g, b));
  emit(out, {{"c", comps.count()}, {"blocks", std::move(blocks)}});
  return 0;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  auto g = load_graph(o.graph);
  const auto p = io::partition_from_json(io::read_json_file(o.partition), *g);
  const auto q = quotient(g, p);
  const json quotient_doc = io::to_json(*q.quotient), projection_doc = io::to_json(q.projection);
  if (!o.out.empty()) {
    write_outputs(o.out, {{"quotient.json", quotient_doc}, {"projection.json", projection_doc}});
    return 0;
  }
  emit(out, {{"quotient", quotient_doc}, {"projection", projection_doc["map"]}});
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto src = load_graph(o.source);
  auto tgt = load_graph(o.target);
  const auto m = io::hom_from_json(io::read_json_file(o.map), src, tgt);
  const auto group = load_group(o.group, *src);
  if (!validate_hom(m)) throw HypothesisError("hypotheses not satisfied: homomorphism");
  emit(out, io::to_json(classify(m, group ? &*group : nullptr)));
  return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
  auto g = load_graph(o.graph);
  const auto p = io::partition_from_json(io::read_json_file(o.partition), *g);
  const auto group = load_group(o.group, *g);
  const auto m = quotient(g, p).projection;

  std::string method = o.method;
  if (method == "auto") {
    if (group && verify_automorphisms(*g, *group) && is_consistent(m, *group))
      method = "B";
    else if (!is_locally_surjective(m))
      throw HypothesisError("hypotheses not satisfied: locally_surjective");
    else
      method = is_component_equitable(m) ? "ce" : "A";
  }

  CountBreakdown b;
  if (method == "A") {
    b = count_theorem_A(m);
  } else if (method == "ce") {
    b = count_ce(m);
  } else {
    if (!group) throw InputError("method B needs --group");
    b = count_theorem_B(m, *group);
  }
  const std::size_t c = components(*g).count();
  if (b.total != c)
    throw InvariantError("count total " + std::to_string(b.total) + " differs from " + std::to_string(c) +
                         " components");
  json doc = io::to_json(b, m);
  doc["method"] = method;
  emit(out, doc);
  return 0;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  auto g = load_graph(o.graph);
  auto group = load_group(o.group, *g);
  if (group) {
    if (!verify_automorphisms(*g, *group)) throw HypothesisError("hypotheses not satisfied: automorphisms");
  } else {
    group = automorphism_group(*g);
  }
  emit(out, {{"orbits", orbit_partition(*group).to_labels(*g)}, {"group", io::to_json(*group, *g)}});
  return 0;
}

std::size_t parse_order(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InputError("bad group specification '" + spec + "'");
  return n;
}

FiniteGroup parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "klein" && colon == std::string::npos) return make_klein_four();
  if (kind == "cyclic") return make_cyclic(parse_order(arg, spec));
  if (kind == "symmetric") return make_symmetric(parse_order(arg, spec));
  if (kind == "cayley" && !arg.empty()) return io::cayley_from_json(io::read_json_file(arg));
  throw InputError("bad group specification '" + spec + "' (expected cyclic:n, symmetric:n, klein or cayley:path)");
}

int cmd_powergraph(const Options& o, std::ostream& out) {
  const auto group = parse_group_spec(o.group_spec);
  const Graph p = o.proper ? proper_power_graph(group) : power_graph(group);
  const auto conj = conjugation_group(group, p);
  const json graph_doc = io::to_json(p), group_doc = io::to_json(conj, p);
  if (!o.out.empty()) {
    write_outputs(o.out, {{"graph.json", graph_doc}, {"group.json", group_doc}});
    return 0;
  }
  emit(out, {{"graph", graph_doc}, {"group", group_doc}});
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  oracle::Overrides overrides;
  if (o.inject_fault == "locally_strong") {
    // claims an edge lifts whenever it is merely an image edge
    overrides.locally_strong = [](const HomMap& m) { return is_surjective(m); };
  } else if (!o.inject_fault.empty()) {
    throw InputError("unknown fault '" + o.inject_fault + "'");
  }
  const auto report = oracle::run_suite(o.sweep, overrides);
  emit(out, oracle::to_json(report));
  return report.pass ? 0 : exit_invariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph homomorphisms, quotients and component counting"};
  app.require_subcommand(1);
  Options o;

  auto* components = app.add_subcommand("components", "List the connected components of a graph");
  components->add_option("graph", o.graph, "Graph JSON")->required();

  auto* quotient = app.add_subcommand("quotient", "Build the quotient graph and its projection");
  quotient->add_option("graph", o.graph, "Graph JSON")->required();
  quotient->add_option("partition", o.partition, "Partition JSON")->required();
  quotient->add_option("--out", o.out, "Directory for quotient.json and projection.json");

  auto* classify = app.add_subcommand("classify", "Report which homomorphism classes a map belongs to");
  classify->add_option("source", o.source, "Source graph JSON")->required();
  classify->add_option("target", o.target, "Target graph JSON")->required();
  classify->add_option("map", o.map, "Map JSON")->required();
  classify->add_option("--group", o.group, "Automorphism group JSON on the source");

  auto* count = app.add_subcommand("count", "Count components through a quotient");
  count->add_option("graph", o.graph, "Graph JSON")->required();
  count->add_option("partition", o.partition, "Partition JSON")->required();
  count->add_option("--group", o.group, "Automorphism group JSON");
  count->add_option("--method", o.method, "auto, A, B or ce")->check(CLI::IsMember({"auto", "A", "B", "ce"}));

  auto* orbits = app.add_subcommand("orbits", "Orbits of a given or computed automorphism group");
  orbits->add_option("graph", o.graph, "Graph JSON")->required();
  orbits->add_option("group", o.group, "Group JSON (default: search the automorphism group)");

  auto* powergraph = app.add_subcommand("powergraph", "Power graph of a finite group with its conjugation action");
  powergraph->add_option("--group", o.group_spec, "cyclic:n, symmetric:n, klein or cayley:path")->required();
  powergraph->add_flag("--proper", o.proper, "Delete the identity");
  powergraph->add_option("--out", o.out, "Directory for graph.json and group.json");

  auto* verify = app.add_subcommand("verify", "Run the exhaustive and randomized property suite");
  verify->add_option("--seed", o.sweep.seed, "Random seed");
  verify->add_option("--max-vertices", o.sweep.max_source_vertices, "Largest exhaustive source graph")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-target", o.sweep.max_target_vertices, "Largest exhaustive target graph")
      ->check(CLI::PositiveNumber);
  verify->add_option("--random", o.sweep.random_instances, "Number of random orbit instances");
  verify->add_option("--inject-fault", o.inject_fault, "Replace a predicate with a broken one (locally_strong)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_input;
  }

  try {
    if (*components) return cmd_components(o, out);
    if (*quotient) return cmd_quotient(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*count) return cmd_count(o, out);
    if (*orbits) return cmd_orbits(o, out);
    if (*powergraph) return cmd_powergraph(o, out);
    return cmd_verify(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return exit_hypothesis;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_invariant;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
}

}  // namespace homquot::cli
