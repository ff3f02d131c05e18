#include "homquot/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "homquot/error.hpp"

namespace homquot::io {

namespace {

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const json& field(const json& doc, const char* key, const char* what) {
  if (!doc.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::string as_string(const json& v, const char* what) {
  if (!v.is_string()) throw InputError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_array(const json& v, const char* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(as_string(s, what));
  return out;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source_name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte);
    throw InputError(source_name + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << doc.dump(2) << '\n';
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.proper_edges()) edges.push_back({g.label(u), g.label(v)});
  return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& doc) {
  auto vertices = string_array(field(doc, "vertices", "graph"), "graph vertex");
  std::vector<std::pair<std::string, std::string>> edges;
  const json& raw = field(doc, "edges", "graph");
  if (!raw.is_array()) throw InputError("graph \"edges\" must be an array");
  for (const auto& e : raw) {
    if (!e.is_array() || e.size() != 2) throw InputError("graph edge must be a 2-element array");
    edges.emplace_back(as_string(e[0], "edge endpoint"), as_string(e[1], "edge endpoint"));
  }
  return Graph::build(std::move(vertices), edges);
}

json to_json(const Partition& p, const Graph& g) { return {{"blocks", p.to_labels(g)}}; }

Partition partition_from_json(const json& doc, const Graph& g) {
  const json& raw = field(doc, "blocks", "partition");
  if (!raw.is_array()) throw InputError("partition \"blocks\" must be an array");
  std::vector<std::vector<std::string>> blocks;
  for (const auto& b : raw) blocks.push_back(string_array(b, "partition vertex"));
  return Partition::from_labels(g, blocks);
}

json to_json(const PermGroup& group, const Graph& g) {
  json gens = json::array();
  for (const auto& f : group.generators()) {
    json m = json::object();
    for (Vertex v = 0; v < f.size(); ++v) m[g.label(v)] = g.label(f(v));
    gens.push_back(std::move(m));
  }
  return {{"generators", std::move(gens)}};
}

PermGroup group_from_json(const json& doc, const Graph& g) {
  const json& raw = field(doc, "generators", "group");
  if (!raw.is_array()) throw InputError("group \"generators\" must be an array");
  std::vector<Permutation> gens;
  for (const auto& m : raw) {
    if (!m.is_object()) throw InputError("group generator must be an object");
    VertexMap image(g.order());
    for (Vertex v = 0; v < g.order(); ++v) image[v] = v;
    for (auto it = m.begin(); it != m.end(); ++it) image[g.index_of(it.key())] = g.index_of(as_string(*it, "generator image"));
    gens.emplace_back(std::move(image));
  }
  return PermGroup(g.order(), std::move(gens));
}

json to_json(const HomMap& m) { return {{"map", m.to_labels()}}; }

HomMap hom_from_json(const json& doc, GraphPtr source, GraphPtr target) {
  const json& raw = field(doc, "map", "homomorphism");
  if (!raw.is_object()) throw InputError("homomorphism \"map\" must be an object");
  std::map<std::string, std::string> map;
  for (auto it = raw.begin(); it != raw.end(); ++it) map.emplace(it.key(), as_string(*it, "map image"));
  return HomMap::from_labels(std::move(source), std::move(target), map);
}

json to_json(const ClassificationReport& r) {
  json out = {{"surjective", r.surjective},
              {"complete", r.complete},
              {"isomorphism", r.isomorphism},
              {"tame", r.tame},
              {"locally_surjective", r.locally_surjective},
              {"locally_injective", r.locally_injective},
              {"locally_bijective", r.locally_bijective},
              {"locally_strong", r.locally_strong},
              {"pseudo_covering", r.pseudo_covering},
              {"equitable", r.equitable},
              {"component_equitable", r.component_equitable}};
  if (r.orbit) out["orbit"] = *r.orbit;
  return out;
}

json to_json(const CountBreakdown& b, const HomMap& m) {
  const auto comps = components(m.source());
  json terms = json::array();
  for (const auto& t : b.terms) {
    json term = {{"y", m.target().label(t.y)}, {"kX", t.k_x}, {"kC", t.k_c}, {"value", t.value}};
    term["component_leader"] = t.component ? json(m.source().label(comps.blocks[*t.component].front())) : json(nullptr);
    terms.push_back(std::move(term));
  }
  return {{"terms", std::move(terms)}, {"total", b.total}};
}

FiniteGroup cayley_from_json(const json& doc) {
  auto elements = string_array(field(doc, "elements", "Cayley table"), "group element");
  const std::string identity = as_string(field(doc, "identity", "Cayley table"), "identity");
  const json& raw = field(doc, "table", "Cayley table");
  if (!raw.is_object()) throw InputError("Cayley \"table\" must be an object");

  auto index = [&](const std::string& s) {
    auto it = std::find(elements.begin(), elements.end(), s);
    if (it == elements.end()) throw InputError("unknown group element '" + s + "'");
    return static_cast<FiniteGroup::Element>(it - elements.begin());
  };
  const std::size_t n = elements.size();
  std::vector<std::vector<FiniteGroup::Element>> table(n, std::vector<FiniteGroup::Element>(n, n));
  for (auto row = raw.begin(); row != raw.end(); ++row) {
    if (!row->is_object()) throw InputError("Cayley table row must be an object");
    const auto a = index(row.key());
    for (auto cell = row->begin(); cell != row->end(); ++cell)
      table[a][index(cell.key())] = index(as_string(*cell, "product"));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == n) throw InputError("Cayley table has no entry for " + elements[a] + "*" + elements[b]);
  const auto e = index(identity);
  return FiniteGroup(std::move(elements), std::move(table), e);
}

json to_json(const FiniteGroup& g) {
  json table = json::object();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) table[g.label(a)][g.label(b)] = g.label(g.multiply(a, b));
  return {{"elements", g.elements()}, {"identity", g.label(g.identity())}, {"table", std::move(table)}};
}

}  // namespace homquot::io
