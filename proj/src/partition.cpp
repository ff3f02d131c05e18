#include "homquot/partition.hpp"

#include <algorithm>
#include <map>

#include "homquot/error.hpp"
#include "homquot/hom.hpp"

namespace homquot {

Partition::Partition(std::size_t universe, std::vector<VertexSet> cells) : cells_(std::move(cells)) {
  for (auto& c : cells_) {
    if (c.empty()) throw InputError("partition has an empty cell");
    std::sort(c.begin(), c.end());
  }
  std::sort(cells_.begin(), cells_.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  cell_of_.assign(universe, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (Vertex v : cells_[i]) {
      if (v >= universe) throw InputError("partition cell names a vertex outside the universe");
      if (cell_of_[v] != static_cast<std::size_t>(-1)) throw InputError("partition cells are not disjoint");
      cell_of_[v] = i;
    }
  }
  for (std::size_t c : cell_of_)
    if (c == static_cast<std::size_t>(-1)) throw InputError("partition cells do not cover the universe");
}

Partition Partition::from_labels(const Graph& g, const std::vector<std::vector<std::string>>& blocks) {
  std::vector<VertexSet> cells;
  for (const auto& block : blocks) {
    VertexSet cell;
    for (const auto& label : block) cell.push_back(g.index_of(label));
    cells.push_back(std::move(cell));
  }
  return Partition(g.order(), std::move(cells));
}

Partition Partition::from_keys(std::span<const std::size_t> keys) {
  std::map<std::size_t, VertexSet> by_key;
  for (Vertex v = 0; v < keys.size(); ++v) by_key[keys[v]].push_back(v);
  std::vector<VertexSet> cells;
  cells.reserve(by_key.size());
  for (auto& [key, cell] : by_key) cells.push_back(std::move(cell));
  return Partition(keys.size(), std::move(cells));
}

Partition Partition::singletons(std::size_t universe) {
  std::vector<VertexSet> cells;
  for (Vertex v = 0; v < universe; ++v) cells.push_back({v});
  return Partition(universe, std::move(cells));
}

Partition Partition::total(std::size_t universe) {
  VertexSet all(universe);
  for (Vertex v = 0; v < universe; ++v) all[v] = v;
  return Partition(universe, {std::move(all)});
}

std::vector<std::vector<std::string>> Partition::to_labels(const Graph& g) const {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cells_) out.push_back(labels_of(g, c));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_universe(const Graph& g, const Partition& p) {
  if (p.universe() != g.order())
    throw InputError("partition universe has " + std::to_string(p.universe()) + " vertices, graph has " +
                     std::to_string(g.order()));
}

}  // namespace

QuotientResult quotient(const GraphPtr& g, const Partition& p) {
  require_universe(*g, p);
  std::vector<std::string> names;
  names.reserve(p.size());
  for (const auto& cell : p.cells()) names.push_back("[" + g->label(cell.front()) + "]");
  std::vector<std::string> sorted_names = names;
  std::sort(sorted_names.begin(), sorted_names.end());

  // cell ordinal -> quotient vertex index
  std::vector<Vertex> rank(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    rank[i] = static_cast<Vertex>(std::lower_bound(sorted_names.begin(), sorted_names.end(), names[i]) -
                                  sorted_names.begin());

  std::vector<Edge> edges;
  for (auto [u, v] : g->proper_edges()) {
    Vertex a = rank[p.cell_of(u)], b = rank[p.cell_of(v)];
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  VertexMap image(g->order());
  for (Vertex x = 0; x < g->order(); ++x) image[x] = rank[p.cell_of(x)];

  GraphPtr q = share(Graph::from_sorted(std::move(sorted_names), std::move(edges)));
  QuotientResult result{q, HomMap(g, q, std::move(image))};
  if (!is_complete(result.projection)) throw InvariantError("quotient projection is not complete");
  return result;
}

bool is_tame(const Graph& g, const Partition& p) {
  require_universe(g, p);
  const auto comps = components(g);
  for (const auto& cell : p.cells())
    for (Vertex v : cell)
      if (comps.block_of[v] != comps.block_of[cell.front()]) return false;
  return true;
}

bool is_equitable(const Graph& g, const Partition& p) {
  require_universe(g, p);
  // counts[x * k + j] = |N(x) ∩ P_j|
  const std::size_t k = p.size();
  std::vector<std::size_t> counts(g.order() * k, 0);
  for (Vertex x = 0; x < g.order(); ++x) {
    ++counts[x * k + p.cell_of(x)];
    for (Vertex u : g.proper_neighbors(x)) ++counts[x * k + p.cell_of(u)];
  }
  for (const auto& cell : p.cells()) {
    const Vertex first = cell.front();
    for (Vertex x : cell)
      if (!std::equal(counts.begin() + x * k, counts.begin() + (x + 1) * k, counts.begin() + first * k)) return false;
  }
  return true;
}

Partition partition_of_map(const HomMap& m) { return Partition::from_keys(m.image()); }

}  // namespace homquot
