#include "homquot/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "homquot/error.hpp"

namespace homquot {

Graph Graph::build(std::vector<std::string> labels,
                   const std::vector<std::pair<std::string, std::string>>& proper_edges) {
  if (labels.empty()) throw InputError("graph must have at least one vertex");
  std::sort(labels.begin(), labels.end());
  if (auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end())
    throw InputError("duplicate vertex label '" + *dup + "'");

  auto lookup = [&](const std::string& s) {
    auto it = std::lower_bound(labels.begin(), labels.end(), s);
    if (it == labels.end() || *it != s) throw InputError("edge endpoint '" + s + "' is not a declared vertex");
    return static_cast<Vertex>(it - labels.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(proper_edges.size());
  for (const auto& [a, b] : proper_edges) {
    Vertex u = lookup(a), v = lookup(b);
    if (u == v) throw InputError("self pair {" + a + "," + b + "} given as a proper edge; loops are implicit");
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return from_sorted(std::move(labels), std::move(edges));
}

Graph Graph::from_sorted(std::vector<std::string> sorted_labels, std::vector<Edge> proper_edges) {
  if (sorted_labels.empty()) throw InputError("graph must have at least one vertex");
  if (!std::is_sorted(sorted_labels.begin(), sorted_labels.end()) ||
      std::adjacent_find(sorted_labels.begin(), sorted_labels.end()) != sorted_labels.end())
    throw InputError("labels must be sorted and distinct");

  Graph g;
  g.labels_ = std::move(sorted_labels);
  const std::size_t n = g.labels_.size();
  for (auto& [u, v] : proper_edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint index out of range");
    if (u == v) throw InputError("self pair on '" + g.labels_[u] + "' given as a proper edge; loops are implicit");
    if (u > v) std::swap(u, v);
  }
  std::sort(proper_edges.begin(), proper_edges.end());
  if (auto dup = std::adjacent_find(proper_edges.begin(), proper_edges.end()); dup != proper_edges.end())
    throw InputError("duplicate edge {" + g.labels_[dup->first] + "," + g.labels_[dup->second] + "}");

  g.edges_ = std::move(proper_edges);
  g.neighbors_.assign(n, {});
  g.adjacency_.assign(n * n, 0);
  for (auto [u, v] : g.edges_) {
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
    g.adjacency_[u * n + v] = g.adjacency_[v * n + u] = 1;
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  return g;
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Vertex Graph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InputError("unknown vertex '" + std::string(label) + "'");
}

VertexSet Graph::neighborhood(Vertex v) const {
  const auto& nb = neighbors_.at(v);
  VertexSet out;
  out.reserve(nb.size() + 1);
  auto split = std::lower_bound(nb.begin(), nb.end(), v);
  out.insert(out.end(), nb.begin(), split);
  out.push_back(v);
  out.insert(out.end(), split, nb.end());
  return out;
}

std::vector<std::string> Graph::neighborhood(std::string_view label) const {
  auto nb = neighborhood(index_of(label));
  return labels_of(*this, nb);
}

ComponentIndex components(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  ComponentIndex index;
  index.block_of.assign(n, unset);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (index.block_of[s] != unset) continue;
    const std::size_t id = index.blocks.size();
    VertexSet block;
    index.block_of[s] = id;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      block.push_back(u);
      for (Vertex w : g.proper_neighbors(u)) {
        if (index.block_of[w] == unset) {
          index.block_of[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    index.blocks.push_back(std::move(block));
  }
  return index;
}

bool is_connected(const Graph& g) { return components(g).count() == 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw InputError("induced subgraph needs a nonempty vertex set");
  VertexSet keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.back() >= g.order()) throw InputError("induced subgraph vertex outside the graph");

  std::vector<std::size_t> rank(g.order(), static_cast<std::size_t>(-1));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    rank[keep[i]] = i;
    labels.push_back(g.label(keep[i]));
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.proper_edges())
    if (rank[u] != static_cast<std::size_t>(-1) && rank[v] != static_cast<std::size_t>(-1))
      edges.emplace_back(rank[u], rank[v]);
  return Graph::from_sorted(std::move(labels), std::move(edges));
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b), image_(a.order(), none), used_(b.order(), false) {
    order_vertices();
  }

  std::optional<VertexMap> run() {
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex none = static_cast<Vertex>(-1);

  // Connectivity-first order: each next vertex has the most already placed
  // neighbors, ties by higher degree then smaller index.
  void order_vertices() {
    const std::size_t n = a_.order();
    std::vector<std::size_t> placed_nb(n, 0);
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = none;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == none || placed_nb[v] > placed_nb[best] ||
            (placed_nb[v] == placed_nb[best] && a_.degree(v) > a_.degree(best)))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex w : a_.proper_neighbors(best)) ++placed_nb[w];
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if (used_[w] || b_.degree(w) != a_.degree(v)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        Vertex u = order_[d];
        ok = a_.has_proper_edge(u, v) == b_.has_proper_edge(image_[u], w);
      }
      if (!ok) continue;
      image_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      image_[v] = none;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> order_;
  VertexMap image_;
  std::vector<bool> used_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> seq(g.order());
  for (Vertex v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
  std::sort(seq.begin(), seq.end());
  return seq;
}

}  // namespace

std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.proper_edges().size() != b.proper_edges().size()) return std::nullopt;
  if (degree_sequence(a) != degree_sequence(b)) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

std::vector<std::string> labels_of(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace homquot
