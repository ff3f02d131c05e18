#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homquot {

// Vertices are addressed by their rank in the lexicographically sorted label
// list, so index order and label order coincide everywhere.
using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free
using VertexMap = std::vector<Vertex>;  // source index -> target index
using Edge = std::pair<Vertex, Vertex>;  // first < second

/// A finite, undirected, simple, reflexive graph.
///
/// Every vertex carries an implicit loop that is never stored: `adjacent(v, v)`
/// is always true while `proper_edges()` lists only pairs of distinct
/// vertices. Instances are immutable after construction.
class Graph {
 public:
  /// Builds a graph from labels and proper edges given by label.
  ///
  /// Throws InputError on an empty or duplicated label list, an edge naming an
  /// undeclared label, a self pair, or an edge that repeats after unordered
  /// normalization.
  static Graph build(std::vector<std::string> labels,
                     const std::vector<std::pair<std::string, std::string>>& proper_edges);

  /// Builds a graph whose labels are already sorted and distinct; edges are
  /// index pairs into that list. Duplicate and self pairs are rejected.
  static Graph from_sorted(std::vector<std::string> sorted_labels, std::vector<Edge> proper_edges);

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  std::optional<Vertex> find(std::string_view label) const;
  /// Like find(), throwing InputError for an undeclared label.
  Vertex index_of(std::string_view label) const;

  /// Edge test under the reflexive convention (true when u == v).
  bool adjacent(Vertex u, Vertex v) const { return u == v || adjacency_[u * order() + v] != 0; }
  bool has_proper_edge(Vertex u, Vertex v) const { return u != v && adjacency_[u * order() + v] != 0; }

  const std::vector<Edge>& proper_edges() const { return edges_; }
  std::span<const Vertex> proper_neighbors(Vertex v) const { return neighbors_.at(v); }
  std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }

  /// N(v): v itself together with its proper neighbors, in index order.
  VertexSet neighborhood(Vertex v) const;
  /// Label based convenience; throws InputError on unknown vertices.
  std::vector<std::string> neighborhood(std::string_view label) const;

  bool operator==(const Graph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  Graph() = default;

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::uint8_t> adjacency_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

struct ComponentIndex {
  std::vector<VertexSet> blocks;  // ordered by smallest member
  std::vector<std::size_t> block_of;

  std::size_t count() const { return blocks.size(); }
  const VertexSet& block_containing(Vertex v) const { return blocks[block_of[v]]; }
};

/// Connected components by breadth-first traversal.
ComponentIndex components(const Graph& g);

bool is_connected(const Graph& g);

/// The subgraph induced by `vertices`. Labels are kept; throws InputError if
/// the set is empty or names a vertex outside `g`.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Exact isomorphism search by backtracking with degree pruning.
///
/// Returns a bijection that maps `a` onto `b` preserving edges and non-edges.
/// Intended for graphs of at most a dozen vertices.
std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b);

/// Sorted label list of a vertex set.
std::vector<std::string> labels_of(const Graph& g, std::span<const Vertex> vertices);

}  // namespace homquot
