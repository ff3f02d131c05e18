#pragma once

#include <span>
#include <string>
#include <vector>

#include "homquot/graph.hpp"
#include "homquot/hom_map.hpp"

namespace homquot {

/// A partition of the vertex indices {0, ..., size-1} into nonempty cells.
///
/// Cells are stored sorted and ordered by smallest member, so two partitions
/// describing the same equivalence relation compare equal.
class Partition {
 public:
  /// Validates that `cells` are nonempty, disjoint and cover {0..universe-1}.
  Partition(std::size_t universe, std::vector<VertexSet> cells);

  static Partition from_labels(const Graph& g, const std::vector<std::vector<std::string>>& blocks);
  /// Cells given by equal keys, e.g. a map's images or a union-find root array.
  static Partition from_keys(std::span<const std::size_t> keys);
  static Partition singletons(std::size_t universe);
  static Partition total(std::size_t universe);

  std::size_t universe() const { return cell_of_.size(); }
  std::size_t size() const { return cells_.size(); }
  const std::vector<VertexSet>& cells() const { return cells_; }
  const VertexSet& cell(std::size_t i) const { return cells_[i]; }
  std::size_t cell_of(Vertex v) const { return cell_of_[v]; }

  std::vector<std::vector<std::string>> to_labels(const Graph& g) const;

  bool operator==(const Partition& other) const { return cells_ == other.cells_; }

 private:
  void index();

  std::vector<VertexSet> cells_;
  std::vector<std::size_t> cell_of_;
};

struct QuotientResult {
  GraphPtr quotient;
  HomMap projection;
};

/// X/~ with its projection. Each quotient vertex is named "[m]" where m is the
/// smallest label in its cell. Throws InputError on a universe mismatch.
QuotientResult quotient(const GraphPtr& g, const Partition& p);

/// Every cell lies inside a single component of `g`.
bool is_tame(const Graph& g, const Partition& p);

/// |N(x) ∩ P_j| is constant over x ∈ P_i for every ordered cell pair; N(x)
/// includes x, so the loop counts toward its own cell.
bool is_equitable(const Graph& g, const Partition& p);

/// The nonempty fibres of `m`.
Partition partition_of_map(const HomMap& m);

}  // namespace homquot
