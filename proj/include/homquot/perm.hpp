#pragma once

#include <optional>
#include <vector>

#include "homquot/graph.hpp"
#include "homquot/hom_map.hpp"
#include "homquot/partition.hpp"

namespace homquot {

/// A bijection of {0, ..., n-1}.
class Permutation {
 public:
  /// Throws InputError unless `image` is a bijection of its index range.
  explicit Permutation(VertexMap image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  const VertexMap& image() const { return image_; }
  bool is_identity() const;

  /// (this ∘ other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;

  bool operator==(const Permutation& other) const { return image_ == other.image_; }
  bool operator<(const Permutation& other) const { return image_ < other.image_; }

 private:
  VertexMap image_;
};

/// A permutation group given by generators. Elements are never materialized.
class PermGroup {
 public:
  PermGroup(std::size_t universe, std::vector<Permutation> generators);
  static PermGroup trivial(std::size_t universe) { return PermGroup(universe, {}); }

  std::size_t universe() const { return universe_; }
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  std::size_t universe_;
  std::vector<Permutation> generators_;
};

bool is_automorphism(const Graph& g, const Permutation& f);

/// Every generator maps proper edges onto proper edges. Throws InputError when
/// the group acts on a different vertex count than `g` has.
bool verify_automorphisms(const Graph& g, const PermGroup& group);

/// Orbits of the generated group, by closure under the generators.
Partition orbit_partition(const PermGroup& group);

inline constexpr std::size_t default_automorphism_bound = 10;

/// A generating set of Aut(g), found by backtracking over degree compatible
/// bijections along a degree ordered base. Throws HypothesisError when g has
/// more than `max_vertices` vertices.
PermGroup automorphism_group(const Graph& g, std::size_t max_vertices = default_automorphism_bound);

/// Generators of the subgroup of Aut(g) mapping every cell of `cells` onto
/// itself.
PermGroup cell_stabilizer(const Graph& g, const Partition& cells,
                          std::size_t max_vertices = default_automorphism_bound);

/// If `cells` is an orbit partition of some subgroup of Aut(g), returns such a
/// subgroup (the largest one, the cell stabilizer); otherwise nullopt.
std::optional<PermGroup> orbit_witness(const Graph& g, const Partition& cells,
                                       std::size_t max_vertices = default_automorphism_bound);

/// m ∘ f = m for every generator f, and the fibres of m are exactly the
/// orbits. Automorphism membership of the generators is not checked here.
bool is_consistent(const HomMap& m, const PermGroup& group);

}  // namespace homquot
