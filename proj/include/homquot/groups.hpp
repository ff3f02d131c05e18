#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homquot/graph.hpp"
#include "homquot/perm.hpp"

namespace homquot {

inline constexpr std::size_t max_group_order = 120;

/// A finite group given by a Cayley table over labelled elements.
class FiniteGroup {
 public:
  using Element = std::size_t;

  /// Validates closure, identity, inverses and associativity (exhaustively).
  /// Throws InputError on any failure or when the order exceeds
  /// max_group_order.
  FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<Element>> table, Element identity);

  std::size_t order() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(Element a) const { return elements_.at(a); }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element find(const std::string& label) const;

  std::size_t element_order(Element a) const;
  /// Greedy generating set: scan elements in order, keep those not in the
  /// subgroup generated so far.
  std::vector<Element> generating_set() const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  Element identity_;
};

/// Z_n with elements "0".."n-1"; 1 <= n <= 60.
FiniteGroup make_cyclic(std::size_t n);

/// S_n in one-line notation ("213" swaps 1 and 2); 1 <= n <= 5. The product
/// is composition, (ab)(i) = a(b(i)).
FiniteGroup make_symmetric(std::size_t n);

/// Z_2 x Z_2 with elements "e", "a", "b", "c".
FiniteGroup make_klein_four();

/// Vertices are the elements; {x, y} is an edge when x != y and one of them
/// is a positive power of the other.
Graph power_graph(const FiniteGroup& g);

/// The power graph with the identity deleted. Throws InputError for the
/// trivial group.
Graph proper_power_graph(const FiniteGroup& g);

/// Conjugation x -> a⁻¹ x a for `a` in a generating set, as permutations of
/// the vertices of `on_graph` (whose labels must be group elements closed
/// under conjugation). Each generator is checked to be an automorphism;
/// failure throws InvariantError.
PermGroup conjugation_group(const FiniteGroup& g, const Graph& on_graph);

}  // namespace homquot
