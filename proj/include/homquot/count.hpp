#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homquot/graph.hpp"
#include "homquot/hom_map.hpp"
#include "homquot/partition.hpp"
#include "homquot/perm.hpp"

namespace homquot {

/// k_U(y) = |U ∩ m⁻¹(y)|.
std::size_t multiplicity(const HomMap& m, std::span<const Vertex> u, Vertex y);

/// Ordinals, in components(m.source()) order, of the components meeting the
/// fibre of y.
std::vector<std::size_t> admissible_components(const HomMap& m, Vertex y);

/// m(C) for a locally surjective m: the whole target component of any image
/// vertex. `component` is an ordinal into components(m.source()). Throws
/// HypothesisError when m is not locally surjective.
VertexSet image_of_component(const HomMap& m, std::size_t component);

/// m⁻¹(m(V_C)) computed as the union of the components admissible for m(C);
/// cross-checked against the direct preimage. Requires local surjectivity.
VertexSet preimage_of_component_vertices(const HomMap& m, std::size_t component);

struct CountTerm {
  Vertex y = 0;
  std::optional<std::size_t> component;  // absent when no component is admissible for y
  std::size_t k_x = 0;                   // k_X(y)
  std::size_t k_c = 0;                   // k_C(y), 0 without a component
  std::size_t value = 0;
};

struct CountBreakdown {
  std::vector<CountTerm> terms;
  std::size_t total = 0;
};

/// Picks one index in [0, n) among n >= 1 ordered candidates. The default
/// always takes the first, i.e. the smallest label or leader.
using Chooser = std::function<std::size_t(std::size_t n)>;

/// c(X) as the sum over target components of c(X)_y at one representative y
/// per component (the smallest label). Terms may be zero. Requires local
/// surjectivity; the total is checked against components(source).
CountBreakdown count_theorem_A(const HomMap& m);

/// The procedure for complete orbit homomorphisms: pick y_1 and an
/// admissible C_1, then repeatedly pick y_{i+1} outside the images of the
/// chosen components, for c(Y) steps; each term is k_X(y_i) / k_{C_i}(y_i).
/// Throws HypothesisError unless the generators are automorphisms, m is
/// consistent with the group and complete.
CountBreakdown count_theorem_B(const HomMap& m, const PermGroup& group, const Chooser& choose = {});

/// The same selection and division for locally surjective, component
/// equitable maps, with no group.
CountBreakdown count_ce(const HomMap& m, const Chooser& choose = {});

/// k_C(y) = 1 for every y in m(C). Requires m pseudo-covering.
bool component_iso_check(const HomMap& m, std::size_t component);

/// For a connected, pseudo-covered quotient: true when some cell lies inside a
/// single component, in which case g is connected. False means the test is
/// inconclusive and components(g) has to be consulted.
bool connectedness_criterion(const GraphPtr& g, const Partition& p);

}  // namespace homquot
