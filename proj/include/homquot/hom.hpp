#pragma once

#include <optional>
#include <string>
#include <utility>

#include "homquot/hom_map.hpp"
#include "homquot/perm.hpp"

namespace homquot {

/// Edge preservation: every proper edge of the source lands on a target edge,
/// an implicit loop included. Equivalent to m(N(x)) ⊆ N(m(x)) for all x.
bool validate_hom(const HomMap& m);

// The predicates below throw HypothesisError("invalid homomorphism") when
// validate_hom(m) is false.

bool is_surjective(const HomMap& m);

/// m(X) = Y: surjective on vertices, and each proper target edge is the image
/// of some source edge.
bool is_complete(const HomMap& m);

bool is_isomorphism(const HomMap& m);

/// Every fibre lies inside one component of the source.
bool is_tame_hom(const HomMap& m);

/// The restriction N(x) -> N(m(x)) is onto for every x.
bool is_locally_surjective(const HomMap& m);
bool is_locally_injective(const HomMap& m);
bool is_locally_bijective(const HomMap& m);

/// For all x1, x2 with {m(x1), m(x2)} a target edge (loops included) some
/// x̃2 with m(x̃2) = m(x2) is adjacent to x1.
bool is_locally_strong(const HomMap& m);

/// Locally strong and surjective.
bool is_pseudo_covering(const HomMap& m);

/// The fibre partition is equitable.
bool is_equitable_hom(const HomMap& m);

/// For each target vertex y, all components meeting the fibre of y meet it
/// in equally many vertices.
bool is_component_equitable(const HomMap& m);

struct ClassificationReport {
  bool surjective = false;
  bool complete = false;
  bool isomorphism = false;
  bool tame = false;
  bool locally_surjective = false;
  bool locally_injective = false;
  bool locally_bijective = false;
  bool locally_strong = false;
  bool pseudo_covering = false;
  bool equitable = false;
  bool component_equitable = false;
  std::optional<bool> orbit;  // set only when a group was supplied

  bool operator==(const ClassificationReport&) const = default;
};

/// Evaluates every predicate independently, then checks the known inclusions
/// among the classes and throws InvariantError if the report contradicts them.
/// With a group, `orbit` is "generators are automorphisms and the group is
/// m-consistent".
ClassificationReport classify(const HomMap& m, const PermGroup* group = nullptr);

/// Throws InvariantError naming the first violated implication.
void check_report(const ClassificationReport& r);

struct Factorization {
  HomMap projection;  // X -> X/~m
  HomMap injection;   // X/~m -> Y, the induced map [x] |-> m(x)
};

/// m = injection ∘ projection, with injection injective.
Factorization factorize(const HomMap& m);

}  // namespace homquot
