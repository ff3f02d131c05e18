#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "homquot/graph.hpp"
#include "homquot/hom.hpp"
#include "homquot/partition.hpp"
#include "homquot/perm.hpp"

// Reference implementations and the exhaustive / randomized harness. Nothing
// here reuses the traversal, search or counting code paths it is used to
// check.
namespace homquot::oracle {

/// Component count by union-find over the edge list.
std::size_t component_count(const Graph& g);

// ---- enumeration ----------------------------------------------------------

/// Every labelled graph on vertices "0".."n-1" (2^(n choose 2) of them), in
/// edge-subset order.
std::vector<GraphPtr> labeled_graphs(std::size_t n);

/// One representative per isomorphism class on n vertices.
std::vector<GraphPtr> unlabeled_graphs(std::size_t n);

/// All set partitions of {0..n-1} (Bell(n) of them), via restricted growth
/// strings.
std::vector<Partition> set_partitions(std::size_t n);

/// Targets for the homomorphism sweep: labelled graphs on "a", "b", "c", ...
std::vector<GraphPtr> target_graphs(std::size_t n);

/// Every vertex map source -> target that is a homomorphism.
std::vector<HomMap> homomorphisms(const GraphPtr& source, const GraphPtr& target);

/// Materializes the group generated by `group`; throws InvariantError past
/// `limit` elements.
std::vector<Permutation> group_elements(const PermGroup& group, std::size_t limit = 5040);

// ---- random instances -----------------------------------------------------

struct OrbitInstance {
  GraphPtr graph;
  PermGroup group;
  Partition orbits;
};

/// A graph with an explicit automorphism group: vertex classes repeated
/// around a cyclic shift of random order, edges added as whole shift orbits,
/// plus a few fixed vertices. Labels are shuffled. At most `max_vertices`.
OrbitInstance random_orbit_instance(std::mt19937_64& rng, std::size_t max_vertices);

// ---- literal definitions --------------------------------------------------

/// Locally strong exactly as defined: for every x̃1 in the fibre of m(x1).
bool locally_strong_by_definition(const HomMap& m);

// ---- verification suite ---------------------------------------------------

struct SweepConfig {
  std::size_t max_source_vertices = 5;
  std::size_t max_target_vertices = 3;
  std::size_t random_instances = 1000;
  std::uint64_t seed = 42;
};

/// Substitutes for library predicates; used to show that the harness detects
/// a broken implementation.
struct Overrides {
  std::function<bool(const HomMap&)> locally_strong;
};

struct ClaimResult {
  std::string id;
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::vector<nlohmann::json> failures;  // first few counterexamples
};

struct VerificationReport {
  std::vector<ClaimResult> claims;  // sorted by id
  bool pass = true;
};

VerificationReport run_suite(const SweepConfig& cfg, const Overrides& overrides = {});

nlohmann::json to_json(const VerificationReport& report);

/// Identifiers of every claim the suite evaluates.
std::vector<std::string> claim_ids();

/// Re-evaluates one claim on a recorded counterexample. Returns the failure
/// reason, or nullopt if the claim holds on it.
std::optional<std::string> replay(const std::string& claim_id, const nlohmann::json& counterexample,
                                  const Overrides& overrides = {});

}  // namespace homquot::oracle
