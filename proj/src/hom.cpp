#include "homquot/hom.hpp"

#include <algorithm>

#include "homquot/error.hpp"
#include "homquot/partition.hpp"

namespace homquot {

bool validate_hom(const HomMap& m) {
  const Graph& y = m.target();
  for (auto [u, v] : m.source().proper_edges())
    if (!y.adjacent(m(u), m(v))) return false;
  return true;
}

namespace {

void require_hom(const HomMap& m) {
  if (!validate_hom(m)) throw HypothesisError("invalid homomorphism: an edge is mapped to a non-edge");
}

bool surjective_unchecked(const HomMap& m) {
  std::vector<bool> hit(m.target().order(), false);
  for (Vertex y : m.image()) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool complete_unchecked(const HomMap& m) {
  if (!surjective_unchecked(m)) return false;
  const Graph& y = m.target();
  const std::size_t n = y.order();
  std::vector<bool> covered(n * n, false);
  for (auto [u, v] : m.source().proper_edges()) {
    Vertex a = m(u), b = m(v);
    if (a != b) covered[std::min(a, b) * n + std::max(a, b)] = true;
  }
  for (auto [a, b] : y.proper_edges())
    if (!covered[a * n + b]) return false;
  return true;
}

// For each x: the multiset m(N(x)) compared against N(m(x)).
struct LocalProfile {
  bool surjective = true;
  bool injective = true;
};

LocalProfile local_profile(const HomMap& m) {
  const Graph& x_graph = m.source();
  const Graph& y_graph = m.target();
  LocalProfile out;
  std::vector<std::size_t> hits(y_graph.order(), 0);
  for (Vertex x = 0; x < x_graph.order(); ++x) {
    const VertexSet nx = x_graph.neighborhood(x);
    for (Vertex u : nx) ++hits[m(u)];
    for (Vertex u : nx)
      if (hits[m(u)] > 1) out.injective = false;
    for (Vertex y : y_graph.neighborhood(m(x)))
      if (hits[y] == 0) out.surjective = false;
    for (Vertex u : nx) hits[m(u)] = 0;
  }
  return out;
}

bool locally_strong_unchecked(const HomMap& m) {
  const Graph& x_graph = m.source();
  const Graph& y_graph = m.target();
  std::vector<bool> in_image(y_graph.order(), false);
  for (Vertex y : m.image()) in_image[y] = true;
  std::vector<bool> reached(y_graph.order(), false);
  for (Vertex x1 = 0; x1 < x_graph.order(); ++x1) {
    // m(x2) ranges over image vertices adjacent to m(x1); the witness x̃2 must
    // lie in N(x1). The loop case m(x2) = m(x1) is met by x̃2 = x1.
    const VertexSet nx = x_graph.neighborhood(x1);
    for (Vertex u : nx) reached[m(u)] = true;
    bool ok = true;
    for (Vertex y : y_graph.neighborhood(m(x1)))
      if (in_image[y] && !reached[y]) ok = false;
    for (Vertex u : nx) reached[m(u)] = false;
    if (!ok) return false;
  }
  return true;
}

bool component_equitable_unchecked(const HomMap& m) {
  const auto comps = components(m.source());
  const std::size_t ny = m.target().order();
  // k[c * ny + y] = k_C(y)
  std::vector<std::size_t> k(comps.count() * ny, 0);
  for (Vertex x = 0; x < m.source().order(); ++x) ++k[comps.block_of[x] * ny + m(x)];
  for (Vertex y = 0; y < ny; ++y) {
    std::size_t common = 0;
    for (std::size_t c = 0; c < comps.count(); ++c) {
      std::size_t kc = k[c * ny + y];
      if (kc == 0) continue;
      if (common == 0) common = kc;
      if (kc != common) return false;
    }
  }
  return true;
}

}  // namespace

bool is_surjective(const HomMap& m) {
  require_hom(m);
  return surjective_unchecked(m);
}

bool is_complete(const HomMap& m) {
  require_hom(m);
  return complete_unchecked(m);
}

bool is_isomorphism(const HomMap& m) {
  require_hom(m);
  return m.source().order() == m.target().order() && complete_unchecked(m);
}

bool is_tame_hom(const HomMap& m) {
  require_hom(m);
  return is_tame(m.source(), partition_of_map(m));
}

bool is_locally_surjective(const HomMap& m) {
  require_hom(m);
  return local_profile(m).surjective;
}

bool is_locally_injective(const HomMap& m) {
  require_hom(m);
  return local_profile(m).injective;
}

bool is_locally_bijective(const HomMap& m) {
  require_hom(m);
  auto p = local_profile(m);
  return p.surjective && p.injective;
}

bool is_locally_strong(const HomMap& m) {
  require_hom(m);
  return locally_strong_unchecked(m);
}

bool is_pseudo_covering(const HomMap& m) {
  require_hom(m);
  return locally_strong_unchecked(m) && surjective_unchecked(m);
}

bool is_equitable_hom(const HomMap& m) {
  require_hom(m);
  return is_equitable(m.source(), partition_of_map(m));
}

bool is_component_equitable(const HomMap& m) {
  require_hom(m);
  return component_equitable_unchecked(m);
}

void check_report(const ClassificationReport& r) {
  auto fail = [](const char* what) { throw InvariantError(std::string("inconsistent classification: ") + what); };
  if (r.isomorphism && !(r.surjective && r.complete)) fail("isomorphism without surjective and complete");
  if (r.complete && !r.surjective) fail("complete but not surjective");
  if (r.complete && r.equitable && !r.pseudo_covering) fail("equitable and complete but not pseudo-covering");
  if (r.pseudo_covering != (r.locally_strong && r.complete)) fail("pseudo-covering differs from locally strong and complete");
  if (r.pseudo_covering != (r.locally_surjective && r.complete))
    fail("pseudo-covering differs from locally surjective and complete");
  if (r.locally_bijective != (r.locally_surjective && r.locally_injective))
    fail("locally bijective differs from locally surjective and locally injective");
  if (r.locally_surjective && !r.locally_strong) fail("locally surjective but not locally strong");
  if (r.surjective && r.locally_strong != r.locally_surjective)
    fail("surjective map where locally strong differs from locally surjective");
  if (r.orbit.value_or(false) && !r.component_equitable) fail("orbit homomorphism that is not component equitable");
  if (r.orbit.value_or(false) && r.complete && !r.equitable) fail("complete orbit homomorphism that is not equitable");
}

ClassificationReport classify(const HomMap& m, const PermGroup* group) {
  require_hom(m);
  ClassificationReport r;
  r.surjective = surjective_unchecked(m);
  r.complete = complete_unchecked(m);
  r.isomorphism = r.complete && m.source().order() == m.target().order();
  r.tame = is_tame(m.source(), partition_of_map(m));
  const auto local = local_profile(m);
  r.locally_surjective = local.surjective;
  r.locally_injective = local.injective;
  r.locally_bijective = local.surjective && local.injective;
  r.locally_strong = locally_strong_unchecked(m);
  r.pseudo_covering = r.locally_strong && r.surjective;
  r.equitable = is_equitable(m.source(), partition_of_map(m));
  r.component_equitable = component_equitable_unchecked(m);
  if (group) r.orbit = verify_automorphisms(m.source(), *group) && is_consistent(m, *group);
  check_report(r);
  return r;
}

Factorization factorize(const HomMap& m) {
  require_hom(m);
  auto q = quotient(m.source_ptr(), partition_of_map(m));
  VertexMap induced(q.quotient->order(), static_cast<Vertex>(-1));
  for (Vertex x = 0; x < m.source().order(); ++x) induced[q.projection(x)] = m(x);
  HomMap injection(q.quotient, m.target_ptr(), std::move(induced));
  if (!validate_hom(injection)) throw InvariantError("induced quotient map is not a homomorphism");
  auto sorted = injection.image();
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvariantError("induced quotient map is not injective");
  return {std::move(q.projection), std::move(injection)};
}

}  // namespace homquot
