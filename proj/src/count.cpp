#include "homquot/count.hpp"

#include <algorithm>

#include "homquot/error.hpp"
#include "homquot/hom.hpp"

namespace homquot {

std::size_t multiplicity(const HomMap& m, std::span<const Vertex> u, Vertex y) {
  if (y >= m.target().order()) throw InputError("multiplicity of an unknown target vertex");
  std::size_t k = 0;
  for (Vertex x : u) {
    if (x >= m.source().order()) throw InputError("multiplicity over an unknown source vertex");
    if (m(x) == y) ++k;
  }
  return k;
}

std::vector<std::size_t> admissible_components(const HomMap& m, Vertex y) {
  if (y >= m.target().order()) throw InputError("admissible components of an unknown target vertex");
  const auto comps = components(m.source());
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < comps.count(); ++c)
    if (multiplicity(m, comps.blocks[c], y) > 0) out.push_back(c);
  return out;
}

namespace {

void require(bool holds, const std::string& predicate) {
  if (!holds) throw HypothesisError("hypotheses not satisfied: " + predicate);
}

VertexSet image_vertices(const HomMap& m, std::span<const Vertex> u) {
  VertexSet out;
  for (Vertex x : u) out.push_back(m(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// m(C) as a subgraph equals the target component: same vertices, and every
// proper target edge inside it is the image of an edge of C.
VertexSet migrate(const HomMap& m, const ComponentIndex& source_comps, const ComponentIndex& target_comps,
                  std::size_t component) {
  const VertexSet& c = source_comps.blocks.at(component);
  VertexSet image = image_vertices(m, c);
  const VertexSet& whole = target_comps.block_containing(image.front());
  if (image != whole) throw InvariantError("image of a component is not a target component");
  const Graph& y = m.target();
  std::vector<bool> covered(y.order() * y.order(), false);
  for (auto [u, v] : m.source().proper_edges()) {
    if (source_comps.block_of[u] != component) continue;
    Vertex a = m(u), b = m(v);
    if (a != b) covered[std::min(a, b) * y.order() + std::max(a, b)] = true;
  }
  for (auto [a, b] : y.proper_edges())
    if (target_comps.block_of[a] == target_comps.block_of[image.front()] && !covered[a * y.order() + b])
      throw InvariantError("image of a component misses an edge of its target component");
  return image;
}

std::size_t pick(const Chooser& choose, std::size_t n) {
  std::size_t i = choose ? choose(n) : 0;
  if (i >= n) throw InputError("chooser returned an index out of range");
  return i;
}

void check_total(const HomMap& m, const CountBreakdown& b) {
  if (b.total != components(m.source()).count())
    throw InvariantError("component count formula disagrees with the traversal count");
}

// Shared selection loop for the quotient formula.
CountBreakdown divide_and_sum(const HomMap& m, const Chooser& choose) {
  const auto source_comps = components(m.source());
  const auto target_comps = components(m.target());
  const std::size_t ny = m.target().order();
  std::vector<bool> covered(ny, false);
  CountBreakdown out;
  std::size_t steps = 0;
  for (;;) {
    VertexSet candidates;
    for (Vertex y = 0; y < ny; ++y)
      if (!covered[y]) candidates.push_back(y);
    if (candidates.empty()) break;
    ++steps;

    CountTerm term;
    term.y = candidates[pick(choose, candidates.size())];
    term.k_x = static_cast<std::size_t>(std::count(m.image().begin(), m.image().end(), term.y));
    const auto admissible = admissible_components(m, term.y);
    if (admissible.empty()) {
      for (Vertex y : target_comps.block_containing(term.y)) covered[y] = true;
    } else {
      const std::size_t c = admissible[pick(choose, admissible.size())];
      term.component = c;
      term.k_c = multiplicity(m, source_comps.blocks[c], term.y);
      if (term.k_x % term.k_c != 0)
        throw InvariantError("k_C(y) = " + std::to_string(term.k_c) + " does not divide k_X(y) = " +
                             std::to_string(term.k_x) + " at y = " + m.target().label(term.y));
      term.value = term.k_x / term.k_c;
      for (Vertex y : migrate(m, source_comps, target_comps, c)) covered[y] = true;
    }
    out.total += term.value;
    out.terms.push_back(term);
  }
  if (steps != target_comps.count()) throw InvariantError("selection did not stop after c(Y) steps");
  check_total(m, out);
  return out;
}

}  // namespace

VertexSet image_of_component(const HomMap& m, std::size_t component) {
  require(is_locally_surjective(m), "locally_surjective");
  const auto source_comps = components(m.source());
  if (component >= source_comps.count()) throw InputError("unknown component ordinal");
  return migrate(m, source_comps, components(m.target()), component);
}

VertexSet preimage_of_component_vertices(const HomMap& m, std::size_t component) {
  const VertexSet image = image_of_component(m, component);
  const auto comps = components(m.source());
  VertexSet from_components;
  for (std::size_t c = 0; c < comps.count(); ++c) {
    const VertexSet img = image_vertices(m, comps.blocks[c]);
    if (std::includes(image.begin(), image.end(), img.begin(), img.end()))
      from_components.insert(from_components.end(), comps.blocks[c].begin(), comps.blocks[c].end());
  }
  std::sort(from_components.begin(), from_components.end());

  VertexSet direct;
  for (Vertex x = 0; x < m.source().order(); ++x)
    if (std::binary_search(image.begin(), image.end(), m(x))) direct.push_back(x);
  if (direct != from_components) throw InvariantError("preimage of a component image is not a union of components");
  return from_components;
}

CountBreakdown count_theorem_A(const HomMap& m) {
  require(is_locally_surjective(m), "locally_surjective");
  const auto source_comps = components(m.source());
  const auto target_comps = components(m.target());
  CountBreakdown out;
  for (const auto& block : target_comps.blocks) {
    CountTerm term;
    term.y = block.front();
    term.k_x = static_cast<std::size_t>(std::count(m.image().begin(), m.image().end(), term.y));
    const auto admissible = admissible_components(m, term.y);
    if (!admissible.empty()) {
      term.component = admissible.front();
      term.k_c = multiplicity(m, source_comps.blocks[admissible.front()], term.y);
    }
    term.value = admissible.size();
    out.total += term.value;
    out.terms.push_back(term);
  }
  check_total(m, out);
  return out;
}

CountBreakdown count_theorem_B(const HomMap& m, const PermGroup& group, const Chooser& choose) {
  require(validate_hom(m), "homomorphism");
  require(verify_automorphisms(m.source(), group), "automorphisms");
  require(is_consistent(m, group), "orbit");
  require(is_complete(m), "complete");
  return divide_and_sum(m, choose);
}

CountBreakdown count_ce(const HomMap& m, const Chooser& choose) {
  require(validate_hom(m), "homomorphism");
  require(is_locally_surjective(m), "locally_surjective");
  require(is_component_equitable(m), "component_equitable");
  return divide_and_sum(m, choose);
}

bool component_iso_check(const HomMap& m, std::size_t component) {
  require(is_pseudo_covering(m), "pseudo_covering");
  const auto comps = components(m.source());
  if (component >= comps.count()) throw InputError("unknown component ordinal");
  const VertexSet& c = comps.blocks[component];
  for (Vertex y : image_vertices(m, c))
    if (multiplicity(m, c, y) != 1) return false;
  return true;
}

bool connectedness_criterion(const GraphPtr& g, const Partition& p) {
  auto q = quotient(g, p);
  require(is_connected(*q.quotient), "quotient_connected");
  require(is_pseudo_covering(q.projection), "pseudo_covering");
  const auto comps = components(*g);
  for (const auto& cell : p.cells()) {
    bool inside = std::all_of(cell.begin(), cell.end(),
                              [&](Vertex v) { return comps.block_of[v] == comps.block_of[cell.front()]; });
    if (inside) return true;
  }
  return false;
}

}  // namespace homquot
