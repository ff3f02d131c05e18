#include "homquot/perm.hpp"

#include <algorithm>
#include <numeric>

#include "homquot/error.hpp"

namespace homquot {

Permutation::Permutation(VertexMap image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || hit[v]) throw InputError("permutation is not a bijection of its universe");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  VertexMap image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < image_.size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  VertexMap out(other.size());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = image_[other(v)];
  return Permutation(std::move(out));
}

PermGroup::PermGroup(std::size_t universe, std::vector<Permutation> generators)
    : universe_(universe), generators_(std::move(generators)) {
  for (const auto& f : generators_)
    if (f.size() != universe_) throw InputError("generator acts on a different universe than its group");
}

bool is_automorphism(const Graph& g, const Permutation& f) {
  if (f.size() != g.order()) return false;
  // f is a bijection on vertices; mapping each proper edge to a proper edge is
  // then bijective on edges because the edge set is finite.
  for (auto [u, v] : g.proper_edges())
    if (!g.has_proper_edge(f(u), f(v))) return false;
  return true;
}

bool verify_automorphisms(const Graph& g, const PermGroup& group) {
  if (group.universe() != g.order()) throw InputError("group universe does not match the graph");
  return std::all_of(group.generators().begin(), group.generators().end(),
                     [&](const Permutation& f) { return is_automorphism(g, f); });
}

Partition orbit_partition(const PermGroup& group) {
  const std::size_t n = group.universe();
  std::vector<std::size_t> orbit(n, static_cast<std::size_t>(-1));
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (orbit[s] != static_cast<std::size_t>(-1)) continue;
    orbit[s] = s;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (const auto& f : group.generators()) {
        Vertex w = f(u);
        if (orbit[w] == static_cast<std::size_t>(-1)) {
          orbit[w] = s;
          stack.push_back(w);
        }
      }
    }
  }
  return Partition::from_keys(orbit);
}

namespace {

// Finds automorphisms that fix a prefix of the base pointwise and send the
// next base point to a prescribed vertex. Only colour preserving maps are
// considered.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, std::vector<std::size_t> colour) : g_(g), colour_(std::move(colour)) {
    base_.resize(g.order());
    std::iota(base_.begin(), base_.end(), Vertex{0});
    std::stable_sort(base_.begin(), base_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  const std::vector<Vertex>& base() const { return base_; }

  std::optional<Permutation> find(std::size_t level, Vertex target) {
    image_.assign(g_.order(), none);
    used_.assign(g_.order(), false);
    level_ = level;
    target_ = target;
    if (!extend(0)) return std::nullopt;
    return Permutation(image_);
  }

 private:
  static constexpr Vertex none = static_cast<Vertex>(-1);

  bool compatible(std::size_t depth, Vertex v, Vertex w) const {
    if (used_[w] || g_.degree(v) != g_.degree(w) || colour_[v] != colour_[w]) return false;
    for (std::size_t d = 0; d < depth; ++d) {
      Vertex u = base_[d];
      if (g_.has_proper_edge(u, v) != g_.has_proper_edge(image_[u], w)) return false;
    }
    return true;
  }

  bool assign(std::size_t depth, Vertex v, Vertex w) {
    if (!compatible(depth, v, w)) return false;
    image_[v] = w;
    used_[w] = true;
    if (extend(depth + 1)) return true;
    used_[w] = false;
    image_[v] = none;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == base_.size()) return true;
    const Vertex v = base_[depth];
    if (depth < level_) return assign(depth, v, v);
    if (depth == level_) return assign(depth, v, target_);
    for (Vertex w = 0; w < g_.order(); ++w)
      if (assign(depth, v, w)) return true;
    return false;
  }

  const Graph& g_;
  std::vector<std::size_t> colour_;
  std::vector<Vertex> base_;
  VertexMap image_;
  std::vector<bool> used_;
  std::size_t level_ = 0;
  Vertex target_ = 0;
};

PermGroup search_group(const Graph& g, std::vector<std::size_t> colour, std::size_t max_vertices) {
  if (g.order() > max_vertices)
    throw HypothesisError("automorphism search bound exceeded: " + std::to_string(g.order()) + " vertices > " +
                          std::to_string(max_vertices));
  AutomorphismSearch search(g, std::move(colour));
  const auto& base = search.base();
  std::vector<Permutation> generators;
  // Deepest level first: generators already found fix the current prefix, so
  // once the orbit of the current base point under them is complete the group
  // they generate is the full pointwise stabilizer of the shorter prefix.
  for (std::size_t level = base.size(); level-- > 0;) {
    const Vertex b = base[level];
    for (Vertex w = 0; w < g.order(); ++w) {
      if (w == b) continue;
      const auto reached = orbit_partition(PermGroup(g.order(), generators));
      if (reached.cell_of(w) == reached.cell_of(b)) continue;
      bool fixes_prefix = true;
      for (std::size_t d = 0; d < level && fixes_prefix; ++d) fixes_prefix = base[d] != w;
      if (!fixes_prefix) continue;
      if (auto f = search.find(level, w)) generators.push_back(std::move(*f));
    }
  }
  return PermGroup(g.order(), std::move(generators));
}

}  // namespace

PermGroup automorphism_group(const Graph& g, std::size_t max_vertices) {
  return search_group(g, std::vector<std::size_t>(g.order(), 0), max_vertices);
}

PermGroup cell_stabilizer(const Graph& g, const Partition& cells, std::size_t max_vertices) {
  if (cells.universe() != g.order()) throw InputError("partition universe does not match the graph");
  std::vector<std::size_t> colour(g.order());
  for (Vertex v = 0; v < g.order(); ++v) colour[v] = cells.cell_of(v);
  return search_group(g, std::move(colour), max_vertices);
}

std::optional<PermGroup> orbit_witness(const Graph& g, const Partition& cells, std::size_t max_vertices) {
  PermGroup stabilizer = cell_stabilizer(g, cells, max_vertices);
  if (orbit_partition(stabilizer) == cells) return stabilizer;
  return std::nullopt;
}

bool is_consistent(const HomMap& m, const PermGroup& group) {
  if (group.universe() != m.source().order()) throw InputError("group universe does not match the map's source");
  for (const auto& f : group.generators())
    for (Vertex x = 0; x < group.universe(); ++x)
      if (m(f(x)) != m(x)) return false;
  return partition_of_map(m) == orbit_partition(group);
}

}  // namespace homquot
