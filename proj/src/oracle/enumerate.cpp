#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "homquot/error.hpp"
#include "homquot/oracle.hpp"

namespace homquot::oracle {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t root(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }

  std::vector<std::size_t> parent;
};

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::sort(labels.begin(), labels.end());
  return labels;
}

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

std::vector<GraphPtr> graphs_on(std::vector<std::string> labels) {
  const auto pairs = all_pairs(labels.size());
  std::vector<GraphPtr> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    out.push_back(share(Graph::from_sorted(labels, std::move(edges))));
  }
  return out;
}

// Isomorphism invariant: for each vertex its degree followed by the sorted
// degrees of its neighbours, the per-vertex lists sorted.
std::vector<std::vector<std::size_t>> invariant(const Graph& g) {
  std::vector<std::vector<std::size_t>> key;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::size_t> row{g.degree(v)};
    std::vector<std::size_t> nb;
    for (Vertex u : g.proper_neighbors(v)) nb.push_back(g.degree(u));
    std::sort(nb.begin(), nb.end());
    row.insert(row.end(), nb.begin(), nb.end());
    key.push_back(std::move(row));
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::size_t component_count(const Graph& g) {
  DisjointSets sets(g.order());
  std::size_t count = g.order();
  for (auto [u, v] : g.proper_edges())
    if (sets.unite(u, v)) --count;
  return count;
}

std::vector<GraphPtr> labeled_graphs(std::size_t n) {
  if (n == 0 || n > 8) throw InputError("labelled graph enumeration supports 1..8 vertices");
  return graphs_on(numbered_labels(n));
}

std::vector<GraphPtr> target_graphs(std::size_t n) {
  if (n == 0 || n > 8) throw InputError("target graph enumeration supports 1..8 vertices");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return graphs_on(std::move(labels));
}

std::vector<GraphPtr> unlabeled_graphs(std::size_t n) {
  if (n == 0 || n > 9) throw InputError("unlabelled graph enumeration supports 1..9 vertices");
  if (n == 1) return {share(Graph::from_sorted({"0"}, {}))};
  const auto smaller = unlabeled_graphs(n - 1);
  const auto labels = numbered_labels(n);
  // numbered_labels sorts lexicographically; with n <= 9 that is numeric order.
  std::map<std::vector<std::vector<std::size_t>>, std::vector<GraphPtr>> buckets;
  std::vector<GraphPtr> out;
  const Vertex fresh = n - 1;
  for (const auto& h : smaller) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      std::vector<Edge> edges = h->proper_edges();
      for (Vertex u = 0; u + 1 < n; ++u)
        if (mask >> u & 1) edges.emplace_back(u, fresh);
      auto g = share(Graph::from_sorted(labels, std::move(edges)));
      auto& bucket = buckets[invariant(*g)];
      bool seen = std::any_of(bucket.begin(), bucket.end(),
                              [&](const GraphPtr& other) { return find_isomorphism(*g, *other).has_value(); });
      if (seen) continue;
      bucket.push_back(g);
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Partition> set_partitions(std::size_t n) {
  if (n == 0) return {};
  std::vector<Partition> out;
  std::vector<std::size_t> rgs(n, 0), max_before(n, 0);
  for (;;) {
    out.push_back(Partition::from_keys(rgs));
    // advance the restricted growth string: rgs[i] <= 1 + max(rgs[0..i-1])
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= max_before[i]) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      max_before[j] = std::max(max_before[j - 1], rgs[j - 1]);
    }
  }
  return out;
}

std::vector<HomMap> homomorphisms(const GraphPtr& source, const GraphPtr& target) {
  const std::size_t n = source->order(), t = target->order();
  std::vector<HomMap> out;
  VertexMap image(n, 0);
  for (;;) {
    bool ok = true;
    for (auto [u, v] : source->proper_edges())
      if (!target->adjacent(image[u], image[v])) {
        ok = false;
        break;
      }
    if (ok) out.emplace_back(source, target, image);
    std::size_t i = 0;
    while (i < n && ++image[i] == t) image[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::vector<Permutation> group_elements(const PermGroup& group, std::size_t limit) {
  std::set<Permutation> seen{Permutation::identity(group.universe())};
  std::vector<Permutation> elements{Permutation::identity(group.universe())};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& f : group.generators()) {
      Permutation p = f.compose(elements[i]);
      if (seen.insert(p).second) {
        if (seen.size() > limit) throw InvariantError("group closure exceeds the element limit");
        elements.push_back(std::move(p));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

OrbitInstance random_orbit_instance(std::mt19937_64& rng, std::size_t max_vertices) {
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t fixed = uniform(0, std::min<std::size_t>(3, max_vertices - 1));
  const std::size_t room = max_vertices - fixed;
  const std::size_t shift = uniform(1, std::min<std::size_t>(8, room));
  const std::size_t classes = uniform(1, std::max<std::size_t>(1, std::min<std::size_t>(6, room / shift)));
  const double density = std::uniform_real_distribution<double>(0.05, 0.45)(rng);
  std::bernoulli_distribution coin(density);

  // vertex (i, v) -> i * classes + v; fixed vertices follow
  const std::size_t cyclic = shift * classes;
  const std::size_t n = cyclic + fixed;
  auto at = [&](std::size_t i, std::size_t v) { return (i % shift) * classes + v; };

  std::set<Edge> edges;
  auto add = [&](Vertex a, Vertex b) {
    if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
  };
  for (std::size_t v = 0; v < classes; ++v)
    for (std::size_t w = v; w < classes; ++w)
      for (std::size_t d = (v == w ? 1 : 0); d < shift; ++d) {
        if (v == w && d > shift - d) continue;  // d and -d give the same orbit
        if (!coin(rng)) continue;
        for (std::size_t i = 0; i < shift; ++i) add(at(i, v), at(i + d, w));
      }
  for (std::size_t f = 0; f < fixed; ++f) {
    for (std::size_t v = 0; v < classes; ++v)
      if (coin(rng))
        for (std::size_t i = 0; i < shift; ++i) add(cyclic + f, at(i, v));
    for (std::size_t g = f + 1; g < fixed; ++g)
      if (coin(rng)) add(cyclic + f, cyclic + g);
  }

  std::vector<std::size_t> names(n);
  std::iota(names.begin(), names.end(), std::size_t{0});
  std::shuffle(names.begin(), names.end(), rng);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back(std::to_string(names[x]));
  std::vector<std::pair<std::string, std::string>> labelled;
  for (auto [a, b] : edges) labelled.emplace_back(labels[a], labels[b]);
  auto graph = share(Graph::build(labels, labelled));

  VertexMap shift_image(n);
  std::vector<std::size_t> orbit_key(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Vertex from = graph->index_of(labels[x]);
    const std::size_t image = x < cyclic ? at(x / classes + 1, x % classes) : x;
    shift_image[from] = graph->index_of(labels[image]);
    orbit_key[from] = x < cyclic ? x % classes : x;
  }
  std::vector<Permutation> gens;
  if (shift > 1) gens.emplace_back(std::move(shift_image));
  PermGroup group(n, std::move(gens));
  Partition orbits = Partition::from_keys(orbit_key);
  return {graph, std::move(group), std::move(orbits)};
}

bool locally_strong_by_definition(const HomMap& m) {
  const Graph& x = m.source();
  const Graph& y = m.target();
  const std::size_t n = x.order();
  for (Vertex x1 = 0; x1 < n; ++x1)
    for (Vertex x2 = 0; x2 < n; ++x2) {
      if (!y.adjacent(m(x1), m(x2))) continue;
      for (Vertex t1 = 0; t1 < n; ++t1) {
        if (m(t1) != m(x1)) continue;
        bool found = false;
        for (Vertex t2 = 0; t2 < n && !found; ++t2) found = m(t2) == m(x2) && x.adjacent(t1, t2);
        if (!found) return false;
      }
    }
  return true;
}

}  // namespace homquot::oracle
