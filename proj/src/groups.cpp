#include "homquot/groups.hpp"

#include <algorithm>
#include <numeric>

#include "homquot/error.hpp"

namespace homquot {

FiniteGroup::FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<Element>> table,
                         Element identity)
    : elements_(std::move(elements)), table_(std::move(table)), identity_(identity) {
  const std::size_t n = elements_.size();
  if (n == 0) throw InputError("group needs at least one element");
  if (n > max_group_order) throw InputError("group order " + std::to_string(n) + " exceeds the bound of 120");
  {
    auto sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("duplicate group element");
  }
  if (identity_ >= n) throw InputError("identity is not a group element");
  if (table_.size() != n) throw InputError("Cayley table has the wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw InputError("Cayley table row has the wrong length");
    for (Element c : row)
      if (c >= n) throw InputError("Cayley table entry outside the group");
  }
  for (Element a = 0; a < n; ++a)
    if (table_[identity_][a] != a || table_[a][identity_] != a) throw InputError("identity element is not neutral");
  inverse_.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    if (inverse_[a] == n) throw InputError("element '" + elements_[a] + "' has no inverse");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InputError("Cayley table is not associative");
}

FiniteGroup::Element FiniteGroup::find(const std::string& label) const {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) throw InputError("unknown group element '" + label + "'");
  return static_cast<Element>(it - elements_.begin());
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element p = a; p != identity_; p = multiply(p, a)) ++k;
  return k;
}

std::vector<FiniteGroup::Element> FiniteGroup::generating_set() const {
  std::vector<Element> gens;
  std::vector<bool> in_subgroup(order(), false);
  in_subgroup[identity_] = true;
  for (Element a = 0; a < order(); ++a) {
    if (in_subgroup[a]) continue;
    gens.push_back(a);
    // Closure of the current generators by right multiplication.
    std::vector<Element> members;
    std::fill(in_subgroup.begin(), in_subgroup.end(), false);
    in_subgroup[identity_] = true;
    members.push_back(identity_);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Element s : gens) {
        Element p = multiply(members[i], s);
        if (!in_subgroup[p]) {
          in_subgroup[p] = true;
          members.push_back(p);
        }
      }
  }
  return gens;
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n < 1 || n > 60) throw InputError("cyclic group order must be between 1 and 60");
  std::vector<std::string> elements;
  std::vector<std::vector<FiniteGroup::Element>> table(n, std::vector<FiniteGroup::Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    elements.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(elements), std::move(table), 0);
}

FiniteGroup make_symmetric(std::size_t n) {
  if (n < 1 || n > 5) throw InputError("symmetric group degree must be between 1 and 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::string> elements;
  for (const auto& q : perms) {
    std::string s;
    for (std::size_t v : q) s += static_cast<char>('1' + v);
    elements.push_back(std::move(s));
  }
  const std::size_t order = perms.size();
  std::vector<std::vector<FiniteGroup::Element>> table(order, std::vector<FiniteGroup::Element>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::size_t> ab(n);
      for (std::size_t i = 0; i < n; ++i) ab[i] = perms[a][perms[b][i]];
      // lexicographic enumeration makes the index a binary search
      table[a][b] = static_cast<FiniteGroup::Element>(std::lower_bound(perms.begin(), perms.end(), ab) - perms.begin());
    }
  return FiniteGroup(std::move(elements), std::move(table), 0);
}

FiniteGroup make_klein_four() {
  // e=0, a=1, b=2, c=3; xor of the indices realizes Z2 x Z2
  std::vector<std::vector<FiniteGroup::Element>> table(4, std::vector<FiniteGroup::Element>(4));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) table[x][y] = x ^ y;
  return FiniteGroup({"e", "a", "b", "c"}, std::move(table), 0);
}

namespace {

// powers[a] = {a, a^2, ..., a^ord(a) = e}
std::vector<std::vector<bool>> positive_powers(const FiniteGroup& g) {
  std::vector<std::vector<bool>> is_power(g.order(), std::vector<bool>(g.order(), false));
  for (FiniteGroup::Element a = 0; a < g.order(); ++a) {
    FiniteGroup::Element p = a;
    while (!is_power[a][p]) {
      is_power[a][p] = true;
      p = g.multiply(p, a);
    }
  }
  return is_power;
}

Graph power_graph_on(const FiniteGroup& g, bool drop_identity) {
  const auto is_power = positive_powers(g);
  std::vector<FiniteGroup::Element> kept;
  for (FiniteGroup::Element a = 0; a < g.order(); ++a)
    if (!(drop_identity && a == g.identity())) kept.push_back(a);
  std::sort(kept.begin(), kept.end(), [&](auto a, auto b) { return g.label(a) < g.label(b); });

  std::vector<std::string> labels;
  for (auto a : kept) labels.push_back(g.label(a));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i + 1; j < kept.size(); ++j)
      if (is_power[kept[i]][kept[j]] || is_power[kept[j]][kept[i]]) edges.emplace_back(i, j);
  return Graph::from_sorted(std::move(labels), std::move(edges));
}

}  // namespace

Graph power_graph(const FiniteGroup& g) { return power_graph_on(g, false); }

Graph proper_power_graph(const FiniteGroup& g) {
  if (g.order() < 2) throw InputError("the proper power graph of the trivial group has no vertices");
  return power_graph_on(g, true);
}

PermGroup conjugation_group(const FiniteGroup& g, const Graph& on_graph) {
  std::vector<FiniteGroup::Element> element_of(on_graph.order());
  for (Vertex v = 0; v < on_graph.order(); ++v) element_of[v] = g.find(on_graph.label(v));

  std::vector<Permutation> generators;
  for (FiniteGroup::Element a : g.generating_set()) {
    const auto a_inv = g.inverse(a);
    VertexMap image(on_graph.order());
    for (Vertex v = 0; v < on_graph.order(); ++v) {
      const auto conj = g.multiply(g.multiply(a_inv, element_of[v]), a);
      auto w = on_graph.find(g.label(conj));
      if (!w) throw InputError("graph vertices are not closed under conjugation");
      image[v] = *w;
    }
    generators.emplace_back(std::move(image));
  }
  PermGroup group(on_graph.order(), std::move(generators));
  if (!verify_automorphisms(on_graph, group)) throw InvariantError("conjugation is not an automorphism of the graph");
  return group;
}

}  // namespace homquot
