#include <algorithm>
#include <map>
#include <set>

#include "homquot/count.hpp"
#include "homquot/error.hpp"
#include "homquot/io.hpp"
#include "homquot/oracle.hpp"

namespace homquot::oracle {

using nlohmann::json;

namespace {

constexpr std::size_t kept_failures = 10;
constexpr std::size_t literal_definition_bound = 12;
constexpr std::size_t reselections = 10;

// One unit of work: either a graph with a partition, or a vertex map with an
// optional group acting on its source.
struct Instance {
  GraphPtr source;
  std::optional<Partition> partition;
  std::optional<HomMap> map;
  std::optional<PermGroup> group;
  std::uint64_t selection_seed = 0;

  json to_json() const {
    json out = {{"source", io::to_json(*source)}, {"selection_seed", selection_seed}};
    if (partition) out["partition"] = io::to_json(*partition, *source);
    if (map) {
      out["target"] = io::to_json(map->target());
      out["map"] = io::to_json(*map)["map"];
    }
    if (group) out["group"] = io::to_json(*group, *source);
    return out;
  }

  static Instance from_json(const json& doc) {
    Instance inst;
    inst.source = share(io::graph_from_json(doc.at("source")));
    inst.selection_seed = doc.value("selection_seed", std::uint64_t{0});
    if (doc.contains("partition")) inst.partition = io::partition_from_json(doc.at("partition"), *inst.source);
    if (doc.contains("map")) {
      auto target = share(io::graph_from_json(doc.at("target")));
      inst.map = io::hom_from_json(json{{"map", doc.at("map")}}, inst.source, target);
    }
    if (doc.contains("group")) inst.group = io::group_from_json(doc.at("group"), *inst.source);
    return inst;
  }
};

// Facts about a map computed once and shared by the claims.
struct HomFacts {
  const HomMap& m;
  const std::optional<PermGroup>& given_group;
  ComponentIndex source_comps;
  ComponentIndex target_comps;
  ClassificationReport report;
  bool locally_strong;  // possibly overridden
  std::optional<PermGroup> orbit_group;  // some m-consistent automorphism group, if found
  std::uint64_t selection_seed;

  bool orbit() const { return orbit_group.has_value(); }

  std::size_t k(std::size_t component, Vertex y) const { return multiplicity(m, source_comps.blocks[component], y); }
  std::size_t k_x(Vertex y) const { return static_cast<std::size_t>(std::count(m.image().begin(), m.image().end(), y)); }
};

using Verdict = std::optional<std::string>;  // failure reason
struct Outcome {
  bool applicable = false;
  Verdict failure;
};

Outcome pass() { return {true, std::nullopt}; }
Outcome skip() { return {false, std::nullopt}; }
Outcome fail(std::string why) { return {true, std::move(why)}; }

struct HomClaim {
  const char* id;
  std::function<Outcome(const HomFacts&)> check;
};

struct PartitionClaim {
  const char* id;
  std::function<Outcome(const GraphPtr&, const Partition&)> check;
};

VertexSet image_set(const HomMap& m, const VertexSet& u) {
  VertexSet out;
  for (Vertex x : u) out.push_back(m(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Outcome check_components(const Graph& g) {
  const auto comps = components(g);
  if (component_count(g) != comps.count()) return fail("union-find and traversal component counts differ");
  std::vector<bool> seen(g.order(), false);
  for (const auto& b : comps.blocks)
    for (Vertex v : b) {
      if (seen[v]) return fail("component blocks overlap");
      seen[v] = true;
    }
  if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) return fail("component blocks miss a vertex");
  for (auto [u, v] : g.proper_edges())
    if (comps.block_of[u] != comps.block_of[v]) return fail("an edge joins two component blocks");
  return pass();
}

// ---------------------------------------------------------------------------
// Claims over homomorphisms

std::vector<HomClaim> hom_claims() {
  std::vector<HomClaim> claims;

  claims.push_back({"components.union-find", [](const HomFacts& f) {
                      if (auto o = check_components(f.m.source()); o.failure) return o;
                      return check_components(f.m.target());
                    }});

  claims.push_back({"classify.consistency", [](const HomFacts& f) {
                      const auto& r = f.report;
                      const HomMap& m = f.m;
                      if (r.surjective != is_surjective(m) || r.complete != is_complete(m) ||
                          r.tame != is_tame_hom(m) || r.locally_surjective != is_locally_surjective(m) ||
                          r.locally_injective != is_locally_injective(m) ||
                          r.locally_bijective != is_locally_bijective(m) ||
                          r.pseudo_covering != is_pseudo_covering(m) || r.equitable != is_equitable_hom(m) ||
                          r.component_equitable != is_component_equitable(m) || r.isomorphism != is_isomorphism(m))
                        return fail("classify disagrees with an individual predicate");
                      // tame: every fibre connected
                      bool fibres_connected = true;
                      const Partition fibres = partition_of_map(m);
                      for (const auto& cell : fibres.cells())
                        for (Vertex x : cell)
                          if (f.source_comps.block_of[x] != f.source_comps.block_of[cell.front()]) fibres_connected = false;
                      if (fibres_connected != r.tame) return fail("tame differs from fibres lying in one component");
                      return pass();
                    }});

  claims.push_back({"hom.factorization", [](const HomFacts& f) {
                      const HomMap& m = f.m;
                      auto fac = factorize(m);
                      for (Vertex x = 0; x < m.source().order(); ++x)
                        if (fac.injection(fac.projection(x)) != m(x)) return fail("injection after projection is not m");
                      if (!is_complete(fac.projection)) return fail("projection onto the fibre quotient is not complete");
                      if (is_surjective(fac.injection) != f.report.surjective)
                        return fail("induced map surjective differs from m surjective");
                      if (is_isomorphism(fac.injection) != f.report.complete)
                        return fail("induced map is an isomorphism but m is not complete, or conversely");
                      return pass();
                    }});

  claims.push_back({"hom.locally-strong-definition", [](const HomFacts& f) {
                      if (f.m.source().order() > literal_definition_bound) return skip();
                      if (f.locally_strong != locally_strong_by_definition(f.m))
                        return fail("locally strong differs from its literal definition");
                      return pass();
                    }});

  claims.push_back({"hom.lsur-vs-ls", [](const HomFacts& f) {
                      const auto& r = f.report;
                      if (r.locally_surjective && !f.locally_strong) return fail("locally surjective but not locally strong");
                      if (r.surjective && f.locally_strong != r.locally_surjective)
                        return fail("surjective map with locally strong != locally surjective");
                      return pass();
                    }});

  claims.push_back({"hom.inclusion-chain", [](const HomFacts& f) {
                      const auto& r = f.report;
                      const bool ls_com = f.locally_strong && r.complete;
                      const bool pc = f.locally_strong && r.surjective;
                      if (r.isomorphism && !is_consistent(f.m, PermGroup::trivial(f.m.source().order())))
                        return fail("isomorphism that is not an orbit homomorphism of the trivial group");
                      if (f.orbit() && r.complete && !r.equitable) return fail("O ∩ Com not inside E ∩ Com");
                      if (r.equitable && r.complete && !ls_com) return fail("E ∩ Com not inside LS ∩ Com");
                      if (ls_com != pc) return fail("LS ∩ Com differs from PC");
                      if (pc != (r.locally_surjective && r.complete)) return fail("PC differs from LSur ∩ Com");
                      if (pc && !r.complete) return fail("PC not inside Com");
                      return pass();
                    }});

  claims.push_back({"hom.complete-projection-locality", [](const HomFacts& f) {
                      if (!f.report.complete) return skip();
                      auto q = quotient(f.m.source_ptr(), partition_of_map(f.m));
                      const auto& pi = q.projection;
                      const auto& r = f.report;
                      if (is_pseudo_covering(pi) != r.pseudo_covering || is_locally_surjective(pi) != r.locally_surjective ||
                          is_locally_injective(pi) != r.locally_injective ||
                          is_locally_bijective(pi) != r.locally_bijective ||
                          is_locally_strong(pi) != is_locally_strong(f.m))
                        return fail("projection and complete map differ on a local property");
                      return pass();
                    }});

  claims.push_back({"component.image", [](const HomFacts& f) {
                      if (!f.report.locally_surjective) return skip();
                      const HomMap& m = f.m;
                      for (std::size_t c = 0; c < f.source_comps.count(); ++c) {
                        const VertexSet image = image_of_component(m, c);
                        const VertexSet& c_vertices = f.source_comps.blocks[c];
                        const Vertex x = c_vertices.front();
                        if (image != f.target_comps.block_containing(m(x)))
                          return fail("image of C_X(x) differs from C_Y(m(x))");
                        // C_Y(m(x)) ≅ C_X(x)/~m
                        auto sub = share(induced_subgraph(m.source(), c_vertices));
                        VertexMap restricted(sub->order());
                        for (Vertex i = 0; i < sub->order(); ++i) restricted[i] = m(c_vertices[i]);
                        auto q = quotient(sub, Partition::from_keys(restricted));
                        if (q.quotient->order() <= 40) {
                          auto target_part = induced_subgraph(m.target(), image);
                          if (q.quotient->order() != target_part.order() ||
                              !find_isomorphism(*q.quotient, target_part))
                            return fail("C_Y(m(x)) is not isomorphic to C_X(x)/~m");
                        }
                        const VertexSet pre = preimage_of_component_vertices(m, c);
                        VertexSet direct;
                        for (Vertex v = 0; v < m.source().order(); ++v)
                          if (std::binary_search(image.begin(), image.end(), m(v))) direct.push_back(v);
                        if (pre != direct) return fail("preimage of m(V_C) differs from the admissible union");
                      }
                      return pass();
                    }});

  claims.push_back({"component.isolated", [](const HomFacts& f) {
                      if (!f.report.locally_surjective) return skip();
                      for (Vertex x = 0; x < f.m.source().order(); ++x)
                        if (f.m.source().degree(x) == 0 && f.m.target().degree(f.m(x)) != 0)
                          return fail("isolated vertex " + f.m.source().label(x) + " maps to a non-isolated vertex");
                      return pass();
                    }});

  claims.push_back({"component.tame-bijection", [](const HomFacts& f) {
                      if (!(f.report.pseudo_covering && f.report.tame)) return skip();
                      if (f.source_comps.count() != f.target_comps.count())
                        return fail("component counts differ for a tame pseudo-covering");
                      std::set<std::size_t> hit;
                      for (std::size_t c = 0; c < f.source_comps.count(); ++c) {
                        const auto image = image_set(f.m, f.source_comps.blocks[c]);
                        const std::size_t target_block = f.target_comps.block_of[image.front()];
                        if (!hit.insert(target_block).second) return fail("two components map onto one");
                        VertexSet pre;
                        for (Vertex v = 0; v < f.m.source().order(); ++v)
                          if (f.target_comps.block_of[f.m(v)] == target_block) pre.push_back(v);
                        if (pre != f.source_comps.blocks[c]) return fail("V_C differs from the preimage of V_C'");
                      }
                      return pass();
                    }});

  claims.push_back({"count.rough-sum", [](const HomFacts& f) {
                      std::size_t sum = 0;
                      for (std::size_t t = 0; t < f.target_comps.count(); ++t)
                        for (const auto& block : f.source_comps.blocks) {
                          const auto image = image_set(f.m, block);
                          if (std::all_of(image.begin(), image.end(),
                                          [&](Vertex y) { return f.target_comps.block_of[y] == t; }))
                            ++sum;
                        }
                      if (sum != component_count(f.m.source())) return fail("sum of c(X)_{C'} differs from c(X)");
                      return pass();
                    }});

  claims.push_back({"count.admissible-constancy", [](const HomFacts& f) {
                      if (!f.report.locally_surjective) return skip();
                      for (Vertex y = 0; y < f.m.target().order(); ++y) {
                        const auto admissible = admissible_components(f.m, y);
                        std::vector<std::size_t> into;
                        const std::size_t t = f.target_comps.block_of[y];
                        for (std::size_t c = 0; c < f.source_comps.count(); ++c) {
                          const auto image = image_set(f.m, f.source_comps.blocks[c]);
                          if (std::all_of(image.begin(), image.end(),
                                          [&](Vertex z) { return f.target_comps.block_of[z] == t; }))
                            into.push_back(c);
                        }
                        if (into != admissible) return fail("C(X)_{C_Y(y)} differs from C(X)_y");
                        const Vertex rep = f.target_comps.block_containing(y).front();
                        if (admissible_components(f.m, rep).size() != admissible.size())
                          return fail("c(X)_y not constant on a target component");
                      }
                      return pass();
                    }});

  claims.push_back({"count.formula-a", [](const HomFacts& f) {
                      if (!f.report.locally_surjective) return skip();
                      const auto b = count_theorem_A(f.m);
                      if (b.terms.size() != f.target_comps.count()) return fail("one term per target component expected");
                      if (b.total != component_count(f.m.source()))
                        return fail("formula total " + std::to_string(b.total) + " differs from union-find count");
                      return pass();
                    }});

  claims.push_back({"count.ce-divisibility", [](const HomFacts& f) {
                      if (!(f.report.locally_surjective && f.report.component_equitable)) return skip();
                      for (Vertex y = 0; y < f.m.target().order(); ++y) {
                        const auto admissible = admissible_components(f.m, y);
                        for (std::size_t c : admissible) {
                          const std::size_t kc = f.k(c, y), kx = f.k_x(y);
                          if (kx % kc != 0) return fail("k_C(y) does not divide k_X(y)");
                          if (kx / kc != admissible.size()) return fail("c(X)_y differs from k_X(y)/k_C(y)");
                        }
                      }
                      std::mt19937_64 rng(f.selection_seed);
                      Chooser random = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
                      const std::size_t oracle = component_count(f.m.source());
                      if (count_ce(f.m).total != oracle || count_ce(f.m, random).total != oracle)
                        return fail("component equitable count differs from union-find count");
                      return pass();
                    }});

  claims.push_back({"count.orbit-components", [](const HomFacts& f) {
                      if (!f.orbit()) return skip();
                      if (!f.report.component_equitable) return fail("orbit homomorphism not component equitable");
                      const auto& group = *f.orbit_group;
                      // component ordinal -> component of its image under each generator
                      for (Vertex y = 0; y < f.m.target().order(); ++y) {
                        const auto admissible = admissible_components(f.m, y);
                        if (admissible.empty()) continue;
                        std::set<std::size_t> orbit{admissible.front()};
                        std::vector<std::size_t> stack{admissible.front()};
                        while (!stack.empty()) {
                          std::size_t c = stack.back();
                          stack.pop_back();
                          for (const auto& g : group.generators()) {
                            std::size_t d = f.source_comps.block_of[g(f.source_comps.blocks[c].front())];
                            if (orbit.insert(d).second) stack.push_back(d);
                          }
                        }
                        if (std::vector<std::size_t>(orbit.begin(), orbit.end()) != admissible)
                          return fail("admissible components are not one group orbit");
                        const auto first = induced_subgraph(f.m.source(), f.source_comps.blocks[admissible.front()]);
                        for (std::size_t c : admissible)
                          if (!find_isomorphism(first, induced_subgraph(f.m.source(), f.source_comps.blocks[c])))
                            return fail("admissible components are not pairwise isomorphic");
                        if (f.report.complete) {
                          const VertexSet pre = preimage_of_component_vertices(f.m, admissible.front());
                          const std::size_t size = f.source_comps.blocks[admissible.front()].size();
                          if (pre.size() % size != 0 || pre.size() / size != admissible.size())
                            return fail("c(X)_y differs from |m⁻¹(m(V_C))| / |V_C|");
                        }
                      }
                      return pass();
                    }});

  claims.push_back({"count.procedure-b", [](const HomFacts& f) {
                      if (!(f.orbit() && f.report.complete)) return skip();
                      const std::size_t oracle = component_count(f.m.source());
                      const auto b = count_theorem_B(f.m, *f.orbit_group);
                      if (b.total != oracle) return fail("procedure total differs from union-find count");
                      if (b.terms.size() != f.target_comps.count()) return fail("procedure did not take c(Y) steps");
                      std::mt19937_64 rng(f.selection_seed);
                      Chooser random = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
                      for (std::size_t i = 0; i < reselections; ++i)
                        if (count_theorem_B(f.m, *f.orbit_group, random).total != oracle)
                          return fail("procedure total depends on the choice of representatives");
                      return pass();
                    }});

  claims.push_back({"iso.component-criterion", [](const HomFacts& f) {
                      if (!f.report.pseudo_covering) return skip();
                      for (std::size_t c = 0; c < f.source_comps.count(); ++c) {
                        const auto& block = f.source_comps.blocks[c];
                        const auto image = image_set(f.m, block);
                        const bool iso = find_isomorphism(induced_subgraph(f.m.source(), block),
                                                          induced_subgraph(f.m.target(), image))
                                             .has_value();
                        if (component_iso_check(f.m, c) != iso) return fail("k_C = 1 test disagrees with isomorphism search");
                      }
                      return pass();
                    }});

  claims.push_back({"iso.ratio-independence", [](const HomFacts& f) {
                      if (!(f.orbit() && f.report.complete)) return skip();
                      for (std::size_t c = 0; c < f.source_comps.count(); ++c) {
                        const auto image = image_set(f.m, f.source_comps.blocks[c]);
                        const Vertex y0 = image.front();
                        bool some_equal = false, all_equal = true, kx_constant = true, some_single = false;
                        for (Vertex y : image) {
                          // k_X(y)/k_C(y) = k_X(y0)/k_C(y0), cross-multiplied
                          if (f.k_x(y) * f.k(c, y0) != f.k_x(y0) * f.k(c, y)) return fail("ratio k_X/k_C varies on m(C)");
                          const bool eq = f.k(c, y) == f.k_x(y);
                          some_equal |= eq;
                          all_equal &= eq;
                          kx_constant &= f.k_x(y) == f.k_x(y0);
                          some_single |= f.k(c, y) == 1;
                        }
                        if (some_equal && !all_equal) return fail("k_C = k_X at one vertex of m(C) but not all");
                        const bool iso = component_iso_check(f.m, c);
                        for (Vertex y : image)
                          if (f.k(c, y) == f.k_x(y) && f.k_x(y) > 1 && iso)
                            return fail("k_C(y) = k_X(y) > 1 yet C is isomorphic to m(C)");
                        if (iso != (some_single && kx_constant)) return fail("isomorphism criterion via k_X constancy fails");
                      }
                      return pass();
                    }});

  claims.push_back({"component.main", [](const HomFacts& f) {
                      if (!f.report.complete) return skip();
                      std::size_t big = f.source_comps.count();
                      for (std::size_t c = 0; c < f.source_comps.count(); ++c)
                        if (f.source_comps.blocks[c].size() > 1) {
                          if (big != f.source_comps.count()) return skip();
                          big = c;
                        }
                      if (big == f.source_comps.count()) return skip();
                      const auto image = image_set(f.m, f.source_comps.blocks[big]);
                      const auto& whole = f.target_comps.block_containing(image.front());
                      if (image != whole) return skip();
                      // m(C) edges versus C' edges
                      std::set<Edge> from_c;
                      for (auto [u, v] : f.m.source().proper_edges())
                        if (f.source_comps.block_of[u] == big && f.m(u) != f.m(v))
                          from_c.emplace(std::min(f.m(u), f.m(v)), std::max(f.m(u), f.m(v)));
                      std::set<Edge> in_c;
                      for (auto [a, b] : f.m.target().proper_edges())
                        if (std::binary_search(whole.begin(), whole.end(), a)) in_c.emplace(a, b);
                      if (from_c != in_c) return fail("m(C) and C' have different edges");
                      return pass();
                    }});

  return claims;
}

// ---------------------------------------------------------------------------
// Claims over (graph, partition)

std::vector<PartitionClaim> partition_claims() {
  std::vector<PartitionClaim> claims;

  claims.push_back({"quotient.component-count", [](const GraphPtr& g, const Partition& p) {
                      const auto q = quotient(g, p);
                      const std::size_t cx = component_count(*g), cq = component_count(*q.quotient);
                      const bool tame = is_tame(*g, p);
                      if (cq > cx) return fail("quotient has more components");
                      if ((cq == cx) != tame) return fail("equal component counts differ from tameness");
                      if ((cx == 1) != (cq == 1 && tame)) return fail("connectivity equivalence fails");
                      return pass();
                    }});

  claims.push_back({"quotient.edges", [](const GraphPtr& g, const Partition& p) {
                      const auto q = quotient(g, p);
                      // quotient edges straight from the definition
                      std::set<std::pair<std::size_t, std::size_t>> expected;
                      for (Vertex a = 0; a < g->order(); ++a)
                        for (Vertex b = 0; b < g->order(); ++b)
                          if (g->has_proper_edge(a, b) && p.cell_of(a) != p.cell_of(b))
                            expected.emplace(std::min(p.cell_of(a), p.cell_of(b)), std::max(p.cell_of(a), p.cell_of(b)));
                      std::set<std::pair<std::size_t, std::size_t>> actual;
                      std::vector<std::size_t> cell_of_quotient(q.quotient->order());
                      for (Vertex x = 0; x < g->order(); ++x) cell_of_quotient[q.projection(x)] = p.cell_of(x);
                      for (auto [a, b] : q.quotient->proper_edges())
                        actual.emplace(std::min(cell_of_quotient[a], cell_of_quotient[b]),
                                       std::max(cell_of_quotient[a], cell_of_quotient[b]));
                      if (expected != actual) return fail("quotient edges differ from the definition");
                      if (!is_complete(q.projection)) return fail("projection is not complete");
                      return pass();
                    }});

  claims.push_back({"quotient.singleton", [](const GraphPtr& g, const Partition& p) {
                      if (p.size() != g->order()) return skip();
                      const auto q = quotient(g, p);
                      if (!find_isomorphism(*g, *q.quotient)) return fail("singleton quotient not isomorphic to the graph");
                      return pass();
                    }});

  claims.push_back({"quotient.orbit-equitable", [](const GraphPtr& g, const Partition& p) {
                      if (g->order() > default_automorphism_bound) return skip();
                      if (!orbit_witness(*g, p)) return skip();
                      if (!is_equitable(*g, p)) return fail("orbit partition is not equitable");
                      return pass();
                    }});

  claims.push_back({"quotient.connectedness-criterion", [](const GraphPtr& g, const Partition& p) {
                      const auto q = quotient(g, p);
                      if (!is_connected(*q.quotient) || !is_pseudo_covering(q.projection)) return skip();
                      if (connectedness_criterion(g, p) && component_count(*g) != 1)
                        return fail("criterion claims connectivity of a disconnected graph");
                      return pass();
                    }});

  return claims;
}

struct Harness {
  const Overrides& overrides;
  std::vector<HomClaim> homs = hom_claims();
  std::vector<PartitionClaim> parts = partition_claims();
  std::map<std::string, ClaimResult> results;

  Harness(const Overrides& o) : overrides(o) {
    for (const auto& c : homs) results[c.id].id = c.id;
    for (const auto& c : parts) results[c.id].id = c.id;
  }

  void record(const char* id, const Outcome& o, const Instance& inst) {
    auto& r = results[id];
    if (!o.applicable) return;
    ++r.instances;
    if (!o.failure) return;
    ++r.failure_count;
    if (r.failures.size() < kept_failures) {
      json cx = inst.to_json();
      cx["reason"] = *o.failure;
      r.failures.push_back(std::move(cx));
    }
  }

  template <typename F>
  static Outcome guarded(F&& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      return fail(std::string("exception: ") + e.what());
    }
  }

  HomFacts facts(const Instance& inst) const {
    const HomMap& m = *inst.map;
    const PermGroup* group = inst.group ? &*inst.group : nullptr;
    HomFacts f{m, inst.group, components(m.source()), components(m.target()), classify(m, group), false, std::nullopt,
               inst.selection_seed};
    f.locally_strong = overrides.locally_strong ? overrides.locally_strong(m) : f.report.locally_strong;
    if (group && f.report.orbit.value_or(false)) {
      f.orbit_group = *group;
    } else if (!group && m.source().order() <= default_automorphism_bound) {
      f.orbit_group = orbit_witness(m.source(), partition_of_map(m));
    }
    return f;
  }

  void run_hom(const Instance& inst) {
    std::optional<HomFacts> f;
    try {
      f.emplace(facts(inst));
    } catch (const std::exception& e) {
      record("classify.consistency", fail(std::string("exception: ") + e.what()), inst);
      return;
    }
    for (const auto& c : homs) record(c.id, guarded([&] { return c.check(*f); }), inst);
  }

  void run_partition(const Instance& inst) {
    for (const auto& c : parts) record(c.id, guarded([&] { return c.check(inst.source, *inst.partition); }), inst);
  }

  // A partition instance also yields its projection as a map instance.
  void run_partition_and_projection(const GraphPtr& g, const Partition& p, std::optional<PermGroup> group,
                                    std::uint64_t seed) {
    Instance part{g, p, std::nullopt, std::nullopt, seed};
    run_partition(part);
    auto q = quotient(g, p);
    Instance hom{g, std::nullopt, q.projection, std::move(group), seed};
    run_hom(hom);
  }

  VerificationReport report() const {
    VerificationReport out;
    for (const auto& [id, r] : results) {
      out.claims.push_back(r);
      if (r.failure_count) out.pass = false;
    }
    return out;
  }
};

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : hom_claims()) ids.emplace_back(c.id);
  for (const auto& c : partition_claims()) ids.emplace_back(c.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

VerificationReport run_suite(const SweepConfig& cfg, const Overrides& overrides) {
  if (cfg.max_source_vertices == 0 || cfg.max_target_vertices == 0)
    throw InputError("sweep bounds must be positive");
  Harness h(overrides);
  std::uint64_t counter = 0;
  auto next_seed = [&] { return cfg.seed * 0x9E3779B97F4A7C15ull + ++counter; };

  std::vector<std::vector<GraphPtr>> targets;
  for (std::size_t t = 1; t <= cfg.max_target_vertices; ++t) targets.push_back(target_graphs(t));

  for (std::size_t n = 1; n <= cfg.max_source_vertices; ++n) {
    const auto partitions = set_partitions(n);
    for (const auto& g : labeled_graphs(n)) {
      for (const auto& p : partitions) h.run_partition_and_projection(g, p, std::nullopt, next_seed());
      for (const auto& level : targets)
        for (const auto& y : level)
          for (auto& m : homomorphisms(g, y)) h.run_hom(Instance{g, std::nullopt, std::move(m), std::nullopt, next_seed()});
    }
  }

  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.random_instances; ++i) {
    auto inst = random_orbit_instance(rng, 40);
    h.run_partition_and_projection(inst.graph, inst.orbits, inst.group, next_seed());
  }
  return h.report();
}

json to_json(const VerificationReport& report) {
  json claims = json::array();
  for (const auto& c : report.claims)
    claims.push_back({{"id", c.id},
                      {"instances", c.instances},
                      {"failure_count", c.failure_count},
                      {"failures", c.failures}});
  return {{"claims", std::move(claims)}, {"pass", report.pass}};
}

std::optional<std::string> replay(const std::string& claim_id, const json& counterexample, const Overrides& overrides) {
  Harness h(overrides);
  Instance inst = Instance::from_json(counterexample);
  if (inst.partition) {
    for (const auto& c : h.parts)
      if (claim_id == c.id) return Harness::guarded([&] { return c.check(inst.source, *inst.partition); }).failure;
  }
  if (inst.map) {
    std::optional<HomFacts> f;
    try {
      f.emplace(h.facts(inst));
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
    for (const auto& c : h.homs)
      if (claim_id == c.id) return Harness::guarded([&] { return c.check(*f); }).failure;
  }
  throw InputError("claim '" + claim_id + "' does not apply to this counterexample");
}

}  // namespace homquot::oracle
