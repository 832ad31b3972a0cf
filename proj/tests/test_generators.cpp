#include <catch_amalgamated.hpp>

#include "chainmail/chainmail.hpp"
#include "corpus.hpp"

using namespace chm;

namespace {

std::vector<Graph> small_graphs(std::size_t v) {
  std::vector<std::pair<Element, Element>> slots;
  for (Element a = 0; a < v; ++a)
    for (Element b = a + 1; b < v; ++b) slots.push_back({a, b});
  std::vector<Graph> out;
  for (std::size_t m = 0; m < (std::size_t{1} << slots.size()); ++m) {
    Graph g{v, {}};
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1U) g.edges.push_back(slots[i]);
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("graph and hypergraph validation") {
  CHECK_THROWS_AS(Graph({2, {{0, 0}}}).validate(), InvalidInput);
  CHECK_THROWS_AS(Graph({2, {{0, 2}}}).validate(), InvalidInput);
  CHECK_THROWS_AS(Hypergraph({2, {ElementSet{0, 5}}}).validate(), InvalidInput);
  CHECK_THROWS_AS(powerset_poset(9), ResourceLimit);
  Limits tight;
  tight.max_powerset_vertices = 2;
  CHECK_THROWS_AS(graph_connectivity_pair(Graph{3, {}}, tight), ResourceLimit);
}

TEST_CASE("graph connectivity pairs are Serra, separated only without edges") {
  for (std::size_t v = 1; v <= 4; ++v)
    for (const Graph& g : small_graphs(v)) {
      TaxonomyReport r = classify(graph_connectivity_pair(g));
      REQUIRE(r.serra);
      REQUIRE(r.separated == g.edges.empty());
    }
}

TEST_CASE("hypergraph connectivity pairs are typical") {
  std::vector<Hypergraph> hs{
      {3, {ElementSet{0, 1}, ElementSet{1, 2}}},
      {4, {ElementSet{0, 1, 2}, ElementSet{2, 3}}},
      {4, {ElementSet{0, 1}}},
      {3, {}},
      {4, {ElementSet{0, 1}, ElementSet{2, 3}, ElementSet{1, 2}}},
  };
  for (const Hypergraph& h : hs) {
    TaxonomyReport r = classify(hypergraph_connectivity_pair(h));
    REQUIRE(r.typical);
    ElementSet covered;
    for (const ElementSet& e : h.hyperedges) covered |= e;
    // a point in no hyperedge is not a union of connected sets
    if (covered.size() < h.vertices) REQUIRE_FALSE(r.cl2);
  }
}

TEST_CASE("k-connectivity is literal") {
  Graph g{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  auto adj = g.adjacency();
  CHECK(is_k_connected(adj, ElementSet{0, 1}, 2));
  CHECK_FALSE(is_k_connected(adj, ElementSet{0}, 2));
  CHECK(is_k_connected(adj, ElementSet{0, 1, 2, 3}, 2));
  CHECK_FALSE(is_k_connected(adj, ElementSet{0, 1, 2}, 2));

  Fixture j = named_fixture("exaJ");
  Element left = 0b0001111, right = 0b1111000;
  CHECK(j.connected->contains(left));
  CHECK(j.connected->contains(right));
  CHECK_FALSE(j.connected->contains(left | right));
}

TEST_CASE("topology pairs validate their input") {
  CHECK_THROWS_AS(topology_pair(2, {ElementSet{0}, ElementSet{0, 1}}), InvalidInput);
  CHECK_THROWS_AS(topology_pair(2, {ElementSet{}, ElementSet{0}}), InvalidInput);
  CHECK_THROWS_AS(topology_pair(2, {ElementSet{}, ElementSet{0}, ElementSet{1}, ElementSet{0, 1}, ElementSet{2}}),
                  InvalidInput);
  CHECK_THROWS_AS(topology_pair(3, {ElementSet{}, ElementSet{0}, ElementSet{1}, ElementSet{0, 1, 2}}),
                  InvalidInput);
  ConnectivityPair ok = topology_pair(2, {ElementSet{}, ElementSet{0}, ElementSet{0, 1}});
  CHECK(ok.connected() == ElementSet{0, 1, 3});
}

TEST_CASE("forest conditions agree on every poset up to 6") {
  std::size_t forests = 0;
  for (const FinitePoset& p : corpus::posets_up_to(6)) {
    auto c = forest_conditions(p);
    INFO(poset_to_json(p).dump());
    REQUIRE(c[0] == c[1]);
    REQUIRE(c[1] == c[2]);
    REQUIRE(c[2] == c[3]);
    if (forest_poset_check(p)) ++forests;
  }
  // rooted forests: 1, 1, 2, 4, 9, 20, 48 on 0..6 points
  CHECK(forests == 1 + 1 + 2 + 4 + 9 + 20 + 48);
}

TEST_CASE("principal down-sets of a forest are absolute") {
  for (const FinitePoset& p : corpus::posets_up_to(5, 1)) {
    if (!forest_poset_check(p)) continue;
    REQUIRE(classify(principal_downset_pair(p)).absolute);
  }
  // and fail to be absolute off forests
  FinitePoset v = with_new_bottom(FinitePoset::antichain(2));
  CHECK_FALSE(classify(principal_downset_pair(v)).absolute);
}

TEST_CASE("constructions") {
  FinitePoset t = with_new_top(FinitePoset::antichain(2));
  CHECK(top(t) == 2);
  FinitePoset b = with_new_bottom(FinitePoset::antichain(2));
  CHECK(bottom(b) == 0);
  DivisorLattice d = divisor_lattice(12);
  CHECK(d.divisors == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
  CHECK(is_distributive(d.lattice));
  DownsetLattice dl = downset_lattice(FinitePoset::antichain(3));
  CHECK(dl.downsets.size() == 8);
  CHECK(is_isomorphic(dl.lattice, powerset_poset(3)));
}

TEST_CASE("fixture registry") {
  for (const std::string& name : fixture_names()) {
    Fixture f = named_fixture(name);
    CHECK(f.name == name);
    CHECK_FALSE(f.description.empty());
    CHECK(f.labels.size() == f.poset.size());
  }
  CHECK_THROWS_AS(named_fixture("nope"), InvalidInput);
  CHECK_THROWS_AS(named_fixture("exaA").pair(), PreconditionError);

  FinitePoset a = named_fixture("exaA").poset;
  std::vector<std::pair<Element, Element>> expected{{0, 1}, {0, 2}, {3, 4}, {3, 5}, {1, 4},
                                                    {2, 4}, {2, 5}, {4, 6}, {5, 6}};
  auto covers = cover_pairs(a);
  std::sort(expected.begin(), expected.end());
  std::sort(covers.begin(), covers.end());
  CHECK(covers == expected);

  CHECK(named_fixture("exaW").connected == ElementSet{3, 6});
  CHECK(is_isomorphic(named_fixture("M3").poset, FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})));
}

TEST_CASE("fixture classifications") {
  auto cls = [](const char* name) { return classify(named_fixture(name).pair()); };
  for (const char* name : {"exaAA", "exaAB", "exaE", "exaK", "exaU"}) {
    INFO(name);
    CHECK(cls(name).absolute);
  }
  TaxonomyReport b = cls("exaB");
  CHECK(b.serra);
  CHECK_FALSE(b.separated);
  TaxonomyReport l = cls("exaL");
  CHECK(l.serra);
  CHECK_FALSE(l.separated);
  TaxonomyReport g = cls("exaG");
  CHECK(g.typical);
  CHECK(g.separated);
  CHECK_FALSE(g.saturated);
  TaxonomyReport h = cls("exaH");
  CHECK(h.typical);
  CHECK_FALSE(h.serra);
  TaxonomyReport i = cls("exaI");
  CHECK(i.kernel);
  CHECK_FALSE(i.cl2);
  for (const char* name : {"exaJ", "exaM", "exaV"}) {
    TaxonomyReport r = cls(name);
    INFO(name);
    CHECK(r.connectivity);
    CHECK_FALSE(r.kernel);
    CHECK_FALSE(r.typical);
  }
  TaxonomyReport w = cls("exaW");
  CHECK(w.separated);
  CHECK_FALSE(w.typical);
  for (const char* name : {"exaN", "exaO"}) {
    TaxonomyReport r = cls(name);
    INFO(name);
    CHECK(r.preconnectivity);
    CHECK_FALSE(r.connectivity);
  }
  TaxonomyReport t = cls("exaT");
  CHECK(t.serra);
  CHECK(t.cl2);
}
