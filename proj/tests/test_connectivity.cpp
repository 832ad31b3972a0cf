#include <catch_amalgamated.hpp>

#include "chainmail/chainmail.hpp"
#include "corpus.hpp"
#include "oracles.hpp"
#include "sweep.hpp"

using namespace chm;

namespace {

std::string joined(const sweep::Failures& f) {
  std::string s;
  for (const auto& x : f) s += x + "; ";
  return s;
}

Element pts(std::initializer_list<Element> one_based) {
  Element m = 0;
  for (Element p : one_based) m |= Element{1} << (p - 1);
  return m;
}

}  // namespace

TEST_CASE("pairs reject members outside the lattice") {
  CHECK_THROWS_AS(ConnectivityPair(FinitePoset::chain(3), ElementSet{5}), InvalidInput);
  CHECK_THROWS_AS(ConnectivityPair(FinitePoset::antichain(2), ElementSet{}), PreconditionError);
}

TEST_CASE("subchainmail examples") {
  Fixture n = named_fixture("exaN");
  CHECK(is_chainmail(n.poset.induced(*n.connected)));
  CHECK_FALSE(is_subchainmail_of(n.poset, *n.connected));
  CHECK(is_subchainmail_of(n.poset, n.poset.elements()));
  CHECK(is_subchainmail_of(powerset_poset(3), ElementSet{1, 2, 4}));
}

TEST_CASE("components and kernels") {
  Graph g{4, {{0, 1}, {2, 3}}};
  ConnectivityPair gp = graph_connectivity_pair(g);
  CHECK(components(gp, 0b1111) == ElementSet{0b0011, 0b1100});
  CHECK(components(gp, 0).empty());

  ConnectivityPair m = named_fixture("exaM").pair();
  CHECK(components(m, pts({1, 2, 3})) == ElementSet{pts({1, 2}), pts({1, 3})});

  // kernel in a topology is the interior
  std::vector<ElementSet> opens{ElementSet{}, ElementSet{0}, ElementSet{0, 1}, ElementSet{0, 1, 2}};
  ConnectivityPair top = topology_pair(3, opens);
  for (Element x = 0; x < 8; ++x) {
    Element interior = 0;
    for (const ElementSet& o : opens)
      if ((members_mask(o) & ~x) == 0) interior |= members_mask(o);
    CHECK(kernel(top, x) == interior);
  }
  for (Element c : top.connected()) CHECK(kernel(top, c) == c);
}

TEST_CASE("adjunction examples") {
  CHECK_FALSE(galois_adjunction_holds(named_fixture("exaN").pair()));
  ConnectivityPair whole(named_fixture("M3").poset, ElementSet::first_n(5));
  CHECK(galois_adjunction_holds(whole));
  CHECK(galois_adjunction_holds(named_fixture("exaJ").pair()));
  CHECK_THROWS_AS(right_adjoint(named_fixture("exaN").pair(), 0), PreconditionError);
  CHECK_THROWS_AS(is_separated(named_fixture("exaN").pair()), PreconditionError);
}

TEST_CASE("the genuine adjunction condition is stronger than the pointwise formula") {
  // In M3 with C = {0, a, b}, the maximal elements of C below the top are
  // a and b, which share the lower bound 0 in C, so C(1) is not in D(C).
  ConnectivityPair pc(named_fixture("M3").poset, ElementSet{0, 1, 2});
  CHECK_FALSE(is_subchainmail_of(pc.poset(), pc.connected()));
  CHECK_FALSE(galois_adjunction_holds(pc));
  CHECK(adjunction_witness(pc) == 4);
  CHECK_FALSE(oracle::adjunction_holds(oracle::Order(pc.poset()), 0b111));
}

TEST_CASE("connection conditions on fixtures") {
  TaxonomyReport i = classify(named_fixture("exaI").pair());
  CHECK(i.cl0);
  CHECK(i.cl1);
  CHECK_FALSE(i.cl2);
  CHECK(cl2_witness(named_fixture("exaI").pair()) == 2);

  TaxonomyReport j = classify(named_fixture("exaJ").pair());
  CHECK_FALSE(j.cl0);
  CHECK_FALSE(j.cl1);
  CHECK(j.connectivity);

  CHECK(cl2(named_fixture("exaT").pair()));
}

TEST_CASE("separated and absolute examples") {
  CHECK(is_separated(named_fixture("exaW").pair()));
  CHECK_FALSE(is_separated(graph_connectivity_pair(Graph{3, {{0, 1}, {1, 2}}})));
  ConnectivityPair whole(powerset_poset(2), ElementSet::first_n(4));
  CHECK_FALSE(is_separated(whole));

  CHECK(is_absolute(exterior_as_absolute(named_fixture("exaA").poset)));
  CHECK(is_absolute(named_fixture("exaU").pair()));
  CHECK(is_absolute(named_fixture("exaK").pair()));
}

TEST_CASE("E predicates") {
  Lattice m3(named_fixture("M3").poset);
  CHECK(e2(m3, 1));
  CHECK_FALSE(e1(m3, 1));
  Lattice n5(named_fixture("N5").poset);
  CHECK(e2(n5, 3));
  CHECK_FALSE(e1(n5, 3));
  Lattice p3(powerset_poset(3));
  for (Element s : {1, 2, 4}) {
    CHECK(e3(p3, s));
    CHECK(e4(p3, s));
  }
  CHECK_FALSE(e3(p3, 3));
  CHECK(frame_equivalence_check(p3));
  CHECK(frame_equivalence_check(Lattice(FinitePoset::chain(5))));
  CHECK_THROWS_AS(frame_equivalence_check(m3), PreconditionError);
}

TEST_CASE("divisor surrogate: E1 picks out the prime powers") {
  // The top 360 = lcm(8, 45) with gcd 1, so in this finite surrogate the top
  // is not E1. Only the genuine 0 of the full divisibility order escapes that.
  Fixture t = named_fixture("exaT");
  Lattice L(t.poset);
  ElementSet e1s = EPredicates(L).e1();
  CHECK(e1s == *t.connected);
  CHECK_FALSE(e1s.contains(L.top()));
  oracle::Order o(t.poset);
  const int zero = oracle::bottom(o);
  ElementSet brute;
  for (int a = 0; a < o.n; ++a) {
    bool ok = a != zero;
    for (int x = 0; x < o.n && ok; ++x)
      for (int y = 0; y < o.n && ok; ++y)
        if (oracle::meet2(o, x, y) == zero && o.le[a][oracle::join2(o, x, y)] && !o.le[a][x] && !o.le[a][y])
          ok = false;
    if (ok) brute.insert(static_cast<Element>(a));
  }
  CHECK(brute == *t.connected);
}

TEST_CASE("classification examples") {
  TaxonomyReport whole = classify(ConnectivityPair(named_fixture("N5").poset, ElementSet::first_n(5)));
  CHECK(whole.degenerate);
  CHECK(whole.kernel);
  CHECK(whole.saturated);
  CHECK(whole.connectivity);
  CHECK_FALSE(whole.typical);

  TaxonomyReport x = classify(named_fixture("exaX").pair());
  CHECK(x.typical);
  CHECK(x.well_founded);
  CHECK_FALSE(x.separated);
  CHECK_FALSE(x.saturated);

  TaxonomyReport k = classify(named_fixture("exaK").pair());
  CHECK(k.serra);
  CHECK(k.separated);
  CHECK(k.absolute);
}

TEST_CASE("sigma closure examples") {
  ConnectivityPair atoms(powerset_poset(3), ElementSet{1, 2, 4});
  CHECK(sigma_closure(atoms).size() == 8);
  // {3} and {4} join to 5, so every element of exaN is a join of hollow nodes
  ConnectivityPair n = sigma_closure(named_fixture("exaN").pair());
  CHECK(n.size() == 6);
  oracle::Order o(named_fixture("exaN").poset);
  std::set<int> joins;
  for (oracle::Mask X = 0; X <= o.all(); ++X)
    if ((X & ~oracle::to_mask(*named_fixture("exaN").connected)) == 0) joins.insert(*oracle::join(o, X));
  CHECK(joins.size() == n.size());
  CHECK(cl2(n));
  ConnectivityPair none = sigma_closure(ConnectivityPair(FinitePoset::chain(3), ElementSet{}));
  CHECK(none.size() == 1);
}

TEST_CASE("lower Borger layer") {
  ConnectivityPair n = named_fixture("exaN").pair();
  CHECK_FALSE(is_multicoreflective(n.poset(), n.connected()));
  BorgerReport b = borger_implication_check(n.poset(), n.connected());
  CHECK_FALSE(b.multicoreflective);
  CHECK_FALSE(b.local_join_closed);

  for (const std::string& name : {"exaB", "exaK", "exaW", "exaX"}) {
    ConnectivityPair pc = named_fixture(name).pair();
    BorgerReport r = borger_implication_check(pc.poset(), pc.connected());
    CHECK(r.multicoreflective);
    CHECK(r.orthogonality_closed);
    CHECK(r.local_join_closed);
  }
  FinitePoset m3 = named_fixture("M3").poset;
  BorgerReport all = borger_implication_check(m3, m3.elements());
  CHECK(all.multicoreflective);
  CHECK(all.orthogonality_closed);
  CHECK(all.local_join_closed);

  // local joins coincide with joins when there is a top
  FinitePoset a = with_new_top(named_fixture("exaA").poset);
  oracle::Order o(a);
  for (oracle::Mask X = 0; X <= o.all(); ++X) {
    ElementSet xs = oracle::to_set(X);
    REQUIRE(local_join(a, xs) == join(a, xs));
  }
  CHECK_THROWS_AS(is_orthogonal(a, 0, 0, ElementSet{3}), PreconditionError);
}

TEST_CASE("property sweep over lattices up to 5 elements and every subset") {
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const FinitePoset& p : corpus::posets(n)) {
      if (!is_complete_lattice(p)) continue;
      Lattice L(p);
      EPredicates e(L);
      sweep::Failures lf = sweep::check_lattice(L, e);
      INFO("lattice " << poset_to_json(p).dump());
      REQUIRE(joined(lf) == "");
      for (Element mask = 0; mask < (Element{1} << n); ++mask) {
        ConnectivityPair pc(L, mask_members(mask));
        sweep::Failures f = sweep::check_pair(pc, e);
        INFO("C = " << to_string(pc.connected()));
        REQUIRE(joined(f) == "");
        ++pairs;
      }
    }
  CHECK(pairs == 2 + 4 + 8 + 2 * 16 + 5 * 32);
}

TEST_CASE("property checks on every fixture with a connectivity") {
  for (const std::string& name : fixture_names()) {
    Fixture fx = named_fixture(name);
    if (!fx.connected || fx.poset.size() > 16) continue;
    ConnectivityPair pc = fx.pair();
    EPredicates e(pc.lattice());
    INFO(name);
    REQUIRE(joined(sweep::check_lattice(pc.lattice(), e)) == "");
    REQUIRE(joined(sweep::check_pair(pc, e)) == "");
  }
}
