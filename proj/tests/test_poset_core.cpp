#include <catch_amalgamated.hpp>

#include <random>

#include "chainmail/chainmail.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace chm;

namespace {

// exaA uses the drawn labels 1..7 at indices 0..6.
Element A(Element label) { return label - 1; }

FinitePoset two_tops() {
  // a, b below both x and y
  return FinitePoset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

FinitePoset random_poset(std::size_t n, std::mt19937& rng) {
  std::bernoulli_distribution edge(0.35);
  OrderRelation r(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (edge(rng)) r.set(a, b);
  r.close_reflexive_transitive();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return FinitePoset(r).permuted(perm);
}

}  // namespace

TEST_CASE("element sets") {
  ElementSet s{3, 1, 100};
  CHECK(s.size() == 3);
  CHECK(s.contains(100));
  CHECK(s.front() == 1);
  CHECK(s.back() == 100);
  CHECK(s.to_vector() == std::vector<Element>{1, 3, 100});
  CHECK(s.above(1) == ElementSet{3, 100});
  CHECK(to_string(ElementSet{}) == "{}");
  CHECK(shortlex_less(ElementSet{5}, ElementSet{0, 1}));
  CHECK(shortlex_less(ElementSet{0, 2}, ElementSet{1, 2}));
  CHECK(ElementSet::first_n(70).size() == 70);
}

TEST_CASE("validate reports the violated axiom") {
  OrderRelation ok(1);
  ok.set(0, 0);
  CHECK_FALSE(validate(ok).has_value());

  OrderRelation anti(2);
  anti.add_reflexive();
  anti.set(0, 1);
  anti.set(1, 0);
  auto v = validate(anti);
  REQUIRE(v);
  CHECK(v->axiom == Axiom::antisymmetry);
  CHECK(v->witness == std::vector<Element>{0, 1});

  OrderRelation trans(3);
  trans.add_reflexive();
  trans.set(0, 1);
  trans.set(1, 2);
  v = validate(trans);
  REQUIRE(v);
  CHECK(v->axiom == Axiom::transitivity);
  CHECK(v->witness == std::vector<Element>{0, 1, 2});
  CHECK(v->describe().find("transitivity") != std::string::npos);

  OrderRelation refl(2);
  v = validate(refl);
  REQUIRE(v);
  CHECK(v->axiom == Axiom::reflexivity);

  CHECK_THROWS_AS(FinitePoset(trans), InvalidInput);
}

TEST_CASE("down and up sets") {
  FinitePoset c = FinitePoset::chain(3);
  CHECK(down_set(c, 2) == ElementSet{0, 1, 2});
  CHECK(up_set(c, 2) == ElementSet{2});
  FinitePoset a = named_fixture("exaA").poset;
  CHECK(down_set(a, A(5)) == ElementSet{A(1), A(2), A(3), A(4), A(5)});
  CHECK_THROWS(down_set(c, 7));
}

TEST_CASE("joins and meets") {
  FinitePoset a = named_fixture("exaA").poset;
  CHECK(join(a, ElementSet{A(2), A(3)}) == A(5));
  CHECK(join(a, ElementSet{A(2), A(6)}) == A(7));
  CHECK(join(a, ElementSet{A(5), A(6)}) == A(7));
  CHECK_FALSE(join(a, ElementSet{A(3), A(4)}).has_value());
  CHECK_FALSE(join(a, ElementSet{}).has_value());

  FinitePoset c = FinitePoset::chain(3);
  CHECK(meet(c, ElementSet{1, 2}) == 1);
  CHECK(join(c, ElementSet{}) == 0);
  FinitePoset m3 = named_fixture("M3").poset;
  CHECK(meet(m3, ElementSet{1, 2}) == 0);
  CHECK_FALSE(meet(FinitePoset::antichain(2), ElementSet{0, 1}).has_value());
}

TEST_CASE("mails and mail-connectedness") {
  FinitePoset a = named_fixture("exaA").poset;
  CHECK_FALSE(is_mail(a, ElementSet{}));
  CHECK(is_mail(a, ElementSet{A(2), A(3)}));
  CHECK_FALSE(is_mail(FinitePoset::antichain(2), ElementSet{0, 1}));

  CHECK(is_mail_connected(a, ElementSet{A(4)}));
  CHECK_FALSE(is_mail_connected(a, ElementSet{A(2), A(3), A(4)}));
  CHECK_FALSE(is_mail_connected(FinitePoset::antichain(2), ElementSet{0, 1}));

  CHECK(mail_connected_components(a, ElementSet{}).empty());
  CHECK(mail_connected_components(a, a.elements()).size() == 1);
  OrderRelation two(4);
  two.set(0, 1);
  two.set(2, 3);
  two.add_reflexive();
  CHECK(mail_connected_components(FinitePoset(two), ElementSet::first_n(4)).size() == 2);

  CHECK(is_totally_mail_disconnected(a, ElementSet{A(1), A(4)}));
  CHECK(is_totally_mail_disconnected(a, ElementSet{A(6)}));
  CHECK(is_totally_mail_disconnected(a, ElementSet{}));
  CHECK_FALSE(is_totally_mail_disconnected(a, ElementSet{A(2), A(3)}));
}

TEST_CASE("order-connected components") {
  CHECK(order_connected_components(FinitePoset::chain(4)).size() == 1);
  CHECK(order_connected_components(FinitePoset::antichain(3)).size() == 3);
  FinitePoset a = named_fixture("exaA").poset;
  FinitePoset plus = a.with_maximal(ElementSet{});
  CHECK(order_connected_components(plus).size() == 2);
  CHECK(order_connected_components(FinitePoset()).empty());
}

TEST_CASE("reduced mails") {
  CHECK(reduced_mails(FinitePoset::chain(4)).empty());
  FinitePoset a = named_fixture("exaA").poset;
  std::vector<ElementSet> expected{{A(2), A(3)}, {A(2), A(6)}, {A(5), A(6)}};
  std::vector<ElementSet> got = reduced_mails(a);
  std::sort(got.begin(), got.end(), shortlex_less);
  std::sort(expected.begin(), expected.end(), shortlex_less);
  CHECK(got == expected);
  FinitePoset v = with_new_bottom(FinitePoset::antichain(2));
  CHECK(reduced_mails(v) == std::vector<ElementSet>{ElementSet{1, 2}});
}

TEST_CASE("chainmail and lattice predicates") {
  CHECK(is_chainmail(named_fixture("exaA").poset));
  CHECK(is_chainmail(named_fixture("exaN").poset));
  CHECK_FALSE(is_chainmail(two_tops()));
  CHECK(is_chainmail(FinitePoset()));

  CHECK(is_complete_lattice(named_fixture("M3").poset));
  CHECK_FALSE(is_complete_lattice(named_fixture("exaA").poset));
  CHECK_FALSE(is_complete_lattice(FinitePoset()));

  CHECK(is_distributive(FinitePoset::chain(4)));
  CHECK(is_distributive(powerset_poset(3)));
  CHECK_FALSE(is_distributive(named_fixture("M3").poset));
  CHECK_FALSE(is_distributive(named_fixture("N5").poset));
  CHECK_THROWS_AS(is_distributive(two_tops()), PreconditionError);
}

TEST_CASE("chainmail characterizations agree with brute force on all posets up to 6") {
  std::size_t checked = 0;
  for (const FinitePoset& p : corpus::posets_up_to(6)) {
    oracle::Order o(p);
    const bool fast = is_chainmail(p);
    REQUIRE(fast == is_chainmail_by_reduced_mails(p));
    REQUIRE(fast == oracle::chainmail_all_mails(o));
    REQUIRE(fast == oracle::chainmail_mail_connected(o));
    REQUIRE(fast == oracle::chainmail_connected_sets(o));
    REQUIRE(fast == oracle::chainmail_upsets_complete(o));
    REQUIRE(is_complete_lattice(p) == oracle::is_complete_lattice(o));
    REQUIRE(is_complete_lattice(p) ==
            (fast && bottom(p).has_value() && order_connected_components(p).size() == 1));
    ++checked;
  }
  CHECK(checked == 1 + 1 + 2 + 5 + 16 + 63 + 318);
}

TEST_CASE("component invariants on all posets up to 6") {
  for (const FinitePoset& p : corpus::posets_up_to(6)) {
    oracle::Order o(p);
    auto mail = mail_connected_components(p, p.elements());
    auto order = order_connected_components(p);
    REQUIRE(mail == order);
    for (const ElementSet& comp : mail) REQUIRE(oracle::mail_connected(o, oracle::to_mask(comp)));

    if (is_chainmail(p)) {
      ElementSet maxima;
      for (const ElementSet& comp : order) {
        auto g = greatest(p, comp);
        REQUIRE(g.has_value());
        maxima.insert(*g);
      }
      REQUIRE(is_totally_mail_disconnected(p, maxima));
    }

    // join of a mail is unchanged by adding one of its lower bounds
    for (oracle::Mask X = 1; X <= o.all(); ++X) {
      if (!oracle::is_mail(o, X)) continue;
      ElementSet xs = oracle::to_set(X);
      for (Element b : lower_bounds(p, xs)) REQUIRE(join(p, xs) == join(p, xs | ElementSet{b}));
    }
  }
}

TEST_CASE("subset predicates agree with brute force") {
  for (const FinitePoset& p : corpus::posets_up_to(5)) {
    oracle::Order o(p);
    for (oracle::Mask X = 0; X <= o.all(); ++X) {
      ElementSet xs = oracle::to_set(X);
      REQUIRE(is_mail(p, xs) == oracle::is_mail(o, X));
      REQUIRE(is_mail_connected(p, xs) == oracle::mail_connected(o, X));
      REQUIRE(is_connected_set(p, xs) == oracle::order_connected(o, X));
      REQUIRE(is_totally_mail_disconnected(p, xs) == oracle::is_tmd(o, X, o.all()));
      auto j = join(p, xs);
      auto oj = oracle::join(o, X);
      REQUIRE(j.has_value() == oj.has_value());
      if (j) REQUIRE(static_cast<int>(*j) == *oj);
    }
  }
}

TEST_CASE("canonical keys") {
  CHECK(canonical_key(FinitePoset::chain(3)) != canonical_key(with_new_bottom(FinitePoset::antichain(2))));
  auto three = enumerate_connected_chainmails(3, {.threads = 1, .catalog = true});
  REQUIRE(three.keys.size() == 2);
  CHECK(three.keys[0] != three.keys[1]);

  SECTION("invariant under every relabeling up to 5 elements") {
    for (const FinitePoset& p : corpus::posets_up_to(5)) {
      const CanonicalKey key = canonical_key(p);
      std::vector<Element> perm(p.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        REQUIRE(canonical_key(p.permuted(perm)) == key);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  SECTION("invariant under random relabelings up to 9 elements") {
    std::mt19937 rng(12345);
    for (std::size_t n = 6; n <= 9; ++n) {
      std::vector<FinitePoset> samples;
      for (int i = 0; i < 4; ++i) samples.push_back(random_poset(n, rng));
      samples.push_back(FinitePoset::antichain(n));
      samples.push_back(powerset_poset(3).induced(ElementSet::first_n(std::min<std::size_t>(n, 8))));
      for (const FinitePoset& p : samples) {
        const CanonicalKey key = canonical_key(p);
        std::vector<Element> perm(p.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int k = 0; k < 1000; ++k) {
          std::shuffle(perm.begin(), perm.end(), rng);
          REQUIRE(canonical_key(p.permuted(perm)) == key);
        }
      }
    }
  }

  SECTION("keys separate isomorphism classes exactly") {
    // brute-force classes up to 5, and all naturally labelled posets on 6
    for (int n = 0; n <= 5; ++n) {
      auto classes = oracle::poset_classes(n);
      std::set<CanonicalKey> keys;
      for (const auto& o : classes) keys.insert(canonical_key(oracle::to_poset(o)));
      REQUIRE(keys.size() == classes.size());
    }
    std::set<CanonicalKey> six;
    for (const auto& o : oracle::naturally_labelled_posets(6)) six.insert(canonical_key(oracle::to_poset(o)));
    CHECK(six.size() == 318);
  }

  SECTION("is_isomorphic matches the permutation oracle") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
      FinitePoset p = random_poset(5, rng), q = random_poset(5, rng);
      REQUIRE(is_isomorphic(p, q) == oracle::isomorphic(oracle::Order(p), oracle::Order(q)));
    }
  }
}

TEST_CASE("canonical form is a fixed point") {
  for (const FinitePoset& p : corpus::posets(5)) {
    FinitePoset c = canonical_form(p);
    REQUIRE(canonical_form(c) == c);
    REQUIRE(is_isomorphic(c, p));
  }
}
