#pragma once

#include <vector>

#include "chainmail/connectivity.hpp"
#include "chainmail/exterior.hpp"
#include "chainmail/lattice.hpp"

namespace chm {

/// E1..E4 evaluated for every element of a lattice at once. E3 and E4
/// quantify over TMD subsets of L+ (pairwise meets equal to 0); that family
/// is enumerated once and shared.
///
///   E1: a != 0, and a <= x v y with x ^ y = 0 forces a <= x or a <= y.
///   E2: a != 0, and a = x v y with x ^ y = 0 forces x = a or y = a.
///   E3: a = join S for S TMD in L+ forces a in S.
///   E4: a <= join S for S TMD in L+ forces a <= s for some s in S.
class EPredicates {
 public:
  explicit EPredicates(const Lattice& L, const Limits& limits = {}) {
    const FinitePoset& p = L.poset();
    const std::size_t n = L.size();
    const Element zero = L.bottom();
    ElementSet all = p.elements();
    ElementSet e1_fail = ElementSet::singleton(zero);
    ElementSet e2_fail = ElementSet::singleton(zero);
    for (Element x = 0; x < n; ++x)
      for (Element y = x; y < n; ++y) {
        if (L.meet(x, y) != zero) continue;
        Element j = L.join(x, y);
        e1_fail |= p.down(j) - p.down(x) - p.down(y);
        if (x != j && y != j) e2_fail.insert(j);
      }

    ElementSet nonzero = L.nonzero();
    std::vector<Element> members = nonzero.to_vector();
    FinitePoset positive = p.induced(nonzero);
    ElementSet e3_fail, e4_fail;
    tmd_count_ = 0;
    for_each_tmd_set(positive, positive.elements(), [&](const ElementSet& s) {
      if (++tmd_count_ > limits.max_tmd_sets)
        throw ResourceLimit("too many totally mail-disconnected subsets of the non-zero elements");
      ElementSet S;
      for (Element i : s) S.insert(members[i]);
      Element j = L.join(S);
      if (!S.contains(j)) e3_fail.insert(j);
      e4_fail |= p.down(j) - down_closure(p, S);
      return true;
    });
    // 0 fails E3 and E4 through the empty family.
    e1_ = all - e1_fail;
    e2_ = all - e2_fail;
    e3_ = all - e3_fail;
    e4_ = all - e4_fail;
  }

  const ElementSet& e1() const noexcept { return e1_; }
  const ElementSet& e2() const noexcept { return e2_; }
  const ElementSet& e3() const noexcept { return e3_; }
  const ElementSet& e4() const noexcept { return e4_; }
  std::size_t tmd_family_size() const noexcept { return tmd_count_; }

 private:
  ElementSet e1_, e2_, e3_, e4_;
  std::size_t tmd_count_ = 0;
};

inline bool e1(const Lattice& L, Element a) { return EPredicates(L).e1().contains(a); }
inline bool e2(const Lattice& L, Element a) { return EPredicates(L).e2().contains(a); }
inline bool e3(const Lattice& L, Element a) { return EPredicates(L).e3().contains(a); }
inline bool e4(const Lattice& L, Element a) { return EPredicates(L).e4().contains(a); }

inline ElementSet absolutely_connected_elements(const Lattice& L, const Limits& limits = {}) {
  return EPredicates(L, limits).e4();
}

/// On a distributive lattice, E1..E4 pick out the same elements.
inline bool frame_equivalence_check(const Lattice& L, const Limits& limits = {}) {
  if (!is_distributive(L)) throw PreconditionError("frame_equivalence_check: lattice is not distributive");
  EPredicates e(L, limits);
  return e.e1() == e.e2() && e.e2() == e.e3() && e.e3() == e.e4();
}

/// (D(gamma), singletons) for a chainmail gamma.
inline ConnectivityPair exterior_as_absolute(const FinitePoset& gamma, const Limits& limits = {}) {
  require_chainmail(gamma, "exterior_as_absolute");
  TmdFamily d = exterior(gamma, limits);
  ElementSet singletons;
  for (Element x = 0; x < gamma.size(); ++x) singletons.insert(*d.index_of(ElementSet::singleton(x)));
  return ConnectivityPair(d.order, singletons);
}

}  // namespace chm
