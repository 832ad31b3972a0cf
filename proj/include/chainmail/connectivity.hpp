#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainmail/exterior.hpp"
#include "chainmail/lattice.hpp"
#include "chainmail/limits.hpp"
#include "chainmail/poset.hpp"

namespace chm {

/// A complete lattice L with a distinguished subset C of "connected"
/// elements. Nothing is assumed about C; the predicates below classify it.
class ConnectivityPair {
 public:
  ConnectivityPair(FinitePoset L, ElementSet C) : ConnectivityPair(Lattice(std::move(L)), C) {}

  ConnectivityPair(Lattice L, ElementSet C) : lattice_(std::move(L)), connected_(C) {
    if (!connected_.is_subset_of(lattice_.poset().elements()))
      throw InvalidInput("connectivity set " + to_string(C) + " has members outside the lattice");
  }

  const Lattice& lattice() const noexcept { return lattice_; }
  const FinitePoset& poset() const noexcept { return lattice_.poset(); }
  const ElementSet& connected() const noexcept { return connected_; }
  std::size_t size() const noexcept { return lattice_.size(); }
  Element bottom() const noexcept { return lattice_.bottom(); }

 private:
  Lattice lattice_;
  ElementSet connected_;
};

/// Positions of the members of s among the ascending members of within.
inline ElementSet rank_within(const ElementSet& within, const ElementSet& s) {
  ElementSet out;
  Element i = 0;
  for (Element w : within) {
    if (s.contains(w)) out.insert(i);
    ++i;
  }
  return out;
}

/// C(x): the maximal connected elements below x.
inline ElementSet components(const ConnectivityPair& pc, Element x) {
  return maximal_elements(pc.poset(), pc.connected() & pc.poset().down(x));
}

inline Element kernel(const ConnectivityPair& pc, Element x) {
  return pc.lattice().join(components(pc, x));
}

/// No two distinct members share a lower bound inside C.
inline bool is_tmd_in_connected(const ConnectivityPair& pc, const ElementSet& S) {
  const FinitePoset& p = pc.poset();
  for (Element a : S)
    for (Element b : S.above(a))
      if (!(p.down(a) & p.down(b) & pc.connected()).empty()) return false;
  return true;
}

/// D(C) with members written as elements of L, shortlex sorted.
inline std::vector<ElementSet> connected_exterior(const ConnectivityPair& pc, const Limits& limits = {}) {
  const std::vector<Element> members = pc.connected().to_vector();
  FinitePoset induced = pc.poset().induced(pc.connected());
  std::vector<ElementSet> out;
  for (const ElementSet& s : tmd_sets(induced, limits)) {
    ElementSet lifted;
    for (Element i : s) lifted.insert(members[i]);
    out.push_back(lifted);
  }
  return out;
}

/// Least x for which C(x) fails to be a TMD set of C. The join map
/// D(C) -> L has a right adjoint exactly when there is none: the adjoint
/// would have to send x to the greatest S with join below x, and any such
/// S must be C(x) itself.
inline std::optional<Element> adjunction_witness(const ConnectivityPair& pc) {
  for (Element x = 0; x < pc.size(); ++x)
    if (!is_tmd_in_connected(pc, components(pc, x))) return x;
  return std::nullopt;
}

inline bool galois_adjunction_holds(const ConnectivityPair& pc) {
  return !adjunction_witness(pc).has_value();
}

/// The right adjoint x -> C(x); throws when the adjunction does not exist.
inline ElementSet right_adjoint(const ConnectivityPair& pc, Element x) {
  if (!galois_adjunction_holds(pc)) throw PreconditionError("join map has no right adjoint");
  return components(pc, x);
}

// ---------------------------------------------------------------------------
// Connection conditions. Each *_witness returns the lexicographically least
// counterexample.

inline bool cl0(const ConnectivityPair& pc) { return pc.connected().contains(pc.bottom()); }

/// {a, b} in C with a ^ b != 0 and a v b outside C.
inline std::optional<ElementSet> cl1_witness(const ConnectivityPair& pc) {
  const Lattice& L = pc.lattice();
  const ElementSet& C = pc.connected();
  for (Element a : C)
    for (Element b : C.above(a))
      if (L.meet(a, b) != L.bottom() && !C.contains(L.join(a, b))) return ElementSet{a, b};
  return std::nullopt;
}
inline bool cl1(const ConnectivityPair& pc) { return !cl1_witness(pc).has_value(); }

/// (x, y) with 0 != x <= y where [x, y] meets C but has no largest member
/// of C.
inline std::optional<std::pair<Element, Element>> cl1_prime_witness(const ConnectivityPair& pc) {
  const FinitePoset& p = pc.poset();
  for (Element x = 0; x < pc.size(); ++x) {
    if (x == pc.bottom()) continue;
    for (Element y : p.up(x)) {
      ElementSet interval = p.up(x) & p.down(y) & pc.connected();
      if (!interval.empty() && !greatest(p, interval)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}
inline bool cl1_prime(const ConnectivityPair& pc) { return !cl1_prime_witness(pc).has_value(); }

/// Non-zero a with nothing from C below it.
inline std::optional<Element> cl1_half_witness(const ConnectivityPair& pc) {
  for (Element a = 0; a < pc.size(); ++a)
    if (a != pc.bottom() && (pc.connected() & pc.poset().down(a)).empty()) return a;
  return std::nullopt;
}
inline bool cl1_half(const ConnectivityPair& pc) { return !cl1_half_witness(pc).has_value(); }

/// a that is not the join of the members of C below it.
inline std::optional<Element> cl2_witness(const ConnectivityPair& pc) {
  for (Element a = 0; a < pc.size(); ++a)
    if (pc.lattice().join(pc.connected() & pc.poset().down(a)) != a) return a;
  return std::nullopt;
}
inline bool cl2(const ConnectivityPair& pc) { return !cl2_witness(pc).has_value(); }

/// S in D(C) with C(join S) != S.
inline std::optional<ElementSet> cl3_witness(const ConnectivityPair& pc, const Limits& limits = {}) {
  for (const ElementSet& S : connected_exterior(pc, limits))
    if (components(pc, pc.lattice().join(S)) != S) return S;
  return std::nullopt;
}
inline bool cl3(const ConnectivityPair& pc, const Limits& limits = {}) {
  return !cl3_witness(pc, limits).has_value();
}

// ---------------------------------------------------------------------------
// Classes.

/// C is a chainmail in its own order.
inline bool is_preconnectivity(const ConnectivityPair& pc) {
  return is_chainmail(pc.poset().induced(pc.connected()));
}

inline bool is_connectivity(const ConnectivityPair& pc) {
  return is_subchainmail_of(pc.poset(), pc.connected());
}

inline void require_adjunction(const ConnectivityPair& pc, const char* what) {
  if (!galois_adjunction_holds(pc))
    throw PreconditionError(std::string(what) + ": the pair has no connectivity adjunction");
}

inline bool is_separated(const ConnectivityPair& pc, const Limits& limits = {}) {
  require_adjunction(pc, "is_separated");
  return cl3(pc, limits);
}

/// The join map D(C) -> L is an order isomorphism: a bijection whose
/// inverse is monotone.
inline bool join_map_is_isomorphism(const ConnectivityPair& pc, const Limits& limits = {}) {
  const std::vector<ElementSet> family = connected_exterior(pc, limits);
  if (family.size() != pc.size()) return false;
  std::vector<Element> image;
  ElementSet hit;
  for (const ElementSet& S : family) {
    image.push_back(pc.lattice().join(S));
    hit.insert(image.back());
  }
  if (hit.size() != pc.size()) return false;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      if (pc.lattice().leq(image[i], image[j]) && !dominated(pc.poset(), family[i], family[j]))
        return false;
  return true;
}

inline bool is_absolute(const ConnectivityPair& pc, const Limits& limits = {}) {
  require_adjunction(pc, "is_absolute");
  return join_map_is_isomorphism(pc, limits);
}

/// All joins of subsets of C, as elements of L.
inline ElementSet sigma_members(const ConnectivityPair& pc) {
  const Lattice& L = pc.lattice();
  ElementSet sigma = ElementSet::singleton(L.bottom());
  ElementSet frontier = sigma;
  while (!frontier.empty()) {
    ElementSet next;
    for (Element a : frontier)
      for (Element c : pc.connected()) next.insert(L.join(a, c));
    next -= sigma;
    sigma |= next;
    frontier = next;
  }
  return sigma;
}

/// (SigmaC, C): the join-closure of C as a lattice in its own right, with
/// elements renumbered in ascending order of their index in L.
inline ConnectivityPair sigma_closure(const ConnectivityPair& pc) {
  ElementSet sigma = sigma_members(pc);
  return ConnectivityPair(pc.poset().induced(sigma), rank_within(sigma, pc.connected()));
}

}  // namespace chm
