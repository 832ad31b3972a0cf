#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "chainmail/poset.hpp"

namespace chm {

/// A finite complete lattice with precomputed binary join and meet tables.
class Lattice {
 public:
  explicit Lattice(FinitePoset p) : poset_(std::move(p)) {
    if (!is_complete_lattice(poset_)) throw PreconditionError("poset is not a complete lattice");
    const std::size_t n = poset_.size();
    bottom_ = *chm::bottom(poset_);
    top_ = *chm::top(poset_);
    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    for (Element a = 0; a < n; ++a)
      for (Element b = a; b < n; ++b) {
        auto j = *chm::join(poset_, ElementSet{a, b});
        auto m = *chm::meet(poset_, ElementSet{a, b});
        join_[a * n + b] = join_[b * n + a] = static_cast<std::uint8_t>(j);
        meet_[a * n + b] = meet_[b * n + a] = static_cast<std::uint8_t>(m);
      }
  }

  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  bool leq(Element a, Element b) const { return poset_.leq(a, b); }

  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }

  Element join(const ElementSet& X) const {
    Element r = bottom_;
    for (Element x : X) r = join(r, x);
    return r;
  }
  Element meet(const ElementSet& X) const {
    Element r = top_;
    for (Element x : X) r = meet(r, x);
    return r;
  }

  /// L+ : every element except the bottom.
  ElementSet nonzero() const {
    ElementSet s = poset_.elements();
    s.erase(bottom_);
    return s;
  }

  ElementSet atoms() const {
    ElementSet r;
    for (Element x : nonzero())
      if (poset_.down(x).size() == 2) r.insert(x);
    return r;
  }

 private:
  FinitePoset poset_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::uint8_t> join_;
  std::vector<std::uint8_t> meet_;
};

/// Lexicographically least (x, y, z) with x ^ (y v z) != (x ^ y) v (x ^ z).
inline std::optional<std::array<Element, 3>> distributivity_witness(const Lattice& L) {
  const std::size_t n = L.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return std::array<Element, 3>{x, y, z};
  return std::nullopt;
}

inline bool is_distributive(const Lattice& L) { return !distributivity_witness(L).has_value(); }

/// Throws PreconditionError when p is not a complete lattice.
inline bool is_distributive(const FinitePoset& p) { return is_distributive(Lattice(p)); }

/// Every element is a join of atoms.
inline bool is_atomistic(const Lattice& L) {
  ElementSet atoms = L.atoms();
  for (Element x = 0; x < L.size(); ++x)
    if (L.join(atoms & L.poset().down(x)) != x) return false;
  return true;
}

/// Complemented and distributive.
inline bool is_boolean(const Lattice& L) {
  if (!is_distributive(L)) return false;
  for (Element x = 0; x < L.size(); ++x) {
    bool has_complement = false;
    for (Element y = 0; y < L.size() && !has_complement; ++y)
      has_complement = L.meet(x, y) == L.bottom() && L.join(x, y) == L.top();
    if (!has_complement) return false;
  }
  return true;
}

}  // namespace chm
