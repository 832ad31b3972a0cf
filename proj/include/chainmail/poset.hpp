#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chainmail/element_set.hpp"
#include "chainmail/errors.hpp"

namespace chm {

/// A raw, unvalidated binary relation on {0..n-1}; row(a) holds every b
/// with a <= b.
class OrderRelation {
 public:
  explicit OrderRelation(std::size_t n = 0) : rows_(n) {
    if (n > kMaxElements)
      throw InvalidInput("relation on " + std::to_string(n) + " elements exceeds the hard cap of " +
                         std::to_string(kMaxElements));
  }

  std::size_t size() const noexcept { return rows_.size(); }

  void set(Element a, Element b) {
    check(a);
    check(b);
    rows_[a].insert(b);
  }
  bool test(Element a, Element b) const { return rows_.at(a).contains(b); }
  const ElementSet& row(Element a) const { return rows_.at(a); }

  void add_reflexive() {
    for (Element a = 0; a < size(); ++a) rows_[a].insert(a);
  }

  /// Reflexive-transitive closure (Warshall over bitset rows).
  void close_reflexive_transitive() {
    add_reflexive();
    for (Element k = 0; k < size(); ++k)
      for (Element a = 0; a < size(); ++a)
        if (rows_[a].contains(k)) rows_[a] |= rows_[k];
  }

 private:
  void check(Element x) const {
    if (x >= size())
      throw InvalidInput("element " + std::to_string(x) + " out of range for relation of size " +
                         std::to_string(size()));
  }

  std::vector<ElementSet> rows_;
};

enum class Axiom { reflexivity, antisymmetry, transitivity };

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::reflexivity: return "reflexivity";
    case Axiom::antisymmetry: return "antisymmetry";
    case Axiom::transitivity: return "transitivity";
  }
  return "?";
}

/// A failed poset axiom with its lexicographically least witness:
/// (a) for reflexivity, (a,b) for antisymmetry, (a,b,c) for transitivity.
struct Violation {
  Axiom axiom;
  std::vector<Element> witness;

  std::string describe() const {
    auto s = [](Element x) { return std::to_string(x); };
    switch (axiom) {
      case Axiom::reflexivity:
        return "reflexivity violated: missing " + s(witness[0]) + " <= " + s(witness[0]);
      case Axiom::antisymmetry:
        return "antisymmetry violated: " + s(witness[0]) + " <= " + s(witness[1]) + " and " +
               s(witness[1]) + " <= " + s(witness[0]) + " (witness " + s(witness[0]) + "," +
               s(witness[1]) + ")";
      case Axiom::transitivity:
        return "transitivity violated: " + s(witness[0]) + " <= " + s(witness[1]) + " and " +
               s(witness[1]) + " <= " + s(witness[2]) + " but not " + s(witness[0]) + " <= " +
               s(witness[2]) + " (witness " + s(witness[0]) + "," + s(witness[1]) + "," +
               s(witness[2]) + ")";
    }
    return "invalid";
  }

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks the three partial-order axioms in the order reflexivity,
/// antisymmetry, transitivity and reports the first failure.
inline std::optional<Violation> validate(const OrderRelation& r) {
  const std::size_t n = r.size();
  for (Element a = 0; a < n; ++a)
    if (!r.test(a, a)) return Violation{Axiom::reflexivity, {a}};
  for (Element a = 0; a < n; ++a)
    for (Element b : r.row(a).above(a))
      if (r.test(b, a)) return Violation{Axiom::antisymmetry, {a, b}};
  for (Element a = 0; a < n; ++a)
    for (Element b : r.row(a)) {
      ElementSet missing = r.row(b) - r.row(a);
      if (!missing.empty()) return Violation{Axiom::transitivity, {a, b, missing.front()}};
    }
  return std::nullopt;
}

/// A validated finite partial order on {0..n-1}.
///
/// Stores, per element, its down-set, its up-set and its mail neighbours
/// (the elements sharing a common lower bound with it), each as a bitset.
class FinitePoset {
 public:
  FinitePoset() = default;

  explicit FinitePoset(const OrderRelation& r) : n_(r.size()) {
    if (auto v = validate(r)) throw InvalidInput(v->describe());
    up_.resize(n_);
    for (Element a = 0; a < n_; ++a) up_[a] = r.row(a);
    derive_from_up();
  }

  /// Builds the reflexive-transitive closure of a cover (Hasse) list.
  static FinitePoset from_covers(std::size_t n, const std::vector<std::pair<Element, Element>>& covers) {
    OrderRelation r(n);
    for (auto [a, b] : covers) r.set(a, b);
    r.close_reflexive_transitive();
    return FinitePoset(r);
  }

  static FinitePoset chain(std::size_t n) {
    OrderRelation r(n);
    for (Element a = 0; a < n; ++a)
      for (Element b = a; b < n; ++b) r.set(a, b);
    return FinitePoset(r);
  }

  static FinitePoset antichain(std::size_t n) {
    OrderRelation r(n);
    r.add_reflexive();
    return FinitePoset(r);
  }

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  ElementSet elements() const { return ElementSet::first_n(n_); }

  bool leq(Element a, Element b) const { return up_.at(a).contains(b); }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  const ElementSet& down(Element x) const { return down_.at(x); }
  const ElementSet& up(Element x) const { return up_.at(x); }
  /// Elements sharing at least one lower bound with x (x included).
  const ElementSet& mail_neighbors(Element x) const { return mail_.at(x); }

  OrderRelation relation() const {
    OrderRelation r(n_);
    for (Element a = 0; a < n_; ++a)
      for (Element b : up_[a]) r.set(a, b);
    return r;
  }

  /// The induced subposet on s; members are renumbered in ascending order.
  FinitePoset induced(const ElementSet& s) const {
    std::vector<Element> members = s.to_vector();
    std::vector<ElementSet> up(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        if (leq(members[i], members[j])) up[i].insert(j);
    return FinitePoset(std::move(up));
  }

  /// The isomorphic copy in which element x is renamed image[x].
  FinitePoset permuted(const std::vector<Element>& image) const {
    if (image.size() != n_) throw std::invalid_argument("permutation size mismatch");
    std::vector<ElementSet> up(n_);
    for (Element a = 0; a < n_; ++a)
      for (Element b : up_[a]) up[image[a]].insert(image[b]);
    return FinitePoset(std::move(up));
  }

  /// Appends a new maximal element n whose strict down-set is `below`,
  /// which must be down-closed.
  FinitePoset with_maximal(const ElementSet& below) const {
    if (n_ + 1 > kMaxElements) throw ResourceLimit("poset exceeds the hard element cap");
    for (Element x : below)
      if (x >= n_ || !down_[x].is_subset_of(below))
        throw PreconditionError("with_maximal: strict down-set is not down-closed");
    std::vector<ElementSet> up = up_;
    for (Element x : below) up[x].insert(n_);
    up.push_back(ElementSet::singleton(n_));
    return FinitePoset(std::move(up));
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.n_ == b.n_ && a.up_ == b.up_;
  }

 private:
  // Trusted construction from up-set rows known to form a partial order.
  explicit FinitePoset(std::vector<ElementSet> up) : n_(up.size()), up_(std::move(up)) {
    derive_from_up();
  }

  void derive_from_up() {
    down_.assign(n_, ElementSet{});
    for (Element a = 0; a < n_; ++a)
      for (Element b : up_[a]) down_[b].insert(a);
    mail_.assign(n_, ElementSet{});
    for (Element x = 0; x < n_; ++x)
      for (Element l : down_[x]) mail_[x] |= up_[l];
  }

  std::size_t n_ = 0;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> mail_;
};

// ---------------------------------------------------------------------------
// Bounds, joins and meets.

inline ElementSet down_set(const FinitePoset& p, Element x) {
  if (x >= p.size()) throw std::out_of_range("element " + std::to_string(x) + " out of range");
  return p.down(x);
}

inline ElementSet up_set(const FinitePoset& p, Element x) {
  if (x >= p.size()) throw std::out_of_range("element " + std::to_string(x) + " out of range");
  return p.up(x);
}

/// Common lower bounds of X (all elements when X is empty).
inline ElementSet lower_bounds(const FinitePoset& p, const ElementSet& X) {
  ElementSet r = p.elements();
  for (Element x : X) r &= p.down(x);
  return r;
}

inline ElementSet upper_bounds(const FinitePoset& p, const ElementSet& X) {
  ElementSet r = p.elements();
  for (Element x : X) r &= p.up(x);
  return r;
}

/// The member of S lying below every member of S, if any.
inline std::optional<Element> least(const FinitePoset& p, const ElementSet& S) {
  for (Element s : S)
    if (S.is_subset_of(p.up(s))) return s;
  return std::nullopt;
}

inline std::optional<Element> greatest(const FinitePoset& p, const ElementSet& S) {
  for (Element s : S)
    if (S.is_subset_of(p.down(s))) return s;
  return std::nullopt;
}

inline ElementSet minimal_elements(const FinitePoset& p, const ElementSet& S) {
  ElementSet r;
  for (Element s : S)
    if ((p.down(s) & S) == ElementSet::singleton(s)) r.insert(s);
  return r;
}

inline ElementSet maximal_elements(const FinitePoset& p, const ElementSet& S) {
  ElementSet r;
  for (Element s : S)
    if ((p.up(s) & S) == ElementSet::singleton(s)) r.insert(s);
  return r;
}

/// Least upper bound of X. join(empty) is the bottom element when present.
inline std::optional<Element> join(const FinitePoset& p, const ElementSet& X) {
  return least(p, upper_bounds(p, X));
}

inline std::optional<Element> meet(const FinitePoset& p, const ElementSet& X) {
  return greatest(p, lower_bounds(p, X));
}

inline std::optional<Element> bottom(const FinitePoset& p) { return least(p, p.elements()); }
inline std::optional<Element> top(const FinitePoset& p) { return greatest(p, p.elements()); }

// ---------------------------------------------------------------------------
// Mails and connectedness.

/// A mail is a non-empty set with a common lower bound.
inline bool is_mail(const FinitePoset& p, const ElementSet& M) {
  return !M.empty() && !lower_bounds(p, M).empty();
}

namespace detail {

/// Connected components of S under a symmetric neighbourhood function,
/// ordered by least member.
template <typename Neighbors>
std::vector<ElementSet> components_by(const ElementSet& S, Neighbors&& neighbors) {
  std::vector<ElementSet> out;
  ElementSet rest = S;
  while (!rest.empty()) {
    ElementSet comp = ElementSet::singleton(rest.front());
    ElementSet frontier = comp;
    while (!frontier.empty()) {
      ElementSet next;
      for (Element x : frontier) next |= neighbors(x);
      next &= rest;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    rest -= comp;
    out.push_back(comp);
  }
  return out;
}

}  // namespace detail

/// Components of the graph on S whose edges are the two-element mails.
inline std::vector<ElementSet> mail_connected_components(const FinitePoset& p, const ElementSet& S) {
  return detail::components_by(S, [&](Element x) { return p.mail_neighbors(x); });
}

inline bool is_mail_connected(const FinitePoset& p, const ElementSet& C) {
  return !C.empty() && mail_connected_components(p, C).size() == 1;
}

/// No two distinct members share a lower bound. The empty set qualifies.
inline bool is_totally_mail_disconnected(const FinitePoset& p, const ElementSet& S) {
  for (Element s : S)
    if ((p.mail_neighbors(s) & S) != ElementSet::singleton(s)) return false;
  return true;
}

/// Components of the comparability graph of the whole poset.
inline std::vector<ElementSet> order_connected_components(const FinitePoset& p) {
  return detail::components_by(p.elements(), [&](Element x) { return p.down(x) | p.up(x); });
}

/// Non-empty and connected in the comparability graph restricted to S.
inline bool is_connected_set(const FinitePoset& p, const ElementSet& S) {
  return !S.empty() &&
         detail::components_by(S, [&](Element x) { return p.down(x) | p.up(x); }).size() == 1;
}

inline bool is_antichain(const FinitePoset& p, const ElementSet& S) {
  for (Element s : S)
    if (((p.down(s) | p.up(s)) & S) != ElementSet::singleton(s)) return false;
  return true;
}

inline bool is_chain(const FinitePoset& p, const ElementSet& S) {
  for (Element s : S)
    if (!S.is_subset_of(p.down(s) | p.up(s))) return false;
  return true;
}

inline bool is_down_closed(const FinitePoset& p, const ElementSet& S) {
  for (Element s : S)
    if (!p.down(s).is_subset_of(S)) return false;
  return true;
}

inline ElementSet down_closure(const FinitePoset& p, const ElementSet& S) {
  ElementSet r;
  for (Element s : S) r |= p.down(s);
  return r;
}

/// Calls f(antichain) for every antichain contained in `within`, the empty
/// one first, in depth-first ascending order. Stops early when f returns
/// false; returns false in that case.
template <typename F>
bool for_each_antichain(const FinitePoset& p, const ElementSet& within, F&& f) {
  struct Walker {
    const FinitePoset& p;
    F& f;
    bool walk(const ElementSet& chosen, const ElementSet& candidates) {
      for (Element c : candidates) {
        ElementSet next = chosen;
        next.insert(c);
        if (!f(static_cast<const ElementSet&>(next))) return false;
        ElementSet rest = candidates.above(c) - p.down(c) - p.up(c);
        if (!walk(next, rest)) return false;
      }
      return true;
    }
  };
  if (!f(ElementSet{})) return false;
  Walker w{p, f};
  return w.walk(ElementSet{}, within);
}

/// Calls f for every reduced mail: an antichain of two or more elements
/// with a common lower bound. Stops early when f returns false.
template <typename F>
bool for_each_reduced_mail(const FinitePoset& p, F&& f) {
  struct Walker {
    const FinitePoset& p;
    F& f;
    bool walk(const ElementSet& chosen, const ElementSet& lower, const ElementSet& candidates) {
      for (Element c : candidates) {
        ElementSet lb = lower & p.down(c);
        if (lb.empty()) continue;
        ElementSet next = chosen;
        next.insert(c);
        if (next.size() >= 2 && !f(static_cast<const ElementSet&>(next))) return false;
        ElementSet rest = (candidates.above(c) - p.down(c) - p.up(c)) & p.mail_neighbors(c);
        if (!walk(next, lb, rest)) return false;
      }
      return true;
    }
  };
  Walker w{p, f};
  return w.walk(ElementSet{}, p.elements(), p.elements());
}

inline std::vector<ElementSet> reduced_mails(const FinitePoset& p) {
  std::vector<ElementSet> out;
  for_each_reduced_mail(p, [&](const ElementSet& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

/// Chainmail test over every reduced mail.
inline bool is_chainmail_by_reduced_mails(const FinitePoset& p) {
  return for_each_reduced_mail(p, [&](const ElementSet& m) { return join(p, m).has_value(); });
}

/// Every mail has a join. In a finite poset it suffices that every
/// two-element reduced mail has one: the members of a mail all lie above a
/// common element l, and joins inside l's up-set compose pairwise.
inline bool is_chainmail(const FinitePoset& p) {
  for (Element a = 0; a < p.size(); ++a)
    for (Element b : (p.mail_neighbors(a).above(a) - p.up(a) - p.down(a)))
      if (!join(p, ElementSet{a, b})) return false;
  return true;
}

/// Non-empty with a bottom element and all binary joins; for finite posets
/// this is exactly completeness.
inline bool is_complete_lattice(const FinitePoset& p) {
  if (p.empty() || !bottom(p)) return false;
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = a + 1; b < p.size(); ++b)
      if (!join(p, ElementSet{a, b})) return false;
  return true;
}

/// Cover pairs (a, b): a < b with nothing strictly between, sorted.
inline std::vector<std::pair<Element, Element>> cover_pairs(const FinitePoset& p) {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < p.size(); ++a) {
    ElementSet above = p.up(a);
    above.erase(a);
    for (Element b : minimal_elements(p, above)) out.emplace_back(a, b);
  }
  return out;
}

/// Length of the longest chain ending at each element (minimal elements
/// have height 0).
inline std::vector<std::size_t> heights(const FinitePoset& p) {
  std::vector<std::size_t> h(p.size(), 0);
  std::vector<Element> order(p.size());
  for (Element x = 0; x < p.size(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(),
            [&](Element a, Element b) { return p.down(a).size() < p.down(b).size(); });
  for (Element x : order)
    for (Element y : p.down(x))
      if (y != x) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

}  // namespace chm
