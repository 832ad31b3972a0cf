#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chainmail/connectivity.hpp"
#include "chainmail/limits.hpp"
#include "chainmail/poset.hpp"

namespace chm {

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<Element, Element>> edges;

  void validate() const {
    for (auto [u, v] : edges) {
      if (u >= vertices || v >= vertices)
        throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    }
  }

  std::vector<ElementSet> adjacency() const {
    validate();
    std::vector<ElementSet> adj(vertices);
    for (auto [u, v] : edges) {
      adj[u].insert(v);
      adj[v].insert(u);
    }
    return adj;
  }
};

struct Hypergraph {
  std::size_t vertices = 0;
  std::vector<ElementSet> hyperedges;

  void validate() const {
    for (const ElementSet& e : hyperedges)
      if (!e.is_subset_of(ElementSet::first_n(vertices)))
        throw InvalidInput("hyperedge " + to_string(e) + " out of range");
  }
};

/// Subsets of {0..v-1} under inclusion; element i is the subset whose bit
/// mask is i.
inline FinitePoset powerset_poset(std::size_t v) {
  if (v > 7) throw ResourceLimit("powerset of more than 7 points exceeds the hard element cap");
  const std::size_t n = std::size_t{1} << v;
  OrderRelation r(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if ((a & b) == a) r.set(a, b);
  return FinitePoset(r);
}

inline ElementSet mask_members(Element mask) {
  ElementSet s;
  for (Element i = 0; mask >> i; ++i)
    if (mask >> i & 1) s.insert(i);
  return s;
}

inline Element members_mask(const ElementSet& s) {
  Element m = 0;
  for (Element i : s) m |= Element{1} << i;
  return m;
}

inline void require_vertices(std::size_t v, const Limits& limits) {
  if (v > limits.max_powerset_vertices)
    throw ResourceLimit("powerset construction on " + std::to_string(v) +
                        " vertices exceeds the configured cap of " +
                        std::to_string(limits.max_powerset_vertices));
}

/// Non-empty and connected through edges that stay inside s.
inline bool is_graph_connected(const std::vector<ElementSet>& adj, const ElementSet& s) {
  if (s.empty()) return false;
  return detail::components_by(s, [&](Element x) { return adj[x]; }).size() == 1;
}

template <typename Pred>
ConnectivityPair powerset_pair(std::size_t v, const Limits& limits, Pred&& connected) {
  require_vertices(v, limits);
  FinitePoset L = powerset_poset(v);
  ElementSet C;
  for (Element mask = 0; mask < L.size(); ++mask)
    if (connected(mask_members(mask))) C.insert(mask);
  return ConnectivityPair(std::move(L), C);
}

inline ConnectivityPair graph_connectivity_pair(const Graph& g, const Limits& limits = {}) {
  auto adj = g.adjacency();
  return powerset_pair(g.vertices, limits, [&](const ElementSet& s) { return is_graph_connected(adj, s); });
}

/// Non-empty s in which any two points (a point and itself included) are
/// linked by a sequence of hyperedges inside s, consecutive ones
/// overlapping.
inline bool is_hypergraph_connected(const Hypergraph& h, const ElementSet& s) {
  if (s.empty()) return false;
  std::vector<ElementSet> inside;
  for (const ElementSet& e : h.hyperedges)
    if (!e.empty() && e.is_subset_of(s)) inside.push_back(e);
  if (inside.empty()) return false;
  ElementSet reach = inside.front();
  std::vector<bool> used(inside.size(), false);
  used[0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < inside.size(); ++i)
      if (!used[i] && inside[i].intersects(reach)) {
        used[i] = true;
        reach |= inside[i];
        grew = true;
      }
  }
  return reach == s;
}

inline ConnectivityPair hypergraph_connectivity_pair(const Hypergraph& h, const Limits& limits = {}) {
  h.validate();
  return powerset_pair(h.vertices, limits, [&](const ElementSet& s) { return is_hypergraph_connected(h, s); });
}

/// s stays connected, hence non-empty, after deleting any k-1 or fewer of
/// its vertices. Read literally: an edge is 2-connected, a singleton is not.
inline bool is_k_connected(const std::vector<ElementSet>& adj, const ElementSet& s, std::size_t k) {
  bool ok = true;
  auto visit = [&](auto&& self, const ElementSet& removed, const ElementSet& candidates) -> void {
    if (!ok) return;
    if (!is_graph_connected(adj, s - removed)) {
      ok = false;
      return;
    }
    if (removed.size() + 1 >= k) return;
    for (Element c : candidates) {
      ElementSet next = removed;
      next.insert(c);
      self(self, next, candidates.above(c));
    }
  };
  visit(visit, ElementSet{}, s);
  return ok;
}

inline ConnectivityPair k_connectivity_pair(const Graph& g, std::size_t k, const Limits& limits = {}) {
  if (k == 0) throw InvalidInput("k must be positive");
  auto adj = g.adjacency();
  return powerset_pair(g.vertices, limits, [&](const ElementSet& s) { return is_k_connected(adj, s, k); });
}

/// (powerset, opens). The opens must contain the empty set and the whole
/// space and be closed under binary unions and intersections.
inline ConnectivityPair topology_pair(std::size_t n, const std::vector<ElementSet>& opens,
                                      const Limits& limits = {}) {
  require_vertices(n, limits);
  ElementSet tau;
  for (const ElementSet& o : opens) {
    if (!o.is_subset_of(ElementSet::first_n(n))) throw InvalidInput("open set " + to_string(o) + " out of range");
    tau.insert(members_mask(o));
  }
  const Element whole = (Element{1} << n) - 1;
  if (!tau.contains(0)) throw InvalidInput("not a topology: the empty set is not open");
  if (!tau.contains(whole)) throw InvalidInput("not a topology: the whole space is not open");
  for (Element a : tau)
    for (Element b : tau)
      if (!tau.contains(a | b) || !tau.contains(a & b))
        throw InvalidInput("not a topology: " + to_string(mask_members(a)) + " and " +
                           to_string(mask_members(b)) + " break closure");
  return ConnectivityPair(powerset_poset(n), tau);
}

/// The four characterizations of a forest poset, each evaluated on its own:
///  (i)   every element has at most one upper cover,
///  (ii)  every mail is a chain,
///  (iii) every up-set is a chain,
///  (iv)  the cover graph is a forest with one maximal element per
///        component.
inline std::array<bool, 4> forest_conditions(const FinitePoset& p) {
  std::array<bool, 4> r{true, true, true, true};
  auto covers = cover_pairs(p);
  std::vector<std::size_t> upper(p.size(), 0);
  for (auto [a, b] : covers) ++upper[a];
  for (Element x = 0; x < p.size(); ++x)
    if (upper[x] > 1) r[0] = false;

  for (Element a = 0; a < p.size(); ++a)
    for (Element b : p.mail_neighbors(a).above(a))
      if (!p.comparable(a, b)) r[1] = false;

  for (Element x = 0; x < p.size(); ++x)
    if (!is_chain(p, p.up(x))) r[2] = false;

  auto comps = order_connected_components(p);
  bool acyclic = covers.size() + comps.size() == p.size();
  bool rooted = true;
  for (const ElementSet& c : comps)
    if (maximal_elements(p, c).size() != 1) rooted = false;
  r[3] = acyclic && rooted;
  return r;
}

/// The common verdict of the four forest conditions; throws if they
/// disagree.
inline bool forest_poset_check(const FinitePoset& p) {
  auto r = forest_conditions(p);
  if (!(r[0] == r[1] && r[1] == r[2] && r[2] == r[3]))
    throw std::logic_error("forest conditions disagree");
  return r[0];
}

struct DownsetLattice {
  /// Down-sets of the base poset, shortlex sorted; element i of `lattice`
  /// is downsets[i].
  std::vector<ElementSet> downsets;
  FinitePoset lattice;
  /// Indices of the principal down-sets x↓, in element order of the base.
  std::vector<Element> principal;
};

inline DownsetLattice downset_lattice(const FinitePoset& p, const Limits& limits = {}) {
  DownsetLattice d;
  for_each_antichain(p, p.elements(), [&](const ElementSet& a) {
    d.downsets.push_back(down_closure(p, a));
    if (d.downsets.size() > limits.max_elements)
      throw ResourceLimit("down-set lattice exceeds the configured element cap");
    return true;
  });
  std::sort(d.downsets.begin(), d.downsets.end(), shortlex_less);
  OrderRelation r(d.downsets.size());
  for (Element i = 0; i < d.downsets.size(); ++i)
    for (Element j = 0; j < d.downsets.size(); ++j)
      if (d.downsets[i].is_subset_of(d.downsets[j])) r.set(i, j);
  d.lattice = FinitePoset(r);
  for (Element x = 0; x < p.size(); ++x) {
    auto it = std::lower_bound(d.downsets.begin(), d.downsets.end(), p.down(x), shortlex_less);
    d.principal.push_back(static_cast<Element>(it - d.downsets.begin()));
  }
  return d;
}

/// (down-sets of p, principal down-sets).
inline ConnectivityPair principal_downset_pair(const FinitePoset& p, const Limits& limits = {}) {
  DownsetLattice d = downset_lattice(p, limits);
  ElementSet C;
  for (Element i : d.principal) C.insert(i);
  return ConnectivityPair(std::move(d.lattice), C);
}

/// L with a new top added above everything (as element n).
inline FinitePoset with_new_top(const FinitePoset& p) { return p.with_maximal(p.elements()); }

/// L with a new bottom: the new element is 0 and old element x becomes x+1.
inline FinitePoset with_new_bottom(const FinitePoset& p) {
  OrderRelation r(p.size() + 1);
  for (Element b = 0; b <= p.size(); ++b) r.set(0, b);
  for (Element a = 0; a < p.size(); ++a)
    for (Element b : p.up(a)) r.set(a + 1, b + 1);
  return FinitePoset(r);
}

/// Divisors of n ordered by divisibility, ascending.
struct DivisorLattice {
  std::vector<unsigned long> divisors;
  FinitePoset lattice;
};

inline DivisorLattice divisor_lattice(unsigned long n) {
  DivisorLattice d;
  for (unsigned long k = 1; k <= n; ++k)
    if (n % k == 0) d.divisors.push_back(k);
  if (d.divisors.size() > kMaxElements) throw ResourceLimit("too many divisors");
  OrderRelation r(d.divisors.size());
  for (Element i = 0; i < d.divisors.size(); ++i)
    for (Element j = 0; j < d.divisors.size(); ++j)
      if (d.divisors[j] % d.divisors[i] == 0) r.set(i, j);
  d.lattice = FinitePoset(r);
  return d;
}

}  // namespace chm
