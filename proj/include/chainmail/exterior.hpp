#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "chainmail/limits.hpp"
#include "chainmail/poset.hpp"

namespace chm {

/// Calls f for every totally mail-disconnected subset of `within`, the
/// empty set first. Every superset of a non-TMD set is non-TMD, so the walk
/// only extends by elements that share no lower bound with anything chosen.
template <typename F>
bool for_each_tmd_set(const FinitePoset& p, const ElementSet& within, F&& f) {
  struct Walker {
    const FinitePoset& p;
    F& f;
    bool walk(const ElementSet& chosen, const ElementSet& candidates) {
      for (Element c : candidates) {
        ElementSet next = chosen;
        next.insert(c);
        if (!f(static_cast<const ElementSet&>(next))) return false;
        if (!walk(next, candidates.above(c) - p.mail_neighbors(c))) return false;
      }
      return true;
    }
  };
  if (!f(ElementSet{})) return false;
  Walker w{p, f};
  return w.walk(ElementSet{}, within);
}

/// All TMD subsets of `within`, shortlex sorted (so the empty set comes
/// first and singletons follow in element order).
inline std::vector<ElementSet> tmd_sets(const FinitePoset& p, const ElementSet& within,
                                        const Limits& limits = {}) {
  std::vector<ElementSet> out;
  for_each_tmd_set(p, within, [&](const ElementSet& s) {
    if (out.size() >= limits.max_tmd_sets)
      throw ResourceLimit("more than " + std::to_string(limits.max_tmd_sets) +
                          " totally mail-disconnected sets");
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

inline std::vector<ElementSet> tmd_sets(const FinitePoset& p, const Limits& limits = {}) {
  return tmd_sets(p, p.elements(), limits);
}

/// Each member of a lies below some member of b.
inline bool dominated(const FinitePoset& p, const ElementSet& a, const ElementSet& b) {
  return a.is_subset_of(down_closure(p, b));
}

/// D(base): the TMD sets of a poset under domination, with that order
/// materialized as a FinitePoset whose element i is sets[i].
struct TmdFamily {
  FinitePoset base;
  std::vector<ElementSet> sets;
  FinitePoset order;

  std::optional<Element> index_of(const ElementSet& s) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), s, shortlex_less);
    if (it == sets.end() || *it != s) return std::nullopt;
    return static_cast<Element>(it - sets.begin());
  }
};

/// The domination order on an explicit list of sets.
inline FinitePoset domination_order(const FinitePoset& p, const std::vector<ElementSet>& sets) {
  OrderRelation r(sets.size());
  std::vector<ElementSet> closure;
  closure.reserve(sets.size());
  for (const ElementSet& s : sets) closure.push_back(down_closure(p, s));
  for (Element i = 0; i < sets.size(); ++i)
    for (Element j = 0; j < sets.size(); ++j)
      if (sets[i].is_subset_of(closure[j])) r.set(i, j);
  return FinitePoset(r);
}

inline TmdFamily exterior(const FinitePoset& gamma, const Limits& limits = {}) {
  TmdFamily f{gamma, tmd_sets(gamma, limits), {}};
  limits.require_elements(f.sets.size(), "exterior");
  f.order = domination_order(gamma, f.sets);
  return f;
}

inline bool exterior_is_complete(const FinitePoset& gamma, const Limits& limits = {}) {
  return is_complete_lattice(exterior(gamma, limits).order);
}

/// Lexicographically least pair {a, b} of C with a common lower bound in C
/// whose join in p is missing or falls outside C.
inline std::optional<ElementSet> subchainmail_witness(const FinitePoset& p, const ElementSet& C) {
  for (Element a : C)
    for (Element b : C.above(a)) {
      if ((p.down(a) & p.down(b) & C).empty()) continue;
      auto j = join(p, ElementSet{a, b});
      if (!j || !C.contains(*j)) return ElementSet{a, b};
    }
  return std::nullopt;
}

/// C is closed in p under joins of mails of C (mails taken in C's own
/// order). Checking two-element mails suffices: a larger mail folds into
/// pairs that all stay above the same lower bound.
inline bool is_subchainmail_of(const FinitePoset& p, const ElementSet& C) {
  return !subchainmail_witness(p, C).has_value();
}

inline void require_chainmail(const FinitePoset& gamma, const char* what) {
  if (!is_chainmail(gamma)) throw PreconditionError(std::string(what) + ": poset is not a chainmail");
}

/// Down-closed subsets of a chainmail that are subchainmails, shortlex
/// sorted.
inline std::vector<ElementSet> downclosed_subchainmails(const FinitePoset& gamma) {
  require_chainmail(gamma, "downclosed_subchainmails");
  std::vector<ElementSet> out;
  for_each_antichain(gamma, gamma.elements(), [&](const ElementSet& a) {
    ElementSet x = down_closure(gamma, a);
    if (is_subchainmail_of(gamma, x)) out.push_back(x);
    return true;
  });
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

/// Inclusion order on a list of sets.
inline FinitePoset inclusion_order(const std::vector<ElementSet>& sets) {
  OrderRelation r(sets.size());
  for (Element i = 0; i < sets.size(); ++i)
    for (Element j = 0; j < sets.size(); ++j)
      if (sets[i].is_subset_of(sets[j])) r.set(i, j);
  return FinitePoset(r);
}

inline ElementSet tmd_to_downset(const FinitePoset& gamma, const ElementSet& S) {
  require_chainmail(gamma, "tmd_to_downset");
  if (!is_totally_mail_disconnected(gamma, S))
    throw PreconditionError("tmd_to_downset: " + to_string(S) + " is not totally mail-disconnected");
  return down_closure(gamma, S);
}

/// The joins of the mail-connected components of X. That each join lands
/// back inside X is checked rather than assumed.
inline ElementSet downset_to_tmd(const FinitePoset& gamma, const ElementSet& X) {
  require_chainmail(gamma, "downset_to_tmd");
  if (!is_down_closed(gamma, X))
    throw PreconditionError("downset_to_tmd: " + to_string(X) + " is not down-closed");
  if (!is_subchainmail_of(gamma, X))
    throw PreconditionError("downset_to_tmd: " + to_string(X) + " is not a subchainmail");
  ElementSet out;
  for (const ElementSet& comp : mail_connected_components(gamma, X)) {
    auto j = join(gamma, comp);
    if (!j || !X.contains(*j))
      throw Error("downset_to_tmd: component " + to_string(comp) + " has no join inside the set");
    out.insert(*j);
  }
  return out;
}

}  // namespace chm
