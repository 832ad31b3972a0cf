#pragma once

#include <optional>
#include <string>

#include "chainmail/limits.hpp"
#include "chainmail/poset.hpp"

namespace chm {

/// c <= x iff c lies below exactly one member of B, for a sink (x, B) with
/// B inside x's down-set.
inline bool is_orthogonal(const FinitePoset& p, Element c, Element x, const ElementSet& B) {
  if (!B.is_subset_of(p.down(x))) throw PreconditionError("sink set is not below its apex");
  return p.leq(c, x) == ((p.up(c) & B).size() == 1);
}

/// Every x admits a sink (x, B) with B inside C to which all of C is
/// orthogonal. Such a B can only be the set of maximal members of C below
/// x: each maximal one must be in B, and anything in B strictly below
/// another member of B would sit below two of them. So the test reduces to
/// checking that one candidate.
inline bool is_multicoreflective(const FinitePoset& p, const ElementSet& C) {
  for (Element x = 0; x < p.size(); ++x) {
    ElementSet B = maximal_elements(p, C & p.down(x));
    for (Element c : C)
      if (!is_orthogonal(p, c, x, B)) return false;
  }
  return true;
}

inline void require_scan(std::size_t bits, const Limits& limits, const char* what) {
  if (bits > limits.max_subset_scan_bits)
    throw ResourceLimit(std::string(what) + ": subset scan over " + std::to_string(bits) +
                        " elements exceeds the configured cap of " +
                        std::to_string(limits.max_subset_scan_bits));
}

/// Calls f for every subset of s (the empty one included).
template <typename F>
void for_each_subset(const ElementSet& s, F&& f) {
  std::vector<Element> m = s.to_vector();
  const std::size_t count = std::size_t{1} << m.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    ElementSet sub;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (mask >> i & 1) sub.insert(m[i]);
    f(static_cast<const ElementSet&>(sub));
  }
}

/// Elements x above X that are the join of X inside y's down-set for every
/// y >= x.
inline ElementSet local_joins(const FinitePoset& p, const ElementSet& X) {
  ElementSet out;
  ElementSet ub = upper_bounds(p, X);
  for (Element x : ub) {
    bool ok = true;
    for (Element y : p.up(x)) {
      auto l = least(p, ub & p.down(y));
      if (!l || *l != x) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

/// The least-numbered local join of X, if any. Where p has a top this is
/// the join.
inline std::optional<Element> local_join(const FinitePoset& p, const ElementSet& X) {
  ElementSet all = local_joins(p, X);
  if (all.empty()) return std::nullopt;
  return all.front();
}

struct BorgerReport {
  bool multicoreflective = false;        // (i)
  bool orthogonality_closed = false;     // (ii)
  bool local_join_closed = false;        // (iii)
  bool local_joins_exist = false;        // every bounded connected subset has a local join
  bool implications_hold = false;        // (i) => (ii) => (iii)
  bool equivalence_holds = false;        // all three agree, when local_joins_exist
};

/// (ii): anything orthogonal to every sink that all of C is orthogonal to
/// lies in C. Brute force over every sink, so guarded by the subset cap.
inline bool is_orthogonality_closed(const FinitePoset& p, const ElementSet& C, const Limits& limits = {}) {
  ElementSet outside = p.elements() - C;
  if (outside.empty()) return true;
  ElementSet survivors = outside;
  for (Element x = 0; x < p.size() && !survivors.empty(); ++x) {
    require_scan(p.down(x).size(), limits, "orthogonality closure");
    for_each_subset(p.down(x), [&](const ElementSet& B) {
      for (Element c : C)
        if (!is_orthogonal(p, c, x, B)) return;
      for (Element a : ElementSet(survivors))
        if (!is_orthogonal(p, a, x, B)) survivors.erase(a);
    });
  }
  return survivors.empty();
}

/// (iii): every local join of a non-empty connected subset of C is in C.
inline bool is_local_join_closed(const FinitePoset& p, const ElementSet& C, const Limits& limits = {}) {
  require_scan(C.size(), limits, "local-join closure");
  bool ok = true;
  for_each_subset(C, [&](const ElementSet& X) {
    if (ok && is_connected_set(p, X) && !local_joins(p, X).is_subset_of(C)) ok = false;
  });
  return ok;
}

inline BorgerReport borger_implication_check(const FinitePoset& p, const ElementSet& C,
                                             const Limits& limits = {}) {
  BorgerReport r;
  r.multicoreflective = is_multicoreflective(p, C);
  r.orthogonality_closed = is_orthogonality_closed(p, C, limits);
  r.local_join_closed = is_local_join_closed(p, C, limits);

  require_scan(p.size(), limits, "local-join existence");
  r.local_joins_exist = true;
  for_each_subset(p.elements(), [&](const ElementSet& X) {
    if (r.local_joins_exist && is_connected_set(p, X) && !upper_bounds(p, X).empty() &&
        local_joins(p, X).empty())
      r.local_joins_exist = false;
  });

  r.implications_hold = (!r.multicoreflective || r.orthogonality_closed) &&
                        (!r.orthogonality_closed || r.local_join_closed);
  r.equivalence_holds = !r.local_joins_exist || (r.multicoreflective == r.orthogonality_closed &&
                                                 r.orthogonality_closed == r.local_join_closed);
  return r;
}

}  // namespace chm
