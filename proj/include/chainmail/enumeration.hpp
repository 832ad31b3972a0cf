#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chainmail/canonical.hpp"
#include "chainmail/connectivity.hpp"
#include "chainmail/generators.hpp"
#include "chainmail/limits.hpp"
#include "chainmail/parallel.hpp"
#include "chainmail/poset.hpp"

namespace chm {

enum class EnumerationKind { posets, chainmails };

inline const char* to_string(EnumerationKind k) {
  return k == EnumerationKind::posets ? "posets" : "chainmails";
}

struct EnumerationOptions {
  std::size_t threads = 1;
  bool catalog = false;
  bool deep = false;
  Limits limits = {};
};

struct EnumerationResult {
  std::size_t n = 0;
  std::uint64_t count = 0;
  /// Canonical representatives sorted by canonical key; filled only when
  /// the catalog was requested.
  std::vector<FinitePoset> catalog;
  std::vector<CanonicalKey> keys;
  std::chrono::duration<double> elapsed{};
};

/// Every pair with a common lower bound that has an upper bound has a least
/// one. These are exactly the posets that become connected chainmails when
/// a top is added, and the property survives deleting a maximal element.
inline bool is_prefix_valid(const FinitePoset& q) {
  for (Element a = 0; a < q.size(); ++a)
    for (Element b : q.mail_neighbors(a).above(a)) {
      if (q.comparable(a, b)) continue;
      ElementSet ub = q.up(a) & q.up(b);
      if (!ub.empty() && !least(q, ub)) return false;
    }
  return true;
}

namespace detail {

struct Keyed {
  CanonicalKey key;
  FinitePoset poset;
};

/// One step of canonical augmentation: extend a canonical parent by a new
/// maximal element over each of its down-sets, keeping a child only when
/// deleting its canonically chosen maximal element gives back the parent's
/// class. The chosen element has the largest down-set among maximal
/// elements, ties broken by highest canonical position, so a child whose
/// new element has a smaller down-set can be skipped before labelling.
template <typename Keep>
std::vector<Keyed> augment(const FinitePoset& parent, const CanonicalKey& parent_key, Keep&& keep) {
  const Element e = parent.size();
  std::vector<Keyed> out;
  std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
  for_each_antichain(parent, parent.elements(), [&](const ElementSet& top) {
    FinitePoset child = parent.with_maximal(down_closure(parent, top));
    ElementSet maxima = maximal_elements(child, child.elements());
    std::size_t best = 0;
    for (Element m : maxima) best = std::max(best, child.down(m).size());
    if (child.down(e).size() != best || !keep(child)) return true;

    CanonicalLabeling lab = canonical_labeling(child);
    Element chosen = e;
    bool have = false;
    for (Element m : maxima)
      if (child.down(m).size() == best && (!have || lab.position[m] > lab.position[chosen])) {
        chosen = m;
        have = true;
      }
    if (chosen != e) {
      ElementSet rest = child.elements();
      rest.erase(chosen);
      if (canonical_key(child.induced(rest)) != parent_key) return true;
    }
    if (seen.insert(lab.key).second) out.push_back({lab.key, child.permuted(lab.position)});
    return true;
  });
  return out;
}

/// Classes of posets on n elements satisfying a hereditary predicate
/// (closed under deleting maximal elements), grown level by level. The
/// last level is only counted unless `keep_last` is set.
template <typename Keep>
std::pair<std::uint64_t, std::vector<Keyed>> grow(std::size_t n, std::size_t threads, bool keep_last, Keep&& keep) {
  std::vector<Keyed> level;
  level.push_back({canonical_key(FinitePoset()), FinitePoset()});
  if (n == 0) return {1, keep_last ? level : std::vector<Keyed>{}};
  for (std::size_t size = 1; size <= n; ++size) {
    const bool last = size == n;
    std::vector<std::vector<Keyed>> children(level.size());
    std::vector<std::uint64_t> counts(level.size(), 0);
    parallel_for(level.size(), threads, [&](std::size_t i) {
      std::vector<Keyed> kids = augment(level[i].poset, level[i].key, keep);
      counts[i] = kids.size();
      if (!last || keep_last) children[i] = std::move(kids);
    });
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    std::vector<Keyed> next;
    if (!last || keep_last) {
      next.reserve(total);
      for (auto& kids : children)
        for (auto& k : kids) next.push_back(std::move(k));
      std::sort(next.begin(), next.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    }
    if (last) return {total, std::move(next)};
    level = std::move(next);
  }
  return {0, {}};
}

inline void require_enumeration(EnumerationKind kind, std::size_t n, const EnumerationOptions& o) {
  std::size_t cap = o.deep ? o.limits.max_deep_n
                           : (kind == EnumerationKind::posets ? o.limits.max_poset_n : o.limits.max_chainmail_n);
  if (n > cap)
    throw ResourceLimit(std::string(to_string(kind)) + " enumeration at n=" + std::to_string(n) +
                        " exceeds the cap of " + std::to_string(cap) + (o.deep ? "" : " (see --deep)"));
}

}  // namespace detail

inline EnumerationResult enumerate_posets(std::size_t n, const EnumerationOptions& o = {}) {
  detail::require_enumeration(EnumerationKind::posets, n, o);
  auto start = std::chrono::steady_clock::now();
  auto [count, last] = detail::grow(n, o.threads, o.catalog, [](const FinitePoset&) { return true; });
  EnumerationResult r;
  r.n = n;
  r.count = count;
  for (auto& k : last) {
    r.keys.push_back(std::move(k.key));
    r.catalog.push_back(std::move(k.poset));
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

/// Mail-connected chainmails on n elements up to isomorphism. Such a
/// chainmail has a top, and removing it leaves a prefix-valid poset, so the
/// search runs over prefix-valid posets on n-1 elements.
inline EnumerationResult enumerate_connected_chainmails(std::size_t n, const EnumerationOptions& o = {}) {
  detail::require_enumeration(EnumerationKind::chainmails, n, o);
  auto start = std::chrono::steady_clock::now();
  EnumerationResult r;
  r.n = n;
  if (n == 0) {
    r.count = 1;
    if (o.catalog) {
      r.catalog.push_back(FinitePoset());
      r.keys.push_back(canonical_key(FinitePoset()));
    }
  } else {
    auto [count, last] = detail::grow(n - 1, o.threads, o.catalog, is_prefix_valid);
    r.count = count;
    std::vector<detail::Keyed> tops(last.size());
    parallel_for(last.size(), o.threads, [&](std::size_t i) {
      FinitePoset g = with_new_top(last[i].poset);
      CanonicalLabeling lab = canonical_labeling(g);
      tops[i] = {lab.key, g.permuted(lab.position)};
    });
    std::sort(tops.begin(), tops.end(), [](const detail::Keyed& a, const detail::Keyed& b) { return a.key < b.key; });
    for (auto& k : tops) {
      r.keys.push_back(std::move(k.key));
      r.catalog.push_back(std::move(k.poset));
    }
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

inline EnumerationResult enumerate(EnumerationKind kind, std::size_t n, const EnumerationOptions& o = {}) {
  return kind == EnumerationKind::posets ? enumerate_posets(n, o) : enumerate_connected_chainmails(n, o);
}

/// Complete lattices on exactly n elements up to isomorphism, in canonical
/// key order.
inline std::vector<FinitePoset> enumerate_lattices(std::size_t n, std::size_t threads = 1) {
  EnumerationOptions o;
  o.threads = threads;
  o.catalog = true;
  o.deep = true;
  std::vector<FinitePoset> out;
  for (FinitePoset& p : enumerate_posets(n, o).catalog)
    if (is_complete_lattice(p)) out.push_back(std::move(p));
  return out;
}

/// Calls f(pair) for every complete lattice on exactly n elements (up to
/// isomorphism) crossed with every subset C, lattices in key order and
/// subsets by ascending bit mask.
template <typename F>
void for_each_connectivity_pair(std::size_t n, F&& f) {
  if (n > 7) throw ResourceLimit("exhaustive connectivity pairs are limited to lattices of at most 7 elements");
  for (const FinitePoset& p : enumerate_lattices(n)) {
    Lattice L(p);
    for (Element mask = 0; mask < (Element{1} << n); ++mask) f(ConnectivityPair(L, mask_members(mask)));
  }
}

/// All pairs over lattices with 1..max_size elements.
inline std::vector<ConnectivityPair> enumerate_connectivity_pairs(std::size_t max_size) {
  std::vector<ConnectivityPair> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for_each_connectivity_pair(n, [&](ConnectivityPair pc) { out.push_back(std::move(pc)); });
  return out;
}

}  // namespace chm
