#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "chainmail/poset.hpp"

namespace chm {

/// Isomorphism-invariant fingerprint of a finite poset: the element count
/// followed by the rows of the canonically relabelled order relation.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return std::lexicographical_compare_three_way(a.bytes.begin(), a.bytes.end(), b.bytes.begin(),
                                                  b.bytes.end());
  }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
      s.push_back(digits[b >> 4]);
      s.push_back(digits[b & 15]);
    }
    return s;
  }
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint8_t b : k.bytes) h = (h ^ b) * 0x100000001b3ULL;
    return h;
  }
};

struct CanonicalLabeling {
  /// order[i] is the element placed at canonical position i.
  std::vector<Element> order;
  /// position[x] is the canonical position of element x.
  std::vector<Element> position;
  CanonicalKey key;
};

namespace detail {

// Individualization-refinement search for the lexicographically smallest
// relabelled relation. Cells of the ordered partition are numbered 0..k-1;
// refinement splits cells by counts of strict down- and up-neighbours per
// cell, which never depends on the input labelling. Subtrees rooted at
// vertices in the same orbit of the automorphisms found so far (restricted
// to those fixing the current prefix) are skipped.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const FinitePoset& p) : p_(p), n_(p.size()) {
    for (Element v = 0; v < n_; ++v) {
      strict_down_.push_back(p.down(v) - ElementSet::singleton(v));
      strict_up_.push_back(p.up(v) - ElementSet::singleton(v));
    }
    seed_twin_transpositions();
  }

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) {
      out.key.bytes = {0};
      return out;
    }
    std::vector<std::uint16_t> cell(n_, 0);
    std::size_t k = refine(cell, 1);
    std::vector<Element> prefix;
    search(cell, k, prefix);

    out.order = best_lab_;
    out.position.assign(n_, 0);
    for (Element i = 0; i < n_; ++i) out.position[best_lab_[i]] = i;
    const std::size_t row_bytes = (n_ + 7) / 8;
    out.key.bytes.reserve(1 + n_ * row_bytes);
    out.key.bytes.push_back(static_cast<std::uint8_t>(n_));
    for (const ElementSet& row : best_cert_)
      for (std::size_t byte = 0; byte < row_bytes; ++byte) {
        std::uint8_t b = 0;
        for (std::size_t bit = 0; bit < 8; ++bit)
          if (row.contains(byte * 8 + bit)) b |= static_cast<std::uint8_t>(1U << bit);
        out.key.bytes.push_back(b);
      }
    return out;
  }

 private:
  void seed_twin_transpositions() {
    std::vector<Element> order(n_);
    std::iota(order.begin(), order.end(), Element{0});
    auto twin_less = [&](Element a, Element b) {
      if (strict_down_[a] != strict_down_[b]) return strict_down_[a] < strict_down_[b];
      return strict_up_[a] < strict_up_[b];
    };
    std::stable_sort(order.begin(), order.end(), twin_less);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      Element a = order[i], b = order[i + 1];
      if (strict_down_[a] == strict_down_[b] && strict_up_[a] == strict_up_[b]) {
        std::vector<Element> g(n_);
        std::iota(g.begin(), g.end(), Element{0});
        std::swap(g[a], g[b]);
        generators_.push_back(std::move(g));
      }
    }
  }

  std::size_t refine(std::vector<std::uint16_t>& cell, std::size_t k) const {
    std::vector<Element> idx(n_);
    std::vector<std::uint32_t> sig;
    while (true) {
      const std::size_t width = 1 + 2 * k;
      sig.assign(n_ * width, 0);
      for (Element v = 0; v < n_; ++v) {
        std::uint32_t* s = &sig[v * width];
        s[0] = cell[v];
        for (Element u : strict_down_[v]) ++s[1 + cell[u]];
        for (Element u : strict_up_[v]) ++s[1 + k + cell[u]];
      }
      std::iota(idx.begin(), idx.end(), Element{0});
      auto less = [&](Element a, Element b) {
        return std::lexicographical_compare(&sig[a * width], &sig[a * width] + width, &sig[b * width],
                                            &sig[b * width] + width);
      };
      std::sort(idx.begin(), idx.end(), less);
      std::size_t next_k = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && less(idx[i - 1], idx[i])) ++next_k;
        cell[idx[i]] = static_cast<std::uint16_t>(next_k);
      }
      ++next_k;
      if (next_k == k) return k;
      k = next_k;
    }
  }

  std::vector<Element> orbit_roots(const std::vector<Element>& prefix) const {
    std::vector<Element> parent(n_);
    std::iota(parent.begin(), parent.end(), Element{0});
    auto find = [&](Element x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Element v) { return g[v] == v; });
      if (!fixes) continue;
      for (Element x = 0; x < n_; ++x) {
        Element a = find(x), b = find(g[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Element x = 0; x < n_; ++x) parent[x] = find(x);
    return parent;
  }

  void search(const std::vector<std::uint16_t>& cell, std::size_t k, std::vector<Element>& prefix) {
    if (k == n_) {
      leaf(cell);
      return;
    }
    std::vector<std::size_t> sizes(k, 0);
    for (Element v = 0; v < n_; ++v) ++sizes[cell[v]];
    std::uint16_t target = 0;
    while (sizes[target] < 2) ++target;

    std::vector<Element> explored;
    for (Element v = 0; v < n_; ++v) {
      if (cell[v] != target) continue;
      if (!explored.empty()) {
        std::vector<Element> roots = orbit_roots(prefix);
        bool seen = std::any_of(explored.begin(), explored.end(),
                                [&](Element u) { return roots[u] == roots[v]; });
        if (seen) continue;
      }
      std::vector<std::uint16_t> child = cell;
      for (Element w = 0; w < n_; ++w) {
        if (child[w] > target || (child[w] == target && w != v)) ++child[w];
      }
      std::size_t child_k = refine(child, k + 1);
      prefix.push_back(v);
      search(child, child_k, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  void leaf(const std::vector<std::uint16_t>& cell) {
    std::vector<Element> lab(n_);
    for (Element v = 0; v < n_; ++v) lab[cell[v]] = v;
    std::vector<ElementSet> cert(n_);
    for (Element i = 0; i < n_; ++i)
      for (Element u : p_.up(lab[i])) cert[i].insert(cell[u]);
    if (best_lab_.empty() || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = std::move(lab);
    } else if (cert == best_cert_) {
      std::vector<Element> g(n_);
      bool identity = true;
      for (Element i = 0; i < n_; ++i) {
        g[lab[i]] = best_lab_[i];
        identity = identity && lab[i] == best_lab_[i];
      }
      if (!identity) generators_.push_back(std::move(g));
    }
  }

  const FinitePoset& p_;
  std::size_t n_;
  std::vector<ElementSet> strict_down_;
  std::vector<ElementSet> strict_up_;
  std::vector<std::vector<Element>> generators_;
  std::vector<ElementSet> best_cert_;
  std::vector<Element> best_lab_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const FinitePoset& p) {
  return detail::CanonicalSearch(p).run();
}

inline CanonicalKey canonical_key(const FinitePoset& p) { return canonical_labeling(p).key; }

/// The canonical representative of p's isomorphism class.
inline FinitePoset canonical_form(const FinitePoset& p) {
  return p.permuted(canonical_labeling(p).position);
}

inline bool is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  return p.size() == q.size() && canonical_key(p) == canonical_key(q);
}

}  // namespace chm
