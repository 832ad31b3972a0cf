#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace chm {

using Element = std::size_t;

/// Hard ceiling on the number of elements of any poset the library handles.
inline constexpr std::size_t kMaxElements = 128;

/// Fixed-capacity bitset over the elements 0..kMaxElements-1.
///
/// Rows of an order relation, down-sets, connectivities and subsets are all
/// stored as ElementSet, so set algebra is a handful of word operations.
class ElementSet {
 public:
  static constexpr std::size_t kWords = kMaxElements / 64;
  using Word = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    iterator(const ElementSet* set, std::size_t word, Word rest)
        : set_(set), word_(word), rest_(rest) {
      settle();
    }

    Element operator*() const {
      return word_ * 64 + static_cast<Element>(std::countr_zero(rest_));
    }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      settle();
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.word_ == b.word_ && a.rest_ == b.rest_;
    }

   private:
    void settle() {
      while (rest_ == 0 && word_ + 1 < kWords) {
        ++word_;
        rest_ = set_->words_[word_];
      }
      if (rest_ == 0) word_ = kWords;
    }

    const ElementSet* set_ = nullptr;
    std::size_t word_ = kWords;
    Word rest_ = 0;
  };

  constexpr ElementSet() noexcept = default;
  ElementSet(std::initializer_list<Element> members) {
    for (Element x : members) insert(x);
  }
  template <typename Range>
  static ElementSet from_range(const Range& members) {
    ElementSet s;
    for (auto x : members) s.insert(static_cast<Element>(x));
    return s;
  }

  static ElementSet singleton(Element x) {
    ElementSet s;
    s.insert(x);
    return s;
  }

  /// The set {0, ..., n-1}.
  static ElementSet first_n(std::size_t n) {
    if (n > kMaxElements) throw std::out_of_range("ElementSet::first_n: n exceeds capacity");
    ElementSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~Word{0} : ((Word{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  bool contains(Element x) const noexcept {
    return x < kMaxElements && ((words_[x >> 6] >> (x & 63)) & 1U) != 0;
  }
  void insert(Element x) {
    check(x);
    words_[x >> 6] |= Word{1} << (x & 63);
  }
  void erase(Element x) {
    check(x);
    words_[x >> 6] &= ~(Word{1} << (x & 63));
  }

  bool empty() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }
  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Smallest member. Precondition: non-empty.
  Element front() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + static_cast<Element>(std::countr_zero(words_[w]));
    throw std::logic_error("ElementSet::front on empty set");
  }
  /// Largest member. Precondition: non-empty.
  Element back() const {
    for (std::size_t w = kWords; w-- > 0;)
      if (words_[w] != 0) return w * 64 + 63 - static_cast<Element>(std::countl_zero(words_[w]));
    throw std::logic_error("ElementSet::back on empty set");
  }

  bool is_subset_of(const ElementSet& o) const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & o.words_[w]) != 0) return true;
    return false;
  }

  /// Members strictly greater than x.
  ElementSet above(Element x) const {
    ElementSet r = *this;
    for (std::size_t w = 0; w < kWords; ++w) {
      std::size_t lo = w * 64;
      if (x >= lo + 63) {
        r.words_[w] = 0;
      } else if (x >= lo) {
        r.words_[w] &= ~Word{0} << (x - lo + 1);
      }
    }
    return r;
  }

  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator^=(const ElementSet& o) noexcept {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& o) noexcept {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) noexcept { return a ^= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) noexcept { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Numeric order of the underlying bit pattern (highest word first). Used
  /// where any fixed total order will do, e.g. certificate comparison.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept {
    for (std::size_t w = kWords; w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    return std::strong_ordering::equal;
  }

  iterator begin() const { return iterator(this, 0, words_[0]); }
  iterator end() const { return iterator(); }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(size());
    for (Element x : *this) out.push_back(x);
    return out;
  }

  Word word(std::size_t i) const { return words_.at(i); }

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Word w : words_) h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ULL;
    return h;
  }

 private:
  static void check(Element x) {
    if (x >= kMaxElements)
      throw std::out_of_range("element " + std::to_string(x) + " exceeds set capacity");
  }

  std::array<Word, kWords> words_{};
};

/// Lexicographic order of sorted member lists: {0,5} < {1} and {1} < {1,2}.
inline bool lex_less(const ElementSet& a, const ElementSet& b) {
  ElementSet diff = a ^ b;
  if (diff.empty()) return false;
  Element d = diff.front();
  if (a.contains(d)) return !b.above(d).empty();
  return a.above(d).empty();
}

/// Shorter sets first, ties broken by lex_less. The canonical ordering for
/// families of sets throughout the library.
inline bool shortlex_less(const ElementSet& a, const ElementSet& b) {
  std::size_t sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

inline std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

}  // namespace chm
