#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

#include "chainmail/element_set.hpp"
#include "chainmail/errors.hpp"

namespace chm {

/// Size guards shared by everything that can blow up combinatorially.
struct Limits {
  /// Largest poset accepted from input or produced by a construction.
  std::size_t max_elements = 64;
  /// Largest family of totally mail-disconnected sets we will enumerate.
  std::size_t max_tmd_sets = std::size_t{1} << 20;
  /// Vertex cap for powerset-based connectivity generators.
  std::size_t max_powerset_vertices = 5;
  /// Largest n for chainmail enumeration without the deep flag.
  std::size_t max_chainmail_n = 8;
  /// Largest n for poset enumeration without the deep flag.
  std::size_t max_poset_n = 9;
  /// Largest n for either enumeration with the deep flag.
  std::size_t max_deep_n = 10;
  /// Exponent guard for brute-force subset scans (orthogonality, local joins).
  std::size_t max_subset_scan_bits = 20;

  /// Limits at the hard ceiling, used for built-in fixtures.
  static Limits unbounded() {
    Limits l;
    l.max_elements = kMaxElements;
    l.max_powerset_vertices = 7;
    return l;
  }

  /// Defaults, with CHM_MAX_N overriding max_elements (clamped to the
  /// hard ceiling).
  static Limits from_environment() {
    Limits l;
    if (const char* v = std::getenv("CHM_MAX_N"); v != nullptr && *v != '\0') {
      char* end = nullptr;
      unsigned long long n = std::strtoull(v, &end, 10);
      if (end == v || *end != '\0') throw InvalidInput(std::string("CHM_MAX_N is not an integer: ") + v);
      l.max_elements = n > kMaxElements ? kMaxElements : static_cast<std::size_t>(n);
      std::size_t vertices = 0;
      while (vertices < 7 && (std::size_t{1} << (vertices + 1)) <= l.max_elements) ++vertices;
      if (vertices < l.max_powerset_vertices) l.max_powerset_vertices = vertices;
    }
    return l;
  }

  void require_elements(std::size_t n, const char* what) const {
    if (n > max_elements)
      throw ResourceLimit(std::string(what) + ": " + std::to_string(n) +
                          " elements exceeds the configured cap of " + std::to_string(max_elements));
  }
};

}  // namespace chm
