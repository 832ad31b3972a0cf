#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chainmail/absolute.hpp"
#include "chainmail/generators.hpp"

namespace chm {

/// A named finite structure: a poset, optionally with a connectivity set,
/// and display labels for its elements.
struct Fixture {
  std::string name;
  std::string description;
  FinitePoset poset;
  std::optional<ElementSet> connected;
  std::vector<std::string> labels;

  ConnectivityPair pair() const {
    if (!connected) throw PreconditionError("fixture " + name + " carries no connectivity set");
    return ConnectivityPair(poset, *connected);
  }
};

namespace detail {

inline std::vector<std::string> numeric_labels(std::size_t n, std::size_t first) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(first + i));
  return out;
}

inline std::string set_label(const ElementSet& s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ",";
    out += names[x];
    first = false;
  }
  return out + "}";
}

/// Labels for a powerset lattice on points named first, first+1, ...
inline std::vector<std::string> powerset_labels(std::size_t v, std::size_t first) {
  auto names = numeric_labels(v, first);
  std::vector<std::string> out;
  for (Element m = 0; m < (Element{1} << v); ++m) out.push_back(set_label(mask_members(m), names));
  return out;
}

inline Fixture from_pair(std::string name, std::string description, const ConnectivityPair& pc,
                         std::vector<std::string> labels) {
  return Fixture{std::move(name), std::move(description), pc.poset(), pc.connected(), std::move(labels)};
}

/// Bit mask of a set of 1-based points.
inline Element points(std::initializer_list<Element> one_based) {
  Element m = 0;
  for (Element p : one_based) m |= Element{1} << (p - 1);
  return m;
}

inline FinitePoset exa_a_poset() {
  // Drawn labels 1..7 map to 0..6.
  return FinitePoset::from_covers(7, {{0, 1}, {0, 2}, {3, 4}, {3, 5}, {1, 4}, {2, 4}, {2, 5}, {4, 6}, {5, 6}});
}

inline FinitePoset m3_poset() { return FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }

inline FinitePoset n5_poset() { return FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {1, 4}}); }

/// c < a < r, b < r, and an isolated d.
inline FinitePoset small_forest() {
  // r=0 a=1 b=2 c=3 d=4
  return FinitePoset::from_covers(5, {{3, 1}, {1, 0}, {2, 0}});
}

}  // namespace detail

inline std::vector<std::string> fixture_names() {
  return {"exaA", "exaAA", "exaAB", "exaB", "exaE", "exaG", "exaH", "exaI", "exaJ", "exaK",
          "exaL", "exaM", "exaN", "exaO", "exaT", "exaU", "exaV", "exaW", "exaX", "M3",   "N5"};
}

/// Fixtures are fixed small structures, so they are built against the hard
/// ceiling rather than the configurable cap.
inline Fixture named_fixture(const std::string& name) {
  using namespace detail;
  const Limits big = Limits::unbounded();

  if (name == "exaA")
    return {name, "7-element chainmail without a bottom; elements are numbered 1..7 as drawn",
            exa_a_poset(), std::nullopt, numeric_labels(7, 1)};

  if (name == "exaAA") {
    FinitePoset g = exa_a_poset();
    TmdFamily d = exterior(g, big);
    std::vector<std::string> labels;
    auto names = numeric_labels(7, 1);
    for (const ElementSet& s : d.sets) labels.push_back(set_label(s, names));
    return from_pair(name, "exterior of exaA with the singletons as connectivity; absolute, not distributive",
                     exterior_as_absolute(g, big), labels);
  }

  if (name == "M3")
    return {name, "modular diamond; a is an atom", m3_poset(), std::nullopt, {"0", "a", "b", "c", "1"}};

  if (name == "N5")
    return {name, "pentagon; a is the upper element of the two-element side", n5_poset(), std::nullopt,
            {"0", "b", "c", "a", "1"}};

  if (name == "exaAB") {
    FinitePoset L = with_new_bottom(n5_poset());
    ElementSet C = L.elements();
    C.erase(0);
    return {name, "N5 with a new bottom; the old elements form an absolute connectivity", L, C,
            {"z", "0", "b", "c", "a", "1"}};
  }

  if (name == "exaB") {
    Graph g{3, {{0, 1}, {1, 2}}};
    return from_pair(name, "connected vertex sets of the path 0-1-2", graph_connectivity_pair(g, big),
                     powerset_labels(3, 0));
  }

  if (name == "exaE") {
    ElementSet atoms{1, 2, 4};
    return {name, "closed sets of a discrete 3-point space (the powerset), singletons as connectivity",
            powerset_poset(3), atoms, powerset_labels(3, 1)};
  }

  if (name == "exaG") {
    FinitePoset f = small_forest();
    ElementSet C;
    for (Element x = 0; x < f.size(); ++x) C.insert(members_mask(f.down(x)));
    return {name, "powerset of the forest c<a<r, b<r, d with the principal down-sets as connectivity",
            powerset_poset(5), C, powerset_labels(5, 0)};
  }

  if (name == "exaH") {
    Hypergraph h{3, {ElementSet{0, 1}, ElementSet{1, 2}}};
    return from_pair(name, "hypergraph on 3 points with hyperedges {0,1} and {1,2}",
                     hypergraph_connectivity_pair(h, big), powerset_labels(3, 0));
  }

  if (name == "exaI") {
    return from_pair(name, "Sierpinski space on {a,b}: opens are {}, {a}, {a,b}",
                     topology_pair(2, {ElementSet{}, ElementSet{0}, ElementSet{0, 1}}, big),
                     {"{}", "{a}", "{b}", "{a,b}"});
  }

  if (name == "exaJ") {
    // Vertices 1..7 map to 0..6; two 4-cycles sharing vertex 4.
    Graph g{7, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {3, 4}, {4, 6}, {6, 5}, {5, 3}}};
    return from_pair(name, "2-connected vertex sets of two diamonds sharing one vertex",
                     k_connectivity_pair(g, 2, big), powerset_labels(7, 1));
  }

  if (name == "exaK") {
    FinitePoset f = small_forest();
    DownsetLattice d = downset_lattice(f, big);
    std::vector<std::string> names{"r", "a", "b", "c", "d"};
    std::vector<std::string> labels;
    for (const ElementSet& s : d.downsets) labels.push_back(set_label(s, names));
    return from_pair(name, "down-sets of the forest c<a<r, b<r, d with the principal down-sets",
                     principal_downset_pair(f, big), labels);
  }

  if (name == "exaL") {
    Graph g{2, {{0, 1}}};
    return from_pair(name, "connected sets of a single edge; Serra but not separated",
                     graph_connectivity_pair(g, big), powerset_labels(2, 0));
  }

  if (name == "exaM") {
    // X = {1,2,3}, Y = {1}: C is every set whose part outside Y is one point.
    ElementSet C;
    for (Element m = 0; m < 8; ++m)
      if (mask_members(m & ~points({1})).size() == 1) C.insert(m);
    return {name, "powerset of {1,2,3}; C = sets S with S minus {1} a singleton", powerset_poset(3), C,
            powerset_labels(3, 1)};
  }

  if (name == "exaN") {
    FinitePoset L = FinitePoset::from_covers(6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
    return {name, "6-element lattice; the hollow nodes 2,3,4,6 form a chainmail that is not a subchainmail", L,
            ElementSet{1, 2, 3, 5}, numeric_labels(6, 1)};
  }

  if (name == "exaO") {
    // Cells of a 2x2 grid: 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1).
    ElementSet C;
    for (Element x0 = 0; x0 < 2; ++x0)
      for (Element x1 = x0; x1 < 2; ++x1)
        for (Element y0 = 0; y0 < 2; ++y0)
          for (Element y1 = y0; y1 < 2; ++y1) {
            Element m = 0;
            for (Element x = x0; x <= x1; ++x)
              for (Element y = y0; y <= y1; ++y) m |= Element{1} << (x + 2 * y);
            C.insert(m);
          }
    return {name, "rectangles in a 2x2 grid; a preconnectivity that is not a connectivity", powerset_poset(4), C,
            powerset_labels(4, 0)};
  }

  if (name == "exaT") {
    DivisorLattice d = divisor_lattice(360);
    ElementSet C;
    std::vector<std::string> labels;
    for (Element i = 0; i < d.divisors.size(); ++i) {
      unsigned long k = d.divisors[i];
      labels.push_back(std::to_string(k));
      unsigned long p = 2;
      while (k % p != 0 && p <= k) ++p;
      while (k > 1 && k % p == 0) k /= p;
      if (d.divisors[i] > 1 && k == 1) C.insert(i);
    }
    return {name, "divisors of 360 under divisibility with the prime powers above 1 as connectivity",
            d.lattice, C, labels};
  }

  if (name == "exaU")
    return {name, "powerset of {1,2,3} with its atoms", powerset_poset(3), ElementSet{1, 2, 4},
            powerset_labels(3, 1)};

  if (name == "exaV")
    return {name, "powerset of {1,2,3}; C = the three 2-element sets", powerset_poset(3),
            ElementSet{points({1, 2}), points({2, 3}), points({1, 3})}, powerset_labels(3, 1)};

  if (name == "exaW")
    return {name, "powerset of {1,2,3}; C = {{1,2},{2,3}}", powerset_poset(3),
            ElementSet{points({1, 2}), points({2, 3})}, powerset_labels(3, 1)};

  if (name == "exaX") {
    // Drawn labels 1,2,3,4,5,7 map to 0..5.
    FinitePoset L = FinitePoset::from_covers(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}});
    return {name, "6-element lattice with three atoms; the atoms form the connectivity", L, ElementSet{1, 2, 3},
            {"1", "2", "3", "4", "5", "7"}};
  }

  throw InvalidInput("unknown fixture: " + name);
}

}  // namespace chm
