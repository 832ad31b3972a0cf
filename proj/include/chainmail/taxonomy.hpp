#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chainmail/connectivity.hpp"

namespace chm {

/// The adjunction D(C) <-> L read through its right adjoint r(x) = C(x) and
/// left adjoint l(S) = join S. Only meaningful when the adjunction exists.
struct AdjointView {
  bool preserves_bottom = false;  // r(0) is the empty family
  bool reflects_bottom = false;   // r(x) empty only for x = 0
  bool right_inverse = false;     // l(r(x)) = x for all x
  bool left_inverse = false;      // r(l(S)) = S for all S in D(C)
  bool isomorphism = false;
};

struct TaxonomyReport {
  bool cl0 = false, cl1 = false, cl1_prime = false, cl1_half = false, cl2 = false, cl3 = false;
  bool preconnectivity = false, connectivity = false, kernel = false, typical = false;
  bool well_founded = false, saturated = false, separated = false, serra = false;
  bool absolute = false, degenerate = false;
  bool adjunction = false;
  AdjointView adjoint;
  /// Whether the class flags agree with their adjoint-language
  /// characterizations.
  bool views_consistent = false;
  /// Least counterexample for each condition that fails, in flag order.
  std::vector<std::pair<std::string, std::vector<Element>>> witnesses;

  std::vector<std::pair<std::string, bool>> flags() const {
    return {{"cl0", cl0},
            {"cl1", cl1},
            {"cl1_prime", cl1_prime},
            {"cl1_half", cl1_half},
            {"cl2", cl2},
            {"cl3", cl3},
            {"preconnectivity", preconnectivity},
            {"connectivity", connectivity},
            {"kernel", kernel},
            {"typical", typical},
            {"well_founded", well_founded},
            {"saturated", saturated},
            {"separated", separated},
            {"serra", serra},
            {"absolute", absolute},
            {"degenerate", degenerate}};
  }
};

inline TaxonomyReport classify(const ConnectivityPair& pc, const Limits& limits = {}) {
  TaxonomyReport r;
  const Lattice& L = pc.lattice();
  const ElementSet& C = pc.connected();
  auto note = [&](const char* name, std::vector<Element> w) { r.witnesses.emplace_back(name, std::move(w)); };

  r.cl0 = cl0(pc);
  if (!r.cl0) note("cl0", {pc.bottom()});
  auto w1 = cl1_witness(pc);
  r.cl1 = !w1;
  if (w1) note("cl1", w1->to_vector());
  auto w1p = cl1_prime_witness(pc);
  r.cl1_prime = !w1p;
  if (w1p) note("cl1_prime", {w1p->first, w1p->second});
  auto w1h = cl1_half_witness(pc);
  r.cl1_half = !w1h;
  if (w1h) note("cl1_half", {*w1h});
  auto w2 = cl2_witness(pc);
  r.cl2 = !w2;
  if (w2) note("cl2", {*w2});
  auto w3 = cl3_witness(pc, limits);
  r.cl3 = !w3;
  if (w3) note("cl3", w3->to_vector());

  FinitePoset induced = pc.poset().induced(C);
  r.preconnectivity = is_chainmail(induced);
  if (!r.preconnectivity) {
    std::vector<Element> members = C.to_vector();
    for_each_reduced_mail(induced, [&](const ElementSet& m) {
      if (join(induced, m)) return true;
      std::vector<Element> w;
      for (Element i : m) w.push_back(members[i]);
      note("preconnectivity", w);
      return false;
    });
  }
  auto sub = subchainmail_witness(pc.poset(), C);
  r.connectivity = !sub;
  if (sub) note("connectivity", sub->to_vector());

  r.adjunction = galois_adjunction_holds(pc);
  if (r.adjunction) {
    r.adjoint.preserves_bottom = components(pc, pc.bottom()).empty();
    r.adjoint.reflects_bottom = true;
    r.adjoint.right_inverse = true;
    for (Element x = 0; x < pc.size(); ++x) {
      ElementSet cx = components(pc, x);
      if (x != pc.bottom() && cx.empty()) r.adjoint.reflects_bottom = false;
      if (L.join(cx) != x) r.adjoint.right_inverse = false;
    }
    r.adjoint.left_inverse = r.cl3;
    r.adjoint.isomorphism = join_map_is_isomorphism(pc, limits);
  }

  r.kernel = r.connectivity && r.cl0;
  r.typical = r.cl1 && !r.cl0;
  r.well_founded = r.connectivity && r.cl1_half;
  r.saturated = r.connectivity && r.cl2;
  r.serra = r.typical && r.cl2;
  r.separated = r.connectivity && r.cl3;
  r.absolute = r.connectivity && r.adjoint.isomorphism;
  r.degenerate = C == pc.poset().elements();
  if (!r.degenerate) note("degenerate", {(pc.poset().elements() - C).front()});

  const AdjointView& a = r.adjoint;
  const bool con = r.connectivity;
  r.views_consistent = r.adjunction == con && r.kernel == (con && !a.preserves_bottom) &&
                       r.well_founded == (con && a.reflects_bottom) &&
                       r.saturated == (con && a.right_inverse) &&
                       (r.well_founded && r.typical) == (con && a.preserves_bottom && a.reflects_bottom) &&
                       r.serra == (con && a.right_inverse && a.preserves_bottom) &&
                       r.separated == (con && a.left_inverse) && r.absolute == (con && a.isomorphism) &&
                       r.degenerate == (con && a.right_inverse && !a.preserves_bottom);
  return r;
}

}  // namespace chm
