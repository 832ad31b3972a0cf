#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chainmail/limits.hpp"
#include "chainmail/poset.hpp"
#include "chainmail/taxonomy.hpp"

namespace chm {

using Json = nlohmann::ordered_json;

/// A relation as read from JSON, before validation.
struct RelationInput {
  OrderRelation relation;
  std::optional<ElementSet> connected;
};

/// Reads {"n", "leq", "closure"?, "connectivity"?}. Reflexive pairs are
/// implied; with "closure": "reflexive-transitive" the pairs are treated as
/// generators and closed.
inline RelationInput parse_relation(const Json& j, const Limits& limits = {}) {
  if (!j.is_object()) throw InvalidInput("poset JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InvalidInput("poset JSON needs an integer \"n\"");
  long long n = j["n"].get<long long>();
  if (n < 0) throw InvalidInput("\"n\" must be non-negative");
  limits.require_elements(static_cast<std::size_t>(n), "input poset");
  RelationInput in{OrderRelation(static_cast<std::size_t>(n)), std::nullopt};

  auto element = [&](const Json& v, const char* what) -> Element {
    if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " entries must be integers");
    long long x = v.get<long long>();
    if (x < 0 || x >= n) throw InvalidInput(std::string(what) + " entry " + std::to_string(x) + " out of range");
    return static_cast<Element>(x);
  };

  if (j.contains("leq")) {
    if (!j["leq"].is_array()) throw InvalidInput("\"leq\" must be a list of pairs");
    for (const Json& pair : j["leq"]) {
      if (!pair.is_array() || pair.size() != 2) throw InvalidInput("\"leq\" entries must be [a, b] pairs");
      in.relation.set(element(pair[0], "leq"), element(pair[1], "leq"));
    }
  }
  if (j.contains("closure")) {
    if (j["closure"] != "reflexive-transitive")
      throw InvalidInput("unsupported \"closure\" value; expected \"reflexive-transitive\"");
    in.relation.close_reflexive_transitive();
  } else {
    in.relation.add_reflexive();
  }
  if (j.contains("connectivity")) {
    if (!j["connectivity"].is_array()) throw InvalidInput("\"connectivity\" must be a list of elements");
    ElementSet c;
    for (const Json& v : j["connectivity"]) c.insert(element(v, "connectivity"));
    in.connected = c;
  }
  return in;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

/// Strict pairs a < b, sorted; reflexive pairs are left implicit.
inline Json poset_to_json(const FinitePoset& p, const std::optional<ElementSet>& connected = std::nullopt) {
  Json j;
  j["n"] = p.size();
  Json leq = Json::array();
  for (Element a = 0; a < p.size(); ++a)
    for (Element b : p.up(a))
      if (a != b) leq.push_back({a, b});
  j["leq"] = leq;
  if (connected) j["connectivity"] = connected->to_vector();
  return j;
}

inline Json report_to_json(const ConnectivityPair& pc, const TaxonomyReport& r) {
  Json j;
  j["lattice_size"] = pc.size();
  j["connectivity_set"] = pc.connected().to_vector();
  for (const auto& [name, value] : r.flags()) j[name] = value;
  j["adjunction"] = r.adjunction;
  Json a;
  a["preserves_bottom"] = r.adjoint.preserves_bottom;
  a["reflects_bottom"] = r.adjoint.reflects_bottom;
  a["right_inverse"] = r.adjoint.right_inverse;
  a["left_inverse"] = r.adjoint.left_inverse;
  a["isomorphism"] = r.adjoint.isomorphism;
  j["adjoint"] = a;
  j["views_consistent"] = r.views_consistent;
  Json w = Json::object();
  for (const auto& [name, elements] : r.witnesses) w[name] = elements;
  j["witnesses"] = w;
  return j;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

/// Hasse diagram drawn bottom to top. Elements of the same height share a
/// rank. With a connectivity set, its members are hollow and the rest
/// filled.
inline std::string export_dot(const FinitePoset& p, const std::optional<ElementSet>& connected = std::nullopt,
                              const std::vector<std::string>& labels = {}) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < p.size(); ++x) {
    std::string label = x < labels.size() ? labels[x] : std::to_string(x);
    out << "  n" << x << " [label=\"" << dot_escape(label) << "\"";
    if (connected) {
      if (connected->contains(x))
        out << ", style=solid";
      else
        out << ", style=filled, fillcolor=black, fontcolor=white";
    }
    out << "];\n";
  }
  std::map<std::size_t, std::vector<Element>> ranks;
  auto h = heights(p);
  for (Element x = 0; x < p.size(); ++x) ranks[h[x]].push_back(x);
  for (const auto& [height, members] : ranks) {
    out << "  { rank=same;";
    for (Element x : members) out << " n" << x << ";";
    out << " }\n";
  }
  for (auto [a, b] : cover_pairs(p)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace chm
