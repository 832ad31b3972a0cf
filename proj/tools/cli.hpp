#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chainmail/chainmail.hpp"

namespace chm::cli {

struct Source {
  std::string input;
  std::string fixture;
  std::string connectivity;
  bool pretty = false;
};

struct Loaded {
  FinitePoset poset;
  std::optional<ElementSet> connected;
  std::vector<std::string> labels;
};

inline std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline ElementSet parse_element_list(const std::string& text, std::size_t n) {
  ElementSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long x = 0;
    try {
      x = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad element in --connectivity: " + item);
    }
    if (used != item.size() || x >= n) throw InvalidInput("bad element in --connectivity: " + item);
    s.insert(static_cast<Element>(x));
  }
  return s;
}

inline RelationInput read_relation(const Source& src, const Limits& limits) {
  return parse_relation(parse_json_text(read_text(src.input)), limits);
}

inline Loaded load(const Source& src, const Limits& limits) {
  if (src.input.empty() == src.fixture.empty()) throw InvalidInput("give exactly one of --input or --fixture");
  Loaded l;
  if (!src.fixture.empty()) {
    Fixture f = named_fixture(src.fixture);
    l = {f.poset, f.connected, f.labels};
  } else {
    RelationInput in = read_relation(src, limits);
    if (auto v = validate(in.relation)) throw InvalidInput(v->describe());
    l.poset = FinitePoset(in.relation);
    l.connected = in.connected;
  }
  if (!src.connectivity.empty()) l.connected = parse_element_list(src.connectivity, l.poset.size());
  return l;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_report(std::ostream& out, const TaxonomyReport& r, const ConnectivityPair& pc) {
  out << "lattice size  " << pc.size() << "\n";
  out << "connected     " << to_string(pc.connected()) << "\n";
  for (const auto& [name, value] : r.flags()) out << std::left << std::setw(16) << name << yes_no(value) << "\n";
  out << std::left << std::setw(16) << "adjunction" << yes_no(r.adjunction) << "\n";
  out << std::left << std::setw(16) << "consistent" << yes_no(r.views_consistent) << "\n";
  for (const auto& [name, w] : r.witnesses) {
    out << "witness " << std::left << std::setw(16) << name;
    for (Element x : w) out << " " << x;
    out << "\n";
  }
}

inline int cmd_validate(const Source& src, const Limits& limits, std::ostream& out, std::ostream& err) {
  FinitePoset p;
  if (!src.fixture.empty()) {
    p = named_fixture(src.fixture).poset;
  } else {
    if (src.input.empty()) throw InvalidInput("give exactly one of --input or --fixture");
    RelationInput in = read_relation(src, limits);
    if (auto v = validate(in.relation)) {
      err << "error: " << v->describe() << "\n";
      Json j;
      j["valid"] = false;
      j["axiom"] = to_string(v->axiom);
      j["witness"] = v->witness;
      emit(out, j);
      return 1;
    }
    p = FinitePoset(in.relation);
  }
  Json j;
  j["valid"] = true;
  j["n"] = p.size();
  j["chainmail"] = is_chainmail(p);
  j["mail_connected"] = is_mail_connected(p, p.elements());
  j["complete_lattice"] = is_complete_lattice(p);
  if (src.pretty) {
    for (auto it = j.begin(); it != j.end(); ++it) out << std::left << std::setw(18) << it.key() << it.value() << "\n";
  } else {
    emit(out, j);
  }
  return 0;
}

inline int cmd_classify(const Source& src, const Limits& limits, std::ostream& out) {
  Loaded l = load(src, limits);
  if (!l.connected) throw InvalidInput("classify needs a connectivity set (JSON field or --connectivity)");
  ConnectivityPair pc(l.poset, *l.connected);
  TaxonomyReport r = classify(pc, limits);
  if (src.pretty)
    print_report(out, r, pc);
  else
    emit(out, report_to_json(pc, r));
  return 0;
}

inline int cmd_exterior(const Source& src, const Limits& limits, std::ostream& out) {
  Loaded l = load(src, limits);
  TmdFamily d = exterior(l.poset, limits);
  bool complete = is_complete_lattice(d.order);
  if (src.pretty) {
    out << "base size  " << l.poset.size() << "\n";
    out << "tmd sets   " << d.sets.size() << "\n";
    out << "complete   " << yes_no(complete) << "\n";
    for (std::size_t i = 0; i < d.sets.size(); ++i) out << std::setw(4) << i << "  " << to_string(d.sets[i]) << "\n";
    return 0;
  }
  Json j;
  j["n"] = l.poset.size();
  j["count"] = d.sets.size();
  j["complete"] = complete;
  Json sets = Json::array();
  for (const ElementSet& s : d.sets) sets.push_back(s.to_vector());
  j["sets"] = sets;
  j["order"] = poset_to_json(d.order);
  emit(out, j);
  return 0;
}

struct EnumerateArgs {
  std::size_t n = 0;
  std::string kind = "chainmails";
  std::string catalog;
  bool deep = false;
  std::size_t threads = 1;
};

inline int cmd_enumerate(const EnumerateArgs& a, bool pretty, const Limits& limits, std::ostream& out,
                         std::ostream& err) {
  EnumerationOptions o;
  o.threads = a.threads == 0 ? default_threads() : a.threads;
  o.catalog = !a.catalog.empty();
  o.deep = a.deep;
  o.limits = limits;
  EnumerationKind kind = a.kind == "posets" ? EnumerationKind::posets : EnumerationKind::chainmails;
  EnumerationResult r = enumerate(kind, a.n, o);
  if (o.catalog) {
    std::ofstream cat(a.catalog);
    if (!cat) throw InvalidInput("cannot write catalog to " + a.catalog);
    for (const FinitePoset& p : r.catalog) cat << poset_to_json(p).dump() << "\n";
  }
  err << "elapsed " << std::fixed << std::setprecision(3) << r.elapsed.count() << " s\n";
  if (pretty) {
    out << to_string(kind) << " on " << r.n << " elements: " << r.count << "\n";
  } else {
    Json j;
    j["n"] = r.n;
    j["count"] = r.count;
    j["kind"] = to_string(kind);
    emit(out, j);
  }
  return 0;
}

inline int cmd_fixtures(const std::string& name, bool pretty, std::ostream& out) {
  if (name.empty()) {
    if (pretty) {
      for (const std::string& n : fixture_names()) {
        Fixture f = named_fixture(n);
        out << std::left << std::setw(8) << n << std::right << std::setw(5) << f.poset.size() << "  "
            << f.description << "\n";
      }
      return 0;
    }
    Json list = Json::array();
    for (const std::string& n : fixture_names()) {
      Fixture f = named_fixture(n);
      Json j;
      j["name"] = n;
      j["n"] = f.poset.size();
      j["connectivity"] = f.connected.has_value();
      j["description"] = f.description;
      list.push_back(j);
    }
    emit(out, list);
    return 0;
  }
  Fixture f = named_fixture(name);
  Json j = poset_to_json(f.poset, f.connected);
  j["labels"] = f.labels;
  out << (pretty ? j.dump(2) : j.dump()) << "\n";
  return 0;
}

inline int cmd_export_dot(const Source& src, const Limits& limits, std::ostream& out) {
  Loaded l = load(src, limits);
  out << export_dot(l.poset, l.connected, l.labels);
  return 0;
}

/// Runs the command line. Exit codes: 0 success, 1 bad input, 2 a size
/// guard was hit.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite chainmails, exteriors and connectivity lattices", "chainmail"};
  app.require_subcommand(1);

  Source src;
  EnumerateArgs en;
  std::string fixture_name;

  auto add_source = [&](CLI::App* sub, bool with_connectivity) {
    sub->add_option("--input", src.input, "poset JSON file, or - for stdin");
    sub->add_option("--fixture", src.fixture, "named fixture");
    if (with_connectivity)
      sub->add_option("--connectivity", src.connectivity, "comma-separated connected elements (overrides input)");
    sub->add_flag("--pretty", src.pretty, "human-readable output");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the partial-order axioms");
  add_source(validate_cmd, false);
  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a connectivity pair");
  add_source(classify_cmd, true);
  CLI::App* exterior_cmd = app.add_subcommand("exterior", "totally mail-disconnected sets and their order");
  add_source(exterior_cmd, false);
  CLI::App* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  add_source(dot_cmd, true);

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "count posets or connected chainmails up to isomorphism");
  enum_cmd->add_option("--n", en.n, "number of elements")->required();
  enum_cmd->add_option("--kind", en.kind, "posets or chainmails")->check(CLI::IsMember({"posets", "chainmails"}));
  enum_cmd->add_option("--catalog", en.catalog, "write canonical representatives as JSON lines");
  enum_cmd->add_flag("--deep", en.deep, "allow the larger sizes");
  enum_cmd->add_option("--threads", en.threads, "worker threads (0 = all cores)");
  enum_cmd->add_flag("--pretty", src.pretty, "human-readable output");

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "list fixtures, or print one");
  fixtures_cmd->add_option("--name", fixture_name, "fixture to print");
  fixtures_cmd->add_flag("--pretty", src.pretty, "human-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    Limits limits = Limits::from_environment();
    if (*validate_cmd) return cmd_validate(src, limits, out, err);
    if (*classify_cmd) return cmd_classify(src, limits, out);
    if (*exterior_cmd) return cmd_exterior(src, limits, out);
    if (*dot_cmd) return cmd_export_dot(src, limits, out);
    if (*enum_cmd) return cmd_enumerate(en, src.pretty, limits, out, err);
    if (*fixtures_cmd) return cmd_fixtures(fixture_name, src.pretty, out);
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace chm::cli
