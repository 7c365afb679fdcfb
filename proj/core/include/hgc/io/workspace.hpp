#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgc/grothendieck/diagram.hpp"
#include "hgc/marked/marked_set.hpp"
#include "hgc/scat/category.hpp"
#include "hgc/scat/errors.hpp"
#include "hgc/scat/simplicial_map.hpp"

namespace hgc {

using Json = nlohmann::json;

/// Malformed workspace documents: bad JSON, schema mismatch, unknown fields,
/// unresolved names, or tables that fail construction.
class ParseError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kSchemaVersion = 1;

/// A workspace document (schema 1):
///
///   { "schema": 1, "dim_bound": N, "budget": B,
///     "categories": { name: {"generator": "poset 3"}
///                         | {"objects": [...], "arrows": [{"name","source","target"}],
///                            "composites": [[g, f, "g o f"], ...]} },
///     "sets":       { name: {"generator": "delta n" | "horn n i" | "boundary n" | "J" | "nerve C"}
///                         | {"dim", "counts", "faces", "degeneracies", "labels"?, "vertices"?} },
///     "marked":     { name: {"set": S, "marking": "flat" | "sharp" | "equivalences" | [edge ids]} },
///     "maps":       { name: {"source": S, "target": T, "components": [[...], ...]}
///                         | {"source": S, "target": T, "classifying": [n, x]} },
///     "diagrams":   { name: {"base": C, "values": {object: set}, "maps": {morphism: map},
///                            "marking"?: "flat" | "sharp" | "equivalences" | {object: marked}}
///                         | {"base": C, "constant": set, "marking"?: ...} },
///     "report":     { ... free-form, carried through unchanged } }
///
/// Generators are built at dim_bound; explicit tables keep their own bound.
/// Identity morphisms default to identity maps, and a missing morphism is
/// filled in when it is a composite of given ones. Every section is optional.
class Workspace {
 public:
  Workspace() = default;

  /// Throws ParseError.
  static Workspace parse(const Json& doc, std::optional<int> dim_bound_override = {});
  static Workspace parse_text(const std::string& text, std::optional<int> dim_bound_override = {});
  static Workspace load(const std::string& path, std::optional<int> dim_bound_override = {});

  /// Canonical form: sorted keys, two-space indentation, trailing newline.
  Json to_json() const;
  std::string dump() const;

  int dim_bound() const { return dim_bound_; }
  std::uint64_t budget() const { return budget_; }
  void set_budget(std::uint64_t b) { budget_ = b; }

  CategoryPtr category(const std::string& name) const;
  SSetPtr set(const std::string& name) const;
  const MarkedSimplicialSet& marked(const std::string& name) const;
  const SimplicialMap& map(const std::string& name) const;
  const Diagram& diagram(const std::string& name) const;

  std::vector<std::string> category_names() const;
  std::vector<std::string> set_names() const;
  std::vector<std::string> marked_names() const;
  std::vector<std::string> map_names() const;
  std::vector<std::string> diagram_names() const;

  /// Output entries, written in explicit form.
  void add_set(const std::string& name, const SSetPtr& s);
  void add_marked(const std::string& name, const std::string& set_name, const MarkedSimplicialSet& m);
  void add_map(const std::string& name, const std::string& source, const std::string& target,
               const SimplicialMap& f);
  Json& report() { return report_; }

 private:
  template <class T>
  struct Entry {
    Json node;
    T value;
  };

  int dim_bound_ = 3;
  std::uint64_t budget_ = 50'000'000;
  std::map<std::string, Entry<CategoryPtr>> categories_;
  std::map<std::string, Entry<SSetPtr>> sets_;
  std::map<std::string, Entry<MarkedSimplicialSet>> marked_;
  std::map<std::string, Entry<SimplicialMap>> maps_;
  std::map<std::string, Entry<Diagram>> diagrams_;
  Json report_ = Json::object();
};

Json set_to_json(const SimplicialSet& s);
/// Throws ParseError.
SSetPtr set_from_json(const Json& j);
Json category_to_json(const FiniteCategory& c);
Json map_components_to_json(const SimplicialMap& f);

}  // namespace hgc
