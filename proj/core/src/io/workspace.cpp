#include "hgc/io/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hgc/marked/equivalence.hpp"
#include "hgc/scat/standard.hpp"

namespace hgc {

namespace {

void allow_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ParseError(where + ": unknown field \"" + k + "\"");
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

template <class T>
T as(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int to_int(const std::string& w, const std::string& where) {
  try {
    std::size_t used = 0;
    int v = std::stoi(w, &used);
    if (used != w.size()) throw std::invalid_argument(w);
    return v;
  } catch (const std::exception&) {
    throw ParseError(where + ": expected an integer, got \"" + w + "\"");
  }
}

template <class F>
auto wrap(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

template <class M>
std::vector<std::string> names_of(const M& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

}  // namespace

Json set_to_json(const SimplicialSet& s) {
  Json j;
  j["dim"] = s.dim();
  j["counts"] = s.counts();
  Json faces = Json::array();
  for (int n = 1; n <= s.dim(); ++n) faces.push_back(s.face_table()[n]);
  j["faces"] = faces;
  Json degens = Json::array();
  for (int n = 0; n < s.dim(); ++n) degens.push_back(s.degeneracy_table()[n]);
  j["degeneracies"] = degens;
  if (s.has_labels()) {
    Json labels = Json::array();
    for (int n = 0; n <= s.dim(); ++n) {
      Json row = Json::array();
      for (Simplex x = 0; x < s.size(n); ++x) row.push_back(s.label(n, x));
      labels.push_back(row);
    }
    j["labels"] = labels;
  }
  if (!s.declared_vertices().empty()) j["vertices"] = s.declared_vertices();
  return j;
}

SSetPtr set_from_json(const Json& j) {
  const std::string where = "explicit simplicial set";
  allow_keys(j, {"dim", "counts", "faces", "degeneracies", "labels", "vertices"}, where);
  const int dim = as<int>(field(j, "dim", where), where + " dim");
  if (dim < 0) throw ParseError(where + ": negative dim");
  auto counts = as<std::vector<std::size_t>>(field(j, "counts", where), where + " counts");
  auto faces_in = as<std::vector<std::vector<std::vector<Simplex>>>>(field(j, "faces", where), where + " faces");
  auto degens_in =
      as<std::vector<std::vector<std::vector<Simplex>>>>(field(j, "degeneracies", where), where + " degeneracies");
  if (static_cast<int>(faces_in.size()) != dim || static_cast<int>(degens_in.size()) != dim)
    throw ParseError(where + ": faces and degeneracies need one entry per degree 1.." + std::to_string(dim));
  SimplicialSet::Table faces(static_cast<std::size_t>(dim + 1));
  SimplicialSet::Table degens(static_cast<std::size_t>(dim + 1));
  for (int n = 1; n <= dim; ++n) faces[n] = std::move(faces_in[n - 1]);
  for (int n = 0; n < dim; ++n) degens[n] = std::move(degens_in[n]);
  std::vector<std::vector<std::string>> labels;
  if (j.contains("labels")) labels = as<std::vector<std::vector<std::string>>>(j["labels"], where + " labels");
  return wrap(where, [&] {
    auto s = std::make_shared<SimplicialSet>(dim, counts, std::move(faces), std::move(degens), std::move(labels));
    if (j.contains("vertices"))
      s->declare_vertices(as<std::vector<std::vector<std::vector<Simplex>>>>(j["vertices"], where + " vertices"));
    return SSetPtr(s);
  });
}

Json category_to_json(const FiniteCategory& c) {
  Json j;
  Json objects = Json::array();
  for (Object d = 0; d < c.num_objects(); ++d) objects.push_back(c.object_name(d));
  j["objects"] = objects;
  Json arrows = Json::array();
  for (Morphism f = 0; f < c.num_morphisms(); ++f)
    if (!c.is_identity(f))
      arrows.push_back({{"name", c.morphism_name(f)},
                        {"source", c.object_name(c.source(f))},
                        {"target", c.object_name(c.target(f))}});
  j["arrows"] = arrows;
  Json composites = Json::array();
  for (Morphism g = 0; g < c.num_morphisms(); ++g)
    for (Morphism f = 0; f < c.num_morphisms(); ++f) {
      if (c.is_identity(g) || c.is_identity(f)) continue;
      const Morphism gf = c.compose(g, f);
      if (gf >= 0) composites.push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(gf)});
    }
  j["composites"] = composites;
  return j;
}

Json map_components_to_json(const SimplicialMap& f) { return f.components(); }

Workspace Workspace::parse_text(const std::string& text, std::optional<int> dim_bound_override) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse(doc, dim_bound_override);
}

Workspace Workspace::load(const std::string& path, std::optional<int> dim_bound_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), dim_bound_override);
}

Workspace Workspace::parse(const Json& doc, std::optional<int> dim_bound_override) {
  allow_keys(doc, {"schema", "dim_bound", "budget", "categories", "sets", "marked", "maps", "diagrams", "report"},
             "workspace");
  const int schema = as<int>(field(doc, "schema", "workspace"), "schema");
  if (schema != kSchemaVersion)
    throw ParseError("unsupported schema " + std::to_string(schema) + " (expected " +
                     std::to_string(kSchemaVersion) + ")");
  Workspace w;
  if (doc.contains("dim_bound")) w.dim_bound_ = as<int>(doc["dim_bound"], "dim_bound");
  if (dim_bound_override) w.dim_bound_ = *dim_bound_override;
  if (w.dim_bound_ < 0) throw ParseError("dim_bound must be nonnegative");
  if (doc.contains("budget")) w.budget_ = as<std::uint64_t>(doc["budget"], "budget");
  if (doc.contains("report")) w.report_ = doc["report"];
  auto section = [&](const char* name) -> Json {
    if (!doc.contains(name)) return Json::object();
    if (!doc[name].is_object()) throw ParseError(std::string(name) + ": expected an object");
    return doc[name];
  };
  const int dim = w.dim_bound_;

  const Json sec_categories = section("categories");
  for (const auto& [name, node] : sec_categories.items()) {
    const std::string where = "category \"" + name + "\"";
    CategoryPtr c;
    if (node.contains("generator")) {
      allow_keys(node, {"generator"}, where);
      c = wrap(where, [&] { return categories::by_name(as_string(node["generator"], where)); });
    } else {
      allow_keys(node, {"objects", "arrows", "composites"}, where);
      auto objects = as<std::vector<std::string>>(field(node, "objects", where), where + " objects");
      std::vector<FiniteCategory::Arrow> arrows;
      std::vector<std::vector<std::string>> composites;
      if (node.contains("arrows"))
        for (const auto& a : node["arrows"]) {
          allow_keys(a, {"name", "source", "target"}, where + " arrow");
          arrows.push_back({as_string(field(a, "name", where), where), 0, 0});
          auto src = as_string(field(a, "source", where), where);
          auto tgt = as_string(field(a, "target", where), where);
          auto find = [&](const std::string& o) {
            for (std::size_t i = 0; i < objects.size(); ++i)
              if (objects[i] == o) return static_cast<Object>(i);
            throw ParseError(where + ": unknown object \"" + o + "\"");
          };
          arrows.back().source = find(src);
          arrows.back().target = find(tgt);
        }
      if (node.contains("composites"))
        composites = as<std::vector<std::vector<std::string>>>(node["composites"], where + " composites");
      c = wrap(where, [&] { return make_category(objects, arrows, composites); });
    }
    w.categories_.emplace(name, Entry<CategoryPtr>{node, c});
  }

  const Json sec_sets = section("sets");
  for (const auto& [name, node] : sec_sets.items()) {
    const std::string where = "set \"" + name + "\"";
    SSetPtr s;
    if (node.contains("generator")) {
      allow_keys(node, {"generator"}, where);
      auto g = words(as_string(node["generator"], where));
      s = wrap(where, [&]() -> SSetPtr {
        if (g.size() == 2 && g[0] == "delta") return standard::delta(to_int(g[1], where), dim).set;
        if (g.size() == 3 && g[0] == "horn") return standard::horn(to_int(g[1], where), to_int(g[2], where), dim).set;
        if (g.size() == 2 && g[0] == "boundary") return standard::boundary(to_int(g[1], where), dim).set;
        if (g.size() == 1 && g[0] == "J") return standard::J(dim).set;
        if (g.size() == 2 && g[0] == "nerve") return Nerve(w.category(g[1]), dim).set();
        throw ParseError(where + ": unknown generator");
      });
    } else {
      s = wrap(where, [&] { return set_from_json(node); });
    }
    w.sets_.emplace(name, Entry<SSetPtr>{node, s});
  }

  const Json sec_marked = section("marked");
  for (const auto& [name, node] : sec_marked.items()) {
    const std::string where = "marked set \"" + name + "\"";
    allow_keys(node, {"set", "marking"}, where);
    auto s = w.set(as_string(field(node, "set", where), where));
    const auto& m = field(node, "marking", where);
    MarkedSimplicialSet ms = wrap(where, [&]() -> MarkedSimplicialSet {
      if (m.is_string()) {
        auto kind = m.get<std::string>();
        if (kind == "flat") return flat(s);
        if (kind == "sharp") return sharp(s);
        if (kind == "equivalences") return mark_equivalences(s);
        throw ParseError(where + ": unknown marking \"" + kind + "\"");
      }
      auto edges = as<std::vector<Simplex>>(m, where + " marking");
      if (s->dim() < 1 && !edges.empty()) throw ParseError(where + ": no edges to mark");
      for (Simplex e : edges)
        if (e >= s->size(1)) throw ParseError(where + ": edge " + std::to_string(e) + " out of range");
      return marked_with(s, edges);
    });
    w.marked_.emplace(name, Entry<MarkedSimplicialSet>{node, ms});
  }

  const Json sec_maps = section("maps");
  for (const auto& [name, node] : sec_maps.items()) {
    const std::string where = "map \"" + name + "\"";
    allow_keys(node, {"source", "target", "components", "classifying"}, where);
    auto src = w.set(as_string(field(node, "source", where), where));
    auto tgt = w.set(as_string(field(node, "target", where), where));
    SimplicialMap f = wrap(where, [&]() -> SimplicialMap {
      if (node.contains("classifying")) {
        auto nx = as<std::vector<int>>(node["classifying"], where + " classifying");
        if (nx.size() != 2 || nx[0] < 0 || nx[1] < 0) throw ParseError(where + ": classifying needs [n, x]");
        return SimplicialMap::classifying(src, tgt, nx[0], static_cast<Simplex>(nx[1]));
      }
      auto comps = as<std::vector<std::vector<Simplex>>>(field(node, "components", where), where + " components");
      return SimplicialMap(src, tgt, std::move(comps));
    });
    w.maps_.emplace(name, Entry<SimplicialMap>{node, f});
  }

  const Json sec_diagrams = section("diagrams");
  for (const auto& [name, node] : sec_diagrams.items()) {
    const std::string where = "diagram \"" + name + "\"";
    allow_keys(node, {"base", "values", "maps", "marking", "constant"}, where);
    auto base = w.category(as_string(field(node, "base", where), where));
    Diagram x{base, {}, {}, {}};
    if (node.contains("constant")) {
      if (node.contains("values") || node.contains("maps"))
        throw ParseError(where + ": \"constant\" excludes \"values\" and \"maps\"");
      x = constant_diagram(base, w.set(as_string(node["constant"], where)));
    } else {
      const auto& values = field(node, "values", where);
      for (Object d = 0; d < base->num_objects(); ++d) {
        const auto& o = base->object_name(d);
        if (!values.contains(o)) throw ParseError(where + ": no value for object \"" + o + "\"");
        x.values.push_back(w.set(as_string(values[o], where)));
      }
      for (const auto& [o, v] : values.items())
        if (!base->find_object(o)) throw ParseError(where + ": unknown object \"" + o + "\"");
      std::vector<std::optional<SimplicialMap>> maps(static_cast<std::size_t>(base->num_morphisms()));
      if (node.contains("maps"))
        for (const auto& [m, ref] : node["maps"].items()) {
          auto f = base->find_morphism(m);
          if (!f) throw ParseError(where + ": unknown morphism \"" + m + "\"");
          maps[*f] = w.map(as_string(ref, where));
        }
      for (Object d = 0; d < base->num_objects(); ++d)
        if (!maps[base->identity(d)]) maps[base->identity(d)] = SimplicialMap::identity(x.values[d]);
      for (bool progress = true; progress;) {
        progress = false;
        for (Morphism g = 0; g < base->num_morphisms(); ++g)
          for (Morphism f = 0; f < base->num_morphisms(); ++f) {
            const Morphism gf = base->compose(g, f);
            if (gf < 0 || maps[gf] || !maps[g] || !maps[f]) continue;
            maps[gf] = wrap(where, [&] { return compose(*maps[g], *maps[f]); });
            progress = true;
          }
      }
      for (Morphism f = 0; f < base->num_morphisms(); ++f) {
        if (!maps[f]) throw ParseError(where + ": no map for morphism \"" + base->morphism_name(f) + "\"");
        if (maps[f]->source() != x.values[base->source(f)] || maps[f]->target() != x.values[base->target(f)])
          throw ParseError(where + ": map for \"" + base->morphism_name(f) + "\" has the wrong endpoints");
        x.maps.push_back(*maps[f]);
      }
    }
    if (node.contains("marking")) {
      const auto& m = node["marking"];
      if (m.is_string()) {
        auto kind = m.get<std::string>();
        if (kind == "flat") x = with_flat_marking(x);
        else if (kind == "sharp") x = with_sharp_marking(x);
        else if (kind == "equivalences") x = with_equivalence_marking(x);
        else throw ParseError(where + ": unknown marking \"" + kind + "\"");
      } else {
        for (Object d = 0; d < base->num_objects(); ++d) {
          const auto& o = base->object_name(d);
          if (!m.contains(o)) throw ParseError(where + ": no marking for object \"" + o + "\"");
          const auto& ms = w.marked(as_string(m[o], where));
          if (ms.set != x.values[d]) throw ParseError(where + ": marking for \"" + o + "\" is on another set");
          x.marking.push_back(ms.marked);
        }
      }
    }
    w.diagrams_.emplace(name, Entry<Diagram>{node, std::move(x)});
  }
  return w;
}

Json Workspace::to_json() const {
  Json j;
  j["schema"] = kSchemaVersion;
  j["dim_bound"] = dim_bound_;
  j["budget"] = budget_;
  auto emit = [&](const char* key, const auto& entries) {
    if (entries.empty()) return;
    Json s = Json::object();
    for (const auto& [name, e] : entries) s[name] = e.node;
    j[key] = s;
  };
  emit("categories", categories_);
  emit("sets", sets_);
  emit("marked", marked_);
  emit("maps", maps_);
  emit("diagrams", diagrams_);
  if (!report_.empty()) j["report"] = report_;
  return j;
}

std::string Workspace::dump() const { return to_json().dump(2) + "\n"; }

CategoryPtr Workspace::category(const std::string& name) const {
  auto it = categories_.find(name);
  if (it == categories_.end()) throw ParseError("unknown category \"" + name + "\"");
  return it->second.value;
}

SSetPtr Workspace::set(const std::string& name) const {
  auto it = sets_.find(name);
  if (it == sets_.end()) throw ParseError("unknown set \"" + name + "\"");
  return it->second.value;
}

const MarkedSimplicialSet& Workspace::marked(const std::string& name) const {
  auto it = marked_.find(name);
  if (it == marked_.end()) throw ParseError("unknown marked set \"" + name + "\"");
  return it->second.value;
}

const SimplicialMap& Workspace::map(const std::string& name) const {
  auto it = maps_.find(name);
  if (it == maps_.end()) throw ParseError("unknown map \"" + name + "\"");
  return it->second.value;
}

const Diagram& Workspace::diagram(const std::string& name) const {
  auto it = diagrams_.find(name);
  if (it == diagrams_.end()) throw ParseError("unknown diagram \"" + name + "\"");
  return it->second.value;
}

std::vector<std::string> Workspace::category_names() const { return names_of(categories_); }
std::vector<std::string> Workspace::set_names() const { return names_of(sets_); }
std::vector<std::string> Workspace::marked_names() const { return names_of(marked_); }
std::vector<std::string> Workspace::map_names() const { return names_of(maps_); }
std::vector<std::string> Workspace::diagram_names() const { return names_of(diagrams_); }

void Workspace::add_set(const std::string& name, const SSetPtr& s) {
  sets_.insert_or_assign(name, Entry<SSetPtr>{set_to_json(*s), s});
}

void Workspace::add_marked(const std::string& name, const std::string& set_name, const MarkedSimplicialSet& m) {
  Json edges = Json::array();
  for (Simplex e : m.marked_edges())
    if (!m.set->degenerate(1, e)) edges.push_back(e);
  marked_.insert_or_assign(name, Entry<MarkedSimplicialSet>{{{"set", set_name}, {"marking", edges}}, m});
}

void Workspace::add_map(const std::string& name, const std::string& source, const std::string& target,
                        const SimplicialMap& f) {
  maps_.insert_or_assign(
      name, Entry<SimplicialMap>{{{"source", source}, {"target", target}, {"components", f.components()}}, f});
}

}  // namespace hgc
