#include "hgc/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "hgc/fibrations/lifting.hpp"
#include "hgc/grothendieck/gerbe.hpp"
#include "hgc/grothendieck/relative_nerve.hpp"
#include "hgc/grothendieck/total.hpp"
#include "hgc/hocolim/bar.hpp"
#include "hgc/hocolim/colimit.hpp"
#include "hgc/io/workspace.hpp"
#include "hgc/marked/equivalence.hpp"
#include "hgc/marked/localization.hpp"
#include "hgc/scat/errors.hpp"
#include "hgc/scat/standard.hpp"
#include "hgc/scat/validate.hpp"
#include "hgc/suite/criteria.hpp"

namespace hgc::cli {

namespace {

/// Bad selectors or flag values; reported like parse errors.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string workspace;
  std::optional<int> dim_bound;
  std::optional<std::uint64_t> budget;
  int nmax = 3;
  int witness_depth = 0;
  std::string out;
  std::string category, set, marked, map, diagram, target;
  std::string simplex;
  int degree = 0;
  std::optional<int> kmax;
  std::optional<int> criterion;
};

/// Everything one command needs: the parsed workspace (which also receives
/// the outputs) and the step budget.
struct Run {
  const Options& opt;
  Workspace ws;
  Budget budget;
  bool defects = false;

  Json& report() { return ws.report(); }
  int dim() const { return ws.dim_bound(); }
};

Json stats(const SimplicialSet& s) {
  Json counts = Json::array();
  Json nondeg = Json::array();
  for (int n = 0; n <= s.dim(); ++n) {
    counts.push_back(s.size(n));
    nondeg.push_back(s.nondegenerate(n).size());
  }
  return {{"counts", counts}, {"nondegenerate", nondeg}};
}

Json report_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(x.rule + ": " + x.where);
  return {{"ok", r.ok()}, {"violations", r.total}, {"listed", v}};
}

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

/// The named entry, or the only entry when no name was given.
std::string choose(const std::string& given, const std::vector<std::string>& names, const char* kind) {
  if (!given.empty()) return given;
  if (names.size() == 1) return names.front();
  throw UsageError(std::string("pass --") + kind + " to choose among " + std::to_string(names.size()) + " " + kind +
                   " entries");
}

/// A name under which `s` appears in the workspace, adding it as `fallback` if absent.
std::string set_name(Run& r, const SSetPtr& s, const std::string& fallback) {
  for (const auto& n : r.ws.set_names())
    if (r.ws.set(n) == s) return n;
  r.ws.add_set(fallback, s);
  return fallback;
}

Simplex parse_simplex(const SimplicialSet& s, int n, const std::string& text) {
  if (n < 0 || n > s.dim()) throw UsageError("degree " + std::to_string(n) + " is outside 0.." + std::to_string(s.dim()));
  if (auto found = s.find_label(n, text)) return *found;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used == text.size() && v < s.size(n)) return static_cast<Simplex>(v);
  } catch (const std::exception&) {
  }
  throw UsageError("no " + std::to_string(n) + "-simplex \"" + text + "\"");
}

// commands

void cmd_validate(Run& r) {
  Json out = Json::object();
  auto note = [&](const char* kind, const std::string& name, const ValidationReport& v) {
    out[kind][name] = report_json(v);
    r.defects = r.defects || !v.ok();
  };
  for (const auto& n : r.ws.category_names()) note("categories", n, validate(*r.ws.category(n)));
  for (const auto& n : r.ws.set_names()) note("sets", n, validate(*r.ws.set(n)));
  for (const auto& n : r.ws.marked_names()) note("marked", n, validate(r.ws.marked(n)));
  for (const auto& n : r.ws.map_names()) note("maps", n, validate(r.ws.map(n)));
  for (const auto& n : r.ws.diagram_names()) note("diagrams", n, validate(r.ws.diagram(n)));
  r.report()["valid"] = !r.defects;
  r.report()["entries"] = out;
}

CategoryPtr resolve_category(Run& r, std::string& name) {
  const auto names = r.ws.category_names();
  if (!r.opt.category.empty() && std::find(names.begin(), names.end(), r.opt.category) == names.end()) {
    name = r.opt.category;
    try {
      return categories::by_name(r.opt.category);
    } catch (const InvalidArgument&) {
      throw UsageError("unknown category \"" + r.opt.category + "\"");
    }
  }
  name = choose(r.opt.category, names, "category");
  return r.ws.category(name);
}

void cmd_nerve(Run& r) {
  std::string name;
  auto c = resolve_category(r, name);
  Nerve nerve(c, r.dim());
  r.ws.add_set("N(" + name + ")", nerve.set());
  r.report()["category"] = name;
  r.report()["nerve"] = stats(*nerve.set());
}

void cmd_gerbe(Run& r) {
  const auto dname = choose(r.opt.diagram, r.ws.diagram_names(), "diagram");
  const auto& x = r.ws.diagram(dname);
  const int n = r.opt.degree;
  if (n < 0 || n > x.dim()) throw UsageError("--degree must lie in 0.." + std::to_string(x.dim()));
  const int k_max = r.opt.kmax.value_or(x.dim() - n);
  GerbeContext ctx(x, k_max, &r.budget);
  const auto& ns = *ctx.nerve().set();
  const Simplex sigma = r.opt.simplex.empty() ? 0 : parse_simplex(ns, n, r.opt.simplex);
  auto g = gerbe(ctx, n, sigma);
  const std::string base = dname + ".G" + std::to_string(n) + "(" + ns.label(n, sigma) + ")";
  r.ws.add_set(base, g.set);
  const auto& fc = ctx.complex(n, ctx.nerve().object(n, sigma, n));
  const auto fc_name = set_name(r, fc.set(), base + ".p2.target");
  r.ws.add_map(base + ".p2", base, fc_name, g.p2);
  auto v = validate(*g.set);
  v.merge(validate(g.p2), "p2");
  r.defects = !v.ok();
  r.report()["diagram"] = dname;
  r.report()["simplex"] = ns.label(n, sigma);
  r.report()["k_max"] = k_max;
  r.report()["gerbe"] = stats(*g.set);
  r.report()["p2_bijective"] = g.p2.bijective();
  r.report()["validation"] = report_json(v);
}

void cmd_grothendieck(Run& r) {
  const auto dname = choose(r.opt.diagram, r.ws.diagram_names(), "diagram");
  const auto& x = r.ws.diagram(dname);
  auto total = grothendieck_total(x, &r.budget);
  const auto nerve_name = set_name(r, total.nerve->set(), dname + ".nerve");
  r.ws.add_set(dname + ".total", total.object.set);
  r.ws.add_map(dname + ".total.p", dname + ".total", nerve_name, total.projection);
  auto v = validate(*total.object.set);
  v.merge(validate(total.projection), "projection");
  r.report()["diagram"] = dname;
  r.report()["total"] = stats(*total.object.set);
  r.report()["validation"] = report_json(v);
  r.defects = !v.ok();
  if (x.dim() >= 1) {
    const int k_max = r.opt.kmax.value_or(x.dim() - 1);
    auto space = grothendieck_space(x, 1, k_max, &r.budget);
    auto sv = validate(space.space);
    auto zc = compare_zeroth_column(x, space, total, &r.budget);
    r.report()["simplicial_space"] = {{"rows", 2}, {"k_max", k_max}, {"validation", report_json(sv)}};
    r.report()["zeroth_column"] = report_json(zc);
    r.defects = r.defects || !sv.ok() || !zc.ok();
  }
}

void cmd_relnerve(Run& r) {
  const auto dname = choose(r.opt.diagram, r.ws.diagram_names(), "diagram");
  const auto& x = r.ws.diagram(dname);
  auto rn = relative_nerve(x);
  const auto nerve_name = set_name(r, rn.nerve->set(), dname + ".nerve");
  r.ws.add_set(dname + ".relnerve", rn.object.set);
  r.ws.add_map(dname + ".relnerve.p", dname + ".relnerve", nerve_name, rn.projection);
  auto v = validate(*rn.object.set);
  v.merge(validate(rn.projection), "projection");
  if (x.is_marked()) {
    auto m = marked_relative_nerve(rn, x);
    r.ws.add_marked(dname + ".relnerve+", dname + ".relnerve", m);
    v.merge(validate(m), "marking");
  }
  r.defects = !v.ok();
  r.report()["diagram"] = dname;
  r.report()["relative_nerve"] = stats(*rn.object.set);
  r.report()["validation"] = report_json(v);
}

void cmd_check_iso(Run& r) {
  const auto dname = choose(r.opt.diagram, r.ws.diagram_names(), "diagram");
  const auto& x = r.ws.diagram(dname);
  auto total = grothendieck_total(x, &r.budget);
  auto rn = relative_nerve(x);
  auto iso = canonical_iso(x, total, rn);
  r.defects = !iso.ok();
  r.report()["diagram"] = dname;
  r.report()["summary"] = iso.summary();
  r.report()["bijective"] = iso.bijective;
  r.report()["natural"] = iso.natural;
  r.report()["over_base"] = iso.over_base;
  r.report()["details"] = strings(iso.details);
  Json fibers = Json::object();
  for (Object d = 0; d < x.base->num_objects(); ++d) {
    const bool a = check_isomorphism(relative_fiber_map(rn, x, d)).ok();
    const bool b = check_isomorphism(total_fiber_map(total, x, d)).ok();
    fibers[x.base->object_name(d)] = {{"relative_nerve", a}, {"total", b}};
    r.defects = r.defects || !a || !b;
  }
  r.report()["fibers"] = fibers;
}

void cmd_mark(Run& r) {
  const auto sname = choose(r.opt.set, r.ws.set_names(), "set");
  const auto s = r.ws.set(sname);
  if (s->dim() < 2) throw UsageError("equivalence detection needs a dimension bound of at least 2");
  Json edges = Json::array();
  std::vector<Simplex> marked;
  for (Simplex e : s->nondegenerate(1)) {
    auto v = is_equivalence_edge(*s, e, r.opt.witness_depth, &r.budget);
    Json j = {{"edge", s->label(1, e)}, {"equivalence", v.equivalence}};
    if (v.witness)
      j["witness"] = {{"inverse", s->label(1, v.witness->inverse)},
                      {"sigma", s->label(2, v.witness->sigma)},
                      {"beta", s->label(2, v.witness->beta)}};
    if (v.word_search) j["word_search"] = *v.word_search;
    if (v.equivalence) marked.push_back(e);
    edges.push_back(j);
  }
  r.ws.add_marked("E(" + sname + ")", sname, marked_with(s, marked));
  r.report()["set"] = sname;
  r.report()["witness_depth"] = r.opt.witness_depth;
  r.report()["edges"] = edges;
}

void cmd_localize(Run& r) {
  const auto mname = choose(r.opt.marked, r.ws.marked_names(), "marked");
  const auto& x = r.ws.marked(mname);
  auto loc = localize(x);
  const auto source_name = set_name(r, x.set, mname + ".set");
  const std::string name = "L(" + mname + ")";
  r.ws.add_set(name, loc.object.set);
  r.ws.add_map(name + ".p", source_name, name, loc.p);
  const std::size_t e = x.marked_edges().size();
  bool formula = true;
  for (int n = 0; n <= x.set->dim(); ++n)
    formula = formula && loc.object.set->size(n) ==
                             x.set->size(n) + e * ((std::size_t{1} << (n + 1)) - static_cast<std::size_t>(n + 2));
  Json witnesses = Json::array();
  bool all_equivalences = true;
  if (loc.object.set->dim() >= 2)
    for (Simplex edge : x.marked_edges()) {
      if (x.set->degenerate(1, edge)) continue;
      auto v = is_equivalence_edge(*loc.object.set, loc.p(1, edge), r.opt.witness_depth, &r.budget);
      all_equivalences = all_equivalences && v.equivalence;
      witnesses.push_back({{"edge", x.set->label(1, edge)}, {"equivalence", v.equivalence}});
    }
  auto v = validate(*loc.object.set);
  v.merge(validate(loc.p), "p");
  r.defects = !v.ok() || !formula || !loc.p.injective() || !all_equivalences;
  r.report()["marked"] = mname;
  r.report()["marked_edges"] = e;
  r.report()["localization"] = stats(*loc.object.set);
  r.report()["cardinality_formula"] = formula;
  r.report()["p_injective"] = loc.p.injective();
  r.report()["glued_edges"] = witnesses;
  r.report()["validation"] = report_json(v);
}

/// The projection to check: a named map, or the relative nerve of a diagram.
struct Projection {
  std::string name;
  std::optional<SimplicialMap> map;
  std::optional<RelativeNerve> nerve;
  std::optional<MarkedSimplicialSet> marked;  // marking of a marked diagram's relative nerve
};

Projection resolve_projection(Run& r) {
  Projection p;
  if (!r.opt.map.empty() || (r.opt.diagram.empty() && !r.ws.map_names().empty())) {
    p.name = choose(r.opt.map, r.ws.map_names(), "map");
    p.map = r.ws.map(p.name);
    return p;
  }
  p.name = choose(r.opt.diagram, r.ws.diagram_names(), "diagram");
  const auto& x = r.ws.diagram(p.name);
  p.nerve = relative_nerve(x);
  p.map = p.nerve->projection;
  if (x.is_marked()) p.marked = marked_relative_nerve(*p.nerve, x);
  return p;
}

void cmd_check_fibration(Run& r) {
  auto p = resolve_projection(r);
  const auto& f = *p.map;
  auto inner = is_inner_fibration(f, r.opt.nmax, &r.budget);
  auto fib = is_cocartesian_fibration(f, r.opt.nmax, &r.budget);
  r.report()["projection"] = p.name;
  r.report()["n_max"] = r.opt.nmax;
  r.report()["inner_fibration"] = {{"holds", inner.holds}, {"verdict", inner.describe(f)}};
  r.report()["cocartesian_fibration"] = {{"holds", fib.holds}, {"verdict", fib.describe(f)}};
}

void cmd_cocartesian_edges(Run& r) {
  auto p = resolve_projection(r);
  const auto& f = *p.map;
  const auto& s = *f.source();
  auto inner = is_inner_fibration(f, r.opt.nmax, &r.budget);
  Json edges = Json::array();
  std::vector<Simplex> cocartesian;
  for (Simplex e : s.nondegenerate(1)) {
    auto v = is_cocartesian_edge(f, e, r.opt.nmax, &r.budget, false);
    Json j = {{"edge", s.label(1, e)}, {"cocartesian", v.lifting.holds}};
    if (p.marked) j["marked"] = p.marked->marked[e];
    if (!v.lifting.holds) j["verdict"] = v.lifting.describe(f);
    if (v.lifting.holds) cocartesian.push_back(e);
    edges.push_back(j);
  }
  if (p.nerve) {
    r.ws.add_set(p.name + ".relnerve", p.nerve->object.set);
    r.ws.add_marked(p.name + ".relnerve.cocartesian", p.name + ".relnerve", marked_with(f.source(), cocartesian));
  } else {
    r.ws.add_marked(p.name + ".cocartesian", set_name(r, f.source(), p.name + ".source"),
                    marked_with(f.source(), cocartesian));
  }
  r.report()["projection"] = p.name;
  r.report()["n_max"] = r.opt.nmax;
  // edge verdicts are only meaningful for inner fibrations
  r.report()["inner_fibration"] = {{"holds", inner.holds}, {"verdict", inner.describe(f)}};
  r.report()["edges"] = edges;
}

void cmd_bar(Run& r) {
  const auto dname = choose(r.opt.diagram, r.ws.diagram_names(), "diagram");
  const auto& x = r.ws.diagram(dname);
  auto bar = bar_construction(x);
  const auto nerve_name = set_name(r, bar.nerve->set(), dname + ".nerve");
  r.ws.add_set(dname + ".bar", bar.object.set);
  r.ws.add_marked(dname + ".bar+", dname + ".bar", bar.marked);
  r.ws.add_map(dname + ".bar.p", dname + ".bar", nerve_name, bar.projection);
  bool formula = true;
  for (int n = 0; n <= x.dim(); ++n) {
    std::size_t expected = 0;
    for (Simplex sigma = 0; sigma < bar.nerve->set()->size(n); ++sigma)
      expected += x.value(bar.nerve->object(n, sigma, 0))->size(n);
    formula = formula && expected == bar.object.set->size(n);
  }
  auto v = validate(*bar.object.set);
  v.merge(validate(bar.marked), "marking");
  v.merge(validate(bar.projection), "projection");
  r.defects = !v.ok() || !formula;
  r.report()["diagram"] = dname;
  r.report()["bar"] = stats(*bar.object.set);
  r.report()["marked_edges"] = bar.marked.marked_edges().size();
  r.report()["size_formula"] = formula;
  r.report()["validation"] = report_json(v);
}

void cmd_iota(Run& r) {
  const auto dname = choose(r.opt.diagram, r.ws.diagram_names(), "diagram");
  const auto& x = r.ws.diagram(dname);
  auto bar = bar_construction(x);
  auto total = grothendieck_total(x, &r.budget);
  auto rep = iota_comparison(x, bar, total);
  if (rep.map) {
    r.ws.add_set(dname + ".bar", bar.object.set);
    r.ws.add_set(dname + ".total", total.object.set);
    r.ws.add_map(dname + ".iota", dname + ".bar", dname + ".total", rep.map->map);
  }
  r.defects = !rep.ok();
  Json fibers = Json::object();
  for (Object d = 0; d < static_cast<Object>(rep.fiber_bijective.size()); ++d)
    fibers[x.base->object_name(d)] = static_cast<bool>(rep.fiber_bijective[d]);
  r.report()["diagram"] = dname;
  r.report()["marked_map"] = rep.marked_map;
  r.report()["over_base"] = rep.over_base;
  r.report()["injective"] = rep.injective;
  r.report()["fiber_bijective"] = fibers;
  r.report()["details"] = strings(rep.details);
}

void cmd_colim(Run& r) {
  const auto dname = choose(r.opt.diagram, r.ws.diagram_names(), "diagram");
  const auto& x = r.ws.diagram(dname);
  auto co = colim_marked(x);
  const std::string name = dname + ".colim";
  r.ws.add_set(name, co.cocone.object.set);
  if (x.is_marked()) r.ws.add_marked(name + "+", name, co.marked);
  for (Object d = 0; d < x.base->num_objects(); ++d) {
    const auto& obj = x.base->object_name(d);
    r.ws.add_map(name + ".leg." + obj, set_name(r, x.value(d), dname + ".value." + obj), name, co.cocone.legs[d]);
  }
  auto v = validate(*co.cocone.object.set);
  for (const auto& leg : co.cocone.legs) v.merge(validate(leg), "leg");
  r.defects = !v.ok();
  r.report()["diagram"] = dname;
  r.report()["colimit"] = stats(*co.cocone.object.set);
  r.report()["validation"] = report_json(v);
  if (!r.opt.target.empty()) {
    auto y = r.ws.set(r.opt.target);
    auto up = check_colimit_universal(x, co.cocone, y, &r.budget);
    r.defects = r.defects || !up.bijective;
    r.report()["universal_property"] = {{"target", r.opt.target},
                                        {"maps_out", up.maps_out},
                                        {"cocones", up.cocones},
                                        {"bijective", up.bijective},
                                        {"details", strings(up.details)}};
    if (x.dim() >= 2) {
      // reported side by side, not asserted equal
      auto h = colimit_hom_counts(x, y, &r.budget);
      r.report()["hom_counts"] = {{"localized_colimit", h.localized}, {"colimit", h.plain}};
    }
  }
}

void cmd_hocolim(Run& r) {
  const auto dname = choose(r.opt.diagram, r.ws.diagram_names(), "diagram");
  const auto& x = r.ws.diagram(dname);
  auto h = hocolim(x);
  const std::string name = dname + ".hocolim";
  r.ws.add_set(name, h.localization.object.set);
  r.ws.add_set(name + ".bar", h.bar.object.set);
  r.ws.add_marked(name + ".bar+", name + ".bar", h.bar.marked);
  r.ws.add_map(name + ".p", name + ".bar", name, h.localization.p);
  auto v = validate(*h.localization.object.set);
  v.merge(validate(h.bar.marked), "bar");
  v.merge(validate(h.localization.p), "p");
  r.defects = !v.ok();
  r.report()["diagram"] = dname;
  r.report()["bar"] = stats(*h.bar.object.set);
  r.report()["bar_marked_edges"] = h.bar.marked.marked_edges().size();
  r.report()["hocolim"] = stats(*h.localization.object.set);
  r.report()["validation"] = report_json(v);
}

void cmd_suite(Run& r, std::ostream& err) {
  suite::SuiteOptions o;
  o.dim = r.dim();
  o.nmax = r.opt.nmax;
  o.budget = r.budget.limit();
  Json lines = Json::array();
  auto record = [&](const suite::CriterionResult& c) {
    err << c.line() << "\n";
    lines.push_back({{"criterion", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
    r.defects = r.defects || !c.pass;
  };
  if (r.opt.criterion) {
    if (*r.opt.criterion < 1 || *r.opt.criterion > suite::kCriteria)
      throw UsageError("--criterion must lie in 1.." + std::to_string(suite::kCriteria));
    record(suite::run_criterion(*r.opt.criterion, o));
  } else {
    suite::run_all(o, record);
  }
  r.report()["criteria"] = lines;
}

Workspace load_workspace(const Options& opt) {
  if (opt.workspace.empty()) {
    Json doc = {{"schema", kSchemaVersion}};
    if (opt.dim_bound) doc["dim_bound"] = *opt.dim_bound;
    return Workspace::parse(doc);
  }
  if (opt.workspace == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return Workspace::parse_text(buf.str(), opt.dim_bound);
  }
  return Workspace::load(opt.workspace, opt.dim_bound);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grothendieck constructions, localizations and homotopy colimits of finite simplicial sets", "hgc"};
  app.require_subcommand(1);
  Options opt;

  using Handler = std::function<void(Run&)>;
  std::map<std::string, Handler> handlers;
  auto add = [&](const std::string& name, const std::string& help, Handler h,
                 std::initializer_list<const char*> selectors) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("workspace", opt.workspace, "workspace file (schema 1); '-' reads stdin");
    sub->add_option("--dim-bound", opt.dim_bound, "dimension bound for generated sets")->check(CLI::NonNegativeNumber);
    sub->add_option("--budget", opt.budget, "step budget");
    sub->add_option("--nmax", opt.nmax, "horn degree bound for fibration checks")->check(CLI::Range(2, 16));
    sub->add_option("--witness-depth", opt.witness_depth, "bounded word search depth for equivalences (0: off)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", opt.out, "write the output workspace here instead of stdout");
    for (std::string s : selectors) {
      if (s == "category") sub->add_option("--category", opt.category, "category name or generator");
      if (s == "set") sub->add_option("--set", opt.set, "simplicial set name");
      if (s == "marked") sub->add_option("--marked", opt.marked, "marked set name");
      if (s == "map") sub->add_option("--map", opt.map, "map name");
      if (s == "diagram") sub->add_option("--diagram", opt.diagram, "diagram name");
      if (s == "target") sub->add_option("--target", opt.target, "set to test the universal property against");
      if (s == "simplex") {
        sub->add_option("--degree", opt.degree, "degree of the base simplex");
        sub->add_option("--simplex", opt.simplex, "base simplex, by label or index");
      }
      if (s == "kmax") sub->add_option("--kmax", opt.kmax, "truncation of the function complexes");
      if (s == "criterion") sub->add_option("--criterion", opt.criterion, "run a single criterion");
    }
    handlers[name] = std::move(h);
  };
  add("validate", "check simplicial identities of every workspace entry", cmd_validate, {});
  add("nerve", "nerve of a category", cmd_nerve, {"category"});
  add("gerbe", "gerbe over a simplex of the base nerve", cmd_gerbe, {"diagram", "simplex", "kmax"});
  add("grothendieck", "total space of a diagram and its simplicial space", cmd_grothendieck, {"diagram", "kmax"});
  add("relnerve", "relative nerve of a diagram", cmd_relnerve, {"diagram"});
  add("check-iso", "canonical isomorphism between total space and relative nerve", cmd_check_iso, {"diagram"});
  add("mark", "mark the equivalence edges of a set", cmd_mark, {"set"});
  add("localize", "invert the marked edges of a marked set", cmd_localize, {"marked"});
  add("check-fibration", "inner and coCartesian fibration checks", cmd_check_fibration, {"map", "diagram"});
  add("cocartesian-edges", "coCartesian verdict for every edge", cmd_cocartesian_edges, {"map", "diagram"});
  add("bar", "bar construction of a diagram", cmd_bar, {"diagram"});
  add("iota", "comparison map from the bar construction to the total space", cmd_iota, {"diagram"});
  add("colim", "degreewise colimit of a diagram", cmd_colim, {"diagram", "target"});
  add("hocolim", "homotopy colimit of a diagram", cmd_hocolim, {"diagram"});
  add("suite", "run the acceptance properties", [&](Run& r) { cmd_suite(r, err); }, {"criterion"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hgc: " << e.what() << "\n";
    return kParseError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    auto ws = load_workspace(opt);
    const std::uint64_t limit = opt.budget.value_or(ws.budget());
    ws.set_budget(limit);
    Run r{opt, std::move(ws), Budget(limit)};
    r.report() = Json::object();
    r.report()["command"] = command;
    handlers.at(command)(r);
    r.report()["defects"] = r.defects;
    const std::string text = r.ws.dump();
    if (opt.out.empty()) {
      out << text;
    } else {
      std::ofstream file(opt.out, std::ios::binary);
      if (!file) throw UsageError("cannot write " + opt.out);
      file << text;
    }
    return r.defects ? kDefects : kOk;
  } catch (const ParseError& e) {
    err << "hgc: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "hgc: " << e.what() << "\n";
    return kParseError;
  } catch (const BudgetExceeded& e) {
    err << "hgc: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "hgc: " << e.what() << "\n";
    return kDefects;
  }
}

}  // namespace hgc::cli
