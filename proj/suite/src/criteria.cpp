#include "hgc/suite/criteria.hpp"

#include <chrono>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "hgc/fibrations/lifting.hpp"
#include "hgc/grothendieck/gerbe.hpp"
#include "hgc/grothendieck/relative_nerve.hpp"
#include "hgc/grothendieck/total.hpp"
#include "hgc/hocolim/bar.hpp"
#include "hgc/hocolim/colimit.hpp"
#include "hgc/marked/equivalence.hpp"
#include "hgc/marked/localization.hpp"
#include "hgc/scat/errors.hpp"
#include "hgc/scat/limits.hpp"
#include "hgc/scat/map_search.hpp"
#include "hgc/scat/standard.hpp"
#include "hgc/scat/validate.hpp"
#include "hgc/suite/corpus.hpp"

namespace hgc::suite {

namespace {

struct Context {
  const SuiteOptions& options;
  Budget* budget;
  std::mt19937 rng;

  /// corpus_size diagrams at the dimension bound plus half as many one degree higher
  std::vector<CorpusDiagram> main_corpus() {
    auto out = corpus(base_catalog(), value_catalog(options.dim), options.corpus_size, options.seed, budget);
    auto high = corpus(base_catalog(), value_catalog(options.dim + 1), options.corpus_size / 2, options.seed + 1, budget);
    for (auto& d : high) {
      d.name += " at dimension " + std::to_string(options.dim + 1);
      out.push_back(std::move(d));
    }
    return out;
  }
  /// the part of the corpus at the base dimension bound
  std::vector<CorpusDiagram> base_corpus() {
    return corpus(base_catalog(), value_catalog(options.dim), options.corpus_size, options.seed, budget);
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  }
};

/// Tally of passing instances with the first failure kept for the report.
struct Tally {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++total;
    if (ok)
      ++passed;
    else if (first_failure.empty())
      first_failure = what;
  }
  bool all() const { return passed == total && total > 0; }
  std::string summary(const std::string& noun) const {
    std::string s = std::to_string(passed) + "/" + std::to_string(total) + " " + noun;
    if (!first_failure.empty()) s += "; first failure: " + first_failure;
    return s;
  }
};

std::string first_violation(const ValidationReport& r) {
  if (r.violations.empty()) return "";
  return " (" + r.violations.front().rule + ": " + r.violations.front().where + ")";
}

MarkedSimplicialSet random_marking(const SSetPtr& s, std::mt19937& rng) {
  std::vector<Simplex> edges;
  if (s->dim() >= 1)
    for (Simplex e : s->nondegenerate(1))
      if (std::bernoulli_distribution(0.5)(rng)) edges.push_back(e);
  return marked_with(s, edges);
}

Diagram random_diagram_marking(const Diagram& x, std::mt19937& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return with_flat_marking(x);
    case 1: return with_sharp_marking(x);
    default: return with_equivalence_marking(x);
  }
}

SimplicialMap random_map(const SSetPtr& a, const SSetPtr& b, Context& ctx) {
  MapSearchOptions o;
  o.budget = ctx.budget;
  return ctx.pick(all_maps(a, b, o));
}

// 1: randomized constructions pass validate
CriterionResult simplicial_identities(Context& ctx) {
  const int dim = ctx.options.dim;
  auto values = value_catalog(dim);
  auto bases = base_catalog();
  auto diagrams = ctx.base_corpus();
  Tally t;
  for (int i = 0; i < 100; ++i) {
    ValidationReport r;
    std::string what;
    switch (i % 10) {
      case 0: {
        const auto& b = ctx.pick(bases);
        what = "nerve of " + b.name;
        r.merge(validate(*Nerve(b.category, dim).set()), "nerve");
        break;
      }
      case 1: {
        const auto& a = ctx.pick(values);
        const auto& b = ctx.pick(values);
        what = "product " + a.name + " x " + b.name;
        auto c = product(a.set, b.set);
        r.merge(validate(*c.object.set), "object");
        r.merge(validate(c.first), "first");
        r.merge(validate(c.second), "second");
        break;
      }
      case 2: {
        const auto& a = ctx.pick(values);
        const auto& b = ctx.pick(values);
        const auto& c = ctx.pick(values);
        what = "pullback " + a.name + " -> " + c.name + " <- " + b.name;
        auto cone = pullback(random_map(a.set, c.set, ctx), random_map(b.set, c.set, ctx));
        r.merge(validate(*cone.object.set), "object");
        r.merge(validate(cone.first), "first");
        r.merge(validate(cone.second), "second");
        break;
      }
      case 3: {
        const auto& a = ctx.pick(values);
        const auto& b = ctx.pick(values);
        const auto& c = ctx.pick(values);
        what = "pushout " + a.name + " <- " + c.name + " -> " + b.name;
        auto co = pushout(random_map(c.set, a.set, ctx), random_map(c.set, b.set, ctx));
        r.merge(validate(*co.object.set), "object");
        for (const auto& leg : co.legs) r.merge(validate(leg), "leg");
        break;
      }
      case 4: {
        const auto& d = ctx.pick(diagrams);
        const int n = std::uniform_int_distribution<int>(0, 2)(ctx.rng);
        GerbeContext g(d.diagram, d.diagram.dim() - n, ctx.budget);
        const Simplex sigma = static_cast<Simplex>(
            std::uniform_int_distribution<std::size_t>(0, g.nerve().set()->size(n) - 1)(ctx.rng));
        what = "gerbe G_" + std::to_string(n) + "(" + g.nerve().set()->label(n, sigma) + ") of " + d.name;
        auto ge = gerbe(g, n, sigma);
        r.merge(validate(*ge.set), "gerbe");
        r.merge(validate(ge.p2), "p2");
        if (ge.p1) r.merge(validate(*ge.p1), "p1");
        break;
      }
      case 5: {
        const auto& d = ctx.pick(diagrams);
        what = "total space of " + d.name;
        auto total = grothendieck_total(d.diagram, ctx.budget);
        r.merge(validate(*total.object.set), "object");
        r.merge(validate(total.projection), "projection");
        break;
      }
      case 6: {
        const auto& d = ctx.pick(diagrams);
        what = "bar construction of " + d.name;
        auto bar = bar_construction(random_diagram_marking(d.diagram, ctx.rng));
        r.merge(validate(*bar.object.set), "object");
        r.merge(validate(bar.marked), "marking");
        r.merge(validate(bar.projection), "projection");
        break;
      }
      case 7: {
        const auto& v = ctx.pick(values);
        what = "localization of " + v.name;
        auto loc = localize(random_marking(v.set, ctx.rng));
        r.merge(validate(*loc.object.set), "object");
        r.merge(validate(loc.p), "p");
        r.merge(validate(loc.marked_image), "marking");
        break;
      }
      case 8: {
        const auto& d = ctx.pick(diagrams);
        what = "relative nerve of " + d.name;
        auto rn = relative_nerve(d.diagram);
        r.merge(validate(*rn.object.set), "object");
        r.merge(validate(rn.projection), "projection");
        break;
      }
      default: {
        const auto& d = ctx.pick(diagrams);
        what = "colimit of " + d.name;
        auto co = colim_diagram(d.diagram);
        r.merge(validate(*co.object.set), "object");
        for (const auto& leg : co.legs) r.merge(validate(leg), "leg");
        break;
      }
    }
    t.record(r.ok(), what + first_violation(r));
  }
  return {1, "simplicial identities", t.all(), t.summary("constructions valid")};
}

// 2: canonical iso between the total space and the relative nerve
CriterionResult oracle_equivalence(Context& ctx) {
  auto diagrams = ctx.main_corpus();
  Tally t;
  for (const auto& d : diagrams) {
    auto total = grothendieck_total(d.diagram, ctx.budget);
    auto rn = relative_nerve(d.diagram);
    auto iso = canonical_iso(d.diagram, total, rn);
    t.record(iso.ok(), d.name + ": " + iso.summary());
  }
  return {2, "oracle equivalence", t.all() && t.total >= 50, t.summary("diagrams with a degreewise natural bijection over the base")};
}

// 3: fibers of both projections
CriterionResult fiber_laws(Context& ctx) {
  auto diagrams = ctx.main_corpus();
  Tally t;
  for (const auto& d : diagrams) {
    auto total = grothendieck_total(d.diagram, ctx.budget);
    auto rn = relative_nerve(d.diagram);
    for (Object o = 0; o < d.diagram.base->num_objects(); ++o) {
      const auto& name = d.diagram.base->object_name(o);
      auto a = check_isomorphism(relative_fiber_map(rn, d.diagram, o));
      t.record(a.ok(), "relative nerve fiber over " + name + " of " + d.name + first_violation(a));
      auto b = check_isomorphism(total_fiber_map(total, d.diagram, o));
      t.record(b.ok(), "total space fiber over " + name + " of " + d.name + first_violation(b));
    }
  }
  return {3, "fiber laws", t.all(), t.summary("fibers isomorphic to their values")};
}

// 4: gerbes over totally degenerate simplices are function complexes
CriterionResult gerbe_identities(Context& ctx) {
  auto diagrams = ctx.base_corpus();
  Tally t;
  for (const auto& d : diagrams)
    for (int n = 0; n <= 2 && n <= d.diagram.dim(); ++n) {
      GerbeContext g(d.diagram, d.diagram.dim() - n, ctx.budget);
      for (Object o = 0; o < d.diagram.base->num_objects(); ++o) {
        const Simplex sigma = g.nerve().degenerate_on(o, n);
        auto ge = gerbe(g, n, sigma);
        const auto& fc = g.complex(n, o);
        auto r = check_isomorphism(ge.p2);
        const bool ok = r.ok() && ge.p2.target() == fc.set();
        t.record(ok, "G_" + std::to_string(n) + " over " + d.diagram.base->object_name(o) + " of " + d.name +
                         first_violation(r));
      }
    }
  return {4, "gerbe identities", t.all(), t.summary("gerbes equal to [Delta[n], X(d)] for n <= 2")};
}

// 5: constant point diagrams collapse onto the nerve
CriterionResult terminal_collapse(Context& ctx) {
  const int dim = ctx.options.dim;
  auto pt = standard::delta(0, dim).set;
  Tally t;
  for (const auto& b : base_catalog()) {
    auto x = constant_diagram(b.category, pt);
    auto total = grothendieck_total(x, ctx.budget);
    auto r = check_isomorphism(total.projection);
    t.record(r.ok(), "total space over " + b.name + first_violation(r));
    auto bar = bar_construction(with_flat_marking(x));
    auto s = check_isomorphism(bar.projection);
    bool all_marked = true;
    for (bool m : bar.marked.marked) all_marked = all_marked && m;
    t.record(s.ok() && all_marked, "bar construction over " + b.name + first_violation(s) +
                                       (all_marked ? "" : " (unmarked edge)"));
  }
  return {5, "terminal collapse", t.all(), t.summary("constructions isomorphic to N(D), bar fully marked")};
}

// 6: |bar_n| = sum over sigma in N(D)_n of |F(sigma(0))_n|
CriterionResult bar_size(Context& ctx) {
  auto diagrams = ctx.main_corpus();
  Tally t;
  for (const auto& d : diagrams) {
    const auto& x = d.diagram;
    auto bar = bar_construction(x);
    Nerve nerve(x.base, x.dim());
    bool ok = true;
    std::string where;
    for (int n = 0; n <= x.dim(); ++n) {
      std::size_t expected = 0;
      for (Simplex sigma = 0; sigma < nerve.set()->size(n); ++sigma)
        expected += x.value(nerve.object(n, sigma, 0))->size(n);
      if (expected != bar.object.set->size(n)) {
        ok = false;
        where = " (degree " + std::to_string(n) + ": " + std::to_string(bar.object.set->size(n)) + " vs " +
                std::to_string(expected) + ")";
        break;
      }
    }
    t.record(ok, d.name + where);
  }
  return {6, "bar size formula", t.all(), t.summary("diagrams matching the formula in every degree")};
}

// 7: the comparison map from the bar construction to the total space
CriterionResult iota(Context& ctx) {
  auto diagrams = ctx.main_corpus();
  Tally all;
  std::size_t marked = 0, over = 0, injective = 0, fibers = 0;
  for (const auto& d : diagrams) {
    auto x = with_equivalence_marking(d.diagram);
    auto bar = bar_construction(x);
    auto total = grothendieck_total(x, ctx.budget);
    auto rep = iota_comparison(x, bar, total);
    marked += rep.marked_map;
    over += rep.over_base;
    injective += rep.injective;
    bool fb = !rep.fiber_bijective.empty();
    for (bool b : rep.fiber_bijective) fb = fb && b;
    fibers += fb;
    all.record(rep.ok(), d.name + (rep.details.empty() ? "" : ": " + rep.details.front()));
  }
  std::ostringstream s;
  s << "marked map " << marked << ", over N(D) " << over << ", injective " << injective << ", fiber bijections "
    << fibers << "; " << all.summary("diagrams passing all four");
  return {7, "comparison map", all.all(), s.str()};
}

// 8: localization
CriterionResult localization(Context& ctx) {
  const int dim = ctx.options.dim;
  auto j = standard::J(dim);
  std::vector<NamedSet> targets = {
      {"Delta[0]", standard::delta(0, dim).set},
      {"Delta[1]", standard::delta(1, dim).set},
      {"J", j.set},
      {"N(z2)", Nerve(categories::z2(), dim).set()},
      {"N(iso)", Nerve(categories::walking_iso(), dim).set()},
  };
  std::vector<MarkedSimplicialSet> target_marked;
  for (const auto& t : targets) target_marked.push_back(mark_equivalences(t.set));

  Tally formula, inj, witnesses, factor, pinned;
  for (const auto& v : value_catalog(dim)) {
    std::vector<std::pair<std::string, MarkedSimplicialSet>> markings = {
        {"flat", flat(v.set)}, {"sharp", sharp(v.set)}, {"equivalences", mark_equivalences(v.set)}};
    for (int r = 0; r < 2; ++r) markings.emplace_back("random", random_marking(v.set, ctx.rng));
    for (const auto& [mname, x] : markings) {
      const std::string what = v.name + " (" + mname + ")";
      auto loc = localize(x);
      const std::size_t e = x.marked_edges().size();
      bool ok = true;
      for (int n = 0; n <= dim; ++n) {
        const std::size_t expected = v.set->size(n) + e * ((std::size_t{1} << (n + 1)) - static_cast<std::size_t>(n + 2));
        ok = ok && loc.object.set->size(n) == expected;
      }
      formula.record(ok, what);
      inj.record(loc.p.injective(), what);
      for (Simplex edge : x.marked_edges())
        witnesses.record(is_equivalence_edge(*loc.object.set, loc.p(1, edge)).equivalence,
                         what + " edge " + v.set->label(1, edge));
      for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        MapSearchOptions o;
        o.budget = ctx.budget;
        o.limit = 4;
        o.source_marked = &x.marked;
        o.target_marked = &target_marked[ti].marked;
        for (const auto& g : all_maps(v.set, targets[ti].set, o)) {
          const std::string gw = what + " -> " + targets[ti].name;
          auto u = localization_universal(loc, g, ctx.budget);
          factor.record(validate(u).ok() && same_components(compose(u, loc.p), g), gw);
          bool pin = true;
          for (Simplex edge : x.marked_edges()) {
            auto copy = compose(u, glued_copy(loc, j, edge));
            pin = pin && same_components(copy, j_extension(j, targets[ti].set, g(1, edge), ctx.budget));
          }
          pinned.record(pin, gw);
        }
      }
    }
  }
  const bool pass = formula.all() && inj.all() && witnesses.all() && factor.all() && pinned.all();
  std::string s = "cardinality " + formula.summary("sets") + "; p injective " + inj.summary("sets") +
                  "; witnesses " + witnesses.summary("edges") + "; U o p = G " + factor.summary("maps") +
                  "; pinned by J-extensions " + pinned.summary("maps");
  return {8, "localization", pass, s};
}

// 9: triangle identities of L -| E on small instances (dimension bound 2)
CriterionResult triangles(Context& ctx) {
  const int dim = 2;
  std::vector<NamedSet> small;
  std::set<std::string> seen;
  auto add = [&](const std::vector<NamedSet>& v) {
    for (const auto& s : v)
      if (s.set->total_size() <= 10 && seen.insert(s.name).second) small.push_back(s);
  };
  add(value_catalog(dim));
  add(nerve_catalog(dim));
  Tally first, second;
  for (const auto& s : small) {
    // every marking of the nondegenerate edges
    const auto edges = s.set->nondegenerate(1);
    for (std::size_t bits = 0; bits < (std::size_t{1} << edges.size()); ++bits) {
      std::vector<Simplex> chosen;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (bits >> i & 1) chosen.push_back(edges[i]);
      auto x = marked_with(s.set, chosen);
      auto unit = adjunction_unit(x);
      auto counit = adjunction_counit(unit.localization.object.set, ctx.budget);
      auto l_unit = localize_map(unit.localization, counit.localization, unit.unit.map);
      auto round = compose(counit.counit, l_unit);
      first.record(same_components(round, SimplicialMap::identity(unit.localization.object.set)),
                   "L(" + s.name + ", " + std::to_string(chosen.size()) + " marked edges)");
    }
    auto es = mark_equivalences(s.set);
    auto unit = adjunction_unit(es);
    auto counit = adjunction_counit(s.set, ctx.budget);
    auto eta = retarget(unit.unit.map, es.set, counit.localization.object.set);
    auto round = compose(counit.counit, eta);
    MarkedMap e_counit{mark_equivalences(counit.localization.object.set), es, counit.counit};
    second.record(validate(e_counit).ok() && same_components(round, SimplicialMap::identity(s.set)), "E(" + s.name + ")");
  }
  return {9, "triangle identities", first.all() && second.all(),
          "eps_L o L(eta) = id on " + first.summary("marked sets") + "; E(eps) o eta_E = id on " +
              second.summary("sets")};
}

// 10: coCartesian fibrations from diagrams of nerves
CriterionResult cocartesian(Context& ctx) {
  const int n_max = ctx.options.nmax;
  const int dim = std::max(ctx.options.dim, n_max);
  std::vector<NamedCategory> bases;
  for (const char* name : {"terminal", "arrow", "iso", "z2", "span", "parallel"})
    bases.push_back({name, categories::by_name(name)});
  auto diagrams = corpus(bases, nerve_catalog(dim), 24, ctx.options.seed + 10, ctx.budget);
  Tally inner, fibration, edges;
  for (const auto& d : diagrams) {
    auto x = with_equivalence_marking(d.diagram);
    auto rn = relative_nerve(x);
    auto marked = marked_relative_nerve(rn, x);
    auto in = is_inner_fibration(rn.projection, n_max, ctx.budget);
    inner.record(in.holds, d.name + ": " + in.describe(rn.projection));
    auto fib = is_cocartesian_fibration(rn.projection, n_max, ctx.budget);
    fibration.record(fib.holds, d.name + ": " + fib.describe(rn.projection));
    for (Simplex e : marked.marked_edges()) {
      auto v = is_cocartesian_edge(rn.projection, e, n_max, ctx.budget, false);
      edges.record(in.holds && v.holds(), d.name + " edge " + rn.object.set->label(1, e));
    }
  }
  auto d1 = standard::delta(1, std::max(dim, 2)).set;
  const Simplex edge = d1->nondegenerate(1).front();
  auto counter = is_cocartesian_edge(to_point(d1), edge, 2, ctx.budget);
  const bool fails = !counter.holds();
  const bool pass = inner.all() && fibration.all() && edges.all() && fails;
  std::string s = "inner " + inner.summary("relative nerves") + "; coCartesian fibration " +
                  fibration.summary("relative nerves") + "; marked edges " + edges.summary("coCartesian") +
                  "; Delta[1] -> point edge " + (fails ? "fails" : "passes") + " at n = 2";
  return {10, "coCartesian checks", pass, s};
}

// 11: bar construction commutes with tensoring by K
CriterionResult tensor(Context& ctx) {
  const int dim = ctx.options.dim;
  std::vector<NamedCategory> bases;
  for (const char* name : {"terminal", "arrow", "iso", "z2", "span"}) bases.push_back({name, categories::by_name(name)});
  std::vector<NamedSet> values = {{"Delta[0]", standard::delta(0, dim).set},
                                  {"Delta[1]", standard::delta(1, dim).set},
                                  {"2 points", value_catalog(dim)[5].set},
                                  {"circle", value_catalog(dim)[7].set}};
  std::vector<NamedSet> ks = {{"Delta[0]", standard::delta(0, dim).set},
                              {"Delta[1]", standard::delta(1, dim).set},
                              {"Lambda^1[2]", standard::horn(2, 1, dim).set}};
  auto diagrams = corpus(bases, values, 6, ctx.options.seed + 11, ctx.budget);
  Tally t;
  for (const auto& d : diagrams) {
    auto x = random_diagram_marking(d.diagram, ctx.rng);
    for (const auto& k : ks) {
      auto rep = tensor_compat_check(x, k.set);
      t.record(rep.ok(), d.name + " with K = " + k.name + (rep.details.empty() ? "" : ": " + rep.details.front()));
    }
  }
  return {11, "tensor compatibility", t.all() && t.total >= 10, t.summary("(X, K) pairs with a canonical bijection")};
}

// 12: exhaustive universal property of the degreewise colimit
CriterionResult colimit(Context& ctx) {
  const int dim = 2;
  auto values = value_catalog(dim);
  std::vector<NamedSet> targets = {{"Delta[0]", standard::delta(0, dim).set},
                                   {"Delta[1]", standard::delta(1, dim).set},
                                   {"2 points", values[5].set},
                                   {"circle", values[7].set},
                                   {"J", standard::J(dim).set}};
  std::vector<CorpusDiagram> small;
  for (const auto& d : corpus(base_catalog(), values, 60, ctx.options.seed + 12, ctx.budget))
    if (total_simplices(d.diagram) <= 20) small.push_back(d);
  Tally t;
  std::size_t cocones = 0;
  for (const auto& d : small) {
    auto co = colim_diagram(d.diagram);
    for (const auto& y : targets) {
      auto rep = check_colimit_universal(d.diagram, co, y.set, ctx.budget);
      cocones += rep.cocones;
      t.record(rep.bijective, d.name + " -> " + y.name + (rep.details.empty() ? "" : ": " + rep.details.front()));
    }
  }
  return {12, "colimit universal property", t.all(),
          t.summary("(diagram, target) pairs") + ", " + std::to_string(small.size()) + " diagrams, " +
              std::to_string(cocones) + " cocones"};
}

}  // namespace

constexpr const char* kTitles[kCriteria + 1] = {"",
                                                "simplicial identities",
                                                "oracle equivalence",
                                                "fiber laws",
                                                "gerbe identities",
                                                "terminal collapse",
                                                "bar size formula",
                                                "comparison map",
                                                "localization",
                                                "triangle identities",
                                                "coCartesian checks",
                                                "tensor compatibility",
                                                "colimit universal property"};

std::string CriterionResult::line() const {
  return "criterion " + std::to_string(id) + " " + (pass ? "PASS" : "FAIL") + ": " + title + ": " + detail;
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  std::unique_ptr<Budget> budget;
  if (options.budget > 0) budget = std::make_unique<Budget>(options.budget);
  Context ctx{options, budget.get(), std::mt19937(options.seed + static_cast<std::uint32_t>(id))};
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = simplicial_identities(ctx); break;
      case 2: r = oracle_equivalence(ctx); break;
      case 3: r = fiber_laws(ctx); break;
      case 4: r = gerbe_identities(ctx); break;
      case 5: r = terminal_collapse(ctx); break;
      case 6: r = bar_size(ctx); break;
      case 7: r = iota(ctx); break;
      case 8: r = localization(ctx); break;
      case 9: r = triangles(ctx); break;
      case 10: r = cocartesian(ctx); break;
      case 11: r = tensor(ctx); break;
      case 12: r = colimit(ctx); break;
      default: throw InvalidArgument("no criterion " + std::to_string(id));
    }
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const InvalidArgument& e) {
    if (id < 1 || id > kCriteria) throw;
    r = {id, kTitles[id], false, std::string("error: ") + e.what()};
  } catch (const std::exception& e) {
    r = {id, kTitles[id], false, std::string("error: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(const SuiteOptions& options,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) {
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace hgc::suite
