#include "hgc/hocolim/colimit.hpp"

#include <map>

#include "hgc/marked/equivalence.hpp"
#include "hgc/scat/errors.hpp"
#include "hgc/scat/map_search.hpp"

namespace hgc {

Cocone colim_diagram(const Diagram& f) {
  const auto& c = *f.base;
  auto sum = coproduct(f.values);
  const int dim = f.dim();
  std::vector<std::vector<std::pair<Simplex, Simplex>>> pairs(static_cast<std::size_t>(dim + 1));
  for (Morphism m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    const Object d = c.source(m);
    const Object e = c.target(m);
    for (int n = 0; n <= dim; ++n)
      for (Simplex x = 0; x < f.value(d)->size(n); ++x)
        pairs[n].emplace_back(sum.legs[d](n, x), sum.legs[e](n, f.map(m)(n, x)));
  }
  auto q = quotient(sum.object.set, pairs, false);
  Cocone out{q.object, {}};
  for (const auto& leg : sum.legs) out.legs.push_back(compose(q.projection, leg));
  return out;
}

MarkedColimit colim_marked(const Diagram& f) {
  auto cocone = colim_diagram(f);
  const auto& s = cocone.object.set;
  std::vector<bool> marked(s->dim() >= 1 ? s->size(1) : 0, false);
  if (s->dim() >= 1)
    for (Object d = 0; d < f.base->num_objects(); ++d) {
      const auto mv = f.marked_value(d);
      for (Simplex e = 0; e < mv.set->size(1); ++e)
        if (mv.marked[e]) marked[cocone.legs[d](1, e)] = true;
    }
  MarkedSimplicialSet m{s, std::move(marked)};
  return MarkedColimit{std::move(cocone), std::move(m)};
}

Hocolim hocolim(const Diagram& f) {
  if (f.dim() < 2) throw InvalidArgument("homotopy colimit needs a dimension bound of at least 2");
  auto marked = with_equivalence_marking(underlying_diagram(f));
  auto bar = bar_construction(marked);
  auto loc = localize(bar.marked);
  return Hocolim{std::move(marked), std::move(bar), std::move(loc)};
}

UniversalPropertyReport check_colimit_universal(const Diagram& f, const Cocone& colim, const SSetPtr& y,
                                                Budget* budget) {
  UniversalPropertyReport rep;
  const auto& c = *f.base;
  const int objects = c.num_objects();
  auto yn = retruncate(y, f.dim());
  MapSearchOptions o;
  o.budget = budget;
  std::vector<std::vector<SimplicialMap>> per_object;
  for (Object d = 0; d < objects; ++d) per_object.push_back(all_maps(f.value(d), yn, o));
  // cocones: one map per object, compatible with every morphism
  using Family = std::vector<std::vector<std::vector<Simplex>>>;
  std::map<Family, std::size_t> cocones;
  std::vector<std::size_t> choice(static_cast<std::size_t>(objects), 0);
  auto compatible = [&](Object upto) {
    for (Morphism m = 0; m < c.num_morphisms(); ++m) {
      const Object d = c.source(m);
      const Object e = c.target(m);
      if (d > upto || e > upto) continue;
      const auto& gd = per_object[d][choice[d]];
      const auto& ge = per_object[e][choice[e]];
      for (int n = 0; n <= f.dim(); ++n)
        for (Simplex x = 0; x < f.value(d)->size(n); ++x)
          if (ge(n, f.map(m)(n, x)) != gd(n, x)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, Object d) -> void {
    if (d == objects) {
      Family fam;
      for (Object t = 0; t < objects; ++t) fam.push_back(per_object[t][choice[t]].components());
      cocones.emplace(std::move(fam), cocones.size());
      return;
    }
    for (std::size_t i = 0; i < per_object[d].size(); ++i) {
      charge(budget);
      choice[d] = i;
      if (compatible(d)) self(self, d + 1);
    }
  };
  search(search, 0);
  rep.cocones = cocones.size();
  std::vector<bool> hit(cocones.size(), false);
  bool injective = true;
  enumerate_maps(colim.object.set, yn, o, [&](const SimplicialMap& u) {
    ++rep.maps_out;
    Family fam;
    for (Object d = 0; d < objects; ++d) fam.push_back(compose(u, colim.legs[d]).components());
    auto it = cocones.find(fam);
    if (it == cocones.end()) {
      rep.details.push_back("a map out of the colimit restricts to a non-cocone");
      injective = false;
    } else if (hit[it->second]) {
      rep.details.push_back("two maps out of the colimit restrict to the same cocone");
      injective = false;
    } else {
      hit[it->second] = true;
    }
    return true;
  });
  rep.bijective = injective && rep.maps_out == rep.cocones;
  if (injective && rep.maps_out != rep.cocones) rep.details.push_back("some cocone does not factor through the colimit");
  return rep;
}

HomCounts colimit_hom_counts(const Diagram& f, const SSetPtr& y, Budget* budget) {
  MapSearchOptions o;
  o.budget = budget;
  auto marked = colim_marked(with_equivalence_marking(underlying_diagram(f)));
  auto loc = localize(marked.marked);
  HomCounts h;
  h.localized = count_maps(loc.object.set, retruncate(y, loc.object.set->dim()), o);
  h.plain = count_maps(colim_diagram(f).object.set, retruncate(y, f.dim()), o);
  return h;
}

}  // namespace hgc
