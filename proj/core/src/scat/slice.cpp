#include "hgc/scat/slice.hpp"

#include "hgc/scat/errors.hpp"

namespace hgc {

Slice slice(const CategoryPtr& d, Object apex, SliceSide side) {
  const auto& c = *d;
  if (apex < 0 || apex >= c.num_objects()) throw InvalidArgument("unknown object for slice");
  const bool over = side == SliceSide::over;
  // the "free" end of an arrow: its source for D/d, its target for d/D
  auto free_end = [&](Morphism f) { return over ? c.source(f) : c.target(f); };

  std::vector<Morphism> objs;
  for (Morphism f = 0; f < c.num_morphisms(); ++f)
    if ((over ? c.target(f) : c.source(f)) == apex) objs.push_back(f);
  std::vector<std::string> names;
  for (auto f : objs) names.push_back(c.morphism_name(f));

  std::vector<FiniteCategory::Arrow> arrows;
  std::vector<Morphism> underlying;
  std::vector<Morphism> identities(objs.size(), -1);
  for (Object a = 0; a < static_cast<Object>(objs.size()); ++a)
    for (Object b = 0; b < static_cast<Object>(objs.size()); ++b)
      for (Morphism h : c.hom(free_end(objs[a]), free_end(objs[b]))) {
        bool commutes = over ? c.compose(objs[b], h) == objs[a] : c.compose(h, objs[a]) == objs[b];
        if (!commutes) continue;
        if (a == b && h == c.identity(free_end(objs[a]))) identities[a] = static_cast<Morphism>(arrows.size());
        arrows.push_back({c.morphism_name(h) + ":" + names[a] + "->" + names[b], a, b});
        underlying.push_back(h);
      }
  const auto nm = arrows.size();
  std::vector<std::vector<Morphism>> table(nm, std::vector<Morphism>(nm, -1));
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t f = 0; f < nm; ++f) {
      if (arrows[f].target != arrows[g].source) continue;
      Morphism gf = c.compose(underlying[g], underlying[f]);
      for (std::size_t h = 0; h < nm; ++h)
        if (underlying[h] == gf && arrows[h].source == arrows[f].source &&
            arrows[h].target == arrows[g].target)
          table[g][f] = static_cast<Morphism>(h);
    }
  auto cat = std::make_shared<FiniteCategory>(names, arrows, identities, std::move(table));
  Functor proj{cat, d, {}, underlying};
  for (auto f : objs) proj.on_objects.push_back(free_end(f));
  return Slice{cat, std::move(proj), side, apex, objs};
}

Functor reindex(const Slice& from, const Slice& to, Morphism u) {
  if (from.side != to.side) throw InvalidArgument("reindexing between slices of different sides");
  const auto& c = *from.projection.target;
  const bool over = from.side == SliceSide::over;
  if (over ? (c.source(u) != from.apex || c.target(u) != to.apex)
           : (c.source(u) != to.apex || c.target(u) != from.apex))
    throw InvalidArgument("reindexing arrow does not connect the slice apexes");
  Functor f{from.category, to.category, {}, {}};
  auto object_of = [&](Morphism arrow) {
    for (Object o = 0; o < to.category->num_objects(); ++o)
      if (to.arrow_of[o] == arrow) return o;
    throw InvalidArgument("reindexed arrow is not a slice object");
  };
  for (Object o = 0; o < from.category->num_objects(); ++o) {
    Morphism a = from.arrow_of[o];
    f.on_objects.push_back(object_of(over ? c.compose(u, a) : c.compose(a, u)));
  }
  for (Morphism m = 0; m < from.category->num_morphisms(); ++m) {
    Morphism h = from.projection.on_morphisms[m];
    Object s = f.on_objects[from.category->source(m)];
    Object t = f.on_objects[from.category->target(m)];
    Morphism image = -1;
    for (Morphism k = 0; k < to.category->num_morphisms(); ++k)
      if (to.projection.on_morphisms[k] == h && to.category->source(k) == s && to.category->target(k) == t)
        image = k;
    if (image < 0) throw InvalidArgument("reindexed morphism is not a slice morphism");
    f.on_morphisms.push_back(image);
  }
  return f;
}

}  // namespace hgc
