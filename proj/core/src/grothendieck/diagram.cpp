#include "hgc/grothendieck/diagram.hpp"

#include "hgc/marked/equivalence.hpp"
#include "hgc/scat/errors.hpp"

namespace hgc {

MarkedSimplicialSet Diagram::marked_value(Object d) const {
  if (!is_marked()) return flat(value(d));
  return {value(d), marking[static_cast<std::size_t>(d)]};
}

ValidationReport validate(const Diagram& x) {
  ValidationReport r;
  const auto& c = *x.base;
  if (static_cast<int>(x.values.size()) != c.num_objects() || static_cast<int>(x.maps.size()) != c.num_morphisms()) {
    r.add("diagram shape", "one value per object and one map per morphism expected");
    return r;
  }
  const int dim = x.dim();
  for (Object d = 0; d < c.num_objects(); ++d)
    if (x.value(d)->dim() != dim) r.add("uniform dimension bound", "object " + c.object_name(d));
  for (Morphism f = 0; f < c.num_morphisms(); ++f) {
    const auto& m = x.map(f);
    if (m.source() != x.value(c.source(f)) || m.target() != x.value(c.target(f))) {
      r.add("map endpoints", "morphism " + c.morphism_name(f));
      return r;
    }
    r.merge(validate(m), "morphism " + c.morphism_name(f) + ": ");
  }
  for (Object d = 0; d < c.num_objects(); ++d)
    if (x.map(c.identity(d)).components() != SimplicialMap::identity(x.value(d)).components())
      r.add("identities go to identities", "object " + c.object_name(d));
  for (Morphism g = 0; g < c.num_morphisms(); ++g)
    for (Morphism f = 0; f < c.num_morphisms(); ++f) {
      Morphism gf = c.compose(g, f);
      if (gf < 0) continue;
      if (compose(x.map(g), x.map(f)).components() != x.map(gf).components())
        r.add("composites go to composites", c.morphism_name(g) + " o " + c.morphism_name(f));
    }
  if (x.is_marked()) {
    if (static_cast<int>(x.marking.size()) != c.num_objects()) {
      r.add("marking shape", "one marking per object expected");
      return r;
    }
    for (Object d = 0; d < c.num_objects(); ++d)
      r.merge(validate(x.marked_value(d)), "object " + c.object_name(d) + ": ");
    for (Morphism f = 0; f < c.num_morphisms(); ++f)
      r.merge(validate(MarkedMap{x.marked_value(c.source(f)), x.marked_value(c.target(f)), x.map(f)}),
              "morphism " + c.morphism_name(f) + ": ");
  }
  return r;
}

Diagram constant_diagram(const CategoryPtr& base, const SSetPtr& value) {
  Diagram x{base, {}, {}, {}};
  x.values.assign(static_cast<std::size_t>(base->num_objects()), value);
  for (Morphism f = 0; f < base->num_morphisms(); ++f) x.maps.push_back(SimplicialMap::identity(value));
  return x;
}

Diagram with_flat_marking(const Diagram& x) {
  Diagram y = x;
  y.marking.clear();
  for (const auto& v : x.values) y.marking.push_back(flat(v).marked);
  return y;
}

Diagram with_sharp_marking(const Diagram& x) {
  Diagram y = x;
  y.marking.clear();
  for (const auto& v : x.values) y.marking.push_back(sharp(v).marked);
  return y;
}

Diagram with_equivalence_marking(const Diagram& x) {
  Diagram y = x;
  y.marking.clear();
  for (const auto& v : x.values) y.marking.push_back(mark_equivalences(v).marked);
  return y;
}

Diagram underlying_diagram(const Diagram& x) {
  Diagram y = x;
  y.marking.clear();
  return y;
}

}  // namespace hgc
