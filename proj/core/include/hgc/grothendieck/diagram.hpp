#pragma once

#include <vector>

#include "hgc/marked/marked_set.hpp"
#include "hgc/scat/category.hpp"
#include "hgc/scat/simplicial_map.hpp"
#include "hgc/scat/validate.hpp"

namespace hgc {

/// A functor from a finite category to simplicial sets with a uniform
/// dimension bound; optionally marked objectwise.
struct Diagram {
  CategoryPtr base;
  std::vector<SSetPtr> values;          // per object
  std::vector<SimplicialMap> maps;      // per morphism
  std::vector<std::vector<bool>> marking;  // per object; empty for a plain diagram

  bool is_marked() const { return !marking.empty(); }
  int dim() const { return values.front()->dim(); }
  const SSetPtr& value(Object d) const { return values[static_cast<std::size_t>(d)]; }
  const SimplicialMap& map(Morphism f) const { return maps[static_cast<std::size_t>(f)]; }
  MarkedSimplicialSet marked_value(Object d) const;
};

/// Functoriality (identities and composites), endpoint matching, uniform
/// dimension bound, and marked-map conditions for the marked variant.
ValidationReport validate(const Diagram& x);

Diagram constant_diagram(const CategoryPtr& base, const SSetPtr& value);
/// The same diagram with every value marked flat, sharp, or by E.
Diagram with_flat_marking(const Diagram& x);
Diagram with_sharp_marking(const Diagram& x);
Diagram with_equivalence_marking(const Diagram& x);
/// Forgets the marking.
Diagram underlying_diagram(const Diagram& x);

}  // namespace hgc
