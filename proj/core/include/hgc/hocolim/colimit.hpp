#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hgc/grothendieck/diagram.hpp"
#include "hgc/hocolim/bar.hpp"
#include "hgc/marked/localization.hpp"
#include "hgc/scat/budget.hpp"
#include "hgc/scat/limits.hpp"

namespace hgc {

/// Degreewise colimit: the coproduct of the values modulo x ~ F(f)(x),
/// with one leg per object.
Cocone colim_diagram(const Diagram& f);

/// Marked colimit: the plain colimit marked by the images of marked edges.
struct MarkedColimit {
  Cocone cocone;
  MarkedSimplicialSet marked;
};
MarkedColimit colim_marked(const Diagram& f);

/// The homotopy colimit pipeline: mark equivalences objectwise, take the
/// bar construction, forget the projection, localize at the marked edges.
struct Hocolim {
  Diagram marked_diagram;
  BarConstruction bar;
  Localization localization;
};
/// Needs a dimension bound of at least 2.
Hocolim hocolim(const Diagram& f);

/// Exhaustive check of the universal property against one target Y:
/// maps colim -> Y correspond bijectively to cocones F -> Y via the legs.
struct UniversalPropertyReport {
  std::size_t maps_out = 0;
  std::size_t cocones = 0;
  bool bijective = false;
  std::vector<std::string> details;
};
UniversalPropertyReport check_colimit_universal(const Diagram& f, const Cocone& colim, const SSetPtr& y,
                                                Budget* budget = nullptr);

/// Hom-set sizes S(L colim+ E F, Y) and S(colim F, Y), reported side by side.
struct HomCounts {
  std::size_t localized = 0;
  std::size_t plain = 0;
};
HomCounts colimit_hom_counts(const Diagram& f, const SSetPtr& y, Budget* budget = nullptr);

}  // namespace hgc
