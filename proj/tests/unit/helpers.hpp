#pragma once

#include <cstddef>
#include <vector>

#include "hgc/grothendieck/diagram.hpp"
#include "hgc/scat/simplicial_set.hpp"
#include "hgc/scat/standard.hpp"

namespace hgc::test {

inline std::vector<std::size_t> counts(const SimplicialSet& s) { return s.counts(); }

/// Binomial coefficient, small arguments only.
inline std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// The diagram 0 -> 1 over [1] with values a, b and the map m.
inline Diagram arrow_diagram(const SSetPtr& a, const SSetPtr& b, const SimplicialMap& m) {
  auto c = categories::poset(1);
  Diagram x{c, {a, b}, {}, {}};
  for (Morphism f = 0; f < c->num_morphisms(); ++f)
    x.maps.push_back(c->is_identity(f) ? SimplicialMap::identity(x.values[c->source(f)]) : m);
  return x;
}

/// The constant map a -> b at vertex v.
inline SimplicialMap constant_map(const SSetPtr& a, const SSetPtr& b, Simplex v) {
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(a->dim() + 1));
  for (int n = 0; n <= a->dim(); ++n) c[n].assign(a->size(n), b->act(MonotoneMap::constant(n, 0, 0), v));
  return SimplicialMap(a, b, std::move(c));
}

}  // namespace hgc::test
