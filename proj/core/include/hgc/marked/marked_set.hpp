#pragma once

#include <vector>

#include "hgc/scat/limits.hpp"
#include "hgc/scat/simplicial_map.hpp"
#include "hgc/scat/validate.hpp"

namespace hgc {

/// A simplicial set with a set of marked edges containing every degenerate edge.
struct MarkedSimplicialSet {
  SSetPtr set;
  /// marked[e] for every edge e (empty when dim() == 0).
  std::vector<bool> marked;

  bool is_marked(Simplex e) const { return marked[e]; }
  std::vector<Simplex> marked_edges() const;
};

/// Checks that the marking has one flag per edge and contains the degenerate edges.
ValidationReport validate(const MarkedSimplicialSet& x);

MarkedSimplicialSet flat(const SSetPtr& s);
MarkedSimplicialSet sharp(const SSetPtr& s);
/// Marks the given edges plus all degenerate ones.
MarkedSimplicialSet marked_with(const SSetPtr& s, const std::vector<Simplex>& edges);
inline const SSetPtr& underlying(const MarkedSimplicialSet& x) { return x.set; }

/// A simplicial map between marked sets; validate() checks f(E) in E'.
struct MarkedMap {
  MarkedSimplicialSet source;
  MarkedSimplicialSet target;
  SimplicialMap map;
};
ValidationReport validate(const MarkedMap& f);

/// Product with the componentwise marking (an edge is marked iff both
/// components are).
struct MarkedCone {
  MarkedSimplicialSet object;
  Cone cone;
};
MarkedCone marked_product(const MarkedSimplicialSet& a, const MarkedSimplicialSet& b);
/// Pullback of marked sets along f : A -> C, g : B -> C with the componentwise marking.
MarkedCone marked_pullback(const MarkedSimplicialSet& a, const MarkedSimplicialSet& b,
                           const SimplicialMap& f, const SimplicialMap& g);

}  // namespace hgc
