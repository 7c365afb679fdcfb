#pragma once

#include <utility>
#include <vector>

#include "hgc/scat/simplicial_map.hpp"
#include "hgc/scat/simplicial_set.hpp"

namespace hgc {

/// A limit object with its two legs. Keys are pairs {a, b} of simplex ids.
struct Cone {
  KeyedSet object;
  SimplicialMap first;
  SimplicialMap second;
};

/// A colimit-like object with its insertion maps.
struct Cocone {
  KeyedSet object;
  std::vector<SimplicialMap> legs;
};

/// Throws InvalidArgument on mismatched dimension bounds.
Cone product(const SSetPtr& a, const SSetPtr& b);
/// The pullback of f : A -> C and g : B -> C; needs A and B at equal dim bound.
Cone pullback(const SimplicialMap& f, const SimplicialMap& g);

/// Keys are {i, x} for the x-th simplex of the i-th summand.
Cocone coproduct(const std::vector<SSetPtr>& summands);

/// The map out of a coproduct induced by one map per summand.
SimplicialMap copair(const Cocone& sum, const std::vector<SimplicialMap>& maps);
/// The map into a product or pullback induced by two compatible maps.
SimplicialMap pair(const Cone& cone, const SimplicialMap& first, const SimplicialMap& second);

/// Quotient of S by the equivalence relation generated by `pairs` (per degree).
/// With `close_under_operators` every translate (x.op, y.op) is added first;
/// otherwise the pairs must already be closed under structure maps. Classes
/// are represented by their least member and numbered in that order; the key
/// of a class is the key {least member}.
struct Quotient {
  KeyedSet object;
  SimplicialMap projection;
};
Quotient quotient(const SSetPtr& s,
                  const std::vector<std::vector<std::pair<Simplex, Simplex>>>& pairs,
                  bool close_under_operators);

/// The pushout of f : C -> A and g : C -> B; legs are A -> P and B -> P.
Cocone pushout(const SimplicialMap& f, const SimplicialMap& g);

/// The subcomplex of simplices flagged in `keep` (which must be closed under
/// faces and degeneracies), keys {simplex of S}, with its inclusion.
struct Subcomplex {
  KeyedSet object;
  SimplicialMap inclusion;
};
Subcomplex subcomplex(const SSetPtr& s, const std::vector<std::vector<bool>>& keep);

/// Connected components: component id per vertex (numbered by least vertex)
/// and the component count.
struct Components {
  std::vector<std::uint32_t> of_vertex;
  std::size_t count = 0;
};
Components pi0(const SimplicialSet& s);

/// The fiber of p over an n-simplex of its target: the pullback of p along
/// Delta[n] -> target. Keys are {delta simplex, source simplex}.
Cone fiber(const SimplicialMap& p, int n, Simplex x);

}  // namespace hgc
