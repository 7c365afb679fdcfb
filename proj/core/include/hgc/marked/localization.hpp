#pragma once

#include <vector>

#include "hgc/marked/equivalence.hpp"
#include "hgc/marked/marked_set.hpp"
#include "hgc/scat/budget.hpp"
#include "hgc/scat/function_complex.hpp"

namespace hgc {

/// S[E^-1]: one copy of J glued along each marked edge. Degree n is
/// S_n plus E x (J_n minus Delta[1]_n). Keys are {1, x} for x in S and
/// {0, e, phi_0, ..., phi_n} for the glued cell of the non-monotone
/// phi : [n] -> {0, 1} over the marked edge e. Glued cells come first, so the
/// least equivalence witness of p(e) is the one supplied by e's own copy of J.
struct Localization {
  MarkedSimplicialSet source;
  KeyedSet object;
  /// S -> S[E^-1], degreewise injective.
  SimplicialMap p;
  /// S[E^-1] marked by the image p(E).
  MarkedSimplicialSet marked_image;
};

Localization localize(const MarkedSimplicialSet& x);

/// The copy of J glued along the marked edge e, as a map J -> S[E^-1]. `j` must
/// be J at the localization's dimension bound.
SimplicialMap glued_copy(const Localization& loc, const KeyedSet& j, Simplex e);

/// The J-extension of an equivalence edge: the least map J -> T sending
/// 01 to y, 10 to y^-1, 010 to sigma and 101 to beta for the canonical witness.
/// `j` must be J at T's dimension bound or lower. Throws PreconditionFailed
/// when y is not an equivalence edge or no extension exists.
SimplicialMap j_extension(const KeyedSet& j, const SSetPtr& t, Simplex y, Budget* budget = nullptr);

/// The induced U : S[E^-1] -> T with U o p = G, for G sending marked edges
/// to equivalence edges. Throws PreconditionFailed naming the offending edge.
SimplicialMap localization_universal(const Localization& loc, const SimplicialMap& g,
                                     Budget* budget = nullptr);

/// L on marked maps: f : X -> Y induces S_X[E_X^-1] -> S_Y[E_Y^-1].
SimplicialMap localize_map(const Localization& from, const Localization& to, const SimplicialMap& f);

/// Unit X -> E(L(X)) and counit L(E(S)) -> S of the adjunction L -| E.
struct UnitMap {
  Localization localization;
  MarkedSimplicialSet target;  // E(L(X))
  MarkedMap unit;
};
UnitMap adjunction_unit(const MarkedSimplicialSet& x);

struct CounitMap {
  Localization localization;  // L(E(S))
  SimplicialMap counit;
};
CounitMap adjunction_counit(const SSetPtr& s, Budget* budget = nullptr);

/// [X, Y]^+: the flat mapping space of marked maps flat(Delta[k]) x X -> Y,
/// its marked edges (those extending to sharp(Delta[1]) x X -> Y), and the
/// sharp subspace of simplices all of whose edges are marked.
struct MarkedHom {
  std::shared_ptr<const FunctionComplex> flat_space;
  MarkedSimplicialSet marked;
  Subcomplex sharp_space;
};
/// With structure maps x -> B and y -> B, the over-base variant [X, Y]^+_B.
MarkedHom marked_hom(const MarkedSimplicialSet& x, const MarkedSimplicialSet& y, int k_max,
                     Budget* budget = nullptr, const SimplicialMap* source_structure = nullptr,
                     const SimplicialMap* target_structure = nullptr);

}  // namespace hgc
