#pragma once

#include <memory>

#include "hgc/grothendieck/diagram.hpp"
#include "hgc/grothendieck/total.hpp"
#include "hgc/marked/localization.hpp"
#include "hgc/marked/marked_set.hpp"
#include "hgc/scat/function_complex.hpp"
#include "hgc/scat/slice.hpp"
#include "hgc/scat/standard.hpp"
#include "hgc/scat/validate.hpp"

namespace hgc {

/// N(F) : N(C) -> N(D) for a functor F : C -> D.
SimplicialMap nerve_map(const Functor& f, const Nerve& source, const Nerve& target);

/// The value at d of the left adjoint to the Grothendieck construction:
/// X x_{sharp N(D)} sharp N(D/d), for p : X -> N(D) with target base.set().
struct SliceValue {
  Slice slice;
  std::shared_ptr<const Nerve> slice_nerve;
  MarkedCone value;
};
SliceValue left_adjoint_slice(const MarkedSimplicialSet& x, const SimplicialMap& p, const Nerve& base, Object d);

/// The value at d of the right adjoint: the over-base function complex
/// [N(d/D), Y]_D truncated at k_max, for p : Y -> N(D) with target base.set().
struct RightAdjointValue {
  Slice slice;
  std::shared_ptr<const Nerve> slice_nerve;
  SimplicialMap structure;  // N(d/D) -> N(D)
  std::shared_ptr<const FunctionComplex> space;
};
RightAdjointValue right_adjoint_value(const SimplicialMap& p, const Nerve& base, Object d, int k_max,
                                      Budget* budget = nullptr);

/// eta(d) : X(d) -> [sharp N(d/D), total]^+_D up to degree k_max. A k-simplex x
/// goes to the map sending ((g, f_1, ..., f_m), alpha : [m] -> [k]) to the
/// chain (f_1, ..., f_m) with beta_j = X(f_j ... f_1 g)((x.alpha)|[0..j]).
struct GrothendieckUnit {
  Slice slice;
  std::shared_ptr<const Nerve> slice_nerve;
  SimplicialMap structure;  // N(d/D) -> N(D)
  MarkedHom hom;
  /// X(d) truncated at k_max with its marking.
  MarkedSimplicialSet source;
  /// Absent when some value fell outside the mapping space.
  std::optional<MarkedMap> unit;
  ValidationReport report;
};
GrothendieckUnit unit_map(const Diagram& x, const TotalSpace& total, Object d, int k_max, Budget* budget = nullptr);

/// Naturality of eta along u : d -> d', comparing both routes
/// X(d) -> [N(d'/D), total]_D on every simplex.
ValidationReport unit_naturality(const Diagram& x, const TotalSpace& total, Morphism u, int k_max,
                                 Budget* budget = nullptr);

/// The cotensor of p : X -> B by A over B: the pullback of
/// p_* : [A, X] -> [A, B] against the constant maps B -> [A, B].
struct Cotensor {
  std::shared_ptr<const FunctionComplex> maps;
  std::shared_ptr<const FunctionComplex> base_maps;
  SSetPtr base;  // B truncated at k_max
  Cone cone;
  /// The structure map to `base` (the second leg of `cone`).
  const SimplicialMap& projection() const { return cone.second; }
};
Cotensor cotensor_over(const SSetPtr& a, const SimplicialMap& p, int k_max, Budget* budget = nullptr);

}  // namespace hgc
