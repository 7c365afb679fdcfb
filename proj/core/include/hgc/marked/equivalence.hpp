#pragma once

#include <optional>
#include <vector>

#include "hgc/marked/marked_set.hpp"
#include "hgc/scat/budget.hpp"

namespace hgc {

/// An inverse edge y^-1 and 2-simplices sigma, beta with
///   d0 sigma = y^-1, d2 sigma = y, d1 sigma = s0(source y),
///   d0 beta = y,     d2 beta = y^-1, d1 beta = s0(target y).
struct EquivalenceWitness {
  Simplex edge;
  Simplex inverse;
  Simplex sigma;
  Simplex beta;
};

/// The lexicographically least witness (inverse, sigma, beta) for edge y, if
/// any. Throws InsufficientTruncation when s.dim() < 2.
std::optional<EquivalenceWitness> find_witness(const SimplicialSet& s, Simplex y);

struct EquivalenceVerdict {
  bool equivalence = false;
  std::optional<EquivalenceWitness> witness;
  /// Answer of the bounded-word search when it ran (depth > 0): whether y is
  /// invertible among edge paths of length <= depth modulo 2-simplex relations.
  std::optional<bool> word_search;
};

/// `witness_depth` > 0 additionally runs the bounded-word search.
EquivalenceVerdict is_equivalence_edge(const SimplicialSet& s, Simplex y, int witness_depth = 0,
                                       Budget* budget = nullptr);

/// Invertibility of y in the category presented by edge paths of length at
/// most `depth`, with each 2-simplex relating d2 then d0 to d1 and degenerate
/// edges acting as identities.
bool word_search_invertible(const SimplicialSet& s, Simplex y, int depth, Budget* budget = nullptr);

/// Checks the witness equations in s.
bool is_witness(const SimplicialSet& s, const EquivalenceWitness& w);

/// The functor E: marks exactly the edges passing the witness criterion.
MarkedSimplicialSet mark_equivalences(const SSetPtr& s);

/// The subcomplex of simplices all of whose edges are equivalence edges.
Subcomplex core(const SSetPtr& s);

}  // namespace hgc
