#pragma once

#include <memory>
#include <vector>

#include "hgc/scat/budget.hpp"
#include "hgc/scat/limits.hpp"
#include "hgc/scat/simplicial_map.hpp"

namespace hgc {

struct FunctionComplexOptions {
  Budget* budget = nullptr;
  /// Over-base variant: only maps f with target_structure o f == source_structure o pr_A.
  const SimplicialMap* source_structure = nullptr;  // A -> B
  const SimplicialMap* target_structure = nullptr;  // X -> B
  /// Marked variant: edges (t, a) with a marked (and t degenerate when
  /// `flat_time`) must go to marked edges of X.
  const std::vector<bool>* source_marked = nullptr;
  const std::vector<bool>* target_marked = nullptr;
  bool flat_time = true;
};

/// The function complex [A, X] truncated at k_max: k-simplices are the maps
/// A x Delta[k] -> X, faces and degeneracies act by precomposition with
/// A x Delta[k-1] -> A x Delta[k] and A x Delta[k+1] -> A x Delta[k].
/// A and X must share a dimension bound N >= k_max + (top nondegenerate
/// degree of A); otherwise InsufficientTruncation is thrown.
/// Simplex keys are the values on the nondegenerate simplices of A x Delta[k].
class FunctionComplex {
 public:
  FunctionComplex(SSetPtr a, SSetPtr x, int k_max, const FunctionComplexOptions& options = {});

  const SSetPtr& set() const { return space_.set; }
  const KeyedSet& keyed() const { return space_; }
  const SSetPtr& source() const { return a_; }
  const SSetPtr& target() const { return x_; }
  int k_max() const { return k_max_; }
  /// A x Delta[k] at the shared dimension bound, keys {a, t}.
  const Cone& cylinder(int k) const { return cylinders_[k]; }
  /// Delta[k] at the shared dimension bound.
  const KeyedSet& delta(int k) const { return deltas_[k]; }
  /// The map A x Delta[k] -> X represented by the k-simplex f.
  const SimplicialMap& map_of(int k, Simplex f) const { return maps_[k][f]; }
  /// The k-simplex representing a map A x Delta[k] -> X, if present.
  std::optional<Simplex> find(int k, const SimplicialMap& f) const;

 private:
  SSetPtr a_;
  SSetPtr x_;
  int k_max_;
  std::vector<KeyedSet> deltas_;
  std::vector<Cone> cylinders_;
  std::vector<std::vector<SimplicialMap>> maps_;
  KeyedSet space_;
};

using FunctionComplexPtr = std::shared_ptr<const FunctionComplex>;

/// f_* : [A, X] -> [A, Y] for g : X -> Y; both complexes share A and k_max.
SimplicialMap postcompose(const FunctionComplex& from, const FunctionComplex& to,
                          const SimplicialMap& g);
/// u^* : [A, X] -> [A', X] for u : A' -> A.
SimplicialMap precompose(const FunctionComplex& from, const FunctionComplex& to,
                         const SimplicialMap& u);
/// The constant-map inclusion X (truncated at k_max) -> [A, X]: x |-> ((a, t) |-> x.t).
/// `x_truncated` must be X retruncated to k_max.
SimplicialMap constant_maps(const SSetPtr& x_truncated, const FunctionComplex& fc);
/// The evaluation [Delta[0], X] -> X (truncated at k_max), an isomorphism.
SimplicialMap evaluate_point(const FunctionComplex& fc, const SSetPtr& x_truncated);

}  // namespace hgc
