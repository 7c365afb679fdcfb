#pragma once

#include "hgc/scat/category.hpp"
#include "hgc/scat/simplicial_map.hpp"
#include "hgc/scat/simplicial_set.hpp"

namespace hgc {

inline constexpr int kDefaultDimBound = 4;

namespace standard {

/// Delta[n] truncated at `dim`; k-simplices are the monotone maps [k] -> [n]
/// (keys are their value lists, so ids follow MonotoneMap::all order).
KeyedSet delta(int n, int dim);
/// The horn Lambda^i[n]: simplices of Delta[n] lying in some face d_j, j != i.
KeyedSet horn(int n, int i, int dim);
/// The boundary of Delta[n].
KeyedSet boundary(int n, int dim);
/// J, the nerve of the walking isomorphism; k-simplices are all functions
/// [k] -> {0, 1}.
KeyedSet J(int dim);

/// Inclusion of a keyed subcomplex into a keyed complex sharing its key scheme.
SimplicialMap keyed_inclusion(const KeyedSet& sub, const KeyedSet& super);

}  // namespace standard

/// The nerve N(C) truncated at `dim`. The n-simplex keyed {d0, f1, ..., fn}
/// is the chain d0 -f1-> d1 -> ... -fn-> dn.
class Nerve {
 public:
  Nerve(CategoryPtr category, int dim);

  const CategoryPtr& category() const { return category_; }
  const SSetPtr& set() const { return keyed_.set; }
  const KeyedSet& keyed() const { return keyed_; }
  int dim() const { return keyed_.set->dim(); }

  /// The k-th object of the chain x.
  Object object(int n, Simplex x, int k) const;
  /// f_k of the chain x, 1 <= k <= n.
  Morphism arrow(int n, Simplex x, int k) const;
  /// The composite chain morphism d_i -> d_j for i <= j (an identity when i == j).
  Morphism composite(int n, Simplex x, int i, int j) const;

  Simplex vertex_of(Object d) const { return keyed_.at(0, {d}); }
  /// The totally degenerate n-simplex on id_d.
  Simplex degenerate_on(Object d, int n) const;
  /// The 1-simplex of a morphism.
  Simplex edge_of(Morphism f) const;

 private:
  CategoryPtr category_;
  KeyedSet keyed_;
};

/// Key action shared by nerve-like chain keys {d0, f1, ..., fn}.
Key act_on_chain(const FiniteCategory& c, const MonotoneMap& op, const Key& chain);
/// Composite d_i -> d_j of a chain key.
Morphism chain_composite(const FiniteCategory& c, const Key& chain, int i, int j);
/// Object d_k of a chain key.
Object chain_object(const FiniteCategory& c, const Key& chain, int k);

}  // namespace hgc
