#pragma once

#include <vector>

#include "hgc/scat/simplicial_set.hpp"

namespace hgc {

/// Degreewise function source -> target. Components cover degrees
/// 0..source()->dim(); the target may carry a higher dimension bound.
class SimplicialMap {
 public:
  SimplicialMap(SSetPtr source, SSetPtr target, std::vector<std::vector<Simplex>> components);

  static SimplicialMap identity(const SSetPtr& s);
  /// The Yoneda map Delta[n] -> target classifying the n-simplex `x`; `delta`
  /// must be Delta[n] (as built by standard::delta) at target's dimension bound.
  static SimplicialMap classifying(const SSetPtr& delta, const SSetPtr& target, int n, Simplex x);

  const SSetPtr& source() const { return source_; }
  const SSetPtr& target() const { return target_; }
  Simplex operator()(int n, Simplex x) const { return components_[n][x]; }
  const std::vector<Simplex>& component(int n) const { return components_[n]; }
  const std::vector<std::vector<Simplex>>& components() const { return components_; }

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
  }

 private:
  SSetPtr source_;
  SSetPtr target_;
  std::vector<std::vector<Simplex>> components_;
};

/// g o f; requires f.target() == g.source() (pointer identity).
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Same components, reinterpreted between other (isomorphic-by-id) objects.
SimplicialMap retarget(const SimplicialMap& f, SSetPtr source, SSetPtr target);

/// True iff both maps agree on every simplex of the common source.
bool same_components(const SimplicialMap& a, const SimplicialMap& b);

}  // namespace hgc
