#pragma once

#include <memory>
#include <vector>

#include "hgc/grothendieck/diagram.hpp"
#include "hgc/grothendieck/gerbe.hpp"
#include "hgc/marked/marked_set.hpp"
#include "hgc/scat/bisimplicial.hpp"
#include "hgc/scat/standard.hpp"

namespace hgc {

/// The total space of a diagram over the nerve of its base. An n-simplex is
/// keyed {sigma, beta_0, ..., beta_n} with sigma an n-chain d_0 -> ... -> d_n
/// and beta_k a k-simplex of X(d_k) satisfying d_k beta_k = X(f_k)(beta_{k-1}).
/// An operator theta : [m] -> [n] sends it to sigma.theta with components
/// beta_{theta(k)} restricted along theta|[0..k] : [k] -> [theta(k)].
struct TotalSpace {
  std::shared_ptr<const Nerve> nerve;
  KeyedSet object;
  /// p : total space -> N(D), forgetting the gerbe data.
  SimplicialMap projection;

  Simplex sigma(int n, Simplex x) const { return static_cast<Simplex>(object.key(n, x)[0]); }
  Simplex beta(int n, Simplex x, int k) const {
    return static_cast<Simplex>(object.key(n, x)[static_cast<std::size_t>(k + 1)]);
  }
};

/// Degree n is assembled from the vertices of the gerbes G_n(sigma).
TotalSpace grothendieck_total(const Diagram& x, Budget* budget = nullptr);

/// Marking induced by a marked diagram: the edge (sigma, beta_0, beta_1) is
/// marked iff beta_1 is marked in X(d_1).
MarkedSimplicialSet marked_total(const TotalSpace& total, const Diagram& x);

/// The bisimplicial set with rows m = coproduct over sigma in N(D)_m of
/// G_m(sigma), truncated at vertical degree k_max. Row simplices are keyed
/// {sigma, beta_0, ..., beta_m} with beta_j a simplex of [Delta[j], X(d_j)].
struct GrothendieckSpace {
  std::shared_ptr<const Nerve> nerve;
  BisimplicialSet space;
  std::vector<KeyedSet> rows;
  /// base_of[m][k][x]: the nerve simplex under row m's k-simplex x.
  Simplex base_of(int m, int k, Simplex x) const { return static_cast<Simplex>(rows[m].key(k, x)[0]); }
};

/// Needs rows 0..max_row and vertical degrees 0..k_max with max_row + k_max
/// within the diagram's dimension bound.
GrothendieckSpace grothendieck_space(const Diagram& x, int max_row, int k_max, Budget* budget = nullptr);

/// Compares vertical degree 0 of each row with the total space (the
/// restriction of the space to its zeroth column). Empty on agreement.
ValidationReport compare_zeroth_column(const Diagram& x, const GrothendieckSpace& g, const TotalSpace& t,
                                       Budget* budget = nullptr);

}  // namespace hgc
