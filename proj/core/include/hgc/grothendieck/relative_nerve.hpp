#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgc/grothendieck/diagram.hpp"
#include "hgc/grothendieck/total.hpp"
#include "hgc/marked/marked_set.hpp"
#include "hgc/scat/standard.hpp"
#include "hgc/scat/validate.hpp"

namespace hgc {

/// The nerve of D relative to f. An n-simplex is a chain sigma : [n] -> D with
/// a family tau(J), one (|J|-1)-simplex of f(sigma(max J)) per nonempty
/// J subset of [n], such that f(sigma(i -> j))(tau(I)) = tau(J)|I whenever
/// I is a subset of J with maxima i <= j.
///
/// Keys are {sigma, tau(1), tau(2), ..., tau(2^{n+1} - 1)}, indexed by the
/// bitmask of J (bit b set iff b is in J).
struct RelativeNerve {
  std::shared_ptr<const Nerve> nerve;
  KeyedSet object;
  /// p_f : N_f(D) -> N(D).
  SimplicialMap projection;

  Simplex sigma(int n, Simplex x) const { return static_cast<Simplex>(object.key(n, x)[0]); }
  /// tau(J) for J given as a nonzero bitmask.
  Simplex tau(int n, Simplex x, unsigned mask) const { return static_cast<Simplex>(object.key(n, x)[mask]); }
};

RelativeNerve relative_nerve(const Diagram& f);

/// Every compatibility condition on a key of degree n; empty when they hold.
ValidationReport check_relative_simplex(const Diagram& f, const Nerve& nerve, int n, const Key& key);

/// Marked variant: the edge (e, h) with h = tau({0,1}) is marked iff h is
/// marked in f(target e).
MarkedSimplicialSet marked_relative_nerve(const RelativeNerve& rn, const Diagram& f);

/// The comparison from the total space to the relative nerve:
/// tau(J) = beta_{max J} restricted to J.
struct IsoReport {
  std::optional<SimplicialMap> map;
  bool bijective = false;
  bool natural = false;
  bool over_base = false;
  int max_degree = -1;
  std::vector<std::string> details;
  bool ok() const { return map && bijective && natural && over_base; }
  std::string summary() const;
};

IsoReport canonical_iso(const Diagram& x, const TotalSpace& total, const RelativeNerve& rn);

/// fiber(p_f, d) -> f(d), sending (point, tau) to tau([n]).
SimplicialMap relative_fiber_map(const RelativeNerve& rn, const Diagram& f, Object d);
/// fiber(total -> N(D), d) -> X(d), sending (point, sigma, beta) to beta_n.
SimplicialMap total_fiber_map(const TotalSpace& total, const Diagram& x, Object d);

}  // namespace hgc
