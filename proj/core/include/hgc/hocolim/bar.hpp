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

/// The bar construction of a (marked) diagram over the sharp nerve. An
/// n-simplex is keyed {sigma, x} with x an n-simplex of F(sigma(0)).
///
/// Structure maps: x.theta lives in F(sigma(0)); when theta(0) > 0 it is
/// transported along sigma(0 -> theta(0)). So d_0(sigma, x) =
/// (d_0 sigma, F(f_1)(d_0 x)) and d_i, s_j act on x alone. This is the
/// unique choice under which the comparison into the total space is
/// simplicial and lies over the nerve.
struct BarConstruction {
  std::shared_ptr<const Nerve> nerve;
  KeyedSet object;
  /// An edge (sigma, x) is marked iff x is marked in F(sigma(0)).
  MarkedSimplicialSet marked;
  SimplicialMap projection;

  Simplex sigma(int n, Simplex s) const { return static_cast<Simplex>(object.key(n, s)[0]); }
  Simplex value(int n, Simplex s) const { return static_cast<Simplex>(object.key(n, s)[1]); }
};

BarConstruction bar_construction(const Diagram& f);

/// iota(sigma, x) = (sigma, beta) with beta_k = F(sigma(0 -> k))(x|[0..k]).
struct IotaReport {
  std::optional<MarkedMap> map;
  bool marked_map = false;  // a valid map of marked simplicial sets
  bool over_base = false;
  bool injective = false;
  /// Per object d: the induced map on fibers over d is a bijection.
  std::vector<bool> fiber_bijective;
  std::vector<std::string> details;
  bool ok() const;
};

IotaReport iota_comparison(const Diagram& f, const BarConstruction& bar, const TotalSpace& total);

/// X tensor K: objectwise product with flat K.
Diagram tensor_diagram(const Diagram& x, const SSetPtr& k);

/// Compares the bar construction of X tensor K with (bar X) x flat K via
/// (sigma, (x, k)) |-> ((sigma, x), k).
struct TensorReport {
  std::optional<SimplicialMap> map;
  bool bijective = false;
  bool natural = false;
  bool marking_preserved = false;  // marked edges correspond exactly
  bool over_base = false;
  std::vector<std::string> details;
  bool ok() const { return map && bijective && natural && marking_preserved && over_base; }
};

TensorReport tensor_compat_check(const Diagram& x, const SSetPtr& k);

}  // namespace hgc
