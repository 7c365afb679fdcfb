#pragma once

#include <string>
#include <vector>

#include "hgc/scat/bisimplicial.hpp"
#include "hgc/scat/category.hpp"
#include "hgc/scat/simplicial_map.hpp"

namespace hgc {

struct Violation {
  /// Short rule name, e.g. "d_i d_j = d_{j-1} d_i" or "s_j injective".
  std::string rule;
  /// Location of the failure.
  std::string where;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Total count found; `violations` keeps at most kMaxListed of them.
  std::size_t total = 0;

  static constexpr std::size_t kMaxListed = 64;

  bool ok() const { return total == 0; }
  void add(std::string rule, std::string where);
  void merge(const ValidationReport& other, const std::string& prefix);
};

/// The five families of simplicial identities, injectivity of degeneracies,
/// and declared vertex sequences when present.
ValidationReport validate(const SimplicialSet& s);
/// Composition table totality on composable pairs, unit laws, associativity.
ValidationReport validate(const FiniteCategory& c);
/// Commutation with every face and degeneracy map.
ValidationReport validate(const SimplicialMap& f);
/// Rows, horizontal maps, horizontal simplicial identities.
ValidationReport validate(const BisimplicialSet& b);
/// Preservation of sources, targets, identities and composites.
ValidationReport validate(const Functor& f);

/// A simplicial map that is bijective in every degree (and simplicial).
ValidationReport check_isomorphism(const SimplicialMap& f);

}  // namespace hgc
