#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hgc/scat/budget.hpp"
#include "hgc/scat/simplicial_map.hpp"

namespace hgc {

struct MapSearchOptions {
  Budget* budget = nullptr;
  /// Stop after this many maps; 0 means no limit.
  std::size_t limit = 0;
  /// Prescribed values {degree, source simplex} -> target simplex.
  std::map<std::pair<int, Simplex>, Simplex> fixed;
  /// Over-base constraint: target_structure o f == source_structure.
  const SimplicialMap* source_structure = nullptr;
  const SimplicialMap* target_structure = nullptr;
  /// Marking constraint on edges: marked source edges go to marked target edges.
  const std::vector<bool>* source_marked = nullptr;
  const std::vector<bool>* target_marked = nullptr;
};

/// Enumerates simplicial maps P -> X by backtracking over the nondegenerate
/// simplices of P in (degree, id) order, trying candidate values in increasing
/// id order. Maps therefore arrive in lexicographic order of their values on
/// nondegenerate simplices. `visit` returns false to stop early.
/// Throws BudgetExceeded when the budget runs out.
void enumerate_maps(const SSetPtr& p, const SSetPtr& x, const MapSearchOptions& options,
                    const std::function<bool(const SimplicialMap&)>& visit);

std::vector<SimplicialMap> all_maps(const SSetPtr& p, const SSetPtr& x,
                                    const MapSearchOptions& options = {});
std::size_t count_maps(const SSetPtr& p, const SSetPtr& x, const MapSearchOptions& options = {});

/// Extends values given on the nondegenerate simplices of P (in (degree, id)
/// order) to full components using Eilenberg-Zilber roots.
SimplicialMap extend_from_nondegenerate(const SSetPtr& p, const SSetPtr& x,
                                        const std::vector<Simplex>& nondegenerate_values);

}  // namespace hgc
