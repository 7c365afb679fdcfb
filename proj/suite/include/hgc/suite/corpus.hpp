#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hgc/grothendieck/diagram.hpp"
#include "hgc/scat/budget.hpp"
#include "hgc/scat/category.hpp"
#include "hgc/scat/simplicial_set.hpp"

namespace hgc::suite {

struct NamedSet {
  std::string name;
  SSetPtr set;
};

struct NamedCategory {
  std::string name;
  CategoryPtr category;
};

/// Small values, each with at most six nondegenerate simplices:
/// Delta[0], Delta[1], both outer and the inner 2-horns, the boundary of
/// Delta[2], two points, Delta[1] plus a point, the circle Delta[1]/boundary,
/// and N(Z/2).
std::vector<NamedSet> value_catalog(int dim);

/// Values that are nerves of categories: Delta[0], Delta[1], N(Z/2), J.
std::vector<NamedSet> nerve_catalog(int dim);

/// Bases with at most three objects and six morphisms.
std::vector<NamedCategory> base_catalog();

struct CorpusDiagram {
  std::string name;
  Diagram diagram;
};

/// A functor base -> sSet with values drawn from `values`, found by
/// backtracking over shuffled candidate maps. Returns false when the drawn
/// values admit no functor.
bool random_diagram(const NamedCategory& base, const std::vector<NamedSet>& values, std::mt19937& rng,
                    CorpusDiagram& out, Budget* budget = nullptr);

/// `count` diagrams cycling through the bases, deterministic in `seed`.
std::vector<CorpusDiagram> corpus(const std::vector<NamedCategory>& bases, const std::vector<NamedSet>& values,
                                  std::size_t count, std::uint32_t seed, Budget* budget = nullptr);

/// Total simplex count of a diagram's values.
std::size_t total_simplices(const Diagram& x);

}  // namespace hgc::suite
