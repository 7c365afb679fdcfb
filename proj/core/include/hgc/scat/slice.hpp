#pragma once

#include <vector>

#include "hgc/scat/category.hpp"

namespace hgc {

enum class SliceSide { over, under };

/// D/d (side over: arrows into d) or d/D (side under: arrows out of d), with
/// the projection functor to D.
struct Slice {
  CategoryPtr category;
  Functor projection;
  SliceSide side;
  Object apex;
  /// The D-arrow underlying each slice object.
  std::vector<Morphism> arrow_of;
};

/// Throws InvalidArgument for an unknown object.
Slice slice(const CategoryPtr& d, Object apex, SliceSide side);

/// Functoriality in the apex along u : apex(from) -> apex(to) for over slices
/// (postcomposition D/d -> D/d'), or u : apex(to) -> apex(from) for under
/// slices (precomposition d'/D -> d/D).
Functor reindex(const Slice& from, const Slice& to, Morphism u);

}  // namespace hgc
