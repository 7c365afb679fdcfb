#pragma once

#include <vector>

#include "hgc/scat/simplicial_map.hpp"

namespace hgc {

/// A bisimplicial set truncated at (M, N): rows[m] is the simplicial set
/// X_{m, *} (vertical direction, bound N), and the horizontal structure maps
/// are simplicial maps between rows.
struct BisimplicialSet {
  std::vector<SSetPtr> rows;
  /// horizontal_faces[m][i] : rows[m] -> rows[m-1], 1 <= m <= M.
  std::vector<std::vector<SimplicialMap>> horizontal_faces;
  /// horizontal_degeneracies[m][j] : rows[m] -> rows[m+1], 0 <= m < M.
  std::vector<std::vector<SimplicialMap>> horizontal_degeneracies;

  int horizontal_dim() const { return static_cast<int>(rows.size()) - 1; }
  int vertical_dim() const { return rows.empty() ? -1 : rows.front()->dim(); }
  std::size_t size(int m, int n) const { return rows[m]->size(n); }
};

}  // namespace hgc
