#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hgc/marked/marked_set.hpp"
#include "hgc/scat/budget.hpp"
#include "hgc/scat/simplicial_map.hpp"

namespace hgc {

/// A horn-lifting problem for p : X -> S: the horn Lambda^i[n] -> X given by
/// its faces (faces[j] = d_j of the missing filler, j != i) and a bottom
/// n-simplex of S whose faces are the images of the horn faces.
struct LiftingProblem {
  int n = 0;
  int i = 0;
  std::vector<Simplex> faces;  // faces[i] is unused
  Simplex bottom = 0;
  std::string describe(const SimplicialMap& p) const;
};

/// Fillers: n-simplices z of X with d_j z = faces[j] for j != i and p(z) = bottom,
/// in increasing id order.
std::vector<Simplex> lift_search(const SimplicialMap& p, const LiftingProblem& problem, Budget* budget = nullptr);

/// The same fillers by a scan of every n-simplex of X.
std::vector<Simplex> lift_search_oracle(const SimplicialMap& p, const LiftingProblem& problem);

/// All commuting squares Lambda^i[n] -> X over S, in canonical order: horn maps
/// by lexicographic value order, then bottom simplices by id. A horn edge
/// {0,1} may be prescribed (the coCartesian case).
std::vector<LiftingProblem> horn_problems(const SimplicialMap& p, int n, int i, std::optional<Simplex> edge01 = {},
                                          Budget* budget = nullptr);

/// Verdicts hold "up to n_max": only horns of dimension <= n_max are tested.
struct LiftingVerdict {
  bool holds = true;
  int n_max = 0;
  std::size_t problems = 0;
  std::optional<LiftingProblem> counterexample;
  std::string describe(const SimplicialMap& p) const;
};

/// Every inner horn Lambda^i[n], 2 <= n <= n_max, has a filler over S.
LiftingVerdict is_inner_fibration(const SimplicialMap& p, int n_max, Budget* budget = nullptr);
/// Inner fibration over the point.
LiftingVerdict is_quasi_category(const SSetPtr& s, int n_max, Budget* budget = nullptr);

struct EdgeVerdict {
  bool precondition = true;  // p passed the inner fibration check
  LiftingVerdict lifting;
  bool holds() const { return precondition && lifting.holds; }
};

/// Every Lambda^0[n] problem (2 <= n <= n_max) restricting to `edge` on {0,1}
/// has a filler. With check_precondition the inner-fibration test runs first.
EdgeVerdict is_cocartesian_edge(const SimplicialMap& p, Simplex edge, int n_max, Budget* budget = nullptr,
                                bool check_precondition = true);

struct FibrationVerdict {
  bool holds = false;
  int n_max = 0;
  LiftingVerdict inner;
  /// Per edge of X: p-coCartesian up to n_max (empty if the inner check failed).
  std::vector<bool> cocartesian;
  /// A base edge and a vertex over its source with no coCartesian lift.
  std::optional<std::pair<Simplex, Simplex>> missing_lift;
  std::string describe(const SimplicialMap& p) const;
};

FibrationVerdict is_cocartesian_fibration(const SimplicialMap& p, int n_max, Budget* budget = nullptr);

/// X marked by its p-coCartesian edges (up to n_max). Requires an inner fibration.
MarkedSimplicialSet natural_marking(const SimplicialMap& p, int n_max, Budget* budget = nullptr);

/// The unique map to Delta[0] at the same dimension bound.
SimplicialMap to_point(const SSetPtr& s);

}  // namespace hgc
