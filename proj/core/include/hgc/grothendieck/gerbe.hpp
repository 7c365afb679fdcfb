#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "hgc/grothendieck/diagram.hpp"
#include "hgc/scat/budget.hpp"
#include "hgc/scat/function_complex.hpp"
#include "hgc/scat/standard.hpp"

namespace hgc {

/// Shared caches for gerbe computations over one diagram: the nerve of the
/// base, the function complexes [Delta[j], X(d)] truncated at k_max, and the
/// maps between them induced by simplicial operators and by the diagram.
class GerbeContext {
 public:
  GerbeContext(const Diagram& x, int k_max, Budget* budget = nullptr);

  const Diagram& diagram() const { return x_; }
  const Nerve& nerve() const { return *nerve_; }
  std::shared_ptr<const Nerve> nerve_ptr() const { return nerve_; }
  int k_max() const { return k_max_; }
  Budget* budget() const { return budget_; }

  /// [Delta[j], X(d)] up to degree k_max.
  const FunctionComplex& complex(int j, Object d);
  /// Restriction [Delta[a], X(d)] -> [Delta[b], X(d)] along u : [b] -> [a].
  const SimplicialMap& restriction(const MonotoneMap& u, Object d);
  /// Postcomposition [Delta[j], X(source f)] -> [Delta[j], X(target f)] with X(f).
  const SimplicialMap& transport(int j, Morphism f);
  /// The j-simplex of X(d) represented by a vertex of [Delta[j], X(d)].
  Simplex evaluate(int j, Object d, Simplex vertex);
  /// Delta[j] at the diagram's dimension bound, shared by all complexes.
  const KeyedSet& delta(int j);

 private:
  const Diagram& x_;
  int k_max_;
  Budget* budget_;
  std::shared_ptr<const Nerve> nerve_;
  std::deque<KeyedSet> deltas_;  // stable references
  std::map<std::pair<int, Object>, std::unique_ptr<FunctionComplex>> complexes_;
  std::map<std::pair<MonotoneMap, Object>, std::unique_ptr<SimplicialMap>> restrictions_;
  std::map<std::pair<int, Morphism>, std::unique_ptr<SimplicialMap>> transports_;
};

/// The gerbe G_n(sigma) truncated at k_max, built by the recursive pullback
///   G_j = G_{j-1} x_{[Delta[j-1], X(d_j)]} [Delta[j], X(d_j)]
/// of X(f_j) o p2 against restriction along the last coface. G_0 = [Delta[0], X(d_0)].
struct Gerbe {
  int n;
  Simplex sigma;
  SSetPtr set;
  /// p1 : G_n -> G_{n-1} (absent for n = 0).
  std::optional<SimplicialMap> p1;
  /// p2 : G_n -> [Delta[n], X(d_n)].
  SimplicialMap p2;
  /// chains[m][x] = (beta_0, ..., beta_n) with beta_j a simplex of
  /// [Delta[j], X(d_j)]; beta_j restricted along the last coface equals
  /// X(f_j) o beta_{j-1}.
  std::vector<std::vector<std::vector<Simplex>>> chains;
};

Gerbe gerbe(GerbeContext& ctx, int n, Simplex sigma);

}  // namespace hgc
