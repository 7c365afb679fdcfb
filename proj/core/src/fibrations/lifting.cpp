#include "hgc/fibrations/lifting.hpp"

#include <algorithm>

#include "hgc/scat/errors.hpp"
#include "hgc/scat/map_search.hpp"
#include "hgc/scat/standard.hpp"

namespace hgc {

namespace {

Key face_key(int n, int j) {
  Key k;
  for (int t = 0; t <= n; ++t)
    if (t != j) k.push_back(t);
  return k;
}

bool fills(const SimplicialMap& p, const LiftingProblem& prob, Simplex z) {
  const auto& x = *p.source();
  if (p(prob.n, z) != prob.bottom) return false;
  for (int j = 0; j <= prob.n; ++j)
    if (j != prob.i && x.face(prob.n, j, z) != prob.faces[j]) return false;
  return true;
}

void check_bound(const SimplicialMap& p, int n_max) {
  if (n_max > p.source()->dim())
    throw InsufficientTruncation("horn dimension " + std::to_string(n_max) + " exceeds dimension bound " +
                                 std::to_string(p.source()->dim()));
}

}  // namespace

std::string LiftingProblem::describe(const SimplicialMap& p) const {
  const auto& x = *p.source();
  std::string s = "Lambda^" + std::to_string(i) + "[" + std::to_string(n) + "] faces";
  for (int j = 0; j <= n; ++j)
    if (j != i) s += " d" + std::to_string(j) + "=" + x.label(n - 1, faces[j]);
  return s + " over " + p.target()->label(n, bottom);
}

std::vector<Simplex> lift_search(const SimplicialMap& p, const LiftingProblem& prob, Budget* budget) {
  const auto& x = *p.source();
  // pivot on one prescribed face, then test the rest
  const int pivot = prob.i == 0 ? 1 : 0;
  std::vector<Simplex> out;
  for (Simplex z : x.cofaces(prob.n, pivot, prob.faces[pivot])) {
    charge(budget);
    if (fills(p, prob, z)) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> lift_search_oracle(const SimplicialMap& p, const LiftingProblem& prob) {
  std::vector<Simplex> out;
  for (Simplex z = 0; z < p.source()->size(prob.n); ++z)
    if (fills(p, prob, z)) out.push_back(z);
  return out;
}

std::vector<LiftingProblem> horn_problems(const SimplicialMap& p, int n, int i, std::optional<Simplex> edge01,
                                          Budget* budget) {
  const auto& x = p.source();
  const auto& s = *p.target();
  auto h = standard::horn(n, i, x->dim());
  MapSearchOptions o;
  o.budget = budget;
  if (edge01) o.fixed[{1, h.at(1, {0, 1})}] = *edge01;
  std::vector<LiftingProblem> out;
  enumerate_maps(h.set, x, o, [&](const SimplicialMap& m) {
    LiftingProblem prob{n, i, std::vector<Simplex>(static_cast<std::size_t>(n + 1), 0), 0};
    for (int j = 0; j <= n; ++j)
      if (j != i) prob.faces[j] = m(n - 1, h.at(n - 1, face_key(n, j)));
    const int pivot = i == 0 ? 1 : 0;
    for (Simplex b : s.cofaces(n, pivot, p(n - 1, prob.faces[pivot]))) {
      bool ok = true;
      for (int j = 0; j <= n && ok; ++j)
        if (j != i && s.face(n, j, b) != p(n - 1, prob.faces[j])) ok = false;
      if (!ok) continue;
      prob.bottom = b;
      out.push_back(prob);
    }
    return true;
  });
  std::stable_sort(out.begin(), out.end(), [](const LiftingProblem& a, const LiftingProblem& b) {
    return std::tie(a.faces, a.bottom) < std::tie(b.faces, b.bottom);
  });
  return out;
}

std::string LiftingVerdict::describe(const SimplicialMap& p) const {
  std::string s = std::string(holds ? "true" : "false") + " up to n_max = " + std::to_string(n_max) + " (" +
                  std::to_string(problems) + " problems)";
  if (counterexample) s += "; no filler for " + counterexample->describe(p);
  return s;
}

LiftingVerdict is_inner_fibration(const SimplicialMap& p, int n_max, Budget* budget) {
  check_bound(p, n_max);
  LiftingVerdict v;
  v.n_max = n_max;
  for (int n = 2; n <= n_max; ++n)
    for (int i = 1; i < n; ++i)
      for (const auto& prob : horn_problems(p, n, i, {}, budget)) {
        ++v.problems;
        if (lift_search(p, prob, budget).empty()) {
          v.holds = false;
          v.counterexample = prob;
          return v;
        }
      }
  return v;
}

SimplicialMap to_point(const SSetPtr& s) {
  auto pt = standard::delta(0, s->dim());
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(s->dim() + 1));
  for (int n = 0; n <= s->dim(); ++n) c[n].assign(s->size(n), 0);
  return SimplicialMap(s, pt.set, std::move(c));
}

LiftingVerdict is_quasi_category(const SSetPtr& s, int n_max, Budget* budget) {
  return is_inner_fibration(to_point(s), n_max, budget);
}

EdgeVerdict is_cocartesian_edge(const SimplicialMap& p, Simplex edge, int n_max, Budget* budget,
                                bool check_precondition) {
  check_bound(p, n_max);
  EdgeVerdict v;
  v.lifting.n_max = n_max;
  if (check_precondition && !is_inner_fibration(p, n_max, budget).holds) {
    v.precondition = false;
    return v;
  }
  for (int n = 2; n <= n_max; ++n)
    for (const auto& prob : horn_problems(p, n, 0, edge, budget)) {
      ++v.lifting.problems;
      if (lift_search(p, prob, budget).empty()) {
        v.lifting.holds = false;
        v.lifting.counterexample = prob;
        return v;
      }
    }
  return v;
}

std::string FibrationVerdict::describe(const SimplicialMap& p) const {
  std::string s = std::string(holds ? "true" : "false") + " up to n_max = " + std::to_string(n_max);
  if (!inner.holds) return s + "; not an inner fibration: " + inner.describe(p);
  if (missing_lift)
    s += "; no coCartesian lift of " + p.target()->label(1, missing_lift->first) + " at " +
         p.source()->label(0, missing_lift->second);
  return s;
}

FibrationVerdict is_cocartesian_fibration(const SimplicialMap& p, int n_max, Budget* budget) {
  FibrationVerdict v;
  v.n_max = n_max;
  v.inner = is_inner_fibration(p, n_max, budget);
  if (!v.inner.holds) return v;
  const auto& x = *p.source();
  const auto& s = *p.target();
  v.cocartesian.assign(x.size(1), false);
  for (Simplex e = 0; e < x.size(1); ++e) v.cocartesian[e] = is_cocartesian_edge(p, e, n_max, budget, false).holds();
  v.holds = true;
  for (Simplex b = 0; b < s.size(1) && v.holds; ++b)
    for (Simplex a = 0; a < x.size(0); ++a) {
      if (p(0, a) != s.face(1, 1, b)) continue;
      bool found = false;
      for (Simplex e : x.cofaces(1, 1, a))
        if (p(1, e) == b && v.cocartesian[e]) {
          found = true;
          break;
        }
      if (!found) {
        v.holds = false;
        v.missing_lift = std::make_pair(b, a);
        break;
      }
    }
  return v;
}

MarkedSimplicialSet natural_marking(const SimplicialMap& p, int n_max, Budget* budget) {
  auto v = is_cocartesian_fibration(p, n_max, budget);
  if (!v.inner.holds) throw PreconditionFailed("natural marking needs an inner fibration: " + v.inner.describe(p));
  return {p.source(), v.cocartesian};
}

}  // namespace hgc
