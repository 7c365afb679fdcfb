#include "hgc/scat/function_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hgc/scat/errors.hpp"
#include "hgc/scat/map_search.hpp"
#include "hgc/scat/standard.hpp"

namespace hgc {

namespace {

Key nondegenerate_key(const SimplicialMap& f) {
  const auto& p = *f.source();
  Key k;
  for (int n = 0; n <= p.dim(); ++n)
    for (Simplex s = 0; s < p.size(n); ++s)
      if (!p.degenerate(n, s)) k.push_back(static_cast<std::int32_t>(f(n, s)));
  return k;
}

}  // namespace

FunctionComplex::FunctionComplex(SSetPtr a, SSetPtr x, int k_max,
                                 const FunctionComplexOptions& options)
    : a_(std::move(a)), x_(std::move(x)), k_max_(k_max) {
  const int dim = x_->dim();
  if (a_->dim() != dim)
    throw InvalidArgument("function complex needs source and target at the same dimension bound");
  if (k_max < 0) throw InvalidArgument("negative degree bound for function complex");
  const int top = std::max(a_->top_nondegenerate_degree(), 0);
  if (top + k_max > dim)
    throw InsufficientTruncation("function complex up to degree " + std::to_string(k_max) +
                                 " needs dimension bound " + std::to_string(top + k_max) +
                                 ", target has " + std::to_string(dim));
  if ((options.source_structure == nullptr) != (options.target_structure == nullptr))
    throw InvalidArgument("over-base function complex needs both structure maps");

  maps_.resize(static_cast<std::size_t>(k_max + 1));
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(k_max + 1));
  std::vector<std::unordered_map<Key, std::size_t, KeyHash>> by_key(static_cast<std::size_t>(k_max + 1));
  for (int k = 0; k <= k_max; ++k) {
    deltas_.push_back(standard::delta(k, dim));
    cylinders_.push_back(product(a_, deltas_.back().set));
    const auto& cyl = cylinders_.back();

    MapSearchOptions mo;
    mo.budget = options.budget;
    std::optional<SimplicialMap> base;
    if (options.source_structure) {
      base = compose(*options.source_structure, cyl.first);
      mo.source_structure = &*base;
      mo.target_structure = options.target_structure;
    }
    std::vector<bool> marked;
    if (options.source_marked) {
      const auto& t = *deltas_.back().set;
      for (const auto& key : cyl.object.keys[1])
        marked.push_back((*options.source_marked)[static_cast<Simplex>(key[0])] &&
                         (!options.flat_time || t.degenerate(1, static_cast<Simplex>(key[1]))));
      mo.source_marked = &marked;
      mo.target_marked = options.target_marked;
    }
    std::vector<std::pair<Key, SimplicialMap>> found;
    enumerate_maps(cyl.object.set, x_, mo, [&](const SimplicialMap& f) {
      found.emplace_back(nondegenerate_key(f), f);
      return true;
    });
    std::sort(found.begin(), found.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& [key, f] : found) {
      by_key[k].emplace(key, maps_[k].size());
      keys[k].push_back(key);
      maps_[k].push_back(std::move(f));
    }
  }

  // (id_A x op) : A x Delta[m] -> A x Delta[k], memoized per operator
  std::map<MonotoneMap, std::vector<std::vector<Simplex>>> cyl_maps;
  auto cylinder_map = [&](const MonotoneMap& op) -> const std::vector<std::vector<Simplex>>& {
    auto it = cyl_maps.find(op);
    if (it != cyl_maps.end()) return it->second;
    const int m = op.source_dim();
    const int k = op.target_dim();
    const auto& from = cylinders_[m].object;
    const auto& to = cylinders_[k].object;
    std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
    for (int n = 0; n <= dim; ++n)
      for (const auto& key : from.keys[n]) {
        const auto& t = deltas_[m].keys[n][static_cast<Simplex>(key[1])];
        Key moved(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) moved[i] = op(t[i]);
        Simplex t2 = deltas_[k].at(n, moved);
        c[n].push_back(to.at(n, {key[0], static_cast<std::int32_t>(t2)}));
      }
    return cyl_maps.emplace(op, std::move(c)).first->second;
  };
  auto act = [&](const MonotoneMap& op, const Key& key) {
    const int m = op.source_dim();
    const auto& f = maps_[op.target_dim()][by_key[op.target_dim()].at(key)];
    const auto& cm = cylinder_map(op);
    const auto& p = *cylinders_[m].object.set;
    Key out;
    for (int n = 0; n <= p.dim(); ++n)
      for (Simplex s = 0; s < p.size(n); ++s)
        if (!p.degenerate(n, s)) out.push_back(static_cast<std::int32_t>(f(n, cm[n][s])));
    return out;
  };
  space_ = build_keyed(k_max, std::move(keys), act);
}

std::optional<Simplex> FunctionComplex::find(int k, const SimplicialMap& f) const {
  if (k < 0 || k > k_max_ || f.source() != cylinders_[k].object.set) return std::nullopt;
  return space_.find(k, nondegenerate_key(f));
}

SimplicialMap postcompose(const FunctionComplex& from, const FunctionComplex& to,
                          const SimplicialMap& g) {
  if (from.source() != to.source() || from.k_max() != to.k_max() || from.target() != g.source() ||
      to.target() != g.target())
    throw InvalidArgument("postcomposition between unrelated function complexes");
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(from.k_max() + 1));
  for (int k = 0; k <= from.k_max(); ++k)
    for (Simplex f = 0; f < from.set()->size(k); ++f) {
      const auto& m = from.map_of(k, f);
      std::vector<std::vector<Simplex>> comp(m.components().size());
      for (std::size_t n = 0; n < comp.size(); ++n)
        for (Simplex y : m.component(static_cast<int>(n))) comp[n].push_back(g(static_cast<int>(n), y));
      SimplicialMap moved(to.cylinder(k).object.set, to.target(), std::move(comp));
      auto id = to.find(k, moved);
      if (!id) throw PreconditionFailed("postcomposite leaves the target function complex");
      c[k].push_back(*id);
    }
  return SimplicialMap(from.set(), to.set(), std::move(c));
}

SimplicialMap precompose(const FunctionComplex& from, const FunctionComplex& to,
                         const SimplicialMap& u) {
  if (from.target() != to.target() || from.k_max() != to.k_max() || u.source() != to.source() ||
      u.target() != from.source())
    throw InvalidArgument("precomposition between unrelated function complexes");
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(from.k_max() + 1));
  for (int k = 0; k <= from.k_max(); ++k) {
    const auto& src_cyl = to.cylinder(k).object;
    const auto& dst_cyl = from.cylinder(k).object;
    // (u x id) on cylinders
    std::vector<std::vector<Simplex>> ux(static_cast<std::size_t>(src_cyl.set->dim() + 1));
    for (int n = 0; n <= src_cyl.set->dim(); ++n)
      for (const auto& key : src_cyl.keys[n])
        ux[n].push_back(dst_cyl.at(n, {static_cast<std::int32_t>(u(n, static_cast<Simplex>(key[0]))), key[1]}));
    for (Simplex f = 0; f < from.set()->size(k); ++f) {
      const auto& m = from.map_of(k, f);
      std::vector<std::vector<Simplex>> comp(ux.size());
      for (std::size_t n = 0; n < ux.size(); ++n)
        for (Simplex s : ux[n]) comp[n].push_back(m(static_cast<int>(n), s));
      SimplicialMap moved(src_cyl.set, to.target(), std::move(comp));
      auto id = to.find(k, moved);
      if (!id) throw PreconditionFailed("precomposite leaves the target function complex");
      c[k].push_back(*id);
    }
  }
  return SimplicialMap(from.set(), to.set(), std::move(c));
}

SimplicialMap constant_maps(const SSetPtr& x_truncated, const FunctionComplex& fc) {
  if (x_truncated->dim() != fc.k_max()) throw InvalidArgument("constant maps need X truncated at k_max");
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(fc.k_max() + 1));
  const auto& x = *fc.target();
  for (int k = 0; k <= fc.k_max(); ++k) {
    const auto& cyl = fc.cylinder(k).object;
    for (Simplex y = 0; y < x_truncated->size(k); ++y) {
      std::vector<std::vector<Simplex>> comp(static_cast<std::size_t>(cyl.set->dim() + 1));
      for (int n = 0; n <= cyl.set->dim(); ++n)
        for (const auto& key : cyl.keys[n]) {
          const auto& t = fc.delta(k).keys[n][static_cast<Simplex>(key[1])];
          comp[n].push_back(x.act(MonotoneMap(std::vector<int>(t.begin(), t.end()), k), y));
        }
      auto id = fc.find(k, SimplicialMap(cyl.set, fc.target(), std::move(comp)));
      if (!id) throw PreconditionFailed("constant map missing from function complex");
      c[k].push_back(*id);
    }
  }
  return SimplicialMap(x_truncated, fc.set(), std::move(c));
}

SimplicialMap evaluate_point(const FunctionComplex& fc, const SSetPtr& x_truncated) {
  if (x_truncated->dim() != fc.k_max()) throw InvalidArgument("evaluation needs X truncated at k_max");
  for (int n = 0; n <= fc.source()->dim(); ++n)
    if (fc.source()->size(n) != 1) throw InvalidArgument("evaluation needs a one-point source");
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(fc.k_max() + 1));
  for (int k = 0; k <= fc.k_max(); ++k) {
    Key top(static_cast<std::size_t>(k + 1));
    std::iota(top.begin(), top.end(), 0);
    Simplex cell = fc.cylinder(k).object.at(k, {0, static_cast<std::int32_t>(fc.delta(k).at(k, top))});
    for (Simplex f = 0; f < fc.set()->size(k); ++f) c[k].push_back(fc.map_of(k, f)(k, cell));
  }
  return SimplicialMap(fc.set(), x_truncated, std::move(c));
}

}  // namespace hgc
