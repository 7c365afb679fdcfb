#include "hgc/scat/simplicial_map.hpp"

#include <algorithm>

#include "hgc/scat/errors.hpp"

namespace hgc {

SimplicialMap::SimplicialMap(SSetPtr source, SSetPtr target,
                             std::vector<std::vector<Simplex>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!source_ || !target_) throw InvalidArgument("simplicial map with null endpoint");
  if (target_->dim() < source_->dim())
    throw InvalidArgument("simplicial map target has a lower dimension bound than its source");
  if (components_.size() != static_cast<std::size_t>(source_->dim() + 1))
    throw InvalidArgument("simplicial map needs one component per degree of its source");
  for (int n = 0; n <= source_->dim(); ++n) {
    if (components_[n].size() != source_->size(n))
      throw InvalidArgument("component size mismatch in degree " + std::to_string(n));
    for (Simplex y : components_[n])
      if (y >= target_->size(n))
        throw InvalidArgument("component value out of range in degree " + std::to_string(n));
  }
}

SimplicialMap SimplicialMap::identity(const SSetPtr& s) {
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(s->dim() + 1));
  for (int n = 0; n <= s->dim(); ++n) {
    c[n].resize(s->size(n));
    for (Simplex x = 0; x < s->size(n); ++x) c[n][x] = x;
  }
  return SimplicialMap(s, s, std::move(c));
}

SimplicialMap SimplicialMap::classifying(const SSetPtr& delta, const SSetPtr& target, int n,
                                         Simplex x) {
  // simplices of Delta[n] in degree k are the monotone maps [k] -> [n], in lexicographic order
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(delta->dim() + 1));
  for (int k = 0; k <= delta->dim(); ++k) {
    auto ops = MonotoneMap::all(k, n);
    if (ops.size() != delta->size(k)) throw InvalidArgument("classifying map needs Delta[n]");
    for (const auto& op : ops) c[k].push_back(target->act(op, x));
  }
  return SimplicialMap(delta, target, std::move(c));
}

bool SimplicialMap::injective() const {
  for (int n = 0; n <= source_->dim(); ++n) {
    std::vector<bool> seen(target_->size(n), false);
    for (Simplex y : components_[n]) {
      if (seen[y]) return false;
      seen[y] = true;
    }
  }
  return true;
}

bool SimplicialMap::surjective() const {
  for (int n = 0; n <= source_->dim(); ++n) {
    std::vector<bool> seen(target_->size(n), false);
    for (Simplex y : components_[n]) seen[y] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target() != g.source()) throw InvalidArgument("simplicial maps are not composable");
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(f.source()->dim() + 1));
  for (int n = 0; n <= f.source()->dim(); ++n) {
    c[n].reserve(f.source()->size(n));
    for (Simplex y : f.component(n)) c[n].push_back(g(n, y));
  }
  return SimplicialMap(f.source(), g.target(), std::move(c));
}

SimplicialMap retarget(const SimplicialMap& f, SSetPtr source, SSetPtr target) {
  return SimplicialMap(std::move(source), std::move(target), f.components());
}

bool same_components(const SimplicialMap& a, const SimplicialMap& b) {
  return a.components() == b.components();
}

}  // namespace hgc
