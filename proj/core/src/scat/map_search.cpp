#include "hgc/scat/map_search.hpp"

#include "hgc/scat/errors.hpp"

namespace hgc {

namespace {

constexpr Simplex kUnset = static_cast<Simplex>(-1);

class Search {
 public:
  Search(const SSetPtr& p, const SSetPtr& x, const MapSearchOptions& o,
         const std::function<bool(const SimplicialMap&)>& visit)
      : p_(p), x_(x), o_(o), visit_(visit) {
    if (x->dim() < p->dim())
      throw InsufficientTruncation("map search target is truncated below the source");
    if ((o.source_structure == nullptr) != (o.target_structure == nullptr))
      throw InvalidArgument("over-base search needs both structure maps");
    if (o.source_structure && (o.source_structure->source() != p || o.target_structure->source() != x))
      throw InvalidArgument("over-base structure maps do not match the search endpoints");
    if ((o.source_marked == nullptr) != (o.target_marked == nullptr))
      throw InvalidArgument("marked search needs both markings");
    for (int n = 0; n <= p->dim(); ++n)
      for (Simplex s : p->nondegenerate(n)) order_.emplace_back(n, s);
    values_.resize(static_cast<std::size_t>(p->dim() + 1));
    for (int n = 0; n <= p->dim(); ++n) values_[n].assign(p->size(n), kUnset);
  }

  void run() { step(0); }

 private:
  Simplex value(int n, Simplex s) const {
    if (!p_->degenerate(n, s)) return values_[n][s];
    const auto& r = p_->root(n, s);
    return x_->act(r.epi, values_[r.degree][r.simplex]);
  }

  bool admissible(int n, Simplex s, Simplex y) const {
    charge(o_.budget);
    for (int i = 0; i <= n && n > 0; ++i)
      if (x_->face(n, i, y) != value(n - 1, p_->face(n, i, s))) return false;
    if (o_.source_structure && (*o_.target_structure)(n, y) != (*o_.source_structure)(n, s))
      return false;
    if (n == 1 && o_.source_marked && (*o_.source_marked)[s] && !(*o_.target_marked)[y])
      return false;
    return true;
  }

  // returns false when the enumeration must stop
  bool step(std::size_t pos) {
    if (pos == order_.size()) return emit();
    auto [n, s] = order_[pos];
    auto try_value = [&](Simplex y) {
      if (!admissible(n, s, y)) return true;
      values_[n][s] = y;
      bool more = step(pos + 1);
      values_[n][s] = kUnset;
      return more;
    };
    if (auto it = o_.fixed.find({n, s}); it != o_.fixed.end()) return try_value(it->second);
    if (n == 0) {
      for (Simplex y = 0; y < x_->size(0); ++y)
        if (!try_value(y)) return false;
      return true;
    }
    Simplex d0 = value(n - 1, p_->face(n, 0, s));
    for (Simplex y : x_->cofaces(n, 0, d0))
      if (!try_value(y)) return false;
    return true;
  }

  bool emit() {
    std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(p_->dim() + 1));
    for (int n = 0; n <= p_->dim(); ++n) {
      c[n].resize(p_->size(n));
      for (Simplex s = 0; s < p_->size(n); ++s) c[n][s] = value(n, s);
    }
    // degenerate source simplices are determined; fixed values on them still need checking
    for (const auto& [at, y] : o_.fixed)
      if (c[at.first][at.second] != y) return true;
    if (o_.source_marked && p_->dim() >= 1)
      for (Simplex e = 0; e < p_->size(1); ++e)
        if ((*o_.source_marked)[e] && !(*o_.target_marked)[c[1][e]]) return true;
    ++found_;
    bool more = visit_(SimplicialMap(p_, x_, std::move(c)));
    return more && (o_.limit == 0 || found_ < o_.limit);
  }

  const SSetPtr& p_;
  const SSetPtr& x_;
  const MapSearchOptions& o_;
  const std::function<bool(const SimplicialMap&)>& visit_;
  std::vector<std::pair<int, Simplex>> order_;
  std::vector<std::vector<Simplex>> values_;
  std::size_t found_ = 0;
};

}  // namespace

void enumerate_maps(const SSetPtr& p, const SSetPtr& x, const MapSearchOptions& options,
                    const std::function<bool(const SimplicialMap&)>& visit) {
  Search(p, x, options, visit).run();
}

std::vector<SimplicialMap> all_maps(const SSetPtr& p, const SSetPtr& x,
                                    const MapSearchOptions& options) {
  std::vector<SimplicialMap> out;
  enumerate_maps(p, x, options, [&](const SimplicialMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::size_t count_maps(const SSetPtr& p, const SSetPtr& x, const MapSearchOptions& options) {
  std::size_t n = 0;
  enumerate_maps(p, x, options, [&](const SimplicialMap&) {
    ++n;
    return true;
  });
  return n;
}

SimplicialMap extend_from_nondegenerate(const SSetPtr& p, const SSetPtr& x,
                                        const std::vector<Simplex>& nondegenerate_values) {
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(p->dim() + 1));
  std::size_t pos = 0;
  for (int n = 0; n <= p->dim(); ++n) {
    c[n].resize(p->size(n));
    for (Simplex s = 0; s < p->size(n); ++s) {
      if (p->degenerate(n, s)) {
        const auto& r = p->root(n, s);
        c[n][s] = x->act(r.epi, c[r.degree][r.simplex]);
      } else {
        if (pos >= nondegenerate_values.size()) throw InvalidArgument("too few nondegenerate values");
        c[n][s] = nondegenerate_values[pos++];
      }
    }
  }
  if (pos != nondegenerate_values.size()) throw InvalidArgument("too many nondegenerate values");
  return SimplicialMap(p, x, std::move(c));
}

}  // namespace hgc
