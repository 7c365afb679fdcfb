#include "hgc/marked/localization.hpp"

#include <map>

#include "hgc/scat/errors.hpp"
#include "hgc/scat/map_search.hpp"
#include "hgc/scat/standard.hpp"

namespace hgc {

namespace {

bool monotone(const Key& phi, std::size_t from = 0) {
  for (std::size_t i = from + 1; i < phi.size(); ++i)
    if (phi[i - 1] > phi[i]) return false;
  return true;
}

}  // namespace

Localization localize(const MarkedSimplicialSet& x) {
  const auto& s = x.set;
  const int dim = s->dim();
  const auto marked = x.marked_edges();
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n) {
    for (Simplex y = 0; y < s->size(n); ++y) keys[n].push_back({1, static_cast<std::int32_t>(y)});
    for (Simplex e : marked)
      for (std::uint32_t bits = 0; bits < (1u << (n + 1)); ++bits) {
        Key k{0, static_cast<std::int32_t>(e)};
        for (int i = 0; i <= n; ++i) k.push_back(static_cast<std::int32_t>((bits >> (n - i)) & 1u));
        if (!monotone(k, 2)) keys[n].push_back(std::move(k));
      }
  }
  auto act = [&s](const MonotoneMap& op, const Key& k) {
    if (k[0] == 1) return Key{1, static_cast<std::int32_t>(s->act(op, static_cast<Simplex>(k[1])))};
    Key phi;
    for (int i = 0; i <= op.source_dim(); ++i) phi.push_back(k[static_cast<std::size_t>(2 + op(i))]);
    if (monotone(phi)) {
      // a face inside Delta[1] is identified with the corresponding simplex of e
      std::vector<int> values(phi.begin(), phi.end());
      return Key{1, static_cast<std::int32_t>(s->act(MonotoneMap(values, 1), static_cast<Simplex>(k[1])))};
    }
    Key out{0, k[1]};
    out.insert(out.end(), phi.begin(), phi.end());
    return out;
  };
  auto label = [&s](int n, const Key& k) {
    if (k[0] == 1) return s->label(n, static_cast<Simplex>(k[1]));
    std::string phi;
    for (std::size_t i = 2; i < k.size(); ++i) phi += std::to_string(k[i]);
    return "J(" + s->label(1, static_cast<Simplex>(k[1])) + ")[" + phi + "]";
  };
  Localization loc{x, build_keyed(dim, std::move(keys), act, label), SimplicialMap::identity(s), {}};
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (Simplex y = 0; y < s->size(n); ++y) c[n].push_back(loc.object.at(n, {1, static_cast<std::int32_t>(y)}));
  loc.p = SimplicialMap(s, loc.object.set, std::move(c));
  std::vector<Simplex> image;
  for (Simplex e : marked) image.push_back(loc.p(1, e));
  loc.marked_image = marked_with(loc.object.set, image);
  return loc;
}

SimplicialMap glued_copy(const Localization& loc, const KeyedSet& j, Simplex e) {
  const auto& s = *loc.source.set;
  const int dim = loc.object.set->dim();
  if (j.set->dim() != dim) throw InvalidArgument("J and the localization need the same dimension bound");
  if (!loc.source.marked[e]) throw InvalidArgument("edge " + s.label(1, e) + " is not marked");
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& phi : j.keys[n]) {
      if (monotone(phi)) {
        std::vector<int> values(phi.begin(), phi.end());
        c[n].push_back(loc.p(n, s.act(MonotoneMap(values, 1), e)));
      } else {
        Key k{0, static_cast<std::int32_t>(e)};
        k.insert(k.end(), phi.begin(), phi.end());
        c[n].push_back(loc.object.at(n, k));
      }
    }
  return SimplicialMap(j.set, loc.object.set, std::move(c));
}

SimplicialMap j_extension(const KeyedSet& j, const SSetPtr& t, Simplex y, Budget* budget) {
  auto w = find_witness(*t, y);
  if (!w)
    throw PreconditionFailed("edge " + t->label(1, y) + " is not an equivalence edge");
  MapSearchOptions o;
  o.budget = budget;
  o.limit = 1;
  o.fixed[{1, j.at(1, {0, 1})}] = y;
  o.fixed[{1, j.at(1, {1, 0})}] = w->inverse;
  if (j.set->dim() >= 2) {
    o.fixed[{2, j.at(2, {0, 1, 0})}] = w->sigma;
    o.fixed[{2, j.at(2, {1, 0, 1})}] = w->beta;
  }
  auto maps = all_maps(j.set, t, o);
  if (maps.empty())
    throw PreconditionFailed("the witness of edge " + t->label(1, y) + " does not extend along J");
  return maps.front();
}

SimplicialMap localization_universal(const Localization& loc, const SimplicialMap& g, Budget* budget) {
  const auto& s = loc.source.set;
  if (g.source() != s) throw InvalidArgument("universal map needs G defined on the localized set");
  const auto& t = g.target();
  if (t->dim() < 2) throw InsufficientTruncation("universal map needs a target with dimension bound >= 2");
  const int dim = s->dim();
  auto j = standard::J(dim);
  std::map<Simplex, SimplicialMap> extension;
  for (Simplex e : loc.source.marked_edges()) {
    Simplex y = g(1, e);
    if (extension.count(y)) continue;
    if (!find_witness(*t, y))
      throw PreconditionFailed("marked edge " + s->label(1, e) + " is sent to " + t->label(1, y) +
                               ", which is not an equivalence edge");
    extension.emplace(y, j_extension(j, t, y, budget));
  }
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& k : loc.object.keys[n]) {
      if (k[0] == 1) {
        c[n].push_back(g(n, static_cast<Simplex>(k[1])));
        continue;
      }
      const auto& u = extension.at(g(1, static_cast<Simplex>(k[1])));
      c[n].push_back(u(n, j.at(n, Key(k.begin() + 2, k.end()))));
    }
  return SimplicialMap(loc.object.set, t, std::move(c));
}

SimplicialMap localize_map(const Localization& from, const Localization& to, const SimplicialMap& f) {
  if (f.source() != from.source.set || f.target() != to.source.set)
    throw InvalidArgument("map does not match the localized sets");
  const int dim = from.object.set->dim();
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& k : from.object.keys[n]) {
      Key image = k;
      image[1] = static_cast<std::int32_t>(f(k[0] == 1 ? n : 1, static_cast<Simplex>(k[1])));
      if (k[0] == 0 && !to.source.marked[static_cast<Simplex>(image[1])])
        throw PreconditionFailed("map sends marked edge " + from.source.set->label(1, static_cast<Simplex>(k[1])) +
                                 " to an unmarked edge");
      c[n].push_back(to.object.at(n, image));
    }
  return SimplicialMap(from.object.set, to.object.set, std::move(c));
}

UnitMap adjunction_unit(const MarkedSimplicialSet& x) {
  auto loc = localize(x);
  auto target = mark_equivalences(loc.object.set);
  MarkedMap unit{x, target, loc.p};
  return UnitMap{std::move(loc), std::move(target), std::move(unit)};
}

CounitMap adjunction_counit(const SSetPtr& s, Budget* budget) {
  auto loc = localize(mark_equivalences(s));
  auto counit = localization_universal(loc, SimplicialMap::identity(s), budget);
  return CounitMap{std::move(loc), std::move(counit)};
}

MarkedHom marked_hom(const MarkedSimplicialSet& x, const MarkedSimplicialSet& y, int k_max, Budget* budget,
                     const SimplicialMap* source_structure, const SimplicialMap* target_structure) {
  FunctionComplexOptions o;
  o.budget = budget;
  o.source_structure = source_structure;
  o.target_structure = target_structure;
  o.source_marked = &x.marked;
  o.target_marked = &y.marked;
  o.flat_time = true;
  auto fc = std::make_shared<const FunctionComplex>(x.set, y.set, k_max, o);
  const auto& space = fc->set();
  std::vector<bool> edge_marked(k_max >= 1 ? space->size(1) : 0, false);
  if (k_max >= 1) {
    const auto& cyl = fc->cylinder(1).object;
    for (Simplex f = 0; f < space->size(1); ++f) {
      const auto& m = fc->map_of(1, f);
      bool ok = true;
      for (Simplex e = 0; e < cyl.set->size(1) && ok; ++e)
        if (x.marked[static_cast<Simplex>(cyl.keys[1][e][0])] && !y.marked[m(1, e)]) ok = false;
      edge_marked[f] = ok;
    }
  }
  MarkedSimplicialSet marked{space, edge_marked};
  std::vector<std::vector<bool>> keep(static_cast<std::size_t>(k_max + 1));
  for (int n = 0; n <= k_max; ++n) {
    keep[n].assign(space->size(n), true);
    if (n == 0) continue;
    for (Simplex z = 0; z < space->size(n); ++z)
      for (int i = 0; i <= n && keep[n][z]; ++i)
        for (int jj = i + 1; jj <= n; ++jj)
          if (!edge_marked[space->act(MonotoneMap::inclusion({i, jj}, n), z)]) {
            keep[n][z] = false;
            break;
          }
  }
  auto sharp_space = subcomplex(space, keep);
  return MarkedHom{std::move(fc), std::move(marked), std::move(sharp_space)};
}

}  // namespace hgc
