#include "hgc/scat/limits.hpp"

#include <algorithm>

#include "hgc/scat/errors.hpp"
#include "hgc/scat/standard.hpp"
#include "hgc/scat/union_find.hpp"

namespace hgc {

namespace {

SimplicialMap leg(const KeyedSet& obj, const SSetPtr& target, std::size_t slot) {
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(obj.set->dim() + 1));
  for (int n = 0; n <= obj.set->dim(); ++n)
    for (const auto& k : obj.keys[n]) c[n].push_back(static_cast<Simplex>(k[slot]));
  return SimplicialMap(obj.set, target, std::move(c));
}

KeyedSet pairs_set(const SSetPtr& a, const SSetPtr& b, std::vector<std::vector<Key>> keys) {
  auto act = [a, b](const MonotoneMap& op, const Key& k) {
    return Key{static_cast<std::int32_t>(a->act(op, static_cast<Simplex>(k[0]))),
               static_cast<std::int32_t>(b->act(op, static_cast<Simplex>(k[1])))};
  };
  auto label = [a, b](int n, const Key& k) {
    return "(" + a->label(n, static_cast<Simplex>(k[0])) + "," +
           b->label(n, static_cast<Simplex>(k[1])) + ")";
  };
  return build_keyed(a->dim(), std::move(keys), act, label);
}

}  // namespace

Cone product(const SSetPtr& a, const SSetPtr& b) {
  if (a->dim() != b->dim()) throw InvalidArgument("product of simplicial sets with different dimension bounds");
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(a->dim() + 1));
  for (int n = 0; n <= a->dim(); ++n)
    for (Simplex x = 0; x < a->size(n); ++x)
      for (Simplex y = 0; y < b->size(n); ++y)
        keys[n].push_back({static_cast<std::int32_t>(x), static_cast<std::int32_t>(y)});
  auto obj = pairs_set(a, b, std::move(keys));
  auto first = leg(obj, a, 0);
  auto second = leg(obj, b, 1);
  return Cone{std::move(obj), std::move(first), std::move(second)};
}

Cone pullback(const SimplicialMap& f, const SimplicialMap& g) {
  const auto& a = f.source();
  const auto& b = g.source();
  if (f.target() != g.target()) throw InvalidArgument("pullback legs have different targets");
  if (a->dim() != b->dim()) throw InvalidArgument("pullback of simplicial sets with different dimension bounds");
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(a->dim() + 1));
  for (int n = 0; n <= a->dim(); ++n) {
    // bucket B by image to avoid the full square
    std::vector<std::vector<Simplex>> by_image(f.target()->size(n));
    for (Simplex y = 0; y < b->size(n); ++y) by_image[g(n, y)].push_back(y);
    for (Simplex x = 0; x < a->size(n); ++x)
      for (Simplex y : by_image[f(n, x)])
        keys[n].push_back({static_cast<std::int32_t>(x), static_cast<std::int32_t>(y)});
  }
  auto obj = pairs_set(a, b, std::move(keys));
  auto first = leg(obj, a, 0);
  auto second = leg(obj, b, 1);
  return Cone{std::move(obj), std::move(first), std::move(second)};
}

Cocone coproduct(const std::vector<SSetPtr>& summands) {
  if (summands.empty()) throw InvalidArgument("coproduct of no summands");
  const int dim = summands.front()->dim();
  for (const auto& s : summands)
    if (s->dim() != dim) throw InvalidArgument("coproduct of simplicial sets with different dimension bounds");
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (std::size_t i = 0; i < summands.size(); ++i)
      for (Simplex x = 0; x < summands[i]->size(n); ++x)
        keys[n].push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(x)});
  auto act = [&summands](const MonotoneMap& op, const Key& k) {
    return Key{k[0], static_cast<std::int32_t>(summands[static_cast<std::size_t>(k[0])]->act(
                         op, static_cast<Simplex>(k[1])))};
  };
  auto label = [&summands](int n, const Key& k) {
    return std::to_string(k[0]) + ":" +
           summands[static_cast<std::size_t>(k[0])]->label(n, static_cast<Simplex>(k[1]));
  };
  Cocone out{build_keyed(dim, std::move(keys), act, label), {}};
  for (std::size_t i = 0; i < summands.size(); ++i) {
    std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
    for (int n = 0; n <= dim; ++n)
      for (Simplex x = 0; x < summands[i]->size(n); ++x)
        c[n].push_back(out.object.at(n, {static_cast<std::int32_t>(i), static_cast<std::int32_t>(x)}));
    out.legs.emplace_back(summands[i], out.object.set, std::move(c));
  }
  return out;
}

SimplicialMap copair(const Cocone& sum, const std::vector<SimplicialMap>& maps) {
  if (maps.size() != sum.legs.size() || maps.empty()) throw InvalidArgument("copair needs one map per summand");
  const auto& target = maps.front().target();
  const int dim = sum.object.set->dim();
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& k : sum.object.keys[n]) {
      const auto& m = maps[static_cast<std::size_t>(k[0])];
      if (m.target() != target || m.source() != sum.legs[static_cast<std::size_t>(k[0])].source())
        throw InvalidArgument("copair maps do not match the summands");
      c[n].push_back(m(n, static_cast<Simplex>(k[1])));
    }
  return SimplicialMap(sum.object.set, target, std::move(c));
}

SimplicialMap pair(const Cone& cone, const SimplicialMap& first, const SimplicialMap& second) {
  if (first.source() != second.source() || first.target() != cone.first.target() ||
      second.target() != cone.second.target())
    throw InvalidArgument("pair maps do not match the cone");
  const int dim = first.source()->dim();
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (Simplex x = 0; x < first.source()->size(n); ++x) {
      auto id = cone.object.find(n, {static_cast<std::int32_t>(first(n, x)), static_cast<std::int32_t>(second(n, x))});
      if (!id) throw PreconditionFailed("paired maps do not factor through the cone");
      c[n].push_back(*id);
    }
  return SimplicialMap(first.source(), cone.object.set, std::move(c));
}

Quotient quotient(const SSetPtr& s,
                  const std::vector<std::vector<std::pair<Simplex, Simplex>>>& pairs,
                  bool close_under_operators) {
  const int dim = s->dim();
  std::vector<UnionFind> uf;
  for (int n = 0; n <= dim; ++n) uf.emplace_back(s->size(n));
  for (int n = 0; n < static_cast<int>(pairs.size()) && n <= dim; ++n)
    for (auto [x, y] : pairs[n]) {
      if (!close_under_operators) {
        uf[n].unite(x, y);
        continue;
      }
      for (int m = 0; m <= dim; ++m)
        for (const auto& op : MonotoneMap::all(m, n)) uf[m].unite(s->act(op, x), s->act(op, y));
    }
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (Simplex x = 0; x < s->size(n); ++x)
      if (uf[n].find(x) == x) keys[n].push_back({static_cast<std::int32_t>(x)});
  auto act = [&](const MonotoneMap& op, const Key& k) {
    Simplex y = s->act(op, static_cast<Simplex>(k[0]));
    return Key{static_cast<std::int32_t>(uf[op.source_dim()].find(y))};
  };
  auto label = [&](int n, const Key& k) { return s->label(n, static_cast<Simplex>(k[0])); };
  auto obj = build_keyed(dim, std::move(keys), act, label);
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (Simplex x = 0; x < s->size(n); ++x)
      c[n].push_back(obj.at(n, {static_cast<std::int32_t>(uf[n].find(x))}));
  SimplicialMap proj(s, obj.set, std::move(c));
  return Quotient{std::move(obj), std::move(proj)};
}

Cocone pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.source() != g.source()) throw InvalidArgument("pushout legs have different sources");
  auto sum = coproduct({f.target(), g.target()});
  const int dim = sum.object.set->dim();
  if (f.source()->dim() != dim) throw InvalidArgument("pushout of simplicial sets with different dimension bounds");
  std::vector<std::vector<std::pair<Simplex, Simplex>>> pairs(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (Simplex c = 0; c < f.source()->size(n); ++c)
      pairs[n].emplace_back(sum.legs[0](n, f(n, c)), sum.legs[1](n, g(n, c)));
  auto q = quotient(sum.object.set, pairs, false);
  Cocone out{std::move(q.object), {}};
  for (auto& l : sum.legs) out.legs.push_back(compose(q.projection, l));
  return out;
}

Subcomplex subcomplex(const SSetPtr& s, const std::vector<std::vector<bool>>& keep) {
  const int dim = s->dim();
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (Simplex x = 0; x < s->size(n); ++x)
      if (keep[n][x]) keys[n].push_back({static_cast<std::int32_t>(x)});
  auto act = [&s](const MonotoneMap& op, const Key& k) {
    return Key{static_cast<std::int32_t>(s->act(op, static_cast<Simplex>(k[0])))};
  };
  auto label = [&s](int n, const Key& k) { return s->label(n, static_cast<Simplex>(k[0])); };
  auto obj = build_keyed(dim, std::move(keys), act, label);
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& k : obj.keys[n]) c[n].push_back(static_cast<Simplex>(k[0]));
  SimplicialMap incl(obj.set, s, std::move(c));
  return Subcomplex{std::move(obj), std::move(incl)};
}

Components pi0(const SimplicialSet& s) {
  UnionFind uf(s.size(0));
  if (s.dim() >= 1)
    for (Simplex e = 0; e < s.size(1); ++e) uf.unite(s.face(1, 0, e), s.face(1, 1, e));
  Components out;
  std::vector<std::uint32_t> number(s.size(0), 0);
  out.of_vertex.resize(s.size(0));
  for (Simplex v = 0; v < s.size(0); ++v) {
    auto r = uf.find(v);
    if (r == v) number[v] = static_cast<std::uint32_t>(out.count++);
    out.of_vertex[v] = number[r];
  }
  return out;
}

Cone fiber(const SimplicialMap& p, int n, Simplex x) {
  auto delta = standard::delta(n, p.source()->dim());
  auto sigma = SimplicialMap::classifying(delta.set, p.target(), n, x);
  return pullback(sigma, p);
}

}  // namespace hgc
