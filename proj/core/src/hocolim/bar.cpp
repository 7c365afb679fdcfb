#include "hgc/hocolim/bar.hpp"

#include <numeric>

#include "hgc/scat/errors.hpp"
#include "hgc/scat/limits.hpp"

namespace hgc {

BarConstruction bar_construction(const Diagram& f) {
  const int dim = f.dim();
  auto nerve = std::make_shared<const Nerve>(f.base, dim);
  const auto& ns = *nerve->set();
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (Simplex sigma = 0; sigma < ns.size(n); ++sigma) {
      const auto& v = *f.value(nerve->object(n, sigma, 0));
      for (Simplex x = 0; x < v.size(n); ++x)
        keys[n].push_back({static_cast<std::int32_t>(sigma), static_cast<std::int32_t>(x)});
    }
  auto act = [&](const MonotoneMap& op, const Key& k) {
    const int n = op.target_dim();
    const auto sigma = static_cast<Simplex>(k[0]);
    const auto& v = *f.value(nerve->object(n, sigma, 0));
    Simplex y = v.act(op, static_cast<Simplex>(k[1]));
    y = f.map(nerve->composite(n, sigma, 0, op(0)))(op.source_dim(), y);
    return Key{static_cast<std::int32_t>(ns.act(op, sigma)), static_cast<std::int32_t>(y)};
  };
  auto label = [&](int n, const Key& k) {
    const auto sigma = static_cast<Simplex>(k[0]);
    return "(" + ns.label(n, sigma) + ";" + f.value(nerve->object(n, sigma, 0))->label(n, static_cast<Simplex>(k[1])) +
           ")";
  };
  BarConstruction b{nerve, build_keyed(dim, std::move(keys), act, label), {}, SimplicialMap::identity(nerve->set())};
  std::vector<MarkedSimplicialSet> values;
  for (Object d = 0; d < f.base->num_objects(); ++d) values.push_back(f.marked_value(d));
  std::vector<bool> marked;
  if (dim >= 1)
    for (const auto& k : b.object.keys[1])
      marked.push_back(values[static_cast<std::size_t>(nerve->object(1, static_cast<Simplex>(k[0]), 0))]
                           .marked[static_cast<Simplex>(k[1])]);
  b.marked = {b.object.set, std::move(marked)};
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& k : b.object.keys[n]) c[n].push_back(static_cast<Simplex>(k[0]));
  b.projection = SimplicialMap(b.object.set, nerve->set(), std::move(c));
  return b;
}

bool IotaReport::ok() const {
  if (!map || !marked_map || !over_base || !injective) return false;
  for (bool b : fiber_bijective)
    if (!b) return false;
  return true;
}

IotaReport iota_comparison(const Diagram& f, const BarConstruction& bar, const TotalSpace& total) {
  IotaReport rep;
  const auto& bs = *bar.object.set;
  const int dim = bs.dim();
  const auto& nerve = *bar.nerve;
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  bool complete = true;
  for (int n = 0; n <= dim; ++n)
    for (Simplex s = 0; s < bs.size(n); ++s) {
      const auto sigma = bar.sigma(n, s);
      const auto& v = *f.value(nerve.object(n, sigma, 0));
      Key k{static_cast<std::int32_t>(sigma)};
      for (int j = 0; j <= n; ++j) {
        std::vector<int> prefix(static_cast<std::size_t>(j + 1));
        std::iota(prefix.begin(), prefix.end(), 0);
        const Simplex restricted = v.act(MonotoneMap::inclusion(prefix, n), bar.value(n, s));
        k.push_back(static_cast<std::int32_t>(f.map(nerve.composite(n, sigma, 0, j))(j, restricted)));
      }
      auto found = total.object.find(n, k);
      if (!found) {
        complete = false;
        rep.details.push_back("degree " + std::to_string(n) + ": " + bs.label(n, s) + " has no image");
        c[n].push_back(0);
      } else {
        c[n].push_back(*found);
      }
    }
  if (!complete) return rep;
  MarkedMap m{bar.marked, marked_total(total, f), SimplicialMap(bar.object.set, total.object.set, std::move(c))};
  auto v = validate(m);
  rep.marked_map = v.ok();
  for (const auto& x : v.violations) rep.details.push_back(x.rule + ": " + x.where);
  rep.injective = m.map.injective();
  if (!rep.injective)
    for (int n = 0; n <= dim; ++n) {
      std::vector<int> seen(total.object.set->size(n), -1);
      for (Simplex s = 0; s < bs.size(n); ++s) {
        const Simplex t = m.map(n, s);
        if (seen[t] >= 0) {
          rep.details.push_back("degree " + std::to_string(n) + ": " + bs.label(n, static_cast<Simplex>(seen[t])) +
                                " and " + bs.label(n, s) + " share the image " + total.object.set->label(n, t));
          break;
        }
        seen[t] = static_cast<int>(s);
      }
    }
  rep.over_base = true;
  for (int n = 0; n <= dim && rep.over_base; ++n)
    for (Simplex s = 0; s < bs.size(n); ++s)
      if (total.projection(n, m.map(n, s)) != bar.projection(n, s)) {
        rep.over_base = false;
        rep.details.push_back("degree " + std::to_string(n) + ": " + bs.label(n, s) + " changes its base simplex");
        break;
      }
  // fibers over each vertex d: both are keyed {point simplex, simplex}
  for (Object d = 0; d < f.base->num_objects(); ++d) {
    auto fb = fiber(bar.projection, 0, nerve.vertex_of(d));
    auto ft = fiber(total.projection, 0, total.nerve->vertex_of(d));
    bool bij = true;
    for (int n = 0; n <= dim && bij; ++n) {
      if (fb.object.set->size(n) != ft.object.set->size(n)) {
        bij = false;
        break;
      }
      std::vector<bool> hit(ft.object.set->size(n), false);
      for (const auto& k : fb.object.keys[n]) {
        auto t = ft.object.find(n, {k[0], static_cast<std::int32_t>(m.map(n, static_cast<Simplex>(k[1])))});
        if (!t || hit[*t]) {
          bij = false;
          break;
        }
        hit[*t] = true;
      }
    }
    if (!bij) rep.details.push_back("fiber over " + f.base->object_name(d) + " is not a bijection");
    rep.fiber_bijective.push_back(bij);
  }
  rep.map = std::move(m);
  return rep;
}

namespace {

Diagram tensor_with_cones(const Diagram& x, const SSetPtr& kn, std::vector<MarkedCone>& cones) {
  const auto& c = *x.base;
  for (Object d = 0; d < c.num_objects(); ++d) cones.push_back(marked_product(x.marked_value(d), flat(kn)));
  Diagram out{x.base, {}, {}, {}};
  for (const auto& mc : cones) {
    out.values.push_back(mc.object.set);
    out.marking.push_back(mc.object.marked);
  }
  for (Morphism f = 0; f < c.num_morphisms(); ++f) {
    const auto& from = cones[static_cast<std::size_t>(c.source(f))].cone;
    const auto& to = cones[static_cast<std::size_t>(c.target(f))].cone;
    out.maps.push_back(pair(to, compose(x.map(f), from.first), from.second));
  }
  if (!x.is_marked()) out.marking.clear();
  return out;
}

}  // namespace

Diagram tensor_diagram(const Diagram& x, const SSetPtr& k) {
  std::vector<MarkedCone> cones;
  return tensor_with_cones(x, retruncate(k, x.dim()), cones);
}

TensorReport tensor_compat_check(const Diagram& x, const SSetPtr& k) {
  TensorReport rep;
  auto kn = retruncate(k, x.dim());
  std::vector<MarkedCone> cones;
  auto xk = tensor_with_cones(x, kn, cones);
  auto left = bar_construction(xk);
  auto right_bar = bar_construction(x);
  auto right = marked_product(right_bar.marked, flat(kn));
  const int dim = x.dim();
  const auto& ls = *left.object.set;
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (Simplex s = 0; s < ls.size(n); ++s) {
      const auto sigma = left.sigma(n, s);
      const Object d0 = left.nerve->object(n, sigma, 0);
      // the product simplex (x, k) of X(d0) x K
      const auto& pair_key = cones[static_cast<std::size_t>(d0)].cone.object.key(n, left.value(n, s));
      auto b = right_bar.object.find(n, {static_cast<std::int32_t>(sigma), pair_key[0]});
      auto t = b ? right.cone.object.find(n, {static_cast<std::int32_t>(*b), pair_key[1]}) : std::nullopt;
      if (!t) {
        rep.details.push_back("degree " + std::to_string(n) + ": " + ls.label(n, s) + " has no image");
        return rep;
      }
      c[n].push_back(*t);
    }
  SimplicialMap m(left.object.set, right.object.set, std::move(c));
  rep.bijective = m.bijective();
  auto v = validate(m);
  rep.natural = v.ok();
  for (const auto& e : v.violations) rep.details.push_back(e.rule + ": " + e.where);
  rep.marking_preserved = true;
  if (dim >= 1)
    for (Simplex e = 0; e < ls.size(1); ++e)
      if (left.marked.marked[e] != right.object.marked[m(1, e)]) {
        rep.marking_preserved = false;
        rep.details.push_back("edge " + ls.label(1, e) + " changes marking");
        break;
      }
  rep.over_base = true;
  for (int n = 0; n <= dim && rep.over_base; ++n)
    for (Simplex s = 0; s < ls.size(n); ++s)
      if (right_bar.projection(n, right.cone.first(n, m(n, s))) != left.projection(n, s)) {
        rep.over_base = false;
        break;
      }
  rep.map = std::move(m);
  return rep;
}

}  // namespace hgc
