#include "hgc/grothendieck/adjoints.hpp"

#include "hgc/scat/errors.hpp"
#include "hgc/scat/limits.hpp"

namespace hgc {

SimplicialMap nerve_map(const Functor& f, const Nerve& source, const Nerve& target) {
  const int dim = source.dim();
  if (target.dim() != dim) throw InvalidArgument("nerve map between nerves of different dimension bounds");
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& k : source.keyed().keys[n]) {
      Key image{static_cast<std::int32_t>(f.on_objects[static_cast<std::size_t>(k[0])])};
      for (std::size_t i = 1; i < k.size(); ++i)
        image.push_back(static_cast<std::int32_t>(f.on_morphisms[static_cast<std::size_t>(k[i])]));
      c[n].push_back(target.keyed().at(n, image));
    }
  return SimplicialMap(source.set(), target.set(), std::move(c));
}

SliceValue left_adjoint_slice(const MarkedSimplicialSet& x, const SimplicialMap& p, const Nerve& base, Object d) {
  if (p.target() != base.set()) throw InvalidArgument("structure map does not land in the given nerve");
  auto s = slice(base.category(), d, SliceSide::over);
  auto sn = std::make_shared<const Nerve>(s.category, base.dim());
  auto g = nerve_map(s.projection, *sn, base);
  auto value = marked_pullback(x, sharp(sn->set()), p, g);
  return SliceValue{std::move(s), std::move(sn), std::move(value)};
}

RightAdjointValue right_adjoint_value(const SimplicialMap& p, const Nerve& base, Object d, int k_max,
                                      Budget* budget) {
  if (p.target() != base.set()) throw InvalidArgument("structure map does not land in the given nerve");
  auto s = slice(base.category(), d, SliceSide::under);
  auto sn = std::make_shared<const Nerve>(s.category, base.dim());
  auto g = nerve_map(s.projection, *sn, base);
  FunctionComplexOptions o;
  o.budget = budget;
  o.source_structure = &g;
  o.target_structure = &p;
  auto space = std::make_shared<const FunctionComplex>(sn->set(), p.source(), k_max, o);
  return RightAdjointValue{std::move(s), std::move(sn), std::move(g), std::move(space)};
}

namespace {

MarkedSimplicialSet truncated_value(const Diagram& x, Object d, int k_max) {
  auto m = x.marked_value(d);
  auto set = retruncate(m.set, k_max);
  std::vector<bool> marked = k_max >= 1 ? m.marked : std::vector<bool>{};
  return {set, std::move(marked)};
}

}  // namespace

GrothendieckUnit unit_map(const Diagram& x, const TotalSpace& total, Object d, int k_max, Budget* budget) {
  const auto& base = *total.nerve;
  auto s = slice(base.category(), d, SliceSide::under);
  auto sn = std::make_shared<const Nerve>(s.category, base.dim());
  auto structure = nerve_map(s.projection, *sn, base);
  auto target = marked_total(total, x);
  auto hom = marked_hom(sharp(sn->set()), target, k_max, budget, &structure, &total.projection);
  GrothendieckUnit out{std::move(s), sn, structure, std::move(hom), truncated_value(x, d, k_max), std::nullopt, {}};

  const auto& fc = *out.hom.flat_space;
  const auto& xd = *x.value(d);
  std::vector<std::vector<Simplex>> comps(static_cast<std::size_t>(k_max + 1));
  for (int k = 0; k <= k_max; ++k) {
    const auto& cyl = fc.cylinder(k).object;
    const auto& delta = fc.delta(k);
    for (Simplex xs = 0; xs < xd.size(k); ++xs) {
      const int dim = cyl.set->dim();
      std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
      bool ok = true;
      for (int m = 0; m <= dim && ok; ++m)
        for (const auto& key : cyl.keys[m]) {
          const auto a = static_cast<Simplex>(key[0]);
          const auto& tk = delta.key(m, static_cast<Simplex>(key[1]));
          const MonotoneMap alpha(std::vector<int>(tk.begin(), tk.end()), k);
          const Simplex y = xd.act(alpha, xs);
          Key tkey{static_cast<std::int32_t>(structure(m, a))};
          for (int j = 0; j <= m; ++j) {
            const Morphism g = out.slice.arrow_of[static_cast<std::size_t>(sn->object(m, a, j))];
            std::vector<int> prefix(static_cast<std::size_t>(j + 1));
            for (int t = 0; t <= j; ++t) prefix[t] = t;
            tkey.push_back(static_cast<std::int32_t>(x.map(g)(j, xd.act(MonotoneMap::inclusion(prefix, m), y))));
          }
          auto found = total.object.find(m, tkey);
          if (!found) {
            out.report.add("unit value", "degree " + std::to_string(k) + " simplex " + xd.label(k, xs) +
                                             " leaves the total space");
            ok = false;
            break;
          }
          c[m].push_back(*found);
        }
      if (!ok) continue;
      auto f = fc.find(k, SimplicialMap(cyl.set, total.object.set, std::move(c)));
      if (!f) {
        out.report.add("unit value", "degree " + std::to_string(k) + " simplex " + xd.label(k, xs) +
                                         " is not a marked map over the base");
        continue;
      }
      comps[k].push_back(*f);
    }
  }
  if (!out.report.ok()) return out;
  MarkedMap unit{out.source, out.hom.marked, SimplicialMap(out.source.set, fc.set(), std::move(comps))};
  out.report.merge(validate(unit), "unit: ");
  out.unit = std::move(unit);
  return out;
}

ValidationReport unit_naturality(const Diagram& x, const TotalSpace& total, Morphism u, int k_max, Budget* budget) {
  ValidationReport r;
  const auto& c = *x.base;
  const Object d = c.source(u);
  const Object e = c.target(u);
  auto at_d = unit_map(x, total, d, k_max, budget);
  auto at_e = unit_map(x, total, e, k_max, budget);
  if (!at_d.unit || !at_e.unit) {
    r.add("unit naturality", "a unit component is undefined");
    return r;
  }
  // u : d -> e induces e/D -> d/D and [N(d/D), total]_D -> [N(e/D), total]_D
  auto re = reindex(at_e.slice, at_d.slice, u);
  auto along = nerve_map(re, *at_e.slice_nerve, *at_d.slice_nerve);
  auto pre = precompose(*at_d.hom.flat_space, *at_e.hom.flat_space, along);
  const auto& xu = x.map(u);
  for (int n = 0; n <= k_max; ++n)
    for (Simplex s = 0; s < x.value(d)->size(n); ++s)
      if (pre(n, at_d.unit->map(n, s)) != at_e.unit->map(n, xu(n, s)))
        r.add("unit naturality", c.morphism_name(u) + " at degree " + std::to_string(n) + " simplex " +
                                     x.value(d)->label(n, s));
  return r;
}

Cotensor cotensor_over(const SSetPtr& a, const SimplicialMap& p, int k_max, Budget* budget) {
  const auto& x = p.source();
  const auto& b = p.target();
  if (x->dim() != b->dim()) throw InvalidArgument("cotensor needs a structure map between equal dimension bounds");
  auto a_n = retruncate(a, x->dim());
  FunctionComplexOptions o;
  o.budget = budget;
  auto maps = std::make_shared<const FunctionComplex>(a_n, x, k_max, o);
  auto base_maps = std::make_shared<const FunctionComplex>(a_n, b, k_max, o);
  auto post = postcompose(*maps, *base_maps, p);
  auto bt = retruncate(b, k_max);
  auto diag = constant_maps(bt, *base_maps);
  auto cone = pullback(post, diag);
  return Cotensor{std::move(maps), std::move(base_maps), std::move(bt), std::move(cone)};
}

}  // namespace hgc
