#include "hgc/suite/corpus.hpp"

#include <algorithm>
#include <optional>

#include "hgc/scat/limits.hpp"
#include "hgc/scat/map_search.hpp"
#include "hgc/scat/standard.hpp"

namespace hgc::suite {

namespace {

SSetPtr circle(int dim) {
  auto d1 = standard::delta(1, dim).set;
  std::vector<std::vector<std::pair<Simplex, Simplex>>> pairs(static_cast<std::size_t>(dim + 1));
  pairs[0].emplace_back(0, 1);
  return quotient(d1, pairs, true).object.set;
}

}  // namespace

std::vector<NamedSet> value_catalog(int dim) {
  auto pt = standard::delta(0, dim).set;
  auto d1 = standard::delta(1, dim).set;
  return {
      {"Delta[0]", pt},
      {"Delta[1]", d1},
      {"Lambda^1[2]", standard::horn(2, 1, dim).set},
      {"Lambda^0[2]", standard::horn(2, 0, dim).set},
      {"boundary Delta[2]", standard::boundary(2, dim).set},
      {"2 points", coproduct({pt, pt}).object.set},
      {"Delta[1] + point", coproduct({d1, pt}).object.set},
      {"circle", circle(dim)},
      {"N(z2)", Nerve(categories::z2(), dim).set()},
  };
}

std::vector<NamedSet> nerve_catalog(int dim) {
  return {
      {"Delta[0]", standard::delta(0, dim).set},
      {"Delta[1]", standard::delta(1, dim).set},
      {"N(z2)", Nerve(categories::z2(), dim).set()},
      {"J", standard::J(dim).set},
  };
}

std::vector<NamedCategory> base_catalog() {
  std::vector<NamedCategory> out;
  for (const char* name : {"terminal", "arrow", "poset 2", "iso", "discrete 2", "z2", "span", "cospan", "parallel"})
    out.push_back({name, categories::by_name(name)});
  return out;
}

bool random_diagram(const NamedCategory& base, const std::vector<NamedSet>& values, std::mt19937& rng,
                    CorpusDiagram& out, Budget* budget) {
  const auto& c = *base.category;
  std::vector<std::size_t> pick;
  for (Object d = 0; d < c.num_objects(); ++d)
    pick.push_back(std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng));
  Diagram x{base.category, {}, {}, {}};
  for (auto i : pick) x.values.push_back(values[i].set);

  std::vector<std::optional<SimplicialMap>> assigned(static_cast<std::size_t>(c.num_morphisms()));
  std::vector<Morphism> open;
  for (Morphism m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m))
      assigned[m] = SimplicialMap::identity(x.value(c.source(m)));
    else
      open.push_back(m);
  }
  std::vector<std::vector<SimplicialMap>> candidates;
  MapSearchOptions o;
  o.budget = budget;
  for (Morphism m : open) {
    auto maps = all_maps(x.value(c.source(m)), x.value(c.target(m)), o);
    std::shuffle(maps.begin(), maps.end(), rng);
    candidates.push_back(std::move(maps));
  }
  // functoriality on every composable pair whose three morphisms are assigned
  auto consistent = [&](Morphism m) {
    for (Morphism g = 0; g < c.num_morphisms(); ++g)
      for (Morphism f = 0; f < c.num_morphisms(); ++f) {
        if (c.target(f) != c.source(g)) continue;
        const Morphism h = c.compose(g, f);
        if (g != m && f != m && h != m) continue;
        if (!assigned[g] || !assigned[f] || !assigned[h]) continue;
        if (!same_components(compose(*assigned[g], *assigned[f]), *assigned[h])) return false;
      }
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == open.size()) return true;
    const Morphism m = open[i];
    for (const auto& candidate : candidates[i]) {
      charge(budget);
      assigned[m] = candidate;
      if (consistent(m) && self(self, i + 1)) return true;
    }
    assigned[m].reset();
    return false;
  };
  if (!search(search, 0)) return false;
  for (auto& m : assigned) x.maps.push_back(std::move(*m));

  out.name = base.name + "(";
  for (Object d = 0; d < c.num_objects(); ++d) {
    if (d > 0) out.name += ", ";
    out.name += c.object_name(d) + ": " + values[pick[d]].name;
  }
  out.name += ")";
  out.diagram = std::move(x);
  return true;
}

std::vector<CorpusDiagram> corpus(const std::vector<NamedCategory>& bases, const std::vector<NamedSet>& values,
                                  std::size_t count, std::uint32_t seed, Budget* budget) {
  std::mt19937 rng(seed);
  std::vector<CorpusDiagram> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    const auto& base = bases[i % bases.size()];
    CorpusDiagram d;
    // values with no functor between them are redrawn
    for (int tries = 0; tries < 32; ++tries) {
      if (random_diagram(base, values, rng, d, budget)) {
        out.push_back(std::move(d));
        break;
      }
    }
  }
  return out;
}

std::size_t total_simplices(const Diagram& x) {
  std::size_t total = 0;
  for (const auto& v : x.values) total += v->total_size();
  return total;
}

}  // namespace hgc::suite
