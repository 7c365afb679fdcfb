#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hgc/grothendieck/total.hpp"
#include "hgc/hocolim/bar.hpp"
#include "hgc/hocolim/colimit.hpp"
#include "hgc/marked/equivalence.hpp"
#include "hgc/scat/errors.hpp"
#include "hgc/scat/validate.hpp"

using namespace hgc;

namespace {

Diagram start_vertex(int dim) {
  auto pt = standard::delta(0, dim).set;
  auto d1 = standard::delta(1, dim).set;
  return test::arrow_diagram(pt, d1, SimplicialMap::classifying(pt, d1, 0, 0));
}

}  // namespace

TEST_CASE("bar construction sizes and marking", "[hocolim]") {
  auto x = with_equivalence_marking(start_vertex(3));
  auto bar = bar_construction(x);
  // degree n: (n+1) chains starting at 0 with value Delta[0], one chain at 1 with value Delta[1]
  for (int n = 0; n <= 3; ++n)
    CHECK(bar.object.set->size(n) == static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(n + 2));
  CHECK(validate(*bar.object.set).ok());
  CHECK(validate(bar.marked).ok());
  CHECK(validate(bar.projection).ok());
}

TEST_CASE("comparison map into the total space", "[hocolim]") {
  auto x = start_vertex(3);
  auto rep = iota_comparison(x, bar_construction(x), grothendieck_total(x));
  CHECK(rep.ok());
  // a collapsing map identifies simplices of the bar construction
  auto d1 = standard::delta(1, 3).set;
  auto pt = standard::delta(0, 3).set;
  auto y = test::arrow_diagram(d1, pt, test::constant_map(d1, pt, 0));
  auto collapsed = iota_comparison(y, bar_construction(y), grothendieck_total(y));
  CHECK(collapsed.marked_map);
  CHECK(collapsed.over_base);
  CHECK_FALSE(collapsed.injective);
  for (bool b : collapsed.fiber_bijective) CHECK(b);
}

TEST_CASE("tensor compatibility", "[hocolim]") {
  auto x = with_flat_marking(start_vertex(3));
  for (int k = 0; k <= 2; ++k) CHECK(tensor_compat_check(x, standard::delta(k, 3).set).ok());
  auto t = with_sharp_marking(constant_diagram(categories::terminal(), standard::delta(1, 3).set));
  CHECK(tensor_compat_check(t, standard::horn(2, 1, 3).set).ok());
}

TEST_CASE("degreewise colimit and its universal property", "[hocolim]") {
  auto x = start_vertex(3);
  auto co = colim_diagram(x);
  CHECK(test::counts(*co.object.set) == std::vector<std::size_t>{2, 3, 4, 5});
  for (const auto& target : {standard::J(3).set, standard::delta(1, 3).set, standard::boundary(2, 3).set}) {
    auto rep = check_colimit_universal(x, co, target);
    CHECK(rep.bijective);
    CHECK(rep.maps_out == rep.cocones);
  }
  auto h = colimit_hom_counts(x, standard::J(3).set);
  CHECK(h.plain == 4);
}

TEST_CASE("homotopy colimit of a constant point", "[hocolim]") {
  auto x = constant_diagram(categories::poset(1), standard::delta(0, 3).set);
  auto h = hocolim(x);
  CHECK(test::counts(*h.localization.object.set) == std::vector<std::size_t>{2, 6, 16, 38});
  CHECK(validate(*h.localization.object.set).ok());
  CHECK_THROWS_AS(hocolim(constant_diagram(categories::poset(1), standard::delta(0, 1).set)), InvalidArgument);
}

TEST_CASE("terminal base: hocolim retracts onto the value", "[hocolim]") {
  auto v = standard::J(3).set;
  auto x = constant_diagram(categories::terminal(), v);
  auto h = hocolim(x);
  // the bar construction over a point is the value itself
  std::vector<std::vector<Simplex>> c(4);
  for (int n = 0; n <= 3; ++n)
    for (Simplex s = 0; s < h.bar.object.set->size(n); ++s) c[n].push_back(h.bar.value(n, s));
  SimplicialMap g(h.bar.object.set, v, std::move(c));
  REQUIRE(check_isomorphism(g).ok());
  auto u = localization_universal(h.localization, g);
  CHECK(validate(u).ok());
  CHECK(same_components(compose(u, h.localization.p), g));
}
