#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hgc/scat/errors.hpp"
#include "hgc/grothendieck/adjoints.hpp"
#include "hgc/grothendieck/gerbe.hpp"
#include "hgc/grothendieck/relative_nerve.hpp"
#include "hgc/grothendieck/total.hpp"
#include "hgc/scat/validate.hpp"

using namespace hgc;

namespace {

Diagram start_vertex(int dim) {
  auto pt = standard::delta(0, dim).set;
  auto d1 = standard::delta(1, dim).set;
  return test::arrow_diagram(pt, d1, SimplicialMap::classifying(pt, d1, 0, 0));
}

}  // namespace

TEST_CASE("diagrams validate functoriality", "[grothendieck]") {
  auto x = start_vertex(3);
  CHECK(validate(x).ok());
  auto bad = x;
  // the identity on Delta[1] replaced by a constant endomorphism
  bad.maps[static_cast<std::size_t>(bad.base->identity(1))] = test::constant_map(bad.values[1], bad.values[1], 0);
  CHECK_FALSE(validate(bad).ok());
}

TEST_CASE("gerbes over identities are function complexes", "[grothendieck]") {
  auto x = start_vertex(3);
  for (int n = 0; n <= 2; ++n) {
    GerbeContext ctx(x, 3 - n);
    for (Object d = 0; d < 2; ++d) {
      auto g = gerbe(ctx, n, ctx.nerve().degenerate_on(d, n));
      CHECK(validate(*g.set).ok());
      CHECK(check_isomorphism(g.p2).ok());
      CHECK(g.p2.target() == ctx.complex(n, d).set());
    }
  }
  // over the arrow itself: pairs (point, vertex of Delta[1]) compatible along X(f)
  GerbeContext ctx(x, 2);
  const auto& ns = *ctx.nerve().set();
  for (Simplex s = 0; s < ns.size(1); ++s) {
    if (ns.degenerate(1, s)) continue;
    CHECK(gerbe(ctx, 1, s).set->size(0) == 2);
  }
  CHECK_THROWS_AS(GerbeContext(x, -1), InvalidArgument);
}

TEST_CASE("total space of the start vertex diagram is Delta[2]", "[grothendieck]") {
  auto x = start_vertex(3);
  auto total = grothendieck_total(x);
  CHECK(test::counts(*total.object.set) == test::counts(*standard::delta(2, 3).set));
  CHECK(validate(*total.object.set).ok());
  CHECK(validate(total.projection).ok());
  auto rn = relative_nerve(x);
  CHECK(test::counts(*rn.object.set) == test::counts(*total.object.set));
  auto iso = canonical_iso(x, total, rn);
  CHECK(iso.ok());
  CHECK(iso.summary() == "bijective, degrees 0..3");
  for (Object d = 0; d < 2; ++d) {
    CHECK(check_isomorphism(relative_fiber_map(rn, x, d)).ok());
    CHECK(check_isomorphism(total_fiber_map(total, x, d)).ok());
  }
}

TEST_CASE("constant diagrams give products with the nerve", "[grothendieck]") {
  auto iso_cat = categories::walking_iso();
  auto j = standard::J(3).set;
  auto x = constant_diagram(iso_cat, j);
  auto total = grothendieck_total(x);
  for (int n = 0; n <= 3; ++n) CHECK(total.object.set->size(n) == (std::size_t{1} << (2 * n + 2)));
  auto rn = relative_nerve(x);
  CHECK(canonical_iso(x, total, rn).ok());
}

TEST_CASE("simplicial space and its zeroth column", "[grothendieck]") {
  auto x = start_vertex(3);
  auto total = grothendieck_total(x);
  auto space = grothendieck_space(x, 1, 2);
  CHECK(validate(space.space).ok());
  CHECK(compare_zeroth_column(x, space, total).ok());
}

TEST_CASE("relative simplices are checked on every face pair", "[grothendieck]") {
  auto x = start_vertex(2);
  auto rn = relative_nerve(x);
  for (int n = 0; n <= 2; ++n)
    for (Simplex s = 0; s < rn.object.set->size(n); ++s)
      CHECK(check_relative_simplex(x, *rn.nerve, n, rn.object.key(n, s)).ok());
}

TEST_CASE("unit of the Grothendieck adjunction", "[grothendieck]") {
  auto x = start_vertex(3);
  auto total = grothendieck_total(x);
  for (Object d = 0; d < 2; ++d) {
    auto u = unit_map(x, total, d, 2);
    CHECK(u.report.ok());
    CHECK(u.unit.has_value());
  }
  CHECK(unit_naturality(x, total, *x.base->find_morphism("0<1"), 2).ok());
  // terminal base: the unit is an isomorphism
  auto cj = constant_diagram(categories::terminal(), standard::J(3).set);
  auto tj = grothendieck_total(cj);
  auto u = unit_map(cj, tj, 0, 3);
  REQUIRE(u.unit);
  CHECK(u.unit->map.bijective());
}

TEST_CASE("slices and cotensors", "[grothendieck]") {
  auto x = start_vertex(3);
  auto total = grothendieck_total(x);
  auto over = left_adjoint_slice(flat(total.object.set), total.projection, *total.nerve, 1);
  CHECK(validate(over.value.object).ok());
  CHECK(over.value.object.set->size(0) == total.object.set->size(0));
  auto d1 = standard::delta(1, 3).set;
  // maps Delta[1] -> Delta[1] over Delta[1] through time: only constants survive in degree 0
  auto cot = cotensor_over(d1, SimplicialMap::identity(d1), 1);
  CHECK(cot.cone.object.set->size(0) == 2);
  auto cot0 = cotensor_over(standard::delta(0, 3).set, total.projection, 2);
  CHECK(cot0.cone.object.set->size(0) == total.object.set->size(0));
  CHECK(cot0.cone.object.set->size(1) == total.object.set->size(1));
}
