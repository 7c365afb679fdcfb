#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hgc/marked/equivalence.hpp"
#include "hgc/marked/localization.hpp"
#include "hgc/scat/errors.hpp"
#include "hgc/scat/limits.hpp"
#include "hgc/scat/map_search.hpp"
#include "hgc/scat/validate.hpp"

using namespace hgc;

TEST_CASE("flat and sharp markings", "[marked]") {
  auto d1 = standard::delta(1, 3).set;
  auto f = flat(d1);
  auto s = sharp(d1);
  CHECK(validate(f).ok());
  CHECK(validate(s).ok());
  CHECK(f.marked_edges().size() == 2);
  CHECK(s.marked_edges().size() == 3);
  // a marking missing a degenerate edge is invalid
  MarkedSimplicialSet bad{d1, {false, false, true}};
  CHECK_FALSE(validate(bad).ok());
}

TEST_CASE("equivalence edges by the witness criterion", "[marked]") {
  auto j = standard::J(3);
  for (Simplex e : j.set->nondegenerate(1)) {
    auto v = is_equivalence_edge(*j.set, e);
    CHECK(v.equivalence);
    REQUIRE(v.witness);
    CHECK(is_witness(*j.set, *v.witness));
  }
  auto d1 = standard::delta(1, 3).set;
  CHECK_FALSE(is_equivalence_edge(*d1, d1->nondegenerate(1).front()).equivalence);
  // degenerate edges always qualify
  CHECK(is_equivalence_edge(*d1, d1->degeneracy(1, 0, 0)).equivalence);
  Nerve z(categories::z2(), 3);
  CHECK(mark_equivalences(z.set()).marked_edges().size() == 2);
  CHECK_THROWS_AS(find_witness(*standard::delta(1, 1).set, 0), InsufficientTruncation);
}

TEST_CASE("bounded word search agrees on small cases", "[marked]") {
  auto j = standard::J(3).set;
  auto d1 = standard::delta(1, 3).set;
  CHECK(word_search_invertible(*j, j->nondegenerate(1).front(), 3));
  CHECK_FALSE(word_search_invertible(*d1, d1->nondegenerate(1).front(), 3));
  auto v = is_equivalence_edge(*j, j->nondegenerate(1).front(), 2);
  REQUIRE(v.word_search);
  CHECK(*v.word_search);
}

TEST_CASE("localization cardinality", "[marked]") {
  auto d1 = standard::delta(1, 3).set;
  // flat Delta[1]: the two degenerate edges each get a glued J
  auto loc = localize(flat(d1));
  CHECK(test::counts(*loc.object.set) == std::vector<std::size_t>{2, 5, 12, 27});
  CHECK(validate(*loc.object.set).ok());
  CHECK(loc.p.injective());
  auto sharp_loc = localize(sharp(d1));
  for (int n = 0; n <= 3; ++n)
    CHECK(sharp_loc.object.set->size(n) == d1->size(n) + 3 * ((std::size_t{1} << (n + 1)) - (n + 2)));
  // the glued edge is an equivalence after localizing
  const Simplex e = d1->nondegenerate(1).front();
  CHECK(is_equivalence_edge(*sharp_loc.object.set, sharp_loc.p(1, e)).equivalence);
}

TEST_CASE("universal map out of a localization", "[marked]") {
  auto d1 = standard::delta(1, 3).set;
  auto x = sharp(d1);
  auto loc = localize(x);
  auto j = standard::J(3);
  const Simplex e = d1->nondegenerate(1).front();
  // Delta[1] -> J picking the edge 01
  MapSearchOptions o;
  o.fixed[{1, e}] = j.at(1, {0, 1});
  auto maps = all_maps(d1, j.set, o);
  REQUIRE(maps.size() == 1);
  const auto& g = maps.front();
  auto u = localization_universal(loc, g);
  CHECK(validate(u).ok());
  CHECK(same_components(compose(u, loc.p), g));
  CHECK(same_components(compose(u, glued_copy(loc, j, e)), j_extension(j, j.set, g(1, e))));
  // sending a marked edge to a non-equivalence is refused
  CHECK_THROWS_AS(localization_universal(loc, SimplicialMap::identity(d1)), PreconditionFailed);
}

TEST_CASE("adjunction unit and counit", "[marked]") {
  auto j = standard::J(2).set;
  auto unit = adjunction_unit(flat(j));
  CHECK(validate(unit.unit).ok());
  auto counit = adjunction_counit(j);
  CHECK(validate(counit.counit).ok());
  // counit o p = id on the original set
  CHECK(same_components(compose(counit.counit, counit.localization.p), SimplicialMap::identity(j)));
}

TEST_CASE("marked products", "[marked]") {
  auto d1 = standard::delta(1, 2).set;
  auto prod = marked_product(sharp(d1), flat(d1));
  CHECK(validate(prod.object).ok());
  // an edge is marked iff both components are
  std::size_t marked = 0;
  for (Simplex e = 0; e < prod.object.set->size(1); ++e)
    if (prod.object.marked[e]) ++marked;
  CHECK(marked == 3 * 2);
}
