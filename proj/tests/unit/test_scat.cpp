#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hgc/scat/errors.hpp"
#include "hgc/scat/function_complex.hpp"
#include "hgc/scat/limits.hpp"
#include "hgc/scat/map_search.hpp"
#include "hgc/scat/validate.hpp"

using namespace hgc;
using hgc::test::choose;

TEST_CASE("monotone maps compose and factor", "[scat]") {
  auto d = MonotoneMap::coface(2, 1);
  CHECK(d.source_dim() == 1);
  CHECK(d.target_dim() == 2);
  CHECK(d(0) == 0);
  CHECK(d(1) == 2);
  // sigma^0 delta^0 = id on [1]
  CHECK(compose(MonotoneMap::codegeneracy(1, 0), MonotoneMap::coface(2, 0)) == MonotoneMap::identity(1));
  CHECK(MonotoneMap::all(1, 2).size() == choose(4, 2));
  CHECK_THROWS_AS(MonotoneMap({1, 0}, 1), InvalidArgument);
}

TEST_CASE("standard simplices have binomial counts", "[scat]") {
  for (int n = 0; n <= 3; ++n) {
    auto d = standard::delta(n, 3);
    CHECK(validate(*d.set).ok());
    for (int k = 0; k <= 3; ++k) CHECK(d.set->size(k) == choose(n + k + 1, k + 1));
  }
}

TEST_CASE("horns, boundaries and J have the expected counts", "[scat]") {
  auto h = standard::horn(2, 1, 3);
  auto b = standard::boundary(2, 3);
  auto j = standard::J(3);
  for (int k = 0; k <= 3; ++k) {
    // maps [k] -> [2] with image in {0,1} or {1,2}
    CHECK(h.set->size(k) == 2 * static_cast<std::size_t>(k + 2) - 1);
    // all maps minus surjections
    CHECK(b.set->size(k) == choose(k + 3, k + 1) - choose(k, 2));
    CHECK(j.set->size(k) == std::size_t{1} << (k + 1));
  }
  CHECK(validate(*h.set).ok());
  CHECK(validate(*b.set).ok());
  CHECK(validate(*j.set).ok());
  CHECK(h.set->nondegenerate(1).size() == 2);
  CHECK(h.set->nondegenerate(2).empty());
}

TEST_CASE("nerves of categories", "[scat]") {
  Nerve p(categories::poset(2), 3);
  for (int k = 0; k <= 3; ++k) CHECK(p.set()->size(k) == choose(k + 3, k + 1));
  Nerve t(categories::terminal(), 3);
  CHECK(test::counts(*t.set()) == std::vector<std::size_t>{1, 1, 1, 1});
  Nerve z(categories::z2(), 3);
  for (int k = 0; k <= 3; ++k) CHECK(z.set()->size(k) == std::size_t{1} << k);
  Nerve iso(categories::walking_iso(), 3);
  CHECK(test::counts(*iso.set()) == test::counts(*standard::J(3).set));
  for (const char* name : {"span", "cospan", "parallel", "discrete 2"}) {
    auto c = categories::by_name(name);
    CHECK(validate(*c).ok());
    CHECK(validate(*Nerve(c, 3).set()).ok());
  }
}

TEST_CASE("categories compose", "[scat]") {
  auto c = categories::poset(2);
  auto f = *c->find_morphism("0<1");
  auto g = *c->find_morphism("1<2");
  CHECK(c->morphism_name(c->compose(g, f)) == "0<2");
  CHECK(c->compose(c->identity(1), f) == f);
  CHECK_THROWS_AS(categories::by_name("nonsense"), InvalidArgument);
}

TEST_CASE("products and pullbacks", "[scat]") {
  auto d1 = standard::delta(1, 3).set;
  auto sq = product(d1, d1);
  CHECK(validate(*sq.object.set).ok());
  CHECK(validate(sq.first).ok());
  for (int k = 0; k <= 3; ++k) CHECK(sq.object.set->size(k) == static_cast<std::size_t>((k + 2) * (k + 2)));
  CHECK(sq.object.set->nondegenerate(1).size() == 5);
  CHECK(sq.object.set->nondegenerate(2).size() == 2);

  // the fiber of Delta[1] -> Delta[0] is Delta[1]
  auto pt = standard::delta(0, 3).set;
  auto fib = pullback(test::constant_map(d1, pt, 0), SimplicialMap::identity(pt));
  CHECK(test::counts(*fib.object.set) == test::counts(*d1));
}

TEST_CASE("pushouts, quotients and components", "[scat]") {
  auto pt = standard::delta(0, 3).set;
  auto d1 = standard::delta(1, 3).set;
  // gluing two edges end to start gives a horn
  auto start = SimplicialMap::classifying(pt, d1, 0, 0);
  auto end = SimplicialMap::classifying(pt, d1, 0, 1);
  auto glued = pushout(end, start);
  CHECK(validate(*glued.object.set).ok());
  CHECK(test::counts(*glued.object.set) == test::counts(*standard::horn(2, 1, 3).set));

  std::vector<std::vector<std::pair<Simplex, Simplex>>> pairs(4);
  pairs[0].emplace_back(0, 1);
  auto circle = quotient(d1, pairs, true);
  CHECK(validate(*circle.object.set).ok());
  CHECK(circle.object.set->size(0) == 1);
  CHECK(circle.object.set->nondegenerate(1).size() == 1);
  CHECK(pi0(*circle.object.set).count == 1);

  auto two = coproduct({pt, pt});
  CHECK(pi0(*two.object.set).count == 2);
}

TEST_CASE("map enumeration agrees with monotone map counts", "[scat]") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      CHECK(count_maps(standard::delta(m, 3).set, standard::delta(n, 3).set) == choose(m + n + 1, m + 1));
  // maps from the horn are pairs of composable edges
  CHECK(count_maps(standard::horn(2, 1, 3).set, standard::delta(1, 3).set) == 4);
  for (const auto& f : all_maps(standard::J(3).set, standard::delta(1, 3).set)) CHECK(validate(f).ok());
}

TEST_CASE("function complexes", "[scat]") {
  auto d1 = standard::delta(1, 2).set;
  auto pt = standard::delta(0, 2).set;
  FunctionComplex fc(pt, d1, 2);
  CHECK(validate(*fc.set()).ok());
  CHECK(test::counts(*fc.set()) == test::counts(*d1));
  FunctionComplex loops(d1, d1, 1);
  CHECK(loops.set()->size(0) == 3);
  CHECK_THROWS_AS(FunctionComplex(standard::delta(0, 3).set, d1, 1), InvalidArgument);
}

TEST_CASE("retruncation", "[scat]") {
  auto d2 = standard::delta(2, 4).set;
  auto low = retruncate(d2, 2);
  CHECK(low->dim() == 2);
  CHECK(validate(*low).ok());
  auto high = retruncate(standard::delta(2, 2).set, 4);
  CHECK(test::counts(*high) == test::counts(*d2));
}

TEST_CASE("validation catches a broken simplicial identity", "[scat]") {
  // vertices a, b; edges s0 a, s0 b, e : a -> b, except d0(s0 a) = b
  SimplicialSet::Table faces = {{}, {{1, 1, 1}, {0, 1, 0}}};
  SimplicialSet::Table degs = {{{0, 1}}, {}};
  SimplicialSet s(1, {2, 3}, faces, degs);
  auto r = validate(s);
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.violations.empty());
}
