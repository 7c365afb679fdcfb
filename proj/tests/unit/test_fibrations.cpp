#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hgc/fibrations/lifting.hpp"
#include "hgc/grothendieck/relative_nerve.hpp"
#include "hgc/scat/errors.hpp"

using namespace hgc;

TEST_CASE("quasi-categories", "[fibrations]") {
  CHECK(is_quasi_category(Nerve(categories::poset(2), 3).set(), 3).holds);
  CHECK(is_quasi_category(standard::J(3).set, 3).holds);
  auto horn = is_quasi_category(standard::horn(2, 1, 3).set, 2);
  CHECK_FALSE(horn.holds);
  CHECK(horn.counterexample.has_value());
  CHECK_THROWS_AS(is_quasi_category(standard::delta(1, 2).set, 3), InsufficientTruncation);
}

TEST_CASE("coCartesian edges over a point", "[fibrations]") {
  auto d1 = standard::delta(1, 3).set;
  auto p = to_point(d1);
  const Simplex edge = d1->nondegenerate(1).front();
  CHECK_FALSE(is_cocartesian_edge(p, edge, 2).holds());
  CHECK(is_cocartesian_edge(p, d1->degeneracy(1, 0, 0), 3).holds());
  // every edge of J is an equivalence, hence coCartesian over a point
  auto j = standard::J(3).set;
  for (Simplex e : j->nondegenerate(1)) CHECK(is_cocartesian_edge(to_point(j), e, 3).holds());
}

TEST_CASE("lift search agrees with the exhaustive oracle", "[fibrations]") {
  auto x = test::arrow_diagram(standard::delta(0, 3).set, standard::delta(1, 3).set,
                               SimplicialMap::classifying(standard::delta(0, 3).set, standard::delta(1, 3).set, 0, 0));
  auto rn = relative_nerve(x);
  std::size_t problems = 0;
  for (int n = 2; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      for (const auto& pr : horn_problems(rn.projection, n, i)) {
        CHECK(lift_search(rn.projection, pr).empty() == lift_search_oracle(rn.projection, pr).empty());
        ++problems;
      }
  CHECK(problems > 0);
}

TEST_CASE("relative nerves of nerve diagrams are coCartesian fibrations", "[fibrations]") {
  // F(0) = J, F(1) = Delta[0] over the arrow
  auto j = standard::J(3).set;
  auto pt = standard::delta(0, 3).set;
  std::vector<std::vector<Simplex>> c(4);
  for (int n = 0; n <= 3; ++n) c[n].assign(j->size(n), 0);
  auto x = test::arrow_diagram(j, pt, SimplicialMap(j, pt, std::move(c)));
  auto rn = relative_nerve(x);
  CHECK(is_inner_fibration(rn.projection, 3).holds);
  auto v = is_cocartesian_fibration(rn.projection, 3);
  CHECK(v.holds);
  auto marked = natural_marking(rn.projection, 3);
  CHECK(marked.marked_edges().size() > 0);
}

TEST_CASE("natural marking needs an inner fibration", "[fibrations]") {
  CHECK_THROWS_AS(natural_marking(to_point(standard::horn(2, 1, 3).set), 2), PreconditionFailed);
}
