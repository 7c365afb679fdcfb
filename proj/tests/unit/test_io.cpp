#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hgc/scat/errors.hpp"
#include "hgc/io/workspace.hpp"
#include "hgc/scat/validate.hpp"

using namespace hgc;

namespace {

const char* kArrow = R"({
  "schema": 1,
  "dim_bound": 3,
  "categories": {"A": {"generator": "arrow"}},
  "sets": {"pt": {"generator": "delta 0"}, "D1": {"generator": "delta 1"}},
  "maps": {"start": {"source": "pt", "target": "D1", "classifying": [0, 0]}},
  "marked": {"D1+": {"set": "D1", "marking": "sharp"}},
  "diagrams": {"X": {"base": "A", "values": {"0": "pt", "1": "D1"}, "maps": {"0<1": "start"}}}
})";

}  // namespace

TEST_CASE("workspaces parse and resolve references", "[io]") {
  auto w = Workspace::parse_text(kArrow);
  CHECK(w.dim_bound() == 3);
  CHECK(w.set("D1")->size(1) == 3);
  CHECK(w.marked("D1+").marked_edges().size() == 3);
  CHECK(validate(w.diagram("X")).ok());
  CHECK(w.diagram_names() == std::vector<std::string>{"X"});
  auto higher = Workspace::parse_text(kArrow, 4);
  CHECK(higher.set("D1")->dim() == 4);
}

TEST_CASE("canonical form round-trips", "[io]") {
  auto text = Workspace::parse_text(kArrow).dump();
  CHECK(Workspace::parse_text(text).dump() == text);
  auto w = Workspace::parse_text(kArrow);
  w.add_set("J", standard::J(2).set);
  auto with_output = w.dump();
  auto again = Workspace::parse_text(with_output);
  CHECK(again.dump() == with_output);
  CHECK(test::counts(*again.set("J")) == test::counts(*standard::J(2).set));
  CHECK(validate(*again.set("J")).ok());
}

TEST_CASE("explicit tables", "[io]") {
  auto j = set_to_json(*standard::J(2).set);
  auto s = set_from_json(j);
  CHECK(test::counts(*s) == test::counts(*standard::J(2).set));
  CHECK(set_to_json(*s) == j);
  auto bad = j;
  bad["counts"][0] = 5;
  CHECK_THROWS_AS(set_from_json(bad), ParseError);
}

TEST_CASE("malformed workspaces are rejected", "[io]") {
  CHECK_THROWS_AS(Workspace::parse_text("{"), ParseError);
  CHECK_THROWS_AS(Workspace::parse_text(R"({"schema": 2})"), ParseError);
  CHECK_THROWS_AS(Workspace::parse_text(R"({"schema": 1, "extra": 0})"), ParseError);
  CHECK_THROWS_AS(Workspace::parse_text(R"({"schema": 1, "sets": {"s": {"generator": "delta x"}}})"), ParseError);
  CHECK_THROWS_AS(Workspace::parse_text(R"({"schema": 1, "marked": {"m": {"set": "nope", "marking": "flat"}}})"),
                  ParseError);
  // a missing non-identity map cannot be filled in
  CHECK_THROWS_AS(Workspace::parse_text(R"({"schema": 1, "categories": {"A": {"generator": "arrow"}},
      "sets": {"pt": {"generator": "delta 0"}},
      "diagrams": {"X": {"base": "A", "values": {"0": "pt", "1": "pt"}}}})"),
                  ParseError);
  CHECK_NOTHROW(Workspace::parse_text(R"({"schema": 1, "categories": {"A": {"generator": "arrow"}},
      "sets": {"pt": {"generator": "delta 0"}},
      "diagrams": {"X": {"base": "A", "constant": "pt"}}})"));
}

TEST_CASE("explicit categories", "[io]") {
  auto w = Workspace::parse_text(R"({"schema": 1, "categories": {"C": {
      "objects": ["a", "b"],
      "arrows": [{"name": "f", "source": "a", "target": "b"}, {"name": "g", "source": "b", "target": "a"}],
      "composites": [["g", "f", "id_a"], ["f", "g", "id_b"]]}}})");
  auto c = w.category("C");
  CHECK(c->num_morphisms() == 4);
  CHECK(validate(*c).ok());
}
