#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hgc/cli/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
  nlohmann::json doc() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = hgc::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string workspace(const std::string& name) { return std::string(HGC_WORKSPACES) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("check-iso on a constant point over a three-object category", "[cli]") {
  auto r = run({"check-iso", workspace("const_point.json")});
  REQUIRE(r.status == hgc::cli::kOk);
  CHECK(r.doc()["report"]["summary"] == "bijective, degrees 0..4");
}

TEST_CASE("nerve of the terminal category is a point", "[cli]") {
  auto r = run({"nerve", "--category", "terminal", "--dim-bound", "3"});
  REQUIRE(r.status == hgc::cli::kOk);
  auto s = r.doc()["sets"]["N(terminal)"];
  CHECK(s["counts"] == nlohmann::json::array({1, 1, 1, 1}));
  CHECK(r.doc()["report"]["nerve"]["nondegenerate"] == nlohmann::json::array({1, 0, 0, 0}));
}

TEST_CASE("localizing flat Delta[1] gives five edges", "[cli]") {
  auto r = run({"localize", workspace("flat_delta1.json")});
  REQUIRE(r.status == hgc::cli::kOk);
  CHECK(r.doc()["report"]["localization"]["counts"][1] == 5);
  CHECK(r.doc()["report"]["cardinality_formula"] == true);
}

TEST_CASE("identical inputs give byte-identical outputs", "[cli]") {
  for (const char* cmd : {"hocolim", "check-iso", "cocartesian-edges", "colim"}) {
    auto a = run({cmd, workspace("arrow.json"), "--diagram", "X"});
    auto b = run({cmd, workspace("arrow.json"), "--diagram", "X"});
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("outputs parse back to the same canonical form", "[cli]") {
  const auto dir = std::filesystem::temp_directory_path() / "hgc_cli_test";
  std::filesystem::create_directories(dir);
  const auto first = (dir / "first.json").string();
  REQUIRE(run({"bar", workspace("arrow.json"), "--diagram", "X", "--out", first}).status == hgc::cli::kOk);
  // validate keeps every entry and only replaces the report
  auto again = run({"validate", first});
  REQUIRE(again.status == hgc::cli::kOk);
  auto a = nlohmann::json::parse(slurp(first));
  auto b = again.doc();
  a.erase("report");
  b.erase("report");
  CHECK(a == b);
  std::filesystem::remove_all(dir);
}

TEST_CASE("exit statuses", "[cli]") {
  CHECK(run({}).status == hgc::cli::kParseError);
  CHECK(run({"frobnicate"}).status == hgc::cli::kParseError);
  CHECK(run({"validate", workspace("missing.json")}).status == hgc::cli::kParseError);
  CHECK(run({"check-iso", workspace("arrow.json"), "--diagram", "nope"}).status == hgc::cli::kParseError);
  CHECK(run({"check-iso", workspace("arrow.json"), "--budget", "10"}).status == hgc::cli::kBudgetExceeded);
  // a collapsing map makes the comparison map non-injective
  CHECK(run({"iota", workspace("collapse.json")}).status == hgc::cli::kDefects);
  CHECK(run({"--help"}).status == hgc::cli::kOk);
}

TEST_CASE("fibration commands report verdicts", "[cli]") {
  auto r = run({"check-fibration", workspace("arrow.json"), "--diagram", "X", "--nmax", "3"});
  REQUIRE(r.status == hgc::cli::kOk);
  CHECK(r.doc()["report"]["cocartesian_fibration"]["holds"] == true);
  auto e = run({"cocartesian-edges", workspace("arrow.json"), "--diagram", "X"});
  REQUIRE(e.status == hgc::cli::kOk);
  const auto doc = e.doc();
  std::size_t cocartesian = 0;
  for (const auto& edge : doc["report"]["edges"]) cocartesian += edge["cocartesian"].get<bool>();
  CHECK(cocartesian >= 1);
  CHECK(cocartesian < doc["report"]["edges"].size());
}

TEST_CASE("suite runs a single criterion", "[cli]") {
  auto r = run({"suite", "--criterion", "5"});
  REQUIRE(r.status == hgc::cli::kOk);
  CHECK(r.doc()["report"]["criteria"][0]["pass"] == true);
  CHECK(r.err.rfind("criterion 5 PASS", 0) == 0);
}
