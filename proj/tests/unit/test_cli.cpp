#include "tmne/cli.hpp"
#include "tmne/game.hpp"

#include "doctest.h"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tmne::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const char* name) { return std::string(TMNE_FIXTURES_DIR) + "/" + name; }

std::filesystem::path scratch(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "tmne_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("delta and bounds") {
  auto r = run({"delta", "2,2,2"});
  CHECK(r.code == 0);
  CHECK(r.json()["delta"] == 2);
  CHECK(r.json()["feasible"] == true);

  auto bad = run({"delta", "3,2"});
  CHECK(bad.code == 2);
  CHECK(bad.json()["feasible"] == false);
  CHECK(bad.json()["delta"] == 0);

  auto b = run({"bounds", "2,2,2"});
  CHECK(b.code == 0);
  CHECK(b.json()["delta_i"] == Json::array({3, 3, 3}));
  CHECK(b.json()["D"] == 11);
  CHECK(run({"bounds", "4,2"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"delta"}).code == 1);
  CHECK(run({"delta", "2,x"}).code == 1);
  CHECK(run({"count", fx("no_such.game")}).code == 1);
  CHECK(run({"count", fx("sym222.game"), "--seed", "0"}).code == 1);
  CHECK(run({"count", fx("sym222.game"), "--elim-order", "1,1,2"}).code == 1);
}

TEST_CASE("count, solve and certify on the fixture") {
  auto c = run({"count", fx("sym222.game")});
  REQUIRE(c.code == 0);
  CHECK(c.json()["count"] == 2);
  CHECK(c.json()["delta"] == 2);

  auto s = run({"solve", fx("sym222.game"), "--decimals", "3"});
  REQUIRE(s.code == 0);
  Json j = s.json();
  CHECK(j["P"] == Json::array({"2", "-3", "1"}));
  CHECK(j["count"] == 2);
  CHECK(j["equilibria"][0][0][1]["value"] == "1/4");
  CHECK(j["equilibria"][0][0][1]["decimal"] == "0.250");
  CHECK(j["equilibria"][1][2][1]["value"] == "2/5");

  auto f = run({"certify", fx("sym222.game")});
  REQUIRE(f.code == 0);
  CHECK(f.json()["certificate"]["verdict"] == true);
}

TEST_CASE("elimination order does not change the answer") {
  auto a = run({"solve", fx("sym222.game")});
  for (const char* order : {"1,2,3", "3,1,2", "2,3,1"}) {
    auto b = run({"solve", fx("sym222.game"), "--elim-order", order});
    REQUIRE(b.code == 0);
    CHECK(b.json()["P"] == a.json()["P"]);
    CHECK(b.json()["equilibria"] == a.json()["equilibria"]);
  }
}

TEST_CASE("positive-dimensional input") {
  auto s = run({"solve", fx("sym222_redundant.game")});
  CHECK(s.code == 2);
  CHECK(s.json()["error"] == "positive-dimensional");
  CHECK(s.err.find("isolated") != std::string::npos);

  auto i = run({"isolated", fx("glued_point_line.game")});
  REQUIRE(i.code == 0);
  CHECK(i.json()["upper_bound"].get<int>() >= 1);
  CHECK(i.json()["deformation"]["verdict"] == "likely-positive-dimensional");
}

TEST_CASE("output is deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"solve", fx("glued_point_line.game")},
                                        std::vector<std::string>{"isolated", fx("glued_outside_point.game")},
                                        std::vector<std::string>{"certify", fx("sym222.game"), "--seed", "9"},
                                        std::vector<std::string>{"gen-random", "3,3,3", "--seed", "4"}}) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("gen-random round trip through --out") {
  auto path = scratch("g.game");
  auto r = run({"gen-random", "2,3,2", "--seed", "11", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  tmne::Game g = tmne::load_game_file(path.string());
  CHECK(g.shape.strategy_counts == std::vector<int>{2, 3, 2});
  CHECK(g == tmne::random_game(g.shape, 11));
  CHECK(slurp(path) == tmne::save_game(g) + "\n");

  auto out = scratch("count.json");
  auto c = run({"count", path.string(), "--out", out.string()});
  REQUIRE(c.code == 0);
  CHECK(Json::parse(slurp(out))["shape"] == Json::array({2, 3, 2}));

  CHECK(run({"count", path.string(), "--out", "/nonexistent/dir/x.json"}).code == 1);
}
