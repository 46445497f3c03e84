#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "corebound/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = corebound::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (corebound::cli::default_fixture_dir() / name).string(); }

corebound::io::Json json_of(const Result& r) { return corebound::io::Json::parse(r.out); }

}  // namespace

TEST_CASE("classify reports the line system as neither regular nor wuc") {
  const auto r = run({"classify", "--system", fixture("line_cone.json")});
  REQUIRE(r.code == 0);
  const auto doc = json_of(r);
  CHECK(doc["regular"] == false);
  CHECK(doc["weakly_union_closed"] == false);
}

TEST_CASE("rays on the five-player system") {
  const auto r = run({"rays", "--system", fixture("five_player_regular.json"), "--format", "raw"});
  REQUIRE(r.code == 0);
  const auto doc = json_of(r);
  const corebound::io::Json expected = corebound::io::Json::parse(
      R"([["0","0","-1","1","0"],["0","0","1","0","-1"],["0","1","-1","0","0"]])");
  CHECK(doc["rays"] == expected);
}

TEST_CASE("normal collections of the nine-player system") {
  const auto r = run({"normal", "--system", fixture("nine.json"), "--method", "all", "--format", "raw"});
  REQUIRE(r.code == 0);
  const auto doc = json_of(r);
  REQUIRE(doc.size() == 3);
  CHECK(doc[0]["sets"] == corebound::io::Json::parse("[[1,2,3],[1,3,4,5,6]]"));
  CHECK(doc[1]["sets"] == corebound::io::Json::parse("[[1,2,3],[1,2,3,4,5,6]]"));
  CHECK(doc[2]["sets"] == corebound::io::Json::parse("[[1,2,3],[1,2,3,4,5,6,9]]"));
}

TEST_CASE("verify-inclusion on the five-player game") {
  const auto r = run({"verify-inclusion", "--game", fixture("five_player_game.json"), "--collection",
                      fixture("five_player_collection.json")});
  REQUIRE(r.code == 0);
  const auto doc = json_of(r);
  CHECK(doc["holds"] == false);
  CHECK(doc["witness_kind"] == "point");
  CHECK(doc["collection_bounds_core"] == true);
  CHECK(doc["weber"]["vertices"] == corebound::io::Json::parse(R"([["1","0","0","1","1"]])"));
}

TEST_CASE("output is deterministic and can go to a file") {
  const std::vector<std::string> args{"normal", "--system", fixture("regular_one_ray.json")};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  const std::string path = (std::filesystem::temp_directory_path() / "corebound_cli_out.json").string();
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path});
  const auto c = run(with_out);
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"classify", "--bogus"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"classify"}).code == 1);
  CHECK(run({"classify", "--system", fixture("missing_empty.json")}).code == 1);
  CHECK(run({"classify", "--system", fixture("does_not_exist.json")}).code == 1);
  const auto bad = run({"core", "--game", fixture("game_decimal.json")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("InvalidRational") != std::string::npos);
  CHECK(run({"normal", "--system", fixture("line_cone.json")}).code == 1);
  CHECK(run({"rays", "--system", fixture("line_cone.json"), "--method", "regular"}).code == 1);
}

TEST_CASE("reproduce matches every golden report") {
  const auto r = run({"reproduce"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("all cases reproduced") != std::string::npos);
}
