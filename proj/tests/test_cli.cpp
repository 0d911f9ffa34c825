#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wilflab/cli.hpp"
#include "wilflab/enumeration.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = wilflab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("text commands") {
  CHECK(run({"embed", "322", "2343213421"}).out == "2,3,7\n");
  CHECK(run({"cluster", "2314", "--set", "1,2,4"}).out == "2334414\n");
  CHECK(run({"cluster", "2314", "--set", "1,6,7", "--extended", "--length", "11"}).out ==
        "23141233441\n");
  CHECK(run({"compose", "1,2,4", "1,3"}).out == "1,2,3,4,6\n");
  CHECK(run({"sstest", "21365874", "21657843"}).out == "true\n");
  CHECK(run({"sstest", "21365874", "21478563"}).out == "false\n");
  CHECK(run({"crosstest", "2351647", "6471532"}).out == "true\n");
  CHECK(run({"mcrt", "2351647", "6471532", "--set", "1,2,5"}).out ==
        "23556677647\n66776572532\nfalse\n");
  CHECK(run({"witness", "2351647", "6471532"}).out == "refuted 1,2,4\n");
  CHECK(run({"ssclass", "123"}).out == "123\n132\n231\n321\n");
  CHECK(run({"swap", "2314"}).out == "2413\n");
  CHECK(run({"enumerate", "3", "--relation", "ss", "--stats"}).out ==
        "classes 2\ntotal 6\nmin 2\nmax 4\nhistogram 4:1 2:1\n");
  CHECK(run({"count", "231", "--length", "4", "--norm", "9", "--set", "1"}).out ==
        "geq 19\ndistribution 0:37 1:18 2:1\nU 10\nW 9\n");
  CHECK(run({"genfun", "2314", "--compare", "2314", "--max-len", "6", "--max-norm", "14"}).out ==
        "no discrepancy found\n");

  const auto profile = run({"profile", "21365874"}).out;
  CHECK(profile.rfind("7 (1)\n6 (2,1)\n", 0) == 0);
  CHECK(profile.find("2 (2,1,1,1,1,1)\n") != std::string::npos);

  const auto tableau = run({"cluster", "2314", "--set", "1,2,4", "--tableau"}).out;
  CHECK(tableau.find("-------------\n2 3 3 4 4 1 4\n") != std::string::npos);
}

TEST_CASE("json output parses") {
  const auto info = nlohmann::json::parse(run({"--format", "json", "info", "2132213"}).out);
  CHECK(info["length"] == 7);
  CHECK(info["norm"] == 14);
  CHECK(info["reversal"] == "3122312");

  const auto tree = nlohmann::json::parse(run({"tree", "21365874", "--format", "json"}).out);
  CHECK(tree["k"] == 3);
  CHECK(tree["l"] == 2);
  CHECK(tree["classes"].size() == 4);

  const auto dot = run({"--format", "dot", "tree", "213"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"cluster", "2314", "--set", "1,5"}).code == 2);
  CHECK(run({"sstest", "2314", "231"}).code == 2);
  CHECK(run({"sstest", "2214", "2314"}).code == 2);
  CHECK(run({"enumerate", "11"}).code == 2);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"embed", "3x2", "2343"}).code == 1);
  CHECK(run({"--format", "dot", "embed", "3", "3"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  const auto failed = run({"cluster", "2314", "--set", "1,5"});
  CHECK(failed.out.empty());
  CHECK_FALSE(failed.err.empty());
}

TEST_CASE("enumerate writes deterministic files") {
  const auto dir = std::filesystem::temp_directory_path() / "wilflab-cli-test";
  std::filesystem::create_directories(dir);
  REQUIRE(run({"enumerate", "6", "--relation", "cross", "--output", dir.string()}).code == 0);
  const auto path = dir / wilflab::partition_file_name(6, wilflab::Relation::cross);
  std::ifstream first_file(path);
  const std::string first((std::istreambuf_iterator<char>(first_file)), {});
  REQUIRE(run({"enumerate", "6", "--relation", "cross", "--output", dir.string()}).code == 0);
  std::ifstream second_file(path);
  const std::string second((std::istreambuf_iterator<char>(second_file)), {});
  CHECK(first == second);
  CHECK(wilflab::partition_from_json(first) ==
        wilflab::enumerate_classes(6, wilflab::Relation::cross));
  std::filesystem::remove_all(dir);
}
