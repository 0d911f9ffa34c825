#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "wilflab/equivalence.hpp"
#include "wilflab/errors.hpp"
#include "wilflab/tree.hpp"

using namespace wilflab;

namespace {

std::vector<std::string> strings(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

} // namespace

TEST_CASE("partial words") {
  const PartialWord x({2, 1, 3, 0, 5, 0, 0, 4});
  CHECK(x.filled() == 5);
  CHECK(x.blank_positions() == std::vector<Position>{4, 6, 7});
  CHECK(to_string(x) == "213*5**4");
  CHECK(to_string(configuration(x)) == "*o**");
  CHECK(to_string(configuration(PartialWord::all_blank(3))) == "***");
  CHECK(to_string(configuration(PartialWord({2, 1, 3, 6, 5, 0, 7, 4}))) == "*");
  CHECK(x.with(4, 6) == PartialWord({2, 1, 3, 6, 5, 0, 0, 4}));
  CHECK(PartialWord({2, 1, 3}).to_permutation() == parse_permutation("213"));
  CHECK_THROWS_AS(PartialWord({2, 0, 3}), DomainError);
  CHECK_THROWS_AS(PartialWord({1, 1, 0}), DomainError);
  CHECK_THROWS_AS(configuration(PartialWord({1, 2})), DomainError);
}

TEST_CASE("tree of 21365874") {
  const CrossTree tree = label_levels(build_tree(parse_permutation("21365874")));
  CHECK(tree.levels.size() == 9);
  CHECK(tree.leaves().size() == 32);
  CHECK(tree.branching_levels() == 5);
  CHECK(tree.k == 3);
  CHECK(tree.l == 2);
  CHECK(tree.labels[0] == 1);
  CHECK(tree.labels[2] == 0);
  CHECK(tree.labels[3] == 0);
  CHECK(tree.labels[4] == 1);
  CHECK(tree.labels[6] == 0);
  CHECK_FALSE(tree.labels[1]);

  // u sits on the path traced by the configuration table
  const std::vector<std::string> path{"********", "*1******", "21******", "213*****",
                                      "213****4", "213*5**4", "21365**4", "21365*74"};
  std::size_t idx = 0;
  const auto leaves = tree.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i] == parse_permutation("21365874")) idx = i;
  }
  std::optional<std::size_t> node = idx;
  for (std::size_t level = 8; level-- > 0;) {
    node = tree.levels[level + 1][*node].parent;
    REQUIRE(node);
    CHECK(to_string(tree.levels[level][*node].word) == path[level]);
  }

  const ClassPartition p = partition_leaves(tree);
  CHECK(p.relation == Relation::ss);
  CHECK(p.classes.size() == 4);
  for (const auto& c : p.classes) CHECK(c.members.size() == 8);
  CHECK(strings(p.classes[0].members) ==
        std::vector<std::string>{"21346578", "21346587", "21365784", "21365874", "21465783",
                                 "21465873", "21657843", "21658743"});
  CHECK(strings(p.classes[1].members) ==
        std::vector<std::string>{"21347856", "21348756", "21378564", "21387564", "21478563",
                                 "21487563", "21785643", "21875643"});
}

TEST_CASE("tree leaves match brute-force cross classes") {
  for (int n = 1; n <= 6; ++n) {
    const auto perms = oracle::all_permutations(n);
    for (const auto& xs : perms) {
      const CrossTree tree = label_levels(build_tree(oracle::perm(xs)));
      std::vector<std::string> expected;
      for (const auto& ys : perms) {
        if (oracle::plus_sets(ys) == oracle::plus_sets(xs)) expected.push_back(oracle::str(ys));
      }
      auto leaves = strings(tree.leaves());
      std::sort(leaves.begin(), leaves.end());
      CHECK(leaves == expected);
      CHECK(leaves.size() == (std::size_t{1} << (tree.k + tree.l)));

      const ClassPartition p = partition_leaves(tree);
      CHECK(p.classes.size() == (std::size_t{1} << tree.l));
      for (const auto& c : p.classes) {
        CHECK(c.members.size() == (std::size_t{1} << tree.k));
        for (const auto& m : c.members) {
          CHECK(oracle::deltas(oracle::ints(m)) == oracle::deltas(oracle::ints(c.representative)));
        }
      }
    }
  }
}

TEST_CASE("tree export") {
  const CrossTree tree = build_tree(parse_permutation("213"));
  const std::string dot = export_tree(tree, TreeFormat::dot);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("label=\"0\"") != std::string::npos);
  CHECK(dot.find("color=green") != std::string::npos);

  const auto j = nlohmann::json::parse(export_tree(tree, TreeFormat::json));
  CHECK(j["n"] == 3);
  CHECK(j["u"] == "213");
  CHECK(j["levels"].size() == 4);
  CHECK(j["k"] == 1);
  CHECK(j["l"] == 0);
  CHECK(j["classes"].size() == 1);

  CHECK(parse_tree_format("dot") == TreeFormat::dot);
  CHECK_THROWS_AS(parse_tree_format("png"), ParseError);
}
