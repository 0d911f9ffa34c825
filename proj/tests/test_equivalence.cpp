#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wilflab/clusters.hpp"
#include "wilflab/equivalence.hpp"
#include "wilflab/errors.hpp"

using namespace wilflab;

namespace {

std::vector<std::vector<std::size_t>> profile_vectors(const DifferenceProfile& d) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 2; i + 1 <= d.n(); ++i) {
    out.emplace_back(d.delta(i).begin(), d.delta(i).end());
  }
  return out;
}

std::vector<std::vector<std::size_t>> as_sizes(const std::vector<oracle::Ints>& xs) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& x : xs) out.emplace_back(x.begin(), x.end());
  return out;
}

std::vector<std::string> strings(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

} // namespace

TEST_CASE("plus multisets") {
  const Permutation u = parse_permutation("21365874");
  CHECK(plus_multiset(u, 7) == DistanceMultiset({1}));
  CHECK(plus_multiset(u, 6) == DistanceMultiset({2, 3}));
  CHECK(plus_multiset(u, 5) == DistanceMultiset({1, 1, 2}));
  CHECK(plus_multiset(u, 4) == DistanceMultiset({1, 2, 3, 4}));
  CHECK(plus_multiset(u, 3) == DistanceMultiset({1, 2, 3, 4, 5}));
  CHECK(plus_multiset(u, 2) == DistanceMultiset({2, 3, 4, 5, 6, 7}));
  CHECK(plus_multiset(u, 1) == DistanceMultiset({1, 1, 2, 3, 4, 5, 6}));
  CHECK_THROWS_AS(plus_multiset(u, 8), DomainError);
  CHECK_THROWS_AS(plus_multiset(u, 0), DomainError);
}

TEST_CASE("difference profile") {
  const auto d = difference_profile(parse_permutation("21365874"));
  CHECK(d.n() == 8);
  CHECK(profile_vectors(d) == std::vector<std::vector<std::size_t>>{
                                  {2, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 1, 1, 1},
                                  {1, 1, 1}, {2, 1}, {1}});
  CHECK(difference_profile(parse_permutation("21657843")) == d);
  const auto w = difference_profile(parse_permutation("21478563"));
  CHECK(w.delta(6)[0] == 1);
  CHECK(w.delta(6)[1] == 2);
  CHECK(difference_profile(parse_permutation("21")).n() == 2);
  CHECK_THROWS_AS(d.delta(1), std::out_of_range);
  CHECK_THROWS_AS(d.delta(8), std::out_of_range);
}

TEST_CASE("ss equivalence on the small cases") {
  CHECK(ss_equivalent(parse_permutation("213"), parse_permutation("312")));
  CHECK(ss_equivalent(parse_permutation("123"), parse_permutation("321")));
  CHECK_FALSE(ss_equivalent(parse_permutation("213"), parse_permutation("123")));
  CHECK(strings(ss_class(parse_permutation("123"))) ==
        std::vector<std::string>{"123", "132", "231", "321"});
  CHECK(strings(ss_class(parse_permutation("1"))) == std::vector<std::string>{"1"});
  CHECK_THROWS_AS(ss_equivalent(parse_permutation("12"), parse_permutation("123")), DomainError);
  CHECK_THROWS_AS(cross_equivalent(parse_permutation("12"), parse_permutation("123")),
                  DomainError);
}

TEST_CASE("adjacent top swap") {
  CHECK(adjacent_top_swap(parse_permutation("2314")) == parse_permutation("2413"));
  CHECK(adjacent_top_swap(parse_permutation("21")) == parse_permutation("12"));
  CHECK_THROWS_AS(adjacent_top_swap(parse_permutation("1")), DomainError);
}

TEST_CASE("rearrangements") {
  CHECK(rearrangements(parse_word("2331"), parse_word("3312")));
  CHECK(rearrangements(parse_word("2331"), parse_word("3321")));
  CHECK_FALSE(rearrangements(parse_word("2331"), parse_word("3322")));
  CHECK(rearrangements(Word{}, Word{}));
}

TEST_CASE("mcrt check and witness search") {
  const Word u = parse_word("2351647");
  const Word v = parse_word("6471532");
  CHECK(cross_equivalent(parse_permutation("2351647"), parse_permutation("6471532")));
  CHECK_FALSE(mcrt_check(u, v, {1, 2, 5}));
  const Verdict verdict = mcrt_witness_search(u, v, 2);
  CHECK(verdict.refuted());
  REQUIRE(verdict.witness);
  CHECK(*verdict.witness == EmbeddingSet{1, 2, 4});
  CHECK(to_string(verdict.kind) == "refuted");

  const Verdict same = mcrt_witness_search(parse_word("213"), parse_word("312"), 3);
  CHECK_FALSE(same.refuted());
  CHECK_FALSE(same.witness);

  // {1} already separates words of different weight
  const Verdict weight = mcrt_witness_search(parse_word("213"), parse_word("313"), 2);
  REQUIRE(weight.witness);
  CHECK(*weight.witness == EmbeddingSet{1});

  CHECK_THROWS_AS(mcrt_witness_search(u, v, 0), DomainError);
  CHECK_THROWS_AS(mcrt_check(u, parse_word("12"), {1}), DomainError);
}

TEST_CASE("reversal class kind") {
  CHECK(reversal_class_kind(parse_permutation("1234")) == ReversalClassKind::identity_class);
  CHECK(reversal_class_kind(parse_permutation("1324")) == ReversalClassKind::near_identity_class);
  CHECK(reversal_class_kind(parse_permutation("2134")) == ReversalClassKind::neither);
  CHECK(to_string(ReversalClassKind::near_identity_class) == "near-identity-class");
}

TEST_CASE("profiles, plus sets and the Δ test against the oracles") {
  for (int n = 1; n <= 6; ++n) {
    const auto perms = oracle::all_permutations(n);
    for (const auto& xs : perms) {
      const Permutation u = oracle::perm(xs);
      CHECK(profile_vectors(difference_profile(u)) == as_sizes(oracle::deltas(xs)));
      const auto plus = oracle::plus_sets(xs);
      for (int i = 1; i < n; ++i) {
        const auto d = plus_multiset(u, i);
        CHECK(std::vector<std::size_t>(d.values().begin(), d.values().end()) ==
              std::vector<std::size_t>(plus[i - 1].begin(), plus[i - 1].end()));
      }
      // the top swap never changes the class
      if (n >= 2) CHECK(ss_equivalent(u, adjacent_top_swap(u)));
    }
  }
}

TEST_CASE("Δ test agrees with the MCRT oracle on S_5") {
  const auto perms = oracle::all_permutations(5);
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = a + 1; b < perms.size(); ++b) {
      if (oracle::plus_sets(perms[a]) != oracle::plus_sets(perms[b])) continue;
      const bool ss = ss_equivalent(oracle::perm(perms[a]), oracle::perm(perms[b]));
      CHECK(ss == oracle::mcrt_agrees(perms[a], perms[b], 3));
    }
  }
}

TEST_CASE("ss classes are unions of profile matches") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto perms = oracle::all_permutations(n);
    const auto& xs = perms[rng() % perms.size()];
    std::vector<std::string> expected;
    for (const auto& ys : perms) {
      if (oracle::deltas(ys) == oracle::deltas(xs)) expected.push_back(oracle::str(ys));
    }
    const auto cls = strings(ss_class(oracle::perm(xs)));
    CHECK(cls == expected);
    CHECK(oracle::is_power_of_two(cls.size()));

    std::vector<std::string> cross;
    for (const auto& ys : perms) {
      if (oracle::plus_sets(ys) == oracle::plus_sets(xs)) cross.push_back(oracle::str(ys));
    }
    CHECK(strings(cross_class(oracle::perm(xs))) == cross);
  }
}

TEST_CASE("reversal symmetry matches the kind") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& xs : oracle::all_permutations(n)) {
      const Permutation u = oracle::perm(xs);
      const bool symmetric = oracle::deltas(xs) == oracle::deltas(oracle::reversed(xs));
      CHECK(symmetric == (reversal_class_kind(u) != ReversalClassKind::neither));
      CHECK(cross_equivalent(u, reversal(u)));
    }
  }
}

TEST_CASE("cross and ss classes of 21365874") {
  const auto cls = cross_class(parse_permutation("21365874"));
  CHECK(cls.size() == 32);
  CHECK(std::is_sorted(cls.begin(), cls.end()));
  const auto ss = ss_class(parse_permutation("21365874"));
  CHECK(ss.size() == 8);
  for (const auto& p : ss) CHECK(std::binary_search(cls.begin(), cls.end(), p));
}
