#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wilflab/embedding.hpp"
#include "wilflab/errors.hpp"

using namespace wilflab;

TEST_CASE("embeds at") {
  const Word u = parse_word("322");
  const Word w = parse_word("2343213421");
  CHECK(embeds_at(u, w, 2));
  CHECK_FALSE(embeds_at(u, w, 1));
  CHECK_FALSE(embeds_at(u, w, 9)); // runs off the end
  CHECK_FALSE(embeds_at(u, w, 0));
  CHECK(embeds_at(u, u, 1));
}

TEST_CASE("embedding set") {
  CHECK(embedding_set(parse_word("322"), parse_word("2343213421")) ==
        std::vector<Position>{2, 3, 7});
  CHECK(embedding_set(parse_word("111"), parse_word("11111")) == std::vector<Position>{1, 2, 3});
  CHECK(embedding_set(parse_word("2314"), parse_word("2314")) == std::vector<Position>{1});
  CHECK(embedding_set(parse_word("2314"), parse_word("231")).empty());
  CHECK_THROWS_AS(embedding_set(Word{}, parse_word("12")), DomainError);
}

TEST_CASE("generalized factor order") {
  CHECK(leq_factor(parse_word("322"), parse_word("2343213421")));
  CHECK_FALSE(leq_factor(parse_word("2"), parse_word("1")));
  CHECK(leq_factor(parse_word("1"), parse_word("1")));
}

TEST_CASE("shift vectors") {
  CHECK(to_shift_vector(EmbeddingSet{1, 2, 4}) == ShiftVector{1, {1, 2}});
  CHECK(to_shift_vector(EmbeddingSet{1, 6, 7}) == ShiftVector{1, {5, 1}});
  CHECK(to_shift_vector(EmbeddingSet{1}) == ShiftVector{1, {}});
  CHECK(from_shift_vector({3, {2, 2}}) == EmbeddingSet{3, 5, 7});
  CHECK_THROWS_AS(from_shift_vector({1, {0}}), DomainError);
}

TEST_CASE("embedding set validation") {
  CHECK_THROWS_AS(EmbeddingSet(std::vector<Position>{}), DomainError);
  CHECK_THROWS_AS((EmbeddingSet{2, 2}), DomainError);
  CHECK_THROWS_AS((EmbeddingSet{3, 1}), DomainError);
  CHECK_THROWS_AS((EmbeddingSet{0, 1}), DomainError);
  CHECK(parse_embedding_set("1,2,4") == EmbeddingSet{1, 2, 4});
  CHECK(parse_embedding_set("1 3") == EmbeddingSet{1, 3});
  CHECK_THROWS_AS(parse_embedding_set("1,a"), ParseError);
  CHECK_THROWS_AS(parse_embedding_set("4,2"), DomainError);
  CHECK(to_string(EmbeddingSet{1, 2, 4}) == "1,2,4");
}

TEST_CASE("shifted positions") {
  CHECK(shifted_positions(3, {1, 2, 4}) == EmbeddingSet{3, 4, 6});
  CHECK(shifted_positions(1, {1, 6, 7}) == EmbeddingSet{1, 6, 7});
  CHECK(shifted_positions(4, {1, 6, 7}) == EmbeddingSet{4, 9, 10});
  CHECK_THROWS_AS(shifted_positions(2, {2, 3}), DomainError);
}

TEST_CASE("embedding set walk order") {
  std::vector<std::string> seen;
  for_each_embedding_set(2, 2, [&](const EmbeddingSet& e) {
    seen.push_back(to_string(e));
    return true;
  }, true);
  CHECK(seen == std::vector<std::string>{"1", "1,2", "1,3", "1,2,3", "1,2,4", "1,3,4", "1,3,5"});

  std::size_t visited = 0;
  for_each_embedding_set(3, 3, [&](const EmbeddingSet&) { return ++visited < 5; });
  CHECK(visited == 5);
}

TEST_CASE("embedding properties on random words") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    oracle::Ints u(1 + rng() % 4);
    oracle::Ints w(rng() % 10);
    for (int& a : u) a = 1 + static_cast<int>(rng() % 4);
    for (int& a : w) a = 1 + static_cast<int>(rng() % 4);
    const auto em = embedding_set(oracle::word(u), oracle::word(w));
    CHECK(em == oracle::embeddings(u, w));
    for (Position j : em) CHECK(j + u.size() - 1 <= w.size());

    // raising letters of w keeps every embedding
    oracle::Ints higher = w;
    for (int& a : higher) a += static_cast<int>(rng() % 2);
    const auto em_higher = embedding_set(oracle::word(u), oracle::word(higher));
    for (Position j : em) {
      CHECK(std::find(em_higher.begin(), em_higher.end(), j) != em_higher.end());
    }

    // shift-vector round trip
    std::vector<Position> positions;
    Position p = 1 + rng() % 3;
    for (std::size_t k = 0; k < 1 + rng() % 5; ++k) {
      positions.push_back(p);
      p += 1 + rng() % 4;
    }
    const EmbeddingSet e(positions);
    CHECK(from_shift_vector(to_shift_vector(e)) == e);
  }
}
