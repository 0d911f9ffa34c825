#include "wilflab/clusters.hpp"

#include <algorithm>
#include <set>

#include "wilflab/errors.hpp"

namespace wilflab {

PreCluster::PreCluster(Word base, std::vector<std::size_t> offsets, std::size_t width,
                       bool extended)
    : base_(std::move(base)), offsets_(std::move(offsets)), width_(width), extended_(extended) {}

Letter PreCluster::column_max(std::size_t col) const {
  Letter best = 1;
  for (std::size_t off : offsets_) {
    if (col > off && col <= off + base_.size()) {
      best = std::max(best, base_[col - off - 1]);
    }
  }
  return best;
}

Word PreCluster::fold() const {
  std::vector<Letter> letters(width_, 1);
  for (std::size_t off : offsets_) {
    for (std::size_t i = 0; i < base_.size(); ++i) {
      letters[off + i] = std::max(letters[off + i], base_[i]);
    }
  }
  return Word(std::move(letters));
}

std::string PreCluster::render() const {
  std::size_t cell = 1;
  for (Letter a : base_) cell = std::max(cell, std::to_string(a).size());
  auto pad = [cell](std::string s) {
    return std::string(cell - s.size(), ' ') + s;
  };

  std::string out;
  for (std::size_t off : offsets_) {
    std::string line;
    for (std::size_t c = 0; c < off; ++c) line += std::string(cell + 1, ' ');
    for (std::size_t i = 0; i < base_.size(); ++i) {
      if (i > 0) line += ' ';
      line += pad(std::to_string(base_[i]));
    }
    out += line + '\n';
  }
  out += std::string(width_ * (cell + 1) - 1, '-') + '\n';
  Word folded = fold();
  for (std::size_t c = 0; c < folded.size(); ++c) {
    if (c > 0) out += ' ';
    out += pad(std::to_string(folded[c]));
  }
  return out + '\n';
}

bool is_overlapping(const EmbeddingSet& e, std::size_t length) {
  if (e.min() != 1) return false;
  for (std::size_t gap : e.to_shift_vector().shifts) {
    if (gap < 1 || gap + 1 > length) return false;
  }
  return true;
}

PreCluster pre_cluster(const Word& u, const EmbeddingSet& e) {
  if (u.empty()) {
    throw DomainError("pre-cluster of the empty word");
  }
  if (e.min() != 1) {
    throw DomainError("pre-cluster embedding set must start at 1, got " + to_string(e));
  }
  if (!is_overlapping(e, u.size())) {
    throw DomainError("overlap violation: every gap of " + to_string(e) + " must lie in [1, " +
                      std::to_string(u.size() - 1) + "]");
  }
  std::vector<std::size_t> offsets;
  for (Position j : e) offsets.push_back(j - 1);
  return PreCluster(u, std::move(offsets), e.max() - 1 + u.size(), false);
}

Word minimal_cluster(const Word& u, const EmbeddingSet& e) { return pre_cluster(u, e).fold(); }

Word dominating_floor(const Word& u, std::span<const Position> positions, std::size_t length) {
  std::vector<Letter> letters(length, 1);
  for (Position j : positions) {
    if (j == 0 || j + u.size() - 1 > length) {
      throw DomainError("position " + std::to_string(j) + " leaves no room for a copy of " +
                        to_string(u) + " in length " + std::to_string(length));
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      letters[j - 1 + i] = std::max(letters[j - 1 + i], u[i]);
    }
  }
  return Word(std::move(letters));
}

Word extended_minimal_cluster(const Permutation& u, const EmbeddingSet& e, std::size_t m) {
  if (e.min() != 1) {
    throw DomainError("extended minimal cluster needs an embedding set starting at 1");
  }
  if (m < e.max() + u.n() - 1) {
    throw DomainError("no extended minimal cluster of length " + std::to_string(m) + " for " +
                      to_string(e) + ": need length >= " + std::to_string(e.max() + u.n() - 1));
  }
  return dominating_floor(u.word(), e.positions(), m);
}

EmbeddingSet compose_embeddings(const EmbeddingSet& e1, const EmbeddingSet& e2) {
  if (e1.min() != 1 || e2.min() != 1) {
    throw DomainError("composed embedding sets must start at 1");
  }
  std::set<Position> out;
  for (Position i : e1) {
    for (Position j : e2) out.insert(i + j - 1);
  }
  return EmbeddingSet(std::vector<Position>(out.begin(), out.end()));
}

std::size_t blocked_count(const Permutation& u, const EmbeddingSet& e, Letter i) {
  if (i == 0 || i > u.n()) {
    throw DomainError("letter " + std::to_string(i) + " is not in [1, " + std::to_string(u.n()) +
                      "]");
  }
  if (!is_overlapping(e, u.n())) {
    throw DomainError("overlap violation for embedding set " + to_string(e));
  }
  const Permutation s = inverse(u);
  std::set<Position> larger;
  for (Letter j = i + 1; j <= u.n(); ++j) {
    for (Position p : shifted_positions(s.at(j), e)) larger.insert(p);
  }
  std::size_t blocked = 0;
  for (Position p : shifted_positions(s.at(i), e)) {
    blocked += larger.count(p);
  }
  return blocked;
}

} // namespace wilflab
