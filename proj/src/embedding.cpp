#include "wilflab/embedding.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "wilflab/errors.hpp"

namespace wilflab {

EmbeddingSet::EmbeddingSet(std::initializer_list<Position> positions)
    : EmbeddingSet(std::vector<Position>(positions)) {}

EmbeddingSet::EmbeddingSet(std::vector<Position> positions) : positions_(std::move(positions)) {
  if (positions_.empty()) {
    throw DomainError("embedding set must be nonempty");
  }
  if (positions_.front() == 0) {
    throw DomainError("embedding positions are 1-indexed");
  }
  for (std::size_t k = 1; k < positions_.size(); ++k) {
    if (positions_[k] <= positions_[k - 1]) {
      throw DomainError("embedding set must be strictly increasing");
    }
  }
}

EmbeddingSet EmbeddingSet::from_shift_vector(const ShiftVector& v) {
  if (v.start == 0) {
    throw DomainError("embedding positions are 1-indexed");
  }
  std::vector<Position> positions{v.start};
  for (std::size_t e : v.shifts) {
    if (e == 0) {
      throw DomainError("shift vector entries must be positive");
    }
    positions.push_back(positions.back() + e);
  }
  return EmbeddingSet(std::move(positions));
}

EmbeddingSet EmbeddingSet::from_shifts(std::span<const std::size_t> shifts) {
  return from_shift_vector({1, {shifts.begin(), shifts.end()}});
}

bool EmbeddingSet::contains(Position j) const {
  return std::binary_search(positions_.begin(), positions_.end(), j);
}

ShiftVector EmbeddingSet::to_shift_vector() const {
  ShiftVector v{positions_.front(), {}};
  for (std::size_t k = 1; k < positions_.size(); ++k) {
    v.shifts.push_back(positions_[k] - positions_[k - 1]);
  }
  return v;
}

bool embeds_at(const Word& u, const Word& w, Position j) {
  if (j == 0 || j + u.size() - 1 > w.size()) {
    return false;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > w[j - 1 + i]) return false;
  }
  return true;
}

std::vector<Position> embedding_set(const Word& u, const Word& w) {
  if (u.empty()) {
    throw DomainError("the empty word has no embedding set");
  }
  std::vector<Position> result;
  if (u.size() > w.size()) {
    return result;
  }
  for (Position j = 1; j + u.size() - 1 <= w.size(); ++j) {
    if (embeds_at(u, w, j)) result.push_back(j);
  }
  return result;
}

bool leq_factor(const Word& u, const Word& w) { return !embedding_set(u, w).empty(); }

ShiftVector to_shift_vector(const EmbeddingSet& e) { return e.to_shift_vector(); }

EmbeddingSet from_shift_vector(const ShiftVector& v) { return EmbeddingSet::from_shift_vector(v); }

EmbeddingSet shifted_positions(Position j, const EmbeddingSet& e) {
  if (j == 0) {
    throw DomainError("shift origin must be a positive position");
  }
  if (e.min() != 1) {
    throw DomainError("shifted positions need an embedding set starting at 1");
  }
  std::vector<Position> out(e.begin(), e.end());
  for (Position& p : out) p += j - 1;
  return EmbeddingSet(std::move(out));
}

bool for_each_shift_vector(std::size_t shifts, std::size_t max_gap,
                           const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (shifts == 0) {
    return visit({});
  }
  if (max_gap == 0) {
    return true;
  }
  std::vector<std::size_t> e(shifts, 1);
  while (true) {
    if (!visit(e)) return false;
    // odometer increment, last coordinate fastest
    std::size_t k = shifts;
    while (k > 0 && e[k - 1] == max_gap) {
      e[k - 1] = 1;
      --k;
    }
    if (k == 0) return true;
    ++e[k - 1];
  }
}

void for_each_embedding_set(std::size_t max_shifts, std::size_t max_gap,
                            const std::function<bool(const EmbeddingSet&)>& visit,
                            bool include_singleton) {
  if (include_singleton && !visit(EmbeddingSet{1})) {
    return;
  }
  for (std::size_t r = 1; r <= max_shifts; ++r) {
    const bool finished = for_each_shift_vector(r, max_gap, [&](std::span<const std::size_t> e) {
      return visit(EmbeddingSet::from_shifts(e));
    });
    if (!finished) return;
  }
}

std::string positions_to_string(std::span<const Position> positions) {
  std::string out;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(positions[k]);
  }
  return out;
}

std::string to_string(const EmbeddingSet& e) { return positions_to_string(e.positions()); }

EmbeddingSet parse_embedding_set(std::string_view text) {
  std::vector<Position> positions;
  std::size_t k = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (k < text.size()) {
    if (is_sep(text[k])) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string_view token = text.substr(k, end - k);
    Position value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("invalid position '" + std::string(token) + "' in embedding set");
    }
    positions.push_back(value);
    k = end;
  }
  if (positions.empty()) {
    throw ParseError("empty embedding set");
  }
  return EmbeddingSet(std::move(positions));
}

} // namespace wilflab
