#ifndef WILFLAB_EMBEDDING_HPP
#define WILFLAB_EMBEDDING_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wilflab/word.hpp"

namespace wilflab {

/// Gap encoding of an embedding set: j_k = start + e_1 + ... + e_k.
struct ShiftVector {
  Position start = 1;
  std::vector<std::size_t> shifts;

  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
};

/// A nonempty, strictly increasing set of positive positions.
class EmbeddingSet {
public:
  EmbeddingSet(std::initializer_list<Position> positions);
  explicit EmbeddingSet(std::vector<Position> positions);

  static EmbeddingSet from_shift_vector(const ShiftVector& v);
  static EmbeddingSet from_shifts(std::span<const std::size_t> shifts);

  std::size_t size() const noexcept { return positions_.size(); }
  Position min() const noexcept { return positions_.front(); }
  Position max() const noexcept { return positions_.back(); }
  bool contains(Position j) const;
  std::span<const Position> positions() const noexcept { return positions_; }
  ShiftVector to_shift_vector() const;

  auto begin() const noexcept { return positions_.begin(); }
  auto end() const noexcept { return positions_.end(); }

  friend bool operator==(const EmbeddingSet&, const EmbeddingSet&) = default;
  friend auto operator<=>(const EmbeddingSet&, const EmbeddingSet&) = default;

private:
  std::vector<Position> positions_;
};

/// True iff u_i <= w_{j+i-1} for every i; false when u does not fit at j.
bool embeds_at(const Word& u, const Word& w, Position j);

/// Em(u, w). Empty iff u is not below w in the generalized factor order.
std::vector<Position> embedding_set(const Word& u, const Word& w);

bool leq_factor(const Word& u, const Word& w);

ShiftVector to_shift_vector(const EmbeddingSet& e);
EmbeddingSet from_shift_vector(const ShiftVector& v);

/// (j - 1) + E for an embedding set starting at 1.
EmbeddingSet shifted_positions(Position j, const EmbeddingSet& e);

/// Calls `visit` for every shift vector of exactly `shifts` entries in
/// [1, max_gap], lexicographically. Stops early when `visit` returns false;
/// the return value reports whether the walk ran to completion.
bool for_each_shift_vector(std::size_t shifts, std::size_t max_gap,
                           const std::function<bool(std::span<const std::size_t>)>& visit);

/// Calls `visit` for every embedding set starting at 1 with at most
/// `max_shifts` shifts, each shift in [1, max_gap]. Sets are visited shortest
/// first, lexicographically by shift vector within a length. Includes {1}
/// when `include_singleton` is set. Stops early when `visit` returns false.
void for_each_embedding_set(std::size_t max_shifts, std::size_t max_gap,
                            const std::function<bool(const EmbeddingSet&)>& visit,
                            bool include_singleton = false);

std::string to_string(const EmbeddingSet& e);
std::string positions_to_string(std::span<const Position> positions);

/// Parses "1,2,4" (spaces also accepted); must be sorted ascending.
EmbeddingSet parse_embedding_set(std::string_view text);

} // namespace wilflab

#endif // WILFLAB_EMBEDDING_HPP
