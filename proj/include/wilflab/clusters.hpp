#ifndef WILFLAB_CLUSTERS_HPP
#define WILFLAB_CLUSTERS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wilflab/embedding.hpp"
#include "wilflab/word.hpp"

namespace wilflab {

/// Copies of `base` stacked at increasing column offsets. Rows are never
/// materialized; columns are folded on demand.
class PreCluster {
public:
  PreCluster(Word base, std::vector<std::size_t> offsets, std::size_t width, bool extended);

  const Word& base() const noexcept { return base_; }
  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::size_t rows() const noexcept { return offsets_.size(); }
  std::size_t width() const noexcept { return width_; }
  bool extended() const noexcept { return extended_; }

  /// Largest letter in 1-indexed column `col`, or 1 when no row covers it.
  Letter column_max(std::size_t col) const;
  Word fold() const;

  /// Row-shifted tableau followed by a rule and the folded word.
  std::string render() const;

private:
  Word base_;
  std::vector<std::size_t> offsets_;
  std::size_t width_;
  bool extended_;
};

/// Requires min E = 1 and consecutive gaps in [1, |u| - 1].
PreCluster pre_cluster(const Word& u, const EmbeddingSet& e);

/// m(u, E): column-wise maximum of the pre-cluster.
Word minimal_cluster(const Word& u, const EmbeddingSet& e);

/// Minimum-height word of length m with Em(u, w) = E; overlap not required.
Word extended_minimal_cluster(const Permutation& u, const EmbeddingSet& e, std::size_t m);

/// Least word of the given length (letterwise) that contains u at every
/// position of `positions`. Positions need not start at 1 and may be empty.
Word dominating_floor(const Word& u, std::span<const Position> positions, std::size_t length);

/// {i + j - 1 : i in E1, j in E2}.
EmbeddingSet compose_embeddings(const EmbeddingSet& e1, const EmbeddingSet& e2);

/// Number of rows in which letter i of u is covered by a larger letter:
/// |s̄_i ∩ (∪_{j>i} s̄_j)| with s = u^{-1}.
std::size_t blocked_count(const Permutation& u, const EmbeddingSet& e, Letter i);

/// True iff E starts at 1 and every gap lies in [1, length - 1].
bool is_overlapping(const EmbeddingSet& e, std::size_t length);

} // namespace wilflab

#endif // WILFLAB_CLUSTERS_HPP
