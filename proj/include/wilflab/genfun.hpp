#ifndef WILFLAB_GENFUN_HPP
#define WILFLAB_GENFUN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wilflab/embedding.hpp"
#include "wilflab/word.hpp"

namespace wilflab {

using Count = boost::multiprecision::cpp_int;

Count binomial(std::uint64_t n, std::uint64_t k);

/// Visits every composition of `norm` into `length` positive parts in
/// lexicographic order.
void for_each_composition(std::uint64_t norm, std::size_t length,
                          const std::function<void(std::span<const Letter>)>& visit);

/// Exact coefficients of a truncated series, keyed by exponent tuple:
/// (length, norm) for F, (length, norm, embeddings) for A and
/// (rows, length, norm) for minimal-cluster terms.
struct TruncatedSeries {
  std::size_t max_length = 0;
  std::uint64_t max_norm = 0;
  std::map<std::vector<std::uint64_t>, Count> coefficients;

  /// One "e1 e2 ... count" line per nonzero coefficient, sorted by exponents.
  std::string dump() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// Words w with |w| = length, ‖w‖ = norm and u ≤ w.
Count count_geq(const Word& u, std::size_t length, std::uint64_t norm);

/// |Em(u, w)| -> number of words w of the given length and norm.
std::map<std::size_t, Count> em_count_distribution(const Word& u, std::size_t length,
                                                   std::uint64_t norm);

/// |{w : |w| = n, ‖w‖ = m, T ⊆ Em(u, w)}| by stars and bars over the least
/// word containing u at every position of T. T may be empty.
Count count_U(const Word& u, std::uint64_t m, std::size_t n, std::span<const Position> t);
Count count_U(const Word& u, std::uint64_t m, std::size_t n, const EmbeddingSet& t);

/// |{w : |w| = n, ‖w‖ = m, Em(u, w) = S}| by inclusion-exclusion over the
/// supersets of S inside [n - |u| + 1].
Count count_W(const Word& u, std::uint64_t m, std::size_t n, std::span<const Position> s);
Count count_W(const Word& u, std::uint64_t m, std::size_t n, const EmbeddingSet& s);

/// (length, norm) -> multiplicity over the minimal clusters with exactly
/// `rows` rows (rows - 1 shifts, each in [1, |u| - 1]).
std::map<std::pair<std::size_t, std::uint64_t>, Count> minimal_cluster_gf_terms(const Word& u,
                                                                               std::size_t rows);

TruncatedSeries series_F(const Word& u, std::size_t max_length, std::uint64_t max_norm);
TruncatedSeries series_A(const Word& u, std::size_t max_length, std::uint64_t max_norm);
/// Minimal-cluster terms (rows, length, norm) with length and norm inside the
/// bounds. The single-row term is u itself.
TruncatedSeries series_M(const Word& u, std::size_t max_length, std::uint64_t max_norm);

/// First cell where two truncated series disagree.
struct Discrepancy {
  std::vector<std::uint64_t> exponents;
  Count left;
  Count right;
};

std::optional<Discrepancy> first_discrepancy(const TruncatedSeries& a, const TruncatedSeries& b);

/// F(u) and F(v) agree on every (L, M) with L <= max_length, M <= max_norm.
bool wilf_truncated_equal(const Word& u, const Word& v, std::size_t max_length,
                          std::uint64_t max_norm);

/// A(u) and A(v) agree on every (L, M, k) within the bounds.
bool strong_truncated_equal(const Word& u, const Word& v, std::size_t max_length,
                            std::uint64_t max_norm);

struct SeriesBounds {
  std::size_t max_length;
  std::uint64_t max_norm;
};

/// |u| + 4 and ‖u‖ + 10.
SeriesBounds default_bounds(const Word& u);

} // namespace wilflab

#endif // WILFLAB_GENFUN_HPP
