#ifndef WILFLAB_EQUIVALENCE_HPP
#define WILFLAB_EQUIVALENCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wilflab/embedding.hpp"
#include "wilflab/word.hpp"

namespace wilflab {

/// Consecutive differences Δ_i(u^{-1}) for i in [2, n-1]: the gaps between
/// the sorted positions of the letters >= i in u. Δ_1 is always all ones and
/// is not stored.
class DifferenceProfile {
public:
  DifferenceProfile() = default;
  DifferenceProfile(std::size_t n, std::vector<std::vector<std::size_t>> deltas);

  std::size_t n() const noexcept { return n_; }
  /// Δ_i for i in [2, n-1]; has n - i entries.
  std::span<const std::size_t> delta(std::size_t i) const;

  /// Compact byte key, equal iff the profiles are equal.
  std::string fingerprint() const;

  friend bool operator==(const DifferenceProfile&, const DifferenceProfile&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> deltas_; // deltas_[i - 2]
};

/// i⁺(u): distances from letter i to every larger letter.
DistanceMultiset plus_multiset(const Permutation& u, Letter i);

bool cross_equivalent(const Permutation& u, const Permutation& v);

DifferenceProfile difference_profile(const Permutation& u);

/// Super-strong Wilf equivalence, decided by comparing difference profiles.
bool ss_equivalent(const Permutation& u, const Permutation& v);

/// [u]_ss, sorted ascending.
std::vector<Permutation> ss_class(const Permutation& u);

/// [u]_+, sorted ascending.
std::vector<Permutation> cross_class(const Permutation& u);

/// Exchanges the letters n-1 and n.
Permutation adjacent_top_swap(const Permutation& u);

/// Same alphabet and same multiplicity of every letter.
bool rearrangements(const Word& a, const Word& b);

/// m(u, E) and m(v, E) are rearrangements of one another.
bool mcrt_check(const Word& u, const Word& v, const EmbeddingSet& e);

struct Verdict {
  enum class Kind { equivalent_up_to_bound, refuted };

  Kind kind = Kind::equivalent_up_to_bound;
  std::optional<EmbeddingSet> witness;

  bool refuted() const noexcept { return kind == Kind::refuted; }
};

std::string_view to_string(Verdict::Kind kind);

/// Tries every E starting at 1 with at most `max_shifts` shifts in
/// [1, |u| - 1], shortest first and lexicographic by shift vector, and
/// returns the first E whose minimal clusters are not rearrangements.
Verdict mcrt_witness_search(const Word& u, const Word& v, std::size_t max_shifts);

enum class ReversalClassKind { identity_class, near_identity_class, neither };

std::string_view to_string(ReversalClassKind kind);

/// identity_class: every Δ_i all ones. near_identity_class: Δ_{n-1} = (2)
/// and every other Δ_i all ones. u ~ss reversal(u) exactly when the kind is
/// not `neither`.
ReversalClassKind reversal_class_kind(const Permutation& u);

/// Above this size ss_class switches from filtering S_n to the cross tree.
inline constexpr std::size_t brute_class_limit = 10;

} // namespace wilflab

#endif // WILFLAB_EQUIVALENCE_HPP
