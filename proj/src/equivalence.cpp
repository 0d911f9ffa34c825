#include "wilflab/equivalence.hpp"

#include <algorithm>
#include <numeric>

#include "wilflab/clusters.hpp"
#include "wilflab/errors.hpp"
#include "wilflab/tree.hpp"

namespace wilflab {

namespace {

void require_same_size(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) {
    throw DomainError("size mismatch: " + to_string(u) + " has " + std::to_string(u.n()) +
                      " letters, " + to_string(v) + " has " + std::to_string(v.n()));
  }
}

bool all_ones(std::span<const std::size_t> xs) {
  return std::all_of(xs.begin(), xs.end(), [](std::size_t x) { return x == 1; });
}

} // namespace

DifferenceProfile::DifferenceProfile(std::size_t n, std::vector<std::vector<std::size_t>> deltas)
    : n_(n), deltas_(std::move(deltas)) {
  const std::size_t expected = n_ >= 3 ? n_ - 2 : 0;
  if (deltas_.size() != expected) {
    throw DomainError("difference profile of size " + std::to_string(n_) + " needs " +
                      std::to_string(expected) + " vectors");
  }
  for (std::size_t i = 2; i + 1 <= n_; ++i) {
    if (deltas_[i - 2].size() != n_ - i) {
      throw DomainError("Δ_" + std::to_string(i) + " must have " + std::to_string(n_ - i) +
                        " entries");
    }
  }
}

std::span<const std::size_t> DifferenceProfile::delta(std::size_t i) const {
  if (i < 2 || i + 1 > n_) {
    throw std::out_of_range("Δ index outside [2, n-1]");
  }
  return deltas_[i - 2];
}

std::string DifferenceProfile::fingerprint() const {
  std::string key;
  for (const auto& d : deltas_) {
    for (std::size_t x : d) {
      // gaps are < n; two bytes cover every practical n
      key.push_back(static_cast<char>(x & 0xff));
      key.push_back(static_cast<char>(x >> 8));
    }
  }
  return key;
}

DistanceMultiset plus_multiset(const Permutation& u, Letter i) {
  if (i == 0 || i >= u.n()) {
    throw DomainError("i⁺ needs a letter in [1, " + std::to_string(u.n() - 1) + "], got " +
                      std::to_string(i));
  }
  const Permutation s = inverse(u);
  const Position here = s.at(i);
  std::vector<std::size_t> distances;
  for (Letter j = i + 1; j <= u.n(); ++j) {
    const Position there = s.at(j);
    distances.push_back(here > there ? here - there : there - here);
  }
  return DistanceMultiset(std::move(distances));
}

bool cross_equivalent(const Permutation& u, const Permutation& v) {
  require_same_size(u, v);
  for (Letter i = 1; i < u.n(); ++i) {
    if (plus_multiset(u, i) != plus_multiset(v, i)) return false;
  }
  return true;
}

DifferenceProfile difference_profile(const Permutation& u) {
  const std::size_t n = u.n();
  if (n < 3) {
    return DifferenceProfile(n, {});
  }
  const Permutation s = inverse(u);
  std::vector<std::vector<std::size_t>> deltas(n - 2);
  std::vector<Position> positions{s.at(n)};
  for (std::size_t i = n - 1; i >= 2; --i) {
    const Position p = s.at(static_cast<Letter>(i));
    positions.insert(std::upper_bound(positions.begin(), positions.end(), p), p);
    auto& d = deltas[i - 2];
    for (std::size_t k = 1; k < positions.size(); ++k) {
      d.push_back(positions[k] - positions[k - 1]);
    }
  }
  return DifferenceProfile(n, std::move(deltas));
}

bool ss_equivalent(const Permutation& u, const Permutation& v) {
  require_same_size(u, v);
  return difference_profile(u) == difference_profile(v);
}

std::vector<Permutation> ss_class(const Permutation& u) {
  if (u.n() > brute_class_limit) {
    const CrossTree tree = label_levels(build_tree(u));
    for (const auto& c : partition_leaves(tree).classes) {
      if (std::binary_search(c.members.begin(), c.members.end(), u)) {
        return c.members;
      }
    }
    throw std::logic_error("cross tree lost its own leaf");
  }
  const DifferenceProfile target = difference_profile(u);
  std::vector<Letter> letters(u.n());
  std::iota(letters.begin(), letters.end(), Letter{1});
  std::vector<Permutation> members;
  do {
    Permutation v(letters);
    if (difference_profile(v) == target) members.push_back(std::move(v));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return members;
}

std::vector<Permutation> cross_class(const Permutation& u) {
  std::vector<Permutation> leaves = build_tree(u).leaves();
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

Permutation adjacent_top_swap(const Permutation& u) {
  const std::size_t n = u.n();
  if (n < 2) {
    throw DomainError("swapping n-1 and n needs n >= 2");
  }
  std::vector<Letter> letters(u.word().begin(), u.word().end());
  for (Letter& a : letters) {
    if (a == n) {
      a = static_cast<Letter>(n - 1);
    } else if (a == n - 1) {
      a = static_cast<Letter>(n);
    }
  }
  return Permutation(std::move(letters));
}

bool rearrangements(const Word& a, const Word& b) {
  return letter_stats(a).multiplicities == letter_stats(b).multiplicities;
}

bool mcrt_check(const Word& u, const Word& v, const EmbeddingSet& e) {
  if (u.size() != v.size()) {
    throw DomainError("size mismatch: " + to_string(u) + " vs " + to_string(v));
  }
  return rearrangements(minimal_cluster(u, e), minimal_cluster(v, e));
}

std::string_view to_string(Verdict::Kind kind) {
  return kind == Verdict::Kind::refuted ? "refuted" : "equivalent-up-to-bound";
}

Verdict mcrt_witness_search(const Word& u, const Word& v, std::size_t max_shifts) {
  if (u.size() != v.size()) {
    throw DomainError("size mismatch: " + to_string(u) + " vs " + to_string(v));
  }
  if (max_shifts == 0) {
    throw DomainError("witness search needs max_shifts >= 1");
  }
  Verdict verdict;
  if (u.empty()) {
    return verdict;
  }
  for_each_embedding_set(
      max_shifts, u.size() - 1,
      [&](const EmbeddingSet& e) {
        if (mcrt_check(u, v, e)) return true;
        verdict = {Verdict::Kind::refuted, e};
        return false;
      },
      true);
  return verdict;
}

std::string_view to_string(ReversalClassKind kind) {
  switch (kind) {
    case ReversalClassKind::identity_class:
      return "identity-class";
    case ReversalClassKind::near_identity_class:
      return "near-identity-class";
    case ReversalClassKind::neither:
      break;
  }
  return "neither";
}

ReversalClassKind reversal_class_kind(const Permutation& u) {
  const std::size_t n = u.n();
  const DifferenceProfile profile = difference_profile(u);
  bool lower_all_ones = true;
  for (std::size_t i = 2; i + 2 <= n; ++i) {
    lower_all_ones = lower_all_ones && all_ones(profile.delta(i));
  }
  if (!lower_all_ones) {
    return ReversalClassKind::neither;
  }
  if (n < 3 || all_ones(profile.delta(n - 1))) {
    return ReversalClassKind::identity_class;
  }
  if (profile.delta(n - 1).front() == 2) {
    return ReversalClassKind::near_identity_class;
  }
  return ReversalClassKind::neither;
}

} // namespace wilflab
