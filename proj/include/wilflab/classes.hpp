#ifndef WILFLAB_CLASSES_HPP
#define WILFLAB_CLASSES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wilflab/word.hpp"

namespace wilflab {

enum class Relation { cross, ss };

std::string_view to_string(Relation r);
Relation parse_relation(std::string_view text);

struct EquivalenceClass {
  Permutation representative; // lexicographically least member
  std::vector<Permutation> members; // sorted ascending

  friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
};

/// A partition of a set of permutations into classes. The order of
/// `classes` is meaningful: enumeration sorts by representative, tree
/// partitions keep left-to-right leaf order.
struct ClassPartition {
  Relation relation = Relation::ss;
  std::size_t n = 0;
  std::vector<EquivalenceClass> classes;

  std::size_t total_members() const;
  friend bool operator==(const ClassPartition&, const ClassPartition&) = default;
};

/// Sorts members and fills in the representative.
EquivalenceClass make_class(std::vector<Permutation> members);

} // namespace wilflab

#endif // WILFLAB_CLASSES_HPP
