#ifndef WILFLAB_ENUMERATION_HPP
#define WILFLAB_ENUMERATION_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "wilflab/classes.hpp"

namespace wilflab {

inline constexpr std::size_t enumeration_guard = 10;

struct EnumerateOptions {
  bool force = false;       // allow n above the guard
  std::size_t threads = 0;  // 0: thread_count()
};

/// Exact partition of S_n under `relation`, classes ordered by their
/// lexicographically least member. Identical for every thread count.
ClassPartition enumerate_classes(std::size_t n, Relation relation, EnumerateOptions options = {});

struct ClassStatistics {
  std::size_t class_count = 0;
  std::size_t total = 0;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  std::map<std::size_t, std::size_t> histogram; // class size -> number of classes
};

ClassStatistics class_statistics(const ClassPartition& p);

/// {n, relation, classes:[{rep, members}], histogram:{size: count}}
std::string partition_to_json(const ClassPartition& p);
ClassPartition partition_from_json(std::string_view text);

/// "classes-n{n}-{relation}.json"
std::string partition_file_name(std::size_t n, Relation relation);

} // namespace wilflab

#endif // WILFLAB_ENUMERATION_HPP
