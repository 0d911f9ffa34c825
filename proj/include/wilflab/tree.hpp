#ifndef WILFLAB_TREE_HPP
#define WILFLAB_TREE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wilflab/classes.hpp"
#include "wilflab/word.hpp"

namespace wilflab {

/// A word of length n over [n] ∪ {BLANK} in which 1..i each appear once
/// and the other n - i slots are BLANK (stored as 0).
class PartialWord {
public:
  static constexpr Letter blank = 0;

  PartialWord() = default;
  explicit PartialWord(std::vector<Letter> slots);
  static PartialWord all_blank(std::size_t n);

  std::size_t size() const noexcept { return slots_.size(); }
  /// Number of filled slots; the tree level the word lives on.
  std::size_t filled() const noexcept;
  Letter slot(Position pos) const { return slots_.at(pos - 1); }
  bool is_blank(Position pos) const { return slot(pos) == blank; }
  std::vector<Position> blank_positions() const;

  PartialWord with(Position pos, Letter letter) const;
  Permutation to_permutation() const;

  friend bool operator==(const PartialWord&, const PartialWord&) = default;

private:
  std::vector<Letter> slots_;
};

std::string to_string(const PartialWord& x);

enum class Cell : char { blank = '*', filled = 'o' };
using Configuration = std::vector<Cell>;

/// Factor from the first to the last BLANK with every letter replaced by a
/// FILLED mark. Requires at least one BLANK.
Configuration configuration(const PartialWord& x);
std::string to_string(const Configuration& c);

struct TreeNode {
  PartialWord word;
  std::optional<std::size_t> parent; // index into the previous level
  std::vector<std::size_t> children; // indices into the next level, left to right
};

/// T^n(u): level i holds the partial words x with letters 1..i placed and
/// d_x(i, *) = i⁺(u); its leaves are the cross class of u.
struct CrossTree {
  std::size_t n = 0;
  Permutation u;
  std::vector<std::vector<TreeNode>> levels; // levels[0..n], left to right
  std::vector<std::size_t> child_count;      // per level 0..n-1, each 1 or 2
  std::vector<std::optional<int>> labels;    // per level; set for 2-child levels once labeled
  bool labeled = false;
  std::size_t k = 0; // 0-labeled levels
  std::size_t l = 0; // 1-labeled levels

  std::vector<Permutation> leaves() const;
  std::size_t branching_levels() const;
};

CrossTree build_tree(const Permutation& u);

/// Labels each 2-child level 0 when the two children share a configuration
/// and 1 otherwise, and fills in k and l.
CrossTree label_levels(CrossTree tree);

/// Groups leaves by the configurations along their root paths. Classes keep
/// left-to-right order of first appearance; members are sorted.
ClassPartition partition_leaves(const CrossTree& tree);

enum class TreeFormat { dot, json };
TreeFormat parse_tree_format(std::string_view text);

std::string export_tree(const CrossTree& tree, TreeFormat format);

} // namespace wilflab

#endif // WILFLAB_TREE_HPP
