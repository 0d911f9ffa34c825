#include "wilflab/tree.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wilflab/equivalence.hpp"
#include "wilflab/errors.hpp"

namespace wilflab {

PartialWord::PartialWord(std::vector<Letter> slots) : slots_(std::move(slots)) {
  const std::size_t n = slots_.size();
  std::vector<bool> seen(n + 1, false);
  std::size_t filled = 0;
  for (Letter a : slots_) {
    if (a == blank) continue;
    if (a > n || seen[a]) {
      throw DomainError("partial word letters must be distinct and in [1, n]");
    }
    seen[a] = true;
    ++filled;
  }
  for (std::size_t a = 1; a <= filled; ++a) {
    if (!seen[a]) {
      throw DomainError("partial word must contain exactly the letters 1..i");
    }
  }
}

PartialWord PartialWord::all_blank(std::size_t n) { return PartialWord(std::vector<Letter>(n, blank)); }

std::size_t PartialWord::filled() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(slots_.begin(), slots_.end(), [](Letter a) { return a != blank; }));
}

std::vector<Position> PartialWord::blank_positions() const {
  std::vector<Position> out;
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    if (slots_[k] == blank) out.push_back(k + 1);
  }
  return out;
}

PartialWord PartialWord::with(Position pos, Letter letter) const {
  std::vector<Letter> slots = slots_;
  slots.at(pos - 1) = letter;
  return PartialWord(std::move(slots));
}

Permutation PartialWord::to_permutation() const { return Permutation(slots_); }

std::string to_string(const PartialWord& x) {
  const bool delimited = x.size() > 9;
  std::string out;
  for (Position p = 1; p <= x.size(); ++p) {
    if (delimited && p > 1) out += ',';
    out += x.is_blank(p) ? std::string("*") : std::to_string(x.slot(p));
  }
  return out;
}

Configuration configuration(const PartialWord& x) {
  const auto blanks = x.blank_positions();
  if (blanks.empty()) {
    throw DomainError("configuration needs at least one blank: " + to_string(x));
  }
  Configuration c;
  for (Position p = blanks.front(); p <= blanks.back(); ++p) {
    c.push_back(x.is_blank(p) ? Cell::blank : Cell::filled);
  }
  return c;
}

std::string to_string(const Configuration& c) {
  std::string out;
  for (Cell cell : c) out += static_cast<char>(cell);
  return out;
}

std::vector<Permutation> CrossTree::leaves() const {
  std::vector<Permutation> out;
  for (const auto& node : levels.back()) out.push_back(node.word.to_permutation());
  return out;
}

std::size_t CrossTree::branching_levels() const {
  return static_cast<std::size_t>(std::count(child_count.begin(), child_count.end(), 2));
}

namespace {

DistanceMultiset distances_to_blanks(const PartialWord& y, Position p) {
  std::vector<std::size_t> d;
  for (Position b : y.blank_positions()) d.push_back(b > p ? b - p : p - b);
  return DistanceMultiset(std::move(d));
}

/// Positions for letter `a` among the blanks of `x`, left to right. The
/// letter sits at distance max(a⁺(u)) from one end of the blank span; the
/// full multiset check discards the mirror candidate when it does not fit.
std::vector<Position> child_positions(const PartialWord& x, Letter a,
                                      const DistanceMultiset& target) {
  const auto blanks = x.blank_positions();
  if (target.size() == 0) {
    return {blanks.front()};
  }
  const Position first = blanks.front();
  const Position last = blanks.back();
  const std::size_t k = target.max();
  std::vector<Position> candidates;
  if (first + k <= last) candidates.push_back(first + k);
  if (last >= first + k && last - k != first + k) candidates.push_back(last - k);
  std::sort(candidates.begin(), candidates.end());

  std::vector<Position> valid;
  for (Position p : candidates) {
    if (!x.is_blank(p)) continue;
    if (distances_to_blanks(x.with(p, a), p) == target) valid.push_back(p);
  }
  return valid;
}

} // namespace

CrossTree build_tree(const Permutation& u) {
  CrossTree tree;
  tree.n = u.n();
  tree.u = u;
  tree.levels.resize(tree.n + 1);
  tree.levels[0].push_back({PartialWord::all_blank(tree.n), std::nullopt, {}});
  tree.labels.assign(tree.n, std::nullopt);

  for (std::size_t i = 0; i < tree.n; ++i) {
    const Letter a = static_cast<Letter>(i + 1);
    const DistanceMultiset target = a < tree.n ? plus_multiset(u, a) : DistanceMultiset{};
    auto& parents = tree.levels[i];
    auto& children = tree.levels[i + 1];
    std::optional<std::size_t> count;
    for (std::size_t x = 0; x < parents.size(); ++x) {
      const auto positions = child_positions(parents[x].word, a, target);
      if (positions.empty() || (count && *count != positions.size())) {
        throw std::logic_error("cross tree level " + std::to_string(i) +
                               " has non-uniform branching");
      }
      count = positions.size();
      for (Position p : positions) {
        parents[x].children.push_back(children.size());
        children.push_back({parents[x].word.with(p, a), x, {}});
      }
    }
    tree.child_count.push_back(*count);
  }
  return tree;
}

CrossTree label_levels(CrossTree tree) {
  tree.k = 0;
  tree.l = 0;
  for (std::size_t i = 0; i < tree.n; ++i) {
    tree.labels[i].reset();
    if (tree.child_count[i] != 2) continue;
    std::optional<int> label;
    for (const auto& node : tree.levels[i]) {
      const auto& next = tree.levels[i + 1];
      const int bit = configuration(next[node.children[0]].word) ==
                              configuration(next[node.children[1]].word)
                          ? 0
                          : 1;
      if (label && *label != bit) {
        throw std::logic_error("cross tree level " + std::to_string(i) +
                               " has mixed labels");
      }
      label = bit;
    }
    tree.labels[i] = label;
    (*label == 0 ? tree.k : tree.l) += 1;
  }
  tree.labeled = true;
  return tree;
}

ClassPartition partition_leaves(const CrossTree& tree) {
  ClassPartition partition{Relation::ss, tree.n, {}};
  std::map<std::vector<Configuration>, std::size_t> group_of;
  std::vector<std::vector<Permutation>> groups;
  const auto& leaves = tree.levels.back();
  for (const auto& leaf : leaves) {
    // configurations c_1 .. c_{n-1} along the root path
    std::vector<Configuration> key;
    std::optional<std::size_t> at = leaf.parent;
    for (std::size_t level = tree.n; level-- > 1;) {
      const TreeNode& node = tree.levels[level][*at];
      key.push_back(configuration(node.word));
      at = node.parent;
    }
    auto [it, inserted] = group_of.emplace(std::move(key), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(leaf.word.to_permutation());
  }
  for (auto& g : groups) partition.classes.push_back(make_class(std::move(g)));
  return partition;
}

TreeFormat parse_tree_format(std::string_view text) {
  if (text == "dot") return TreeFormat::dot;
  if (text == "json") return TreeFormat::json;
  throw ParseError("unknown tree format '" + std::string(text) + "' (expected dot or json)");
}

namespace {

std::string export_dot(const CrossTree& tree) {
  std::ostringstream out;
  out << "digraph cross_tree {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i <= tree.n; ++i) {
    for (std::size_t x = 0; x < tree.levels[i].size(); ++x) {
      out << "  n" << i << '_' << x << " [label=\"" << to_string(tree.levels[i][x].word)
          << "\"];\n";
    }
  }
  for (std::size_t i = 0; i < tree.n; ++i) {
    std::string attrs;
    if (tree.labels[i]) {
      attrs = *tree.labels[i] == 0 ? " [label=\"0\", color=green]" : " [label=\"1\", color=orange]";
    }
    for (std::size_t x = 0; x < tree.levels[i].size(); ++x) {
      for (std::size_t c : tree.levels[i][x].children) {
        out << "  n" << i << '_' << x << " -> n" << i + 1 << '_' << c << attrs << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const CrossTree& tree) {
  nlohmann::ordered_json j;
  j["n"] = tree.n;
  j["u"] = to_string(tree.u);
  auto levels = nlohmann::ordered_json::array();
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i <= tree.n; ++i) {
    auto words = nlohmann::ordered_json::array();
    auto level_edges = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < tree.levels[i].size(); ++x) {
      words.push_back(to_string(tree.levels[i][x].word));
      for (std::size_t c : tree.levels[i][x].children) level_edges.push_back({x, c});
    }
    levels.push_back(std::move(words));
    if (i < tree.n) edges.push_back(std::move(level_edges));
  }
  j["levels"] = std::move(levels);
  j["edges"] = std::move(edges);
  auto labels = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < tree.n; ++i) {
    if (tree.labels[i]) labels[std::to_string(i)] = *tree.labels[i];
  }
  j["labels"] = std::move(labels);
  j["k"] = tree.k;
  j["l"] = tree.l;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : partition_leaves(tree).classes) {
    auto members = nlohmann::ordered_json::array();
    for (const auto& m : c.members) members.push_back(to_string(m));
    classes.push_back(std::move(members));
  }
  j["classes"] = std::move(classes);
  return j.dump(2) + "\n";
}

} // namespace

std::string export_tree(const CrossTree& tree, TreeFormat format) {
  const CrossTree labeled = tree.labeled ? tree : label_levels(tree);
  return format == TreeFormat::dot ? export_dot(labeled) : export_json(labeled);
}

} // namespace wilflab
