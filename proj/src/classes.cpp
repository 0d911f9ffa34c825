#include "wilflab/classes.hpp"

#include <algorithm>

#include "wilflab/errors.hpp"

namespace wilflab {

std::string_view to_string(Relation r) { return r == Relation::ss ? "ss" : "cross"; }

Relation parse_relation(std::string_view text) {
  if (text == "ss") return Relation::ss;
  if (text == "cross") return Relation::cross;
  throw ParseError("unknown relation '" + std::string(text) + "' (expected ss or cross)");
}

std::size_t ClassPartition::total_members() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  return total;
}

EquivalenceClass make_class(std::vector<Permutation> members) {
  if (members.empty()) {
    throw DomainError("an equivalence class cannot be empty");
  }
  std::sort(members.begin(), members.end());
  Permutation rep = members.front();
  return {std::move(rep), std::move(members)};
}

} // namespace wilflab
