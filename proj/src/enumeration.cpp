#include "wilflab/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "wilflab/errors.hpp"
#include "wilflab/parallel.hpp"

namespace wilflab {

namespace {

using Ranks = std::vector<std::uint64_t>;

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Lexicographic rank -> permutation of 1..n.
std::vector<Letter> unrank(std::uint64_t rank, std::size_t n) {
  std::vector<Letter> pool(n);
  std::iota(pool.begin(), pool.end(), Letter{1});
  std::vector<Letter> out;
  for (std::size_t k = n; k > 0; --k) {
    const std::uint64_t f = factorial(k - 1);
    const std::size_t pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

// Both fingerprints use one byte per distance, so n is capped at 255; the
// guard keeps n far below that in practice.
void ss_fingerprint(std::span<const Letter> u, std::vector<std::size_t>& pos,
                    std::vector<std::size_t>& sorted, std::string& key) {
  const std::size_t n = u.size();
  for (std::size_t k = 0; k < n; ++k) pos[u[k]] = k;
  key.clear();
  if (n < 3) return;
  sorted.assign(1, pos[n]);
  for (std::size_t i = n - 1; i >= 2; --i) {
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), pos[i]), pos[i]);
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      key.push_back(static_cast<char>(sorted[k] - sorted[k - 1]));
    }
  }
}

void cross_fingerprint(std::span<const Letter> u, std::vector<std::size_t>& pos,
                       std::vector<std::size_t>& scratch, std::string& key) {
  const std::size_t n = u.size();
  for (std::size_t k = 0; k < n; ++k) pos[u[k]] = k;
  key.clear();
  for (std::size_t i = 1; i < n; ++i) {
    scratch.clear();
    for (std::size_t j = i + 1; j <= n; ++j) {
      scratch.push_back(pos[i] > pos[j] ? pos[i] - pos[j] : pos[j] - pos[i]);
    }
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t d : scratch) key.push_back(static_cast<char>(d));
  }
}

} // namespace

ClassPartition enumerate_classes(std::size_t n, Relation relation, EnumerateOptions options) {
  if (n == 0) {
    throw DomainError("enumeration needs n >= 1");
  }
  if (n > enumeration_guard && !options.force) {
    throw GuardError("refusing to enumerate S_" + std::to_string(n) + " (guard n <= " +
                     std::to_string(enumeration_guard) + "; pass --force to override)");
  }
  if (n > 20) {
    throw GuardError("S_" + std::to_string(n) + " is too large to enumerate");
  }
  const std::uint64_t total = factorial(n);
  const std::size_t workers = options.threads ? options.threads : thread_count();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(workers, total));

  // one map per chunk; chunks cover contiguous rank ranges
  std::vector<std::unordered_map<std::string, Ranks>> partial(chunks);
  const std::uint64_t per_chunk = (total + chunks - 1) / chunks;
  parallel_chunks(chunks, workers, [&](std::size_t first, std::size_t last) {
    std::vector<std::size_t> pos(n + 1);
    std::vector<std::size_t> scratch;
    std::string key;
    for (std::size_t c = first; c < last; ++c) {
      const std::uint64_t begin = c * per_chunk;
      const std::uint64_t end = std::min(total, begin + per_chunk);
      if (begin >= end) continue;
      std::vector<Letter> letters = unrank(begin, n);
      for (std::uint64_t rank = begin; rank < end; ++rank) {
        if (relation == Relation::ss) {
          ss_fingerprint(letters, pos, scratch, key);
        } else {
          cross_fingerprint(letters, pos, scratch, key);
        }
        partial[c][key].push_back(rank);
        std::next_permutation(letters.begin(), letters.end());
      }
    }
  });

  // merge in chunk order, so each member list stays in rank (= lexicographic) order
  std::unordered_map<std::string, Ranks> merged;
  for (auto& chunk : partial) {
    for (auto& [key, ranks] : chunk) {
      Ranks& into = merged[key];
      into.insert(into.end(), ranks.begin(), ranks.end());
    }
    chunk.clear();
  }
  std::vector<Ranks> groups;
  groups.reserve(merged.size());
  for (auto& [key, ranks] : merged) groups.push_back(std::move(ranks));
  std::sort(groups.begin(), groups.end(),
            [](const Ranks& a, const Ranks& b) { return a.front() < b.front(); });

  ClassPartition partition{relation, n, {}};
  partition.classes.reserve(groups.size());
  for (const Ranks& ranks : groups) {
    std::vector<Permutation> members;
    members.reserve(ranks.size());
    std::vector<Letter> letters = unrank(ranks.front(), n);
    std::uint64_t at = ranks.front();
    for (std::uint64_t r : ranks) {
      if (r - at > 64) {
        letters = unrank(r, n);
      } else {
        for (; at < r; ++at) std::next_permutation(letters.begin(), letters.end());
      }
      at = r;
      members.emplace_back(letters);
    }
    Permutation rep = members.front();
    partition.classes.push_back({std::move(rep), std::move(members)});
  }
  return partition;
}

ClassStatistics class_statistics(const ClassPartition& p) {
  ClassStatistics stats;
  stats.class_count = p.classes.size();
  for (const auto& c : p.classes) {
    const std::size_t size = c.members.size();
    ++stats.histogram[size];
    stats.total += size;
    stats.min_size = stats.min_size == 0 ? size : std::min(stats.min_size, size);
    stats.max_size = std::max(stats.max_size, size);
  }
  return stats;
}

std::string partition_to_json(const ClassPartition& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["relation"] = std::string(to_string(p.relation));
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : p.classes) {
    nlohmann::ordered_json entry;
    entry["rep"] = to_string(c.representative);
    auto members = nlohmann::ordered_json::array();
    for (const auto& m : c.members) members.push_back(to_string(m));
    entry["members"] = std::move(members);
    classes.push_back(std::move(entry));
  }
  j["classes"] = std::move(classes);
  auto histogram = nlohmann::ordered_json::object();
  for (const auto& [size, count] : class_statistics(p).histogram) {
    histogram[std::to_string(size)] = count;
  }
  j["histogram"] = std::move(histogram);
  return j.dump(2) + "\n";
}

ClassPartition partition_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid partition JSON: ") + e.what());
  }
  ClassPartition p;
  try {
    p.n = j.at("n").get<std::size_t>();
    p.relation = parse_relation(j.at("relation").get<std::string>());
    for (const auto& entry : j.at("classes")) {
      std::vector<Permutation> members;
      for (const auto& m : entry.at("members")) {
        members.push_back(parse_permutation(m.get<std::string>()));
      }
      EquivalenceClass c{parse_permutation(entry.at("rep").get<std::string>()), std::move(members)};
      p.classes.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed partition JSON: ") + e.what());
  }
  return p;
}

std::string partition_file_name(std::size_t n, Relation relation) {
  return "classes-n" + std::to_string(n) + "-" + std::string(to_string(relation)) + ".json";
}

} // namespace wilflab
