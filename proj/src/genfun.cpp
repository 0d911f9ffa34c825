#include "wilflab/genfun.hpp"

#include <algorithm>
#include <sstream>

#include "wilflab/clusters.hpp"
#include "wilflab/errors.hpp"

namespace wilflab {

namespace {

std::size_t count_embeddings(std::span<const Letter> u, std::span<const Letter> w) {
  if (u.size() > w.size()) return 0;
  std::size_t count = 0;
  for (std::size_t j = 0; j + u.size() <= w.size(); ++j) {
    bool fits = true;
    for (std::size_t i = 0; i < u.size() && fits; ++i) fits = u[i] <= w[j + i];
    count += fits;
  }
  return count;
}

void compose(std::vector<Letter>& parts, std::size_t at, std::uint64_t remaining,
             const std::function<void(std::span<const Letter>)>& visit) {
  const std::size_t left = parts.size() - at - 1;
  if (left == 0) {
    parts[at] = static_cast<Letter>(remaining);
    visit(parts);
    return;
  }
  for (std::uint64_t a = 1; a + left <= remaining; ++a) {
    parts[at] = static_cast<Letter>(a);
    compose(parts, at + 1, remaining - a, visit);
  }
}

void require_positions(const Word& u, std::size_t n, std::span<const Position> t) {
  const std::size_t slots = n + 1 > u.size() ? n + 1 - u.size() : 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] == 0 || t[k] > slots) {
      throw DomainError("position " + std::to_string(t[k]) + " outside [1, " +
                        std::to_string(slots) + "] for length " + std::to_string(n));
    }
    if (k > 0 && t[k] <= t[k - 1]) {
      throw DomainError("position set must be strictly increasing");
    }
  }
}

void require_bounds(const Word& u, const Word& v, std::size_t max_length,
                    std::uint64_t max_norm) {
  if (max_length < std::max(u.size(), v.size()) || max_norm < std::max(u.norm(), v.norm())) {
    throw DomainError("truncation bounds must cover the weights of both words");
  }
}

} // namespace

Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

void for_each_composition(std::uint64_t norm, std::size_t length,
                          const std::function<void(std::span<const Letter>)>& visit) {
  if (length == 0) {
    if (norm == 0) visit({});
    return;
  }
  if (norm < length) return;
  std::vector<Letter> parts(length);
  compose(parts, 0, norm, visit);
}

std::string TruncatedSeries::dump() const {
  std::ostringstream out;
  for (const auto& [exponents, count] : coefficients) {
    for (std::uint64_t e : exponents) out << e << ' ';
    out << count << '\n';
  }
  return out.str();
}

Count count_geq(const Word& u, std::size_t length, std::uint64_t norm) {
  std::uint64_t count = 0;
  for_each_composition(norm, length, [&](std::span<const Letter> w) {
    count += count_embeddings(u.letters(), w) > 0;
  });
  return count;
}

std::map<std::size_t, Count> em_count_distribution(const Word& u, std::size_t length,
                                                   std::uint64_t norm) {
  std::map<std::size_t, std::uint64_t> raw;
  for_each_composition(norm, length, [&](std::span<const Letter> w) {
    ++raw[count_embeddings(u.letters(), w)];
  });
  return {raw.begin(), raw.end()};
}

Count count_U(const Word& u, std::uint64_t m, std::size_t n, std::span<const Position> t) {
  if (n == 0) {
    throw DomainError("count_U needs a positive word length");
  }
  require_positions(u, n, t);
  const std::uint64_t floor_norm = dominating_floor(u, t, n).norm();
  if (m < floor_norm) return 0;
  return binomial(m - floor_norm + n - 1, n - 1);
}

Count count_U(const Word& u, std::uint64_t m, std::size_t n, const EmbeddingSet& t) {
  return count_U(u, m, n, t.positions());
}

Count count_W(const Word& u, std::uint64_t m, std::size_t n, std::span<const Position> s) {
  if (n == 0) {
    throw DomainError("count_W needs a positive word length");
  }
  require_positions(u, n, s);
  const std::size_t slots = n + 1 > u.size() ? n + 1 - u.size() : 0;
  std::vector<Position> free;
  for (Position j = 1; j <= slots; ++j) {
    if (!std::binary_search(s.begin(), s.end(), j)) free.push_back(j);
  }
  if (free.size() > 24) {
    throw GuardError("inclusion-exclusion over 2^" + std::to_string(free.size()) +
                     " supersets refused");
  }
  Count total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<Position> t(s.begin(), s.end());
    std::size_t extra = 0;
    for (std::size_t b = 0; b < free.size(); ++b) {
      if (mask >> b & 1) {
        t.push_back(free[b]);
        ++extra;
      }
    }
    std::sort(t.begin(), t.end());
    const Count term = count_U(u, m, n, t);
    if (extra % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Count count_W(const Word& u, std::uint64_t m, std::size_t n, const EmbeddingSet& s) {
  return count_W(u, m, n, s.positions());
}

std::map<std::pair<std::size_t, std::uint64_t>, Count> minimal_cluster_gf_terms(const Word& u,
                                                                               std::size_t rows) {
  if (rows < 2) {
    throw DomainError("minimal cluster terms need at least 2 rows");
  }
  std::map<std::pair<std::size_t, std::uint64_t>, Count> terms;
  if (u.size() < 2) {
    return terms;
  }
  for_each_shift_vector(rows - 1, u.size() - 1, [&](std::span<const std::size_t> e) {
    const Word m = minimal_cluster(u, EmbeddingSet::from_shifts(e));
    terms[{m.size(), m.norm()}] += 1;
    return true;
  });
  return terms;
}

TruncatedSeries series_F(const Word& u, std::size_t max_length, std::uint64_t max_norm) {
  TruncatedSeries series{max_length, max_norm, {}};
  for (std::size_t length = 1; length <= max_length; ++length) {
    for (std::uint64_t norm = length; norm <= max_norm; ++norm) {
      Count c = count_geq(u, length, norm);
      if (c != 0) series.coefficients[{length, norm}] = std::move(c);
    }
  }
  return series;
}

TruncatedSeries series_A(const Word& u, std::size_t max_length, std::uint64_t max_norm) {
  TruncatedSeries series{max_length, max_norm, {}};
  for (std::size_t length = 1; length <= max_length; ++length) {
    for (std::uint64_t norm = length; norm <= max_norm; ++norm) {
      for (auto& [k, c] : em_count_distribution(u, length, norm)) {
        series.coefficients[{length, norm, k}] = std::move(c);
      }
    }
  }
  return series;
}

TruncatedSeries series_M(const Word& u, std::size_t max_length, std::uint64_t max_norm) {
  TruncatedSeries series{max_length, max_norm, {}};
  if (u.empty()) {
    return series;
  }
  if (u.size() <= max_length && u.norm() <= max_norm) {
    series.coefficients[{1, u.size(), u.norm()}] = 1;
  }
  // an r-row cluster has length at least |u| + r - 1
  for (std::size_t rows = 2; u.size() >= 2 && u.size() + rows - 1 <= max_length; ++rows) {
    for (auto& [weight, c] : minimal_cluster_gf_terms(u, rows)) {
      if (weight.first <= max_length && weight.second <= max_norm) {
        series.coefficients[{rows, weight.first, weight.second}] = std::move(c);
      }
    }
  }
  return series;
}

std::optional<Discrepancy> first_discrepancy(const TruncatedSeries& a, const TruncatedSeries& b) {
  auto ia = a.coefficients.begin();
  auto ib = b.coefficients.begin();
  while (ia != a.coefficients.end() || ib != b.coefficients.end()) {
    if (ib == b.coefficients.end() || (ia != a.coefficients.end() && ia->first < ib->first)) {
      return Discrepancy{ia->first, ia->second, 0};
    }
    if (ia == a.coefficients.end() || ib->first < ia->first) {
      return Discrepancy{ib->first, 0, ib->second};
    }
    if (ia->second != ib->second) {
      return Discrepancy{ia->first, ia->second, ib->second};
    }
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

bool wilf_truncated_equal(const Word& u, const Word& v, std::size_t max_length,
                          std::uint64_t max_norm) {
  require_bounds(u, v, max_length, max_norm);
  return !first_discrepancy(series_F(u, max_length, max_norm), series_F(v, max_length, max_norm));
}

bool strong_truncated_equal(const Word& u, const Word& v, std::size_t max_length,
                            std::uint64_t max_norm) {
  require_bounds(u, v, max_length, max_norm);
  return !first_discrepancy(series_A(u, max_length, max_norm), series_A(v, max_length, max_norm));
}

SeriesBounds default_bounds(const Word& u) { return {u.size() + 4, u.norm() + 10}; }

} // namespace wilflab
