#include "wilflab/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "wilflab/errors.hpp"

namespace wilflab {

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter a : letters_) {
    if (a == 0) {
      throw DomainError("word letters must be positive integers");
    }
  }
}

std::uint64_t Word::norm() const noexcept {
  return std::accumulate(letters_.begin(), letters_.end(), std::uint64_t{0});
}

Letter Word::at(Position pos) const {
  if (pos == 0 || pos > letters_.size()) {
    throw std::out_of_range("word position out of range");
  }
  return letters_[pos - 1];
}

Letter Word::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Permutation::Permutation(std::initializer_list<Letter> letters)
    : Permutation(Word(letters)) {}

Permutation::Permutation(std::vector<Letter> letters) : Permutation(Word(std::move(letters))) {}

Permutation::Permutation(Word word) : word_(std::move(word)) {
  if (!is_permutation(word_)) {
    throw DomainError("not a permutation: " + to_string(word_));
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Letter> letters(n);
  std::iota(letters.begin(), letters.end(), Letter{1});
  return Permutation(std::move(letters));
}

bool Permutation::is_permutation(const Word& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (Letter a : w) {
    if (a == 0 || a > w.size() || seen[a]) {
      return false;
    }
    seen[a] = true;
  }
  return true;
}

Position Permutation::position_of(Letter letter) const {
  auto it = std::find(word_.begin(), word_.end(), letter);
  if (it == word_.end()) {
    throw DomainError("letter not in permutation");
  }
  return static_cast<Position>(it - word_.begin()) + 1;
}

std::size_t LetterStats::count(Letter letter) const {
  auto it = multiplicities.find(letter);
  return it == multiplicities.end() ? 0 : it->second;
}

DistanceMultiset::DistanceMultiset(std::vector<std::size_t> distances)
    : values_(std::move(distances)) {
  std::sort(values_.begin(), values_.end());
  if (!values_.empty() && values_.front() == 0) {
    throw DomainError("distances must be positive");
  }
}

std::size_t DistanceMultiset::count(std::size_t distance) const {
  auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), distance);
  return static_cast<std::size_t>(hi - lo);
}

Weight weight(const Word& w) { return {w.size(), w.norm()}; }

Word reversal(const Word& w) {
  std::vector<Letter> letters(w.begin(), w.end());
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

Permutation reversal(const Permutation& p) { return Permutation(reversal(p.word())); }

LetterStats letter_stats(const Word& w) {
  LetterStats stats;
  for (Letter a : w) {
    stats.alphabet.insert(a);
    ++stats.multiplicities[a];
  }
  return stats;
}

DistanceMultiset distance_multiset(const Word& w, Letter i, Letter j) {
  if (i == j) {
    throw DomainError("distance multiset needs two distinct letters");
  }
  std::vector<std::size_t> at_i;
  std::vector<std::size_t> at_j;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i) at_i.push_back(k);
    if (w[k] == j) at_j.push_back(k);
  }
  std::vector<std::size_t> distances;
  distances.reserve(at_i.size() * at_j.size());
  for (std::size_t k : at_i) {
    for (std::size_t l : at_j) {
      distances.push_back(k > l ? k - l : l - k);
    }
  }
  return DistanceMultiset(std::move(distances));
}

Permutation inverse(const Permutation& p) {
  std::vector<Letter> inv(p.n());
  for (std::size_t k = 0; k < p.n(); ++k) {
    inv[p[k] - 1] = static_cast<Letter>(k + 1);
  }
  return Permutation(std::move(inv));
}

Word shift_up(const Word& u) {
  std::vector<Letter> letters(u.begin(), u.end());
  for (Letter& a : letters) ++a;
  return Word(std::move(letters));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> letters(a.begin(), a.end());
  letters.insert(letters.end(), b.begin(), b.end());
  return Word(std::move(letters));
}

Word parse_word(std::string_view text) {
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const bool delimited = std::any_of(text.begin(), text.end(), is_sep);
  std::vector<Letter> letters;
  if (!delimited) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw ParseError("invalid word '" + std::string(text) +
                         "': contiguous notation takes digits 1-9 only");
      }
      letters.push_back(static_cast<Letter>(c - '0'));
    }
    return Word(std::move(letters));
  }

  std::size_t k = 0;
  while (k < text.size()) {
    if (is_sep(text[k])) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string_view token = text.substr(k, end - k);
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value == 0) {
      throw ParseError("invalid letter '" + std::string(token) + "' in word '" +
                       std::string(text) + "'");
    }
    letters.push_back(value);
    k = end;
  }
  return Word(std::move(letters));
}

Permutation parse_permutation(std::string_view text) {
  Word w = parse_word(text);
  if (!Permutation::is_permutation(w)) {
    throw DomainError("not a permutation: " + std::string(text));
  }
  return Permutation(std::move(w));
}

std::string to_string(const Word& w) {
  std::string out;
  const bool contiguous = w.max_letter() <= 9;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!contiguous && k > 0) out += ',';
    out += std::to_string(w[k]);
  }
  // a lone letter above 9 needs a delimiter to read back as one letter
  if (!contiguous && w.size() == 1) out += ',';
  return out;
}

std::string to_string(const Permutation& p) { return to_string(p.word()); }

std::string to_string(const DistanceMultiset& d) {
  std::string out = "{";
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(d.values()[k]);
  }
  return out + "}";
}

} // namespace wilflab
