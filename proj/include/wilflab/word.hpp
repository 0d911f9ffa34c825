#ifndef WILFLAB_WORD_HPP
#define WILFLAB_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wilflab {

using Letter = std::uint32_t;
using Position = std::size_t;

/// A finite word over the positive integers. Positions are 1-indexed.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::uint64_t norm() const noexcept;

  /// Letter at 1-indexed position `pos`.
  Letter at(Position pos) const;
  Letter operator[](std::size_t index) const noexcept { return letters_[index]; }

  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter max_letter() const noexcept;

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

/// A word in which each of 1..n occurs exactly once.
class Permutation {
public:
  Permutation() = default;
  Permutation(std::initializer_list<Letter> letters);
  explicit Permutation(Word word);
  explicit Permutation(std::vector<Letter> letters);

  static Permutation identity(std::size_t n);
  static bool is_permutation(const Word& w);

  std::size_t n() const noexcept { return word_.size(); }
  const Word& word() const noexcept { return word_; }
  Letter at(Position pos) const { return word_.at(pos); }
  Letter operator[](std::size_t index) const noexcept { return word_[index]; }

  /// 1-indexed position of letter `letter`.
  Position position_of(Letter letter) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  Word word_;
};

struct Weight {
  std::size_t length = 0;
  std::uint64_t norm = 0;

  friend bool operator==(const Weight&, const Weight&) = default;
};

struct LetterStats {
  std::set<Letter> alphabet;
  std::map<Letter, std::size_t> multiplicities;

  std::size_t count(Letter letter) const;
};

/// Sorted multiset of positive distances.
class DistanceMultiset {
public:
  DistanceMultiset() = default;
  explicit DistanceMultiset(std::vector<std::size_t> distances);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::size_t> values() const noexcept { return values_; }
  std::size_t max() const noexcept { return values_.empty() ? 0 : values_.back(); }
  std::size_t count(std::size_t distance) const;

  friend bool operator==(const DistanceMultiset&, const DistanceMultiset&) = default;
  friend auto operator<=>(const DistanceMultiset&, const DistanceMultiset&) = default;

private:
  std::vector<std::size_t> values_;
};

Weight weight(const Word& w);
Word reversal(const Word& w);
Permutation reversal(const Permutation& p);
LetterStats letter_stats(const Word& w);

/// Multiset {|k - l| : w_k = i, w_l = j}; requires i != j.
DistanceMultiset distance_multiset(const Word& w, Letter i, Letter j);

Permutation inverse(const Permutation& p);
Word shift_up(const Word& u);

/// Concatenation.
Word operator+(const Word& a, const Word& b);

/// Parses "2,13,2", "2 13 2" or contiguous digits "2132213".
Word parse_word(std::string_view text);
Permutation parse_permutation(std::string_view text);

/// Contiguous digits when every letter is <= 9, comma-separated otherwise.
std::string to_string(const Word& w);
std::string to_string(const Permutation& p);
std::string to_string(const DistanceMultiset& d);

} // namespace wilflab

#endif // WILFLAB_WORD_HPP
