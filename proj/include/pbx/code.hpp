#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "pbx/word.hpp"

namespace pbx {

/// A polybox code: a set of pairwise dichotomous proper words of one
/// dimension, kept in sorted order.
class Code {
 public:
  Code() = default;
  explicit Code(int dim) : dim_(dim) {}

  /// Sorts and validates. Throws std::invalid_argument on a dimension
  /// mismatch, a duplicate, an improper word, or a non-dichotomous pair.
  static Code from_words(std::vector<Word> words);
  /// Same as from_words but the dimension is given explicitly (allows empty).
  static Code from_words(int dim, std::vector<Word> words);
  /// Adopts words that the caller guarantees are sorted, distinct, proper and
  /// pairwise dichotomous.
  static Code unchecked(int dim, std::vector<Word> sorted_words);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  std::span<const Word> words() const noexcept { return words_; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }
  const Word& operator[](std::size_t i) const noexcept { return words_[i]; }

  bool contains(const Word& w) const noexcept;
  bool is_cube_tiling() const noexcept { return dim_ > 0 && words_.size() == (std::size_t{1} << dim_); }

  /// Code with one more word. Throws if the result is not a code.
  Code with(const Word& w) const;
  Code without(const Word& w) const;

  friend bool operator==(const Code&, const Code&) = default;
  friend std::strong_ordering operator<=>(const Code& a, const Code& b) noexcept {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                                  b.words_.end());
  }

 private:
  Code(int dim, std::vector<Word> words) : dim_(dim), words_(std::move(words)) {}

  int dim_ = 0;
  std::vector<Word> words_;
};

struct CodeHash {
  std::size_t operator()(const Code& c) const noexcept;
};

/// Smallest alphabet containing every letter of the code (at least one pair).
Alphabet alphabet_of(const Code& c);
Alphabet alphabet_of(std::span<const Code> codes);

}  // namespace pbx
