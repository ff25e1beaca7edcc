#pragma once

// Letters, alphabets and packed words.
//
// A letter is a small integer: pair j contributes letters 2j (unprimed) and
// 2j+1 (primed), so complementation toggles the lowest bit. The gluing
// symbol '*' is the sentinel 0xFF and is its own complement.
//
// A word of dimension d <= 8 packs one letter per byte into a 64-bit value,
// position 0 in the most significant byte. Integer order on the packed
// value is therefore lexicographic order on the letter sequence, and the
// unused low bytes are always zero.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pbx {

using Letter = std::uint8_t;

inline constexpr Letter kStar = 0xFF;
inline constexpr int kMaxPairs = 8;
inline constexpr int kMaxDim = 8;

constexpr Letter complement(Letter s) noexcept { return s == kStar ? s : static_cast<Letter>(s ^ 1U); }
constexpr int pair_of(Letter s) noexcept { return s >> 1; }
constexpr bool is_primed(Letter s) noexcept { return (s & 1U) != 0; }
constexpr Letter make_letter(int pair, bool primed = false) noexcept {
  return static_cast<Letter>(2 * pair + (primed ? 1 : 0));
}

/// Letters a..h and their complements; '*' formats as "*".
std::string letter_to_string(Letter s);

/// Alphabet of `pair_count` complementary letter pairs (s_j, s_j').
class Alphabet {
 public:
  explicit Alphabet(int pair_count);

  int pair_count() const noexcept { return pair_count_; }
  int letter_count() const noexcept { return 2 * pair_count_; }
  bool contains(Letter s) const noexcept { return s != kStar && s < letter_count(); }
  std::vector<Letter> letters() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int pair_count_;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  /// Rebuilds a word from its packed form. `bits` must have zero low lanes.
  static Word from_bits(int dim, std::uint64_t bits);
  /// The all-`s` word b...b of the given dimension.
  static Word constant(int dim, Letter s);

  int dim() const noexcept { return dim_; }
  std::uint64_t bits() const noexcept { return bits_; }

  Letter operator[](int i) const noexcept {
    return static_cast<Letter>(bits_ >> shift(i));
  }
  Word with(int i, Letter s) const noexcept {
    Word out = *this;
    out.bits_ = (bits_ & ~(std::uint64_t{0xFF} << shift(i))) | (std::uint64_t{s} << shift(i));
    return out;
  }
  /// Drops position i (the restriction v_{i^c}).
  Word without(int i) const;
  /// Inserts letter s so that it becomes position i.
  Word inserted(int i, Letter s) const;

  bool proper() const noexcept;
  bool over(const Alphabet& alphabet) const noexcept;
  std::vector<Letter> letters() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  static constexpr int shift(int i) noexcept { return 8 * (kMaxDim - 1 - i); }

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t dim_ = 0;
};

std::string to_string(const Word& w);

/// Parses letter syntax such as "aa'b*". Throws std::invalid_argument.
Word parse_word(std::string_view text);

namespace lanes {

// High bit of every byte lane that belongs to a word of dimension d.
constexpr std::uint64_t active_high(int d) noexcept {
  return d == 0 ? 0 : (0x8080808080808080ULL & ~(d >= kMaxDim ? 0ULL : (~0ULL >> (8 * d))));
}
// 0x01 in every active lane.
constexpr std::uint64_t active_ones(int d) noexcept { return active_high(d) >> 7; }

// High bit set in every lane of x that is exactly zero.
constexpr std::uint64_t zero_lanes(std::uint64_t x) noexcept {
  constexpr std::uint64_t low7 = 0x7F7F7F7F7F7F7F7FULL;
  return ~(((x & low7) + low7) | x | low7);
}

}  // namespace lanes

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t x = w.bits() ^ (std::uint64_t{static_cast<unsigned>(w.dim())} * 0x9E3779B97F4A7C15ULL);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

}  // namespace pbx
