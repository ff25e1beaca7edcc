#pragma once

// Reference definitions used as test oracles. They follow the textbook
// definitions position by position and never touch the packed lanes.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pbx/code.hpp"

namespace naive {

using pbx::Letter;
using pbx::Word;

inline bool dichotomous(const Word& v, const Word& w) {
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] != pbx::kStar && w[i] != pbx::kStar && pbx::pair_of(v[i]) == pbx::pair_of(w[i]) && v[i] != w[i]) {
      return true;
    }
  }
  return false;
}

inline std::uint64_t g(const Word& v, const Word& w) {
  std::uint64_t out = 1;
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] == w[i]) out *= 2;
    else if (pbx::pair_of(v[i]) == pbx::pair_of(w[i])) return 0;
  }
  return out;
}

inline std::optional<int> twin_direction(const Word& v, const Word& w) {
  std::optional<int> at;
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] == w[i]) continue;
    if (at || pbx::pair_of(v[i]) != pbx::pair_of(w[i])) return std::nullopt;
    at = i;
  }
  return at;
}

inline bool is_code(const std::vector<Word>& words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (words[i] == words[j] || !dichotomous(words[i], words[j])) return false;
    }
  }
  return true;
}

inline Word random_word(int dim, int pairs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, 2 * pairs - 1);
  std::vector<Letter> letters;
  for (int i = 0; i < dim; ++i) letters.push_back(static_cast<Letter>(letter(rng)));
  return Word(letters);
}

// Greedy random code: draws words and keeps those dichotomous with all kept.
inline pbx::Code random_code(int dim, int pairs, std::size_t tries, std::mt19937_64& rng) {
  std::vector<Word> words;
  for (std::size_t t = 0; t < tries; ++t) {
    const Word w = random_word(dim, pairs, rng);
    if (std::all_of(words.begin(), words.end(), [&](const Word& x) { return x != w && dichotomous(x, w); })) {
      words.push_back(w);
    }
  }
  return pbx::Code::from_words(dim, std::move(words));
}

// Every word of dimension d over the first `pairs` pairs.
inline std::vector<Word> words(int dim, int pairs) {
  std::vector<Word> out;
  std::vector<Letter> letters(static_cast<std::size_t>(dim), 0);
  for (;;) {
    out.push_back(Word(letters));
    int i = dim - 1;
    for (; i >= 0; --i) {
      if (++letters[static_cast<std::size_t>(i)] < 2 * pairs) break;
      letters[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Word w(const char* text) { return pbx::parse_word(text); }

inline pbx::Code code(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (auto t : texts) out.push_back(pbx::parse_word(t));
  return pbx::Code::from_words(std::move(out));
}

}  // namespace naive
