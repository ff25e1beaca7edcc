#include "pbx/code.hpp"

#include <algorithm>
#include <string>

#include "pbx/cover.hpp"

namespace pbx {

Code Code::from_words(std::vector<Word> words) {
  if (words.empty()) throw std::invalid_argument("cannot infer dimension of an empty code");
  const int dim = words.front().dim();
  return from_words(dim, std::move(words));
}

Code Code::from_words(int dim, std::vector<Word> words) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("code dimension must be in [1, 8]");
  for (const Word& w : words) {
    if (w.dim() != dim) {
      throw std::invalid_argument("word " + to_string(w) + " has dimension " + std::to_string(w.dim()) +
                                  ", expected " + std::to_string(dim));
    }
    if (!w.proper()) throw std::invalid_argument("word " + to_string(w) + " contains '*'");
  }
  std::sort(words.begin(), words.end());
  if (auto dup = std::adjacent_find(words.begin(), words.end()); dup != words.end()) {
    throw std::invalid_argument("duplicate word " + to_string(*dup));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (!is_dichotomous_unchecked(words[i], words[j])) {
        throw std::invalid_argument("words " + to_string(words[i]) + " and " + to_string(words[j]) +
                                    " are not dichotomous");
      }
    }
  }
  return Code(dim, std::move(words));
}

Code Code::unchecked(int dim, std::vector<Word> sorted_words) { return Code(dim, std::move(sorted_words)); }

bool Code::contains(const Word& w) const noexcept { return std::binary_search(words_.begin(), words_.end(), w); }

Code Code::with(const Word& w) const {
  std::vector<Word> out = words_;
  out.push_back(w);
  return from_words(dim_, std::move(out));
}

Code Code::without(const Word& w) const {
  std::vector<Word> out;
  out.reserve(words_.size());
  for (const Word& u : words_) {
    if (u != w) out.push_back(u);
  }
  return Code(dim_, std::move(out));
}

std::size_t CodeHash::operator()(const Code& c) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(c.dim());
  for (const Word& w : c) {
    h ^= w.bits() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Alphabet alphabet_of(const Code& c) {
  int pairs = 1;
  for (const Word& w : c) {
    for (int i = 0; i < w.dim(); ++i) {
      if (w[i] != kStar) pairs = std::max(pairs, pair_of(w[i]) + 1);
    }
  }
  return Alphabet(pairs);
}

Alphabet alphabet_of(std::span<const Code> codes) {
  int pairs = 1;
  for (const Code& c : codes) pairs = std::max(pairs, alphabet_of(c).pair_count());
  return Alphabet(pairs);
}

}  // namespace pbx
