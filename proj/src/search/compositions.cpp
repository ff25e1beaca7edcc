#include <algorithm>
#include <stdexcept>

#include "pbx/search.hpp"

namespace pbx {

std::vector<Word> all_words(int dim, const Alphabet& alphabet, std::uint64_t cap) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
  const auto letters = alphabet.letters();
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) {
    total *= letters.size();
    if (total > cap) throw std::invalid_argument("word space too large to enumerate");
  }
  std::vector<Word> out;
  out.reserve(total);
  std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
  for (;;) {
    std::uint64_t bits = 0;
    for (int i = 0; i < dim; ++i) bits |= std::uint64_t{letters[idx[i]]} << Word::shift(i);
    out.push_back(Word::from_bits(dim, bits));
    int i = dim - 1;
    for (; i >= 0; --i) {
      if (++idx[i] < letters.size()) break;
      idx[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

namespace {

void compose(int dim, int level, int remaining_words, std::int64_t remaining_weight, std::vector<int>& x,
             std::vector<std::vector<int>>& out) {
  if (level < 0) {
    if (remaining_words == 0 && remaining_weight == 0) out.push_back(x);
    return;
  }
  const std::int64_t unit = std::int64_t{1} << level;
  // every word left below this level weighs at least 1
  for (int n = 0; n <= remaining_words; ++n) {
    const std::int64_t rest = remaining_weight - n * unit;
    if (rest < 0) break;
    const int words_left = remaining_words - n;
    if (rest < words_left) continue;
    if (level > 0 && rest > words_left * (unit / 2)) continue;
    x[static_cast<std::size_t>(level)] = n;
    compose(dim, level - 1, words_left, rest, x, out);
  }
  x[static_cast<std::size_t>(level)] = 0;
}

}  // namespace

std::vector<std::vector<int>> weight_compositions(int dim, int k) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
  if (k < 1) throw std::invalid_argument("cover size must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> x(static_cast<std::size_t>(dim), 0);
  // x_d (the word u itself) is excluded: it only occurs in the 1-word cover
  compose(dim, dim - 1, k, std::int64_t{1} << dim, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Code> default_cover_seeds(int dim) {
  const Letter a = make_letter(0);
  const Letter b = make_letter(1);
  std::vector<Code> out;
  for (int c = 3; c <= dim; c += 2) {
    for (int nb = 0; nb <= dim - c; ++nb) {
      std::vector<Letter> v(static_cast<std::size_t>(dim), a);
      for (int i = dim - nb; i < dim; ++i) v[static_cast<std::size_t>(i)] = b;
      std::vector<Letter> w = v;
      for (int i = 0; i < c; ++i) w[static_cast<std::size_t>(i)] = complement(a);
      out.push_back(Code::from_words(dim, {Word(v), Word(w)}));
    }
  }
  return out;
}

}  // namespace pbx
