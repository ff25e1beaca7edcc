#include "pbx/word.hpp"

namespace pbx {

std::string letter_to_string(Letter s) {
  if (s == kStar) return "*";
  std::string out(1, static_cast<char>('a' + pair_of(s)));
  if (is_primed(s)) out += '\'';
  return out;
}

Alphabet::Alphabet(int pair_count) : pair_count_(pair_count) {
  if (pair_count < 1 || pair_count > kMaxPairs) {
    throw std::invalid_argument("alphabet pair count must be in [1, 8], got " + std::to_string(pair_count));
  }
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(letter_count());
  for (int s = 0; s < letter_count(); ++s) out.push_back(static_cast<Letter>(s));
  return out;
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word::Word(std::span<const Letter> letters) {
  if (letters.empty() || letters.size() > static_cast<std::size_t>(kMaxDim)) {
    throw std::invalid_argument("word dimension must be in [1, 8]");
  }
  dim_ = static_cast<std::uint8_t>(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter s = letters[i];
    if (s != kStar && s >= 2 * kMaxPairs) throw std::invalid_argument("letter out of range");
    bits_ |= std::uint64_t{s} << shift(static_cast<int>(i));
  }
}

Word Word::from_bits(int dim, std::uint64_t bits) {
  Word w;
  w.dim_ = static_cast<std::uint8_t>(dim);
  w.bits_ = bits;
  return w;
}

Word Word::constant(int dim, Letter s) {
  std::vector<Letter> letters(static_cast<std::size_t>(dim), s);
  return Word(letters);
}

Word Word::without(int i) const {
  std::vector<Letter> out;
  for (int j = 0; j < dim_; ++j) {
    if (j != i) out.push_back((*this)[j]);
  }
  return Word(out);
}

Word Word::inserted(int i, Letter s) const {
  std::vector<Letter> out = letters();
  out.insert(out.begin() + i, s);
  return Word(out);
}

bool Word::proper() const noexcept {
  for (int i = 0; i < dim_; ++i) {
    if ((*this)[i] == kStar) return false;
  }
  return true;
}

bool Word::over(const Alphabet& alphabet) const noexcept {
  for (int i = 0; i < dim_; ++i) {
    const Letter s = (*this)[i];
    if (s != kStar && !alphabet.contains(s)) return false;
  }
  return true;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = (*this)[i];
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (int i = 0; i < w.dim(); ++i) out += letter_to_string(w[i]);
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '*') {
      letters.push_back(kStar);
    } else if (c >= 'a' && c <= 'h') {
      bool primed = i + 1 < text.size() && text[i + 1] == '\'';
      if (primed) ++i;
      letters.push_back(make_letter(c - 'a', primed));
    } else {
      throw std::invalid_argument("bad letter '" + std::string(1, c) + "' in word \"" + std::string(text) + "\"");
    }
  }
  if (letters.empty()) throw std::invalid_argument("empty word");
  if (letters.size() > static_cast<std::size_t>(kMaxDim)) {
    throw std::invalid_argument("word \"" + std::string(text) + "\" longer than 8 letters");
  }
  return Word(letters);
}

}  // namespace pbx
