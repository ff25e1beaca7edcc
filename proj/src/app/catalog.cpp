#include <algorithm>

#include "pbx/app.hpp"
#include "pbx/cover.hpp"

namespace pbx {

namespace {

Code code_of(std::initializer_list<std::string_view> words) {
  std::vector<Word> out;
  for (auto w : words) out.push_back(parse_word(w));
  return Code::from_words(std::move(out));
}

// "aa" + (dim - 2) b's, and so on.
Word padded(std::string_view head, int dim) {
  const Word h = parse_word(head);
  if (h.dim() > dim) throw std::invalid_argument("dimension too small for this cover");
  std::vector<Letter> letters = h.letters();
  letters.resize(static_cast<std::size_t>(dim), make_letter(1));
  return Word(letters);
}

Code padded_code(std::initializer_list<std::string_view> heads, int dim) {
  std::vector<Word> out;
  for (auto h : heads) out.push_back(padded(h, dim));
  return Code::from_words(std::move(out));
}

}  // namespace

Code special_pair_v() {
  return code_of({"aa'bb'", "abb'a", "ab'b'b'", "a'ab'b'", "a'a'ab'", "a'bb'b", "babb'", "bbbb", "bb'a'b", "b'aba'",
                  "b'a'bb", "b'b'b'b"});
}

Code special_pair_w() {
  return code_of({"a'a'a'b", "a'baa'", "baa'a", "aa'a'a", "a'aa'a'", "abba'", "bbaa", "ab'a'a'", "b'ab'a", "b'a'aa",
                  "b'b'aa'", "bb'ab'"});
}

Code embed_with_suffix(const Code& c, const Word& suffix) {
  if (!suffix.proper()) throw std::invalid_argument("suffix must be a proper word");
  if (c.dim() + suffix.dim() > kMaxDim) throw std::invalid_argument("embedded dimension too large");
  std::vector<Word> out;
  for (const Word& w : c) {
    std::vector<Letter> letters = w.letters();
    for (Letter s : suffix.letters()) letters.push_back(s);
    out.push_back(Word(letters));
  }
  return Code::from_words(c.dim() + suffix.dim(), std::move(out));
}

std::vector<Code> small_covers_of_b(int dim) {
  if (dim < 2) throw std::invalid_argument("these covers need dimension at least 2");
  return {
      padded_code({"aa", "aa'", "a'a", "a'a'"}, dim),
      padded_code({"aa", "aa'", "a'c", "a'c'"}, dim),
      padded_code({"aa", "aa'", "a'b"}, dim),
      padded_code({"a", "a'"}, dim),
  };
}

std::vector<FlipMove> small_cover2_flips(int dim) {
  const int b = 1;
  // the last displayed arrow of the original sequence is two flips
  return {
      FlipMove::make(padded("aa", dim), padded("aa'", dim), b),
      FlipMove::make(padded("a'c", dim), padded("a'c'", dim), b),
      FlipMove::make(padded("ab", dim), padded("a'b", dim), b),
      FlipMove::make(padded("ab'", dim), padded("a'b'", dim), b),
  };
}

Code flip_example_v() { return code_of({"aa", "aa'", "a'b", "a'b'"}); }

Code flip_example_w() { return code_of({"cc", "c'c", "bc'", "b'c'"}); }

std::vector<FlipMove> flip_example_trace() {
  const int b = 1;
  const int c = 2;
  return {
      FlipMove::make(parse_word("aa"), parse_word("aa'"), c),
      FlipMove::make(parse_word("a'b"), parse_word("a'b'"), c),
      FlipMove::make(parse_word("ac"), parse_word("a'c"), c),
      FlipMove::make(parse_word("ac'"), parse_word("a'c'"), b),
  };
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"special-v", "twin-pair-free 12-word code, equivalent to special-w and disjoint from it",
                 special_pair_v(), {}});
  out.push_back({"special-w", "twin-pair-free 12-word code, equivalent to special-v and disjoint from it",
                 special_pair_w(), {}});
  out.push_back({"example1-v", "cube tiling code in d = 2; the trace flips it to example1-w", flip_example_v(),
                 flip_example_trace()});
  out.push_back({"example1-w", "cube tiling code in d = 2 reached from example1-v", flip_example_w(), {}});
  const auto covers = small_covers_of_b(5);
  const char* notes[] = {"four words, two twin pairs", "four words using a third letter pair",
                         "three words", "two words"};
  for (std::size_t i = 0; i < covers.size(); ++i) {
    CatalogEntry e{"small-cover-" + std::to_string(i + 1),
                   std::string("minimal cover of bbbbb: ") + notes[i], covers[i], {}};
    if (i == 1) e.trace = small_cover2_flips(5);
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<CatalogEntry> find_catalog_entry(std::string_view name) {
  for (auto& e : catalog()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

Word random_word(int dim, const Alphabet& alphabet, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, alphabet.letter_count() - 1);
  std::vector<Letter> letters;
  for (int i = 0; i < dim; ++i) letters.push_back(static_cast<Letter>(letter(rng)));
  return Word(letters);
}

Code random_tiling(int dim, const Alphabet& alphabet, std::mt19937_64& rng, int flips) {
  std::uniform_int_distribution<int> pair(0, alphabet.pair_count() - 1);
  std::vector<Letter> base;
  for (int i = 0; i < dim; ++i) base.push_back(make_letter(pair(rng)));
  std::vector<Word> words;
  for (std::uint32_t bits = 0; bits < (1U << dim); ++bits) {
    std::vector<Letter> letters = base;
    for (int i = 0; i < dim; ++i) {
      if ((bits >> i) & 1U) letters[static_cast<std::size_t>(i)] = complement(letters[static_cast<std::size_t>(i)]);
    }
    words.push_back(Word(letters));
  }
  Code c = Code::from_words(dim, std::move(words));
  for (int n = 0; n < flips; ++n) {
    const auto moves = flip_moves(c, alphabet);
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    c = apply_flip(c, moves[pick(rng)]);
  }
  return c;
}

}  // namespace pbx
