#include <algorithm>

#include "pbx/moves.hpp"

namespace pbx {

Code layer(const Code& u, int i, Letter s) {
  if (u.dim() < 2) throw std::invalid_argument("layers need dimension at least 2");
  if (i < 0 || i >= u.dim()) throw std::invalid_argument("position out of range");
  std::vector<Word> words;
  for (const Word& w : u) {
    if (w[i] == s) words.push_back(w.without(i));
  }
  std::sort(words.begin(), words.end());
  return Code::unchecked(u.dim() - 1, std::move(words));
}

FlipResult merge_layers(const Code& u, int i, Letter s, Letter t) {
  if (pair_of(s) == pair_of(t)) throw std::invalid_argument("merge target must be a different letter pair");
  const Code upper = layer(u, i, s);
  if (upper != layer(u, i, complement(s))) {
    throw std::invalid_argument("layers " + letter_to_string(s) + " and " + letter_to_string(complement(s)) +
                                " differ");
  }
  FlipResult out{u, {}};
  for (const Word& rest : upper) {
    const FlipMove m = FlipMove::make(rest.inserted(i, s), rest.inserted(i, complement(s)), pair_of(t));
    out.code = apply_flip(out.code, m);
    out.trace.push_back(m);
  }
  return out;
}

namespace {

FlipMove lift(const FlipMove& m, int i, Letter s) {
  FlipMove out = m;
  out.v = m.v.inserted(i, s);
  out.w = m.w.inserted(i, s);
  out.direction = m.direction >= i ? m.direction + 1 : m.direction;
  return out;
}

}  // namespace

SimplifyResult simplify_tiling(const Code& u, const Alphabet& alphabet, std::size_t budget) {
  if (!u.is_cube_tiling()) throw std::invalid_argument("simplification needs a cube tiling code");
  SimplifyResult out{Verdict::yes, u, {}};
  // Letters at a position only ever shrink: the layer being rewritten ends
  // equal to its partner layer, whose letters are already present. So the
  // loop ends after at most d * k rounds.
  const std::size_t max_rounds = static_cast<std::size_t>(u.dim() * alphabet.pair_count());
  for (std::size_t round = 0;; ++round) {
    if (round > max_rounds) throw std::logic_error("layer reduction did not terminate");
    int position = -1;
    std::vector<int> present;
    for (int i = 0; i < out.code.dim(); ++i) {
      present = pairs_at(out.code, i);
      if (present.size() > 1) {
        position = i;
        break;
      }
    }
    if (position < 0) return out;

    const Letter s = make_letter(present.back());
    const Letter keep = make_letter(present.front());
    const Code from = layer(out.code, position, s);
    const Code to = layer(out.code, position, complement(s));
    const SearchResult path = is_strongly_equivalent(from, to, alphabet, budget);
    if (path.verdict != Verdict::yes) {
      out.verdict = path.verdict;
      return out;
    }
    for (const FlipMove& m : path.trace) {
      const FlipMove lifted = lift(m, position, s);
      out.code = apply_flip(out.code, lifted);
      out.trace.push_back(lifted);
    }
    FlipResult merged = merge_layers(out.code, position, s, keep);
    out.code = std::move(merged.code);
    out.trace.insert(out.trace.end(), merged.trace.begin(), merged.trace.end());
  }
}

}  // namespace pbx
