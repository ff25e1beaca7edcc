#include <algorithm>

#include "pbx/moves.hpp"

namespace pbx {

FlipResult normalize_twin_free_covers(const Code& c, const Code& p) {
  if (p.empty() || p.dim() != c.dim()) throw std::invalid_argument("normalization needs a non-empty P of equal dimension");
  if (!is_simple(p)) throw std::invalid_argument("P is not a simple code");
  if (!code_covered(p, c)) throw std::invalid_argument("C does not cover P");

  // The letter pair P uses at each position; offending twin pairs are
  // re-lettered to it, after which one of the two new words is dichotomous
  // with every word of P.
  std::vector<int> designated(static_cast<std::size_t>(c.dim()));
  for (int i = 0; i < c.dim(); ++i) designated[static_cast<std::size_t>(i)] = pairs_at(p, i).front();

  FlipResult out{c, {}};
  // Each flip moves two (word, position) incidences onto a designated pair
  // and none off it, so |C| * d flips always suffice.
  const std::size_t bound = c.size() * static_cast<std::size_t>(c.dim());
  for (;;) {
    std::optional<FlipMove> next;
    for (const Word& s : p) {
      const auto pairs = twin_pairs(minimal_cover_within(s, out.code));
      if (!pairs.empty()) {
        const TwinPair& tp = pairs.front();
        next = FlipMove::make(tp.v, tp.w, designated[static_cast<std::size_t>(tp.direction)]);
        break;
      }
    }
    if (!next) break;
    if (out.trace.size() >= bound) throw std::logic_error("twin pair normalization did not terminate");
    out.code = apply_flip(out.code, *next);
    out.trace.push_back(*next);
  }
  return out;
}

}  // namespace pbx
