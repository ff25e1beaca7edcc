#include <algorithm>
#include <string>

#include "pbx/moves.hpp"

namespace pbx {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::budget_exceeded:
      return "budget-exceeded";
  }
  return "?";
}

FlipMove FlipMove::make(const Word& a, const Word& b, int target_pair) {
  const auto dir = twin_pair_direction(a, b);
  if (!dir) throw std::invalid_argument(to_string(a) + " and " + to_string(b) + " are not a twin pair");
  if (!a.proper() || !b.proper()) throw std::invalid_argument("flip on an improper word");
  if (target_pair < 0 || target_pair >= kMaxPairs) throw std::invalid_argument("target pair out of range");
  if (target_pair == pair_of(a[*dir])) {
    throw std::invalid_argument("flip of " + to_string(a) + " " + to_string(b) + " keeps the same letter pair");
  }
  FlipMove m;
  m.v = std::min(a, b);
  m.w = std::max(a, b);
  m.direction = *dir;
  m.target_pair = target_pair;
  return m;
}

FlipMove FlipMove::between(const Word& a, const Word& b, const Word& r, const Word& q) {
  const FlipMove m = make(a, b, pair_of(r[twin_pair_direction(a, b).value_or(0)]));
  const auto rq = std::minmax(r, q);
  if (rq.first != m.r() || rq.second != m.q()) {
    throw std::invalid_argument(to_string(r) + " " + to_string(q) + " is not a cutting of the gluing of " +
                                to_string(a) + " " + to_string(b));
  }
  return m;
}

FlipMove FlipMove::inverse() const { return make(r(), q(), pair_of(v[direction])); }

Word glue(const Word& v, const Word& w) {
  const auto dir = twin_pair_direction(v, w);
  if (!dir) throw std::invalid_argument(to_string(v) + " and " + to_string(w) + " are not a twin pair");
  return v.with(*dir, kStar);
}

std::pair<Word, Word> cut(const Word& u, int i, Letter t) {
  if (i < 0 || i >= u.dim() || u[i] != kStar) {
    throw std::invalid_argument("cut position of " + to_string(u) + " does not hold '*'");
  }
  if (t == kStar) throw std::invalid_argument("cannot cut with '*'");
  return {u.with(i, t), u.with(i, complement(t))};
}

Code apply_flip(const Code& code, const FlipMove& m) {
  if (!code.contains(m.v) || !code.contains(m.w)) {
    throw std::invalid_argument("twin pair " + to_string(m.v) + " " + to_string(m.w) + " is not in the code");
  }
  std::vector<Word> words;
  words.reserve(code.size());
  for (const Word& u : code) {
    if (u != m.v && u != m.w) words.push_back(u);
  }
  words.push_back(m.r());
  words.push_back(m.q());
  std::sort(words.begin(), words.end());
  return Code::unchecked(code.dim(), std::move(words));
}

Code replay(const Code& seed, std::span<const FlipMove> trace) {
  Code state = seed;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    try {
      state = apply_flip(state, trace[k]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("step " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return state;
}

std::vector<FlipMove> flip_moves(const Code& code, const Alphabet& alphabet) {
  std::vector<FlipMove> out;
  for (const TwinPair& tp : twin_pairs(code)) {
    const int current = pair_of(tp.v[tp.direction]);
    for (int p = 0; p < alphabet.pair_count(); ++p) {
      if (p == current) continue;
      out.push_back(FlipMove{tp.v, tp.w, tp.direction, p});
    }
  }
  return out;
}

std::vector<Code> neighbors(const Code& code, const Alphabet& alphabet) {
  std::vector<Code> out;
  for (const FlipMove& m : flip_moves(code, alphabet)) out.push_back(apply_flip(code, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pbx
