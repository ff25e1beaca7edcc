#pragma once

// Predicates and weights on words and codes: dichotomy, twin pairs, the
// weight g(v, w), cover weights, densities, binary codes and letter
// distributions.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pbx/code.hpp"
#include "pbx/word.hpp"

namespace pbx {

/// True iff v_i = w_i' at some position. Words may contain '*', which is
/// never complementary to a letter.
inline bool is_dichotomous_unchecked(const Word& v, const Word& w) noexcept {
  const std::uint64_t x = v.bits() ^ w.bits() ^ lanes::active_ones(v.dim());
  return (lanes::zero_lanes(x) & lanes::active_high(v.dim())) != 0;
}

/// Direction of the twin pair {v, w}, or nothing if they are not a twin pair.
inline std::optional<int> twin_direction_unchecked(const Word& v, const Word& w) noexcept {
  const std::uint64_t x = v.bits() ^ w.bits();
  const std::uint64_t diff = ~lanes::zero_lanes(x) & lanes::active_high(v.dim());
  if (diff == 0 || (diff & (diff - 1)) != 0) return std::nullopt;
  const int lane = __builtin_clzll(diff) / 8;
  if (x != (std::uint64_t{1} << Word::shift(lane))) return std::nullopt;
  if (v[lane] == kStar) return std::nullopt;
  return lane;
}

/// g(v, w) for proper words: product over positions of 2 (equal), 0
/// (complementary) or 1 (otherwise).
inline std::uint64_t g_weight_unchecked(const Word& v, const Word& w) noexcept {
  if (is_dichotomous_unchecked(v, w)) return 0;
  const std::uint64_t eq = lanes::zero_lanes(v.bits() ^ w.bits()) & lanes::active_high(v.dim());
  return std::uint64_t{1} << __builtin_popcountll(eq);
}

bool is_dichotomous(const Word& v, const Word& w);
std::optional<int> twin_pair_direction(const Word& v, const Word& w);
std::uint64_t g_weight(const Word& v, const Word& w);

/// |w|_V, the sum of g(v, w) over v in V.
std::uint64_t cover_weight(const Word& w, const Code& v);
/// w is covered by V iff |w|_V = 2^d.
bool is_covered(const Word& w, const Code& v);
bool code_covered(const Code& v, const Code& w);
/// Mutual covering. Disjointness is a separate predicate.
bool are_equivalent(const Code& v, const Code& w);
bool are_disjoint(const Code& v, const Code& w);

/// Number of words of V that meet w (g > 0).
std::size_t meeting_count(const Code& v, const Word& w);
/// delta(V, W) = min over w in W of meeting_count(V, w). Throws on empty W.
std::size_t density(const Code& v, const Code& w);
/// Delta(V, W) = min(delta(V, W), delta(W, V)).
std::size_t common_density(const Code& v, const Code& w);

/// {u in W : g(u, w) > 0}. Throws unless w is covered by W.
Code minimal_cover_within(const Word& w, const Code& code);

/// All twin pairs of a code as (v, w, direction) with v < w.
struct TwinPair {
  Word v;
  Word w;
  int direction;
  friend auto operator<=>(const TwinPair&, const TwinPair&) = default;
};
std::vector<TwinPair> twin_pairs(const Code& c);
bool has_twin_pair(const Code& c);

/// Binary code beta(v) with b(unprimed) = 0 and b(primed) = 1, packed with
/// position i at bit d-1-i (so integer order matches lexicographic order).
std::uint32_t beta(const Word& v);
std::set<std::uint32_t> beta_set(const Code& c);
std::string beta_to_string(std::uint32_t bits, int dim);

/// D_i(V): one (|V^{i,s_j}|, |V^{i,s_j'}|) entry per alphabet pair.
struct Distribution {
  int position = 0;
  std::vector<std::pair<std::size_t, std::size_t>> counts;
  friend bool operator==(const Distribution&, const Distribution&) = default;
};
Distribution distribution(const Code& c, int position, const Alphabet& alphabet);
bool is_simple(const Code& c);
/// A witness (i, s) with V = V^{i,s}, if any.
std::optional<std::pair<int, Letter>> is_flat(const Code& c);
/// Letter pairs that occur at a position, ascending.
std::vector<int> pairs_at(const Code& c, int position);

}  // namespace pbx
