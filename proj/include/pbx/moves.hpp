#pragma once

// Glue-and-cut calculus. A flip replaces a twin pair {v, w} of direction i
// by the twin pair {r, q} that agrees with v off position i and carries a
// different complementary letter pair {t, t'} at i. Flips keep a code a
// code, keep its size, and keep the union of its realization unchanged.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbx/code.hpp"
#include "pbx/cover.hpp"

namespace pbx {

enum class Verdict { yes, no, budget_exceeded };
std::string_view to_string(Verdict v);

inline constexpr std::size_t kDefaultStateBudget = 1'000'000;

struct FlipMove {
  Word v;  // v < w
  Word w;
  int direction = 0;
  int target_pair = 0;

  /// Validates that {a, b} is a twin pair and that the target pair differs
  /// from the pair being replaced.
  static FlipMove make(const Word& a, const Word& b, int target_pair);
  /// Move that turns the pair {a, b} into the pair {r, q}.
  static FlipMove between(const Word& a, const Word& b, const Word& r, const Word& q);

  Word r() const noexcept { return v.with(direction, make_letter(target_pair)); }
  Word q() const noexcept { return v.with(direction, make_letter(target_pair, true)); }
  FlipMove inverse() const;

  friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

Word glue(const Word& v, const Word& w);
std::pair<Word, Word> cut(const Word& u, int i, Letter t);

Code apply_flip(const Code& code, const FlipMove& m);
/// Applies every move in order; throws std::invalid_argument naming the
/// first illegal step.
Code replay(const Code& seed, std::span<const FlipMove> trace);

/// All legal single flips of a code, in deterministic order.
std::vector<FlipMove> flip_moves(const Code& code, const Alphabet& alphabet);
/// Distinct codes one flip away, sorted. Never contains `code` itself.
std::vector<Code> neighbors(const Code& code, const Alphabet& alphabet);

struct ClosureResult {
  std::vector<Code> states;  // sorted
  bool exhausted = false;
  std::size_t frontier_count = 0;  // states discovered but not expanded
  std::size_t state_budget = 0;
};
ClosureResult closure(const Code& seed, const Alphabet& alphabet, std::size_t budget = kDefaultStateBudget);

struct SearchResult {
  Verdict verdict = Verdict::no;
  std::vector<FlipMove> trace;  // replayable from the seed when non-empty
  std::size_t states_explored = 0;
  bool exhausted = false;
};

/// yes iff W is reachable from V by flips. Throws unless V and W are
/// equivalent.
SearchResult is_strongly_equivalent(const Code& v, const Code& w, const Alphabet& alphabet,
                                    std::size_t budget = kDefaultStateBudget);

/// Decides {p} dot-covered by V: "no" as soon as a reachable code has fewer
/// than `threshold` words meeting p (trace leads there), "yes" when the
/// closure is exhausted without one. Throws unless p is covered by V.
SearchResult dot_covers(const Word& p, const Code& v, const Alphabet& alphabet, std::size_t threshold = 5,
                        std::size_t budget = kDefaultStateBudget);

/// Flip sequence, acting inside the minimal cover of w, after which the
/// code contains w. Requires at most four words of V meeting w.
std::vector<FlipMove> extract_word(const Code& v, const Word& w, const Alphabet& alphabet,
                                   std::size_t budget = kDefaultStateBudget);

struct FlipResult {
  Code code;
  std::vector<FlipMove> trace;
};

/// Re-letters twin pairs inside the minimal covers of the words of a simple
/// code P until none of those covers holds a twin pair.
FlipResult normalize_twin_free_covers(const Code& c, const Code& p);

/// U^{i,s} restricted to the other positions.
Code layer(const Code& u, int i, Letter s);
/// Flips every twin pair of U^{i,s} with U^{i,s'} to letters {t, t'}.
/// Requires layer(U, i, s) == layer(U, i, s').
FlipResult merge_layers(const Code& u, int i, Letter s, Letter t);

struct SimplifyResult {
  Verdict verdict = Verdict::no;
  Code code;  // simple code when verdict is yes, else the last state reached
  std::vector<FlipMove> trace;
};
/// Reduces a cube tiling code to a simple code by equalizing layers with
/// flips in dimension d-1 and merging them. `budget` bounds each layer
/// search.
SimplifyResult simplify_tiling(const Code& u, const Alphabet& alphabet, std::size_t budget = kDefaultStateBudget);

/// Trace text: one move per line, "i: v w -> r q" with 1-based i.
std::string format_trace(std::span<const FlipMove> trace);
std::vector<FlipMove> parse_trace(std::string_view text);

}  // namespace pbx
