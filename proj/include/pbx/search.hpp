#pragma once

// Enumeration of covers and codes: twin-pair-free minimal covers of a word,
// covers of codes by joining per-word families, the cover pruning bound,
// staged cover construction around a fixed partial code, reconstruction of
// an equivalent partner code from binary codes, and plain extensions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pbx/code.hpp"
#include "pbx/moves.hpp"

namespace pbx {

/// Every word of S^d over the alphabet, ascending. Throws above `cap`.
std::vector<Word> all_words(int dim, const Alphabet& alphabet, std::uint64_t cap = std::uint64_t{1} << 22);

/// x = (x_0, ..., x_{d-1}) with sum x_i 2^i = 2^d and sum x_i = k: the
/// possible counts of cover words with i letters b.
std::vector<std::vector<int>> weight_compositions(int dim, int k);

/// The two-word starting codes {v, w} of twin-pair-free covers of b...b:
/// v and w agree off an odd number c >= 3 of positions where they carry
/// a / a'; the agreeing positions hold a or b. For d = 5 these are the four
/// codes {aaaaa, a'a'a'aa}, {aaaab, a'a'a'ab}, {aaabb, a'a'a'bb} and
/// {aaaaa, a'a'a'a'a'}.
std::vector<Code> default_cover_seeds(int dim);

struct CoverWordOptions {
  std::vector<Code> seeds;  // empty means default_cover_seeds(dim)
  /// Place the seed only at the lowest occupied level of each composition
  /// (the default). When false, any level with x_i >= 2 may hold
  /// it.
  bool seed_at_lowest_level = true;
  int threads = 1;
};

/// All k-word twin-pair-free minimal covers of u = b...b that contain one of
/// the seeds, as plain sets (no isomorphism reduction), sorted.
std::vector<Code> cover_word(const Word& u, int k, const Alphabet& alphabet, const CoverWordOptions& options = {});

/// Every minimal cover of u = b...b with exactly k words (optionally only the
/// twin-pair-free ones), found as exact covers of the cells of u in the
/// explicit realization. Independent of the weight function and of
/// cover_word. Practical up to 2^14 cells inside u.
std::vector<Code> minimal_covers(const Word& u, int k, const Alphabet& alphabet, bool twin_free);
/// minimal_covers(u, k, alphabet, true) for k >= 2.
std::vector<Code> twin_free_covers_brute_force(const Word& u, int k, const Alphabet& alphabet);

/// Covers of the code U obtained by joining one member of each per-word
/// family: C_1 u (C_2 \ C_1) u ... kept when it is a code of at most
/// `max_size` words. families[i] must list minimal covers of U[i].
std::vector<Code> cover_code(const Code& u, std::size_t max_size, std::span<const std::vector<Code>> families);
/// The same join computed pairwise without indexing. Reference route.
std::vector<Code> cover_code_naive(const Code& u, std::size_t max_size, std::span<const std::vector<Code>> families);

/// cover_bound(X, Y, Z, n): 1 when the n heaviest admissible words of Z could still
/// make up the weight Y lacks under X, else 0.
int cover_bound(const Code& x, const Code& y, std::span<const Word> z, std::size_t n);

struct NaturalCoverOptions {
  std::size_t dot_threshold = 5;    // density bound used by the dot-cover test
  std::size_t final_density = 4;    // delta(C, V) bound at the last stage
  std::size_t dot_budget = 100'000;  // closure budget per dot-cover test
};

struct NaturalCoverResult {
  std::vector<Code> covers;  // sorted
  std::size_t undecided = 0;  // dot-cover tests that ran out of budget (excluded)
};

/// Minimal covers C of V with W a subset of C and |C| <= |W| + n, grown one
/// word at a time with cover_bound pruning. A cover completed before the last
/// stage is kept when V is dot-covered by it; one completed at the last
/// stage when delta(C, V) >= final_density.
NaturalCoverResult cover_code_natural(const Code& v, const Code& w, std::size_t n, const Alphabet& alphabet,
                                      const NaturalCoverOptions& options = {});

/// Codes V equivalent to W with R a subset of V and delta(V, W) >=
/// min_density, assembled one word per missing binary code.
std::vector<Code> find_second_code(const Code& w, const Code& r, const Alphabet& alphabet,
                                   std::size_t min_density = 5);

/// All codes C u {n new words}. With a flat constraint (i, s) every new word
/// has letter s at position i.
std::vector<Code> extensions(const Code& c, std::size_t n, const Alphabet& alphabet,
                             std::optional<std::pair<int, Letter>> flat_constraint = std::nullopt);

}  // namespace pbx
