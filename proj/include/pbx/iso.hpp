#pragma once

// The group G(S^d) of position permutations followed by per-position
// letter bijections that commute with complementation, its stabilizers,
// and orbit canonicalization.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pbx/code.hpp"

namespace pbx {

/// A bijection of the letters that maps complementary pairs to
/// complementary pairs and fixes '*'.
class LetterMap {
 public:
  LetterMap();  // identity

  /// Pair j goes to pair `pair_image[j]`, swapping primed and unprimed when
  /// bit j of `flips` is set. Pairs beyond the span are fixed.
  static LetterMap from_pairs(std::span<const int> pair_image, std::uint32_t flips);

  Letter operator()(Letter s) const noexcept { return s == kStar ? kStar : image_[s]; }
  LetterMap inverse() const;
  /// (this after other)(s) = this(other(s)).
  LetterMap after(const LetterMap& other) const;

  friend bool operator==(const LetterMap&, const LetterMap&) = default;

 private:
  std::array<Letter, 2 * kMaxPairs> image_{};
};

/// Every complement-respecting bijection of the alphabet: k! * 2^k maps.
std::vector<LetterMap> all_letter_maps(const Alphabet& alphabet);

/// g = h o sigma-bar: g(v)_j = h_j(v_{sigma(j)}).
struct GroupElement {
  int dim = 0;
  std::array<std::uint8_t, kMaxDim> sigma{};
  std::array<LetterMap, kMaxDim> maps{};

  static GroupElement identity(int dim);

  Word apply(const Word& v) const noexcept {
    std::uint64_t bits = 0;
    for (int j = 0; j < dim; ++j) {
      bits |= std::uint64_t{maps[j](v[sigma[j]])} << Word::shift(j);
    }
    return Word::from_bits(dim, bits);
  }
  /// (this o other)(v) = this(other(v)).
  GroupElement compose(const GroupElement& other) const;
  GroupElement inverse() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

Word apply(const GroupElement& g, const Word& v);
Code apply_code(const GroupElement& g, const Code& v);

/// A finite group given as a union of products: for each listed position
/// permutation, an independent candidate list of letter maps per position,
/// optionally filtered to the elements that fix a code.
class GroupEnumerator {
 public:
  static GroupEnumerator full(int dim, const Alphabet& alphabet);
  static GroupEnumerator stabilizer_of_word(const Word& v, const Alphabet& alphabet);
  static GroupEnumerator stabilizer_of_code(const Code& p, const Alphabet& alphabet);

  int dim() const noexcept { return dim_; }
  /// Number of elements visited before filtering.
  std::uint64_t bound() const;
  /// Exact group order (runs the filter when there is one).
  std::uint64_t count() const;
  /// Materializes the elements; throws if there are more than `cap`.
  std::vector<GroupElement> elements(std::uint64_t cap = 1'000'000) const;

  /// Calls f(g) for every element; stops early when f returns false.
  template <class F>
  void for_each(F&& f) const {
    for (const Branch& branch : branches_) {
      std::array<std::size_t, kMaxDim> idx{};
      GroupElement g;
      g.dim = dim_;
      g.sigma = branch.sigma;
      bool empty = false;
      for (int j = 0; j < dim_; ++j) {
        if (branch.candidates[j].empty()) empty = true;
      }
      if (empty) continue;
      for (int j = 0; j < dim_; ++j) g.maps[j] = branch.candidates[j][0];
      for (;;) {
        if (!fixed_ || apply_code(g, *fixed_) == *fixed_) {
          if (!f(static_cast<const GroupElement&>(g))) return;
        }
        int j = dim_ - 1;
        for (; j >= 0; --j) {
          if (++idx[j] < branch.candidates[j].size()) {
            g.maps[j] = branch.candidates[j][idx[j]];
            break;
          }
          idx[j] = 0;
          g.maps[j] = branch.candidates[j][0];
        }
        if (j < 0) break;
      }
    }
  }

 private:
  struct Branch {
    std::array<std::uint8_t, kMaxDim> sigma{};
    std::array<std::vector<LetterMap>, kMaxDim> candidates;
  };

  explicit GroupEnumerator(int dim) : dim_(dim) {}

  int dim_;
  std::vector<Branch> branches_;
  std::optional<Code> fixed_;
};

/// Lexicographic minimum of g(V) over the group.
Code canonical_form(const Code& v, const GroupEnumerator& group);

struct OrbitClass {
  Code representative;  // canonical form
  std::size_t members = 0;  // family members in this orbit
};
/// One class per orbit met by the family, sorted by representative.
std::vector<OrbitClass> classify_orbits(std::span<const Code> family, const GroupEnumerator& group);
/// Canonical representative of every orbit met by the family, sorted.
std::vector<Code> dedup_orbits(std::span<const Code> family, const GroupEnumerator& group);

/// Every image g(V), sorted and without repeats.
std::vector<Code> orbit(const Code& v, const GroupEnumerator& group);

/// Relabels letter pairs per position in order of first appearance. Cheap,
/// and equal outputs do imply isomorphism, but it is NOT a canonical form:
/// isomorphic codes may map to different outputs.
Code greedy_relabel(const Code& v);

/// Whether the pairs {x, y} and {a, b} are related by some element of the
/// full group: both have the same number of equal, complementary and
/// otherwise-different positions.
bool pairs_isomorphic(const Word& x, const Word& y, const Word& a, const Word& b);

}  // namespace pbx
