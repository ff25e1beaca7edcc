#pragma once

// Explicit equicomplementary realization. Each axis is the set ES of
// complement transversals of the alphabet (one letter from every pair), so
// a d-dimensional realization has (2^k)^d cells. Used as an independent
// check of the weight-based cover criterion; it never calls g.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pbx/code.hpp"

namespace pbx {

class Realization {
 public:
  /// Throws std::invalid_argument when the cell count exceeds `max_cells`.
  Realization(const Code& code, const Alphabet& alphabet, std::uint64_t max_cells = kDefaultMaxCells);

  static constexpr std::uint64_t kDefaultMaxCells = std::uint64_t{1} << 24;

  std::uint64_t cell_count() const noexcept { return cells_.size(); }
  /// Cells of the box of w, as indices.
  std::vector<std::uint64_t> box(const Word& w) const;
  bool covered(const Word& w) const;
  /// Number of code boxes that intersect the box of w.
  std::size_t meeting_count(const Word& w) const;

 private:
  bool axis_contains(std::uint32_t transversal, Letter s) const noexcept {
    return ((transversal >> pair_of(s)) & 1U) == (is_primed(s) ? 1U : 0U);
  }

  int dim_;
  Alphabet alphabet_;
  std::vector<std::vector<std::uint64_t>> boxes_;
  std::vector<bool> cells_;
};

bool oracle_is_covered(const Word& w, const Code& code, const Alphabet& alphabet);

}  // namespace pbx
