#include "pbx/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace pbx {

Realization::Realization(const Code& code, const Alphabet& alphabet, std::uint64_t max_cells)
    : dim_(code.dim()), alphabet_(alphabet) {
  const std::uint64_t axis = std::uint64_t{1} << alphabet.pair_count();
  std::uint64_t total = 1;
  for (int i = 0; i < dim_; ++i) {
    if (total > max_cells / axis) throw std::invalid_argument("realization exceeds the cell cap");
    total *= axis;
  }
  cells_.assign(total, false);
  for (const Word& v : code) {
    if (!v.over(alphabet) || !v.proper()) throw std::invalid_argument("word outside alphabet: " + to_string(v));
    boxes_.push_back(box(v));
    for (std::uint64_t cell : boxes_.back()) cells_[cell] = true;
  }
}

std::vector<std::uint64_t> Realization::box(const Word& w) const {
  const std::uint32_t axis = std::uint32_t{1} << alphabet_.pair_count();
  std::vector<std::uint64_t> out{0};
  for (int i = 0; i < dim_; ++i) {
    std::vector<std::uint64_t> next;
    for (std::uint32_t t = 0; t < axis; ++t) {
      if (!axis_contains(t, w[i])) continue;
      for (std::uint64_t prefix : out) next.push_back(prefix * axis + t);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Realization::covered(const Word& w) const {
  const auto cells = box(w);
  return std::all_of(cells.begin(), cells.end(), [&](std::uint64_t c) { return cells_[c]; });
}

std::size_t Realization::meeting_count(const Word& w) const {
  const auto cells = box(w);
  std::size_t n = 0;
  for (const auto& b : boxes_) {
    std::vector<std::uint64_t> common;
    std::set_intersection(b.begin(), b.end(), cells.begin(), cells.end(), std::back_inserter(common));
    n += common.empty() ? 0 : 1;
  }
  return n;
}

bool oracle_is_covered(const Word& w, const Code& code, const Alphabet& alphabet) {
  if (w.dim() != code.dim()) throw std::invalid_argument("dimension mismatch");
  return Realization(code, alphabet).covered(w);
}

}  // namespace pbx
