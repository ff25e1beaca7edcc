#include "pbx/cover.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace pbx {
namespace {

void require_same_dim(const Word& v, const Word& w) {
  if (v.dim() != w.dim()) {
    throw std::invalid_argument("dimension mismatch: " + to_string(v) + " vs " + to_string(w));
  }
}

void require_proper(const Word& w) {
  if (!w.proper()) throw std::invalid_argument("word " + to_string(w) + " contains '*'");
}

void require_same_dim(const Word& w, const Code& c) {
  if (w.dim() != c.dim()) {
    throw std::invalid_argument("dimension mismatch: word " + to_string(w) + " vs code of dimension " +
                                std::to_string(c.dim()));
  }
}

void require_same_dim(const Code& a, const Code& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("codes have different dimensions");
}

}  // namespace

bool is_dichotomous(const Word& v, const Word& w) {
  require_same_dim(v, w);
  require_proper(v);
  require_proper(w);
  return is_dichotomous_unchecked(v, w);
}

std::optional<int> twin_pair_direction(const Word& v, const Word& w) {
  require_same_dim(v, w);
  return twin_direction_unchecked(v, w);
}

std::uint64_t g_weight(const Word& v, const Word& w) {
  require_same_dim(v, w);
  require_proper(v);
  require_proper(w);
  return g_weight_unchecked(v, w);
}

std::uint64_t cover_weight(const Word& w, const Code& v) {
  require_same_dim(w, v);
  require_proper(w);
  std::uint64_t total = 0;
  for (const Word& u : v) total += g_weight_unchecked(u, w);
  return total;
}

bool is_covered(const Word& w, const Code& v) { return cover_weight(w, v) == (std::uint64_t{1} << w.dim()); }

bool code_covered(const Code& v, const Code& w) {
  require_same_dim(v, w);
  return std::all_of(v.begin(), v.end(), [&](const Word& u) { return is_covered(u, w); });
}

bool are_equivalent(const Code& v, const Code& w) { return code_covered(v, w) && code_covered(w, v); }

bool are_disjoint(const Code& v, const Code& w) {
  require_same_dim(v, w);
  return std::none_of(v.begin(), v.end(), [&](const Word& u) { return w.contains(u); });
}

std::size_t meeting_count(const Code& v, const Word& w) {
  require_same_dim(w, v);
  require_proper(w);
  std::size_t n = 0;
  for (const Word& u : v) n += is_dichotomous_unchecked(u, w) ? 0 : 1;
  return n;
}

std::size_t density(const Code& v, const Code& w) {
  require_same_dim(v, w);
  if (w.empty()) throw std::invalid_argument("density with respect to an empty code");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Word& u : w) best = std::min(best, meeting_count(v, u));
  return best;
}

std::size_t common_density(const Code& v, const Code& w) { return std::min(density(v, w), density(w, v)); }

Code minimal_cover_within(const Word& w, const Code& code) {
  if (!is_covered(w, code)) throw std::invalid_argument("word " + to_string(w) + " is not covered");
  std::vector<Word> out;
  for (const Word& u : code) {
    if (!is_dichotomous_unchecked(u, w)) out.push_back(u);
  }
  return Code::unchecked(code.dim(), std::move(out));
}

std::vector<TwinPair> twin_pairs(const Code& c) {
  std::vector<TwinPair> out;
  for (const Word& v : c) {
    for (int i = 0; i < c.dim(); ++i) {
      const Word w = v.with(i, complement(v[i]));
      if (v < w && c.contains(w)) out.push_back({v, w, i});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_twin_pair(const Code& c) {
  for (const Word& v : c) {
    for (int i = 0; i < c.dim(); ++i) {
      if (c.contains(v.with(i, complement(v[i])))) return true;
    }
  }
  return false;
}

std::uint32_t beta(const Word& v) {
  require_proper(v);
  std::uint32_t out = 0;
  for (int i = 0; i < v.dim(); ++i) out = (out << 1) | (is_primed(v[i]) ? 1U : 0U);
  return out;
}

std::set<std::uint32_t> beta_set(const Code& c) {
  std::set<std::uint32_t> out;
  for (const Word& v : c) out.insert(beta(v));
  return out;
}

std::string beta_to_string(std::uint32_t bits, int dim) {
  std::string out;
  for (int i = dim - 1; i >= 0; --i) out += ((bits >> i) & 1U) ? '1' : '0';
  return out;
}

Distribution distribution(const Code& c, int position, const Alphabet& alphabet) {
  if (position < 0 || position >= c.dim()) throw std::invalid_argument("position out of range");
  Distribution d;
  d.position = position;
  d.counts.assign(static_cast<std::size_t>(alphabet.pair_count()), {0, 0});
  for (const Word& w : c) {
    const Letter s = w[position];
    if (!alphabet.contains(s)) throw std::invalid_argument("letter outside alphabet in " + to_string(w));
    auto& entry = d.counts[static_cast<std::size_t>(pair_of(s))];
    (is_primed(s) ? entry.second : entry.first) += 1;
  }
  return d;
}

std::vector<int> pairs_at(const Code& c, int position) {
  std::vector<int> out;
  for (const Word& w : c) out.push_back(pair_of(w[position]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_simple(const Code& c) {
  for (int i = 0; i < c.dim(); ++i) {
    if (pairs_at(c, i).size() > 1) return false;
  }
  return true;
}

std::optional<std::pair<int, Letter>> is_flat(const Code& c) {
  if (c.empty()) return std::nullopt;
  for (int i = 0; i < c.dim(); ++i) {
    const Letter s = c[0][i];
    if (std::all_of(c.begin(), c.end(), [&](const Word& w) { return w[i] == s; })) return std::make_pair(i, s);
  }
  return std::nullopt;
}

}  // namespace pbx
