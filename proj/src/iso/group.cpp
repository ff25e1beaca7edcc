#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pbx/cover.hpp"
#include "pbx/iso.hpp"

namespace pbx {

LetterMap::LetterMap() {
  for (std::size_t s = 0; s < image_.size(); ++s) image_[s] = static_cast<Letter>(s);
}

LetterMap LetterMap::from_pairs(std::span<const int> pair_image, std::uint32_t flips) {
  LetterMap m;
  for (std::size_t j = 0; j < pair_image.size(); ++j) {
    const bool flip = ((flips >> j) & 1U) != 0;
    const int target = pair_image[j];
    m.image_[2 * j] = make_letter(target, flip);
    m.image_[2 * j + 1] = make_letter(target, !flip);
  }
  return m;
}

LetterMap LetterMap::inverse() const {
  LetterMap out;
  for (std::size_t s = 0; s < image_.size(); ++s) out.image_[image_[s]] = static_cast<Letter>(s);
  return out;
}

LetterMap LetterMap::after(const LetterMap& other) const {
  LetterMap out;
  for (std::size_t s = 0; s < image_.size(); ++s) out.image_[s] = image_[other.image_[s]];
  return out;
}

std::vector<LetterMap> all_letter_maps(const Alphabet& alphabet) {
  const int k = alphabet.pair_count();
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<LetterMap> out;
  do {
    for (std::uint32_t flips = 0; flips < (1U << k); ++flips) out.push_back(LetterMap::from_pairs(perm, flips));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

GroupElement GroupElement::identity(int dim) {
  GroupElement g;
  g.dim = dim;
  for (int j = 0; j < kMaxDim; ++j) g.sigma[j] = static_cast<std::uint8_t>(j);
  return g;
}

// this(other(v))_j = h_j(other(v)_{s(j)}) = h_j(h'_{s(j)}(v_{s'(s(j))})).
GroupElement GroupElement::compose(const GroupElement& other) const {
  if (dim != other.dim) throw std::invalid_argument("composing elements of different dimension");
  GroupElement out = identity(dim);
  for (int j = 0; j < dim; ++j) {
    out.sigma[j] = other.sigma[sigma[j]];
    out.maps[j] = maps[j].after(other.maps[sigma[j]]);
  }
  return out;
}

// v_m = h_j^{-1}(u_j) where sigma(j) = m.
GroupElement GroupElement::inverse() const {
  GroupElement out = identity(dim);
  for (int j = 0; j < dim; ++j) {
    out.sigma[sigma[j]] = static_cast<std::uint8_t>(j);
    out.maps[sigma[j]] = maps[j].inverse();
  }
  return out;
}

Word apply(const GroupElement& g, const Word& v) {
  if (g.dim != v.dim()) throw std::invalid_argument("group element and word differ in dimension");
  return g.apply(v);
}

Code apply_code(const GroupElement& g, const Code& v) {
  std::vector<Word> words;
  words.reserve(v.size());
  for (const Word& w : v) words.push_back(g.apply(w));
  std::sort(words.begin(), words.end());
  return Code::unchecked(v.dim(), std::move(words));
}

namespace {

std::vector<std::array<std::uint8_t, kMaxDim>> all_permutations(int dim) {
  std::vector<std::uint8_t> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::array<std::uint8_t, kMaxDim>> out;
  do {
    std::array<std::uint8_t, kMaxDim> p{};
    for (int j = 0; j < kMaxDim; ++j) p[j] = static_cast<std::uint8_t>(j);
    std::copy(perm.begin(), perm.end(), p.begin());
    out.push_back(p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::set<Letter> letters_at(const Code& c, int position) {
  std::set<Letter> out;
  for (const Word& w : c) out.insert(w[position]);
  return out;
}

}  // namespace

GroupEnumerator GroupEnumerator::full(int dim, const Alphabet& alphabet) {
  GroupEnumerator g(dim);
  const auto maps = all_letter_maps(alphabet);
  for (const auto& sigma : all_permutations(dim)) {
    Branch b;
    b.sigma = sigma;
    for (int j = 0; j < dim; ++j) b.candidates[j] = maps;
    g.branches_.push_back(std::move(b));
  }
  return g;
}

GroupEnumerator GroupEnumerator::stabilizer_of_word(const Word& v, const Alphabet& alphabet) {
  if (!v.proper() || !v.over(alphabet)) throw std::invalid_argument("word must be proper and over the alphabet");
  GroupEnumerator g(v.dim());
  const auto maps = all_letter_maps(alphabet);
  for (const auto& sigma : all_permutations(v.dim())) {
    Branch b;
    b.sigma = sigma;
    for (int j = 0; j < v.dim(); ++j) {
      for (const LetterMap& h : maps) {
        if (h(v[sigma[j]]) == v[j]) b.candidates[j].push_back(h);
      }
    }
    g.branches_.push_back(std::move(b));
  }
  return g;
}

GroupEnumerator GroupEnumerator::stabilizer_of_code(const Code& p, const Alphabet& alphabet) {
  if (p.empty()) throw std::invalid_argument("stabilizer of an empty code");
  if (p.size() > 8) throw std::invalid_argument("code stabilizers are limited to codes of at most 8 words");
  GroupEnumerator g(p.dim());
  g.fixed_ = p;
  const auto maps = all_letter_maps(alphabet);
  std::vector<std::set<Letter>> used;
  for (int j = 0; j < p.dim(); ++j) used.push_back(letters_at(p, j));
  // Any g with g(P) = P sends the letters used at position sigma(j) onto
  // the letters used at position j; the product of those candidates is
  // then filtered exactly.
  for (const auto& sigma : all_permutations(p.dim())) {
    Branch b;
    b.sigma = sigma;
    bool viable = true;
    for (int j = 0; j < p.dim() && viable; ++j) {
      const auto& source = used[sigma[j]];
      const auto& target = used[static_cast<std::size_t>(j)];
      if (source.size() != target.size()) {
        viable = false;
        break;
      }
      for (const LetterMap& h : maps) {
        if (std::all_of(source.begin(), source.end(), [&](Letter s) { return target.count(h(s)) != 0; })) {
          b.candidates[j].push_back(h);
        }
      }
      viable = !b.candidates[j].empty();
    }
    if (viable) g.branches_.push_back(std::move(b));
  }
  return g;
}

std::uint64_t GroupEnumerator::bound() const {
  std::uint64_t total = 0;
  for (const Branch& b : branches_) {
    std::uint64_t n = 1;
    for (int j = 0; j < dim_; ++j) n *= b.candidates[j].size();
    total += n;
  }
  return total;
}

std::uint64_t GroupEnumerator::count() const {
  if (!fixed_) return bound();
  std::uint64_t n = 0;
  for_each([&](const GroupElement&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<GroupElement> GroupEnumerator::elements(std::uint64_t cap) const {
  if (!fixed_ && bound() > cap) throw std::invalid_argument("group too large to materialize");
  std::vector<GroupElement> out;
  for_each([&](const GroupElement& g) {
    if (out.size() >= cap) throw std::invalid_argument("group too large to materialize");
    out.push_back(g);
    return true;
  });
  return out;
}

bool pairs_isomorphic(const Word& x, const Word& y, const Word& a, const Word& b) {
  if (x.dim() != a.dim() || y.dim() != x.dim() || b.dim() != a.dim()) return false;
  auto profile = [](const Word& u, const Word& v) {
    std::array<int, 3> counts{};
    for (int i = 0; i < u.dim(); ++i) {
      if (u[i] == v[i]) ++counts[0];
      else if (u[i] == complement(v[i])) ++counts[1];
      else ++counts[2];
    }
    return counts;
  };
  return profile(x, y) == profile(a, b);
}

}  // namespace pbx
