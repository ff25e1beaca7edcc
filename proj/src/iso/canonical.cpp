#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pbx/iso.hpp"

namespace pbx {

Code canonical_form(const Code& v, const GroupEnumerator& group) {
  if (v.dim() != group.dim()) throw std::invalid_argument("code and group differ in dimension");
  Code best = v;
  std::vector<Word> scratch(v.size());
  group.for_each([&](const GroupElement& g) {
    for (std::size_t i = 0; i < v.size(); ++i) scratch[i] = g.apply(v[i]);
    std::sort(scratch.begin(), scratch.end());
    if (std::lexicographical_compare(scratch.begin(), scratch.end(), best.begin(), best.end())) {
      best = Code::unchecked(v.dim(), scratch);
    }
    return true;
  });
  return best;
}

std::vector<OrbitClass> classify_orbits(std::span<const Code> family, const GroupEnumerator& group) {
  std::unordered_map<Code, bool, CodeHash> assigned;
  assigned.reserve(family.size());
  for (const Code& c : family) assigned.emplace(c, false);

  std::vector<Code> order(family.begin(), family.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  std::vector<OrbitClass> out;
  std::vector<Word> scratch;
  for (const Code& c : order) {
    if (assigned.at(c)) continue;
    if (c.dim() != group.dim()) throw std::invalid_argument("code and group differ in dimension");
    OrbitClass cls{c, 0};
    scratch.resize(c.size());
    group.for_each([&](const GroupElement& g) {
      for (std::size_t i = 0; i < c.size(); ++i) scratch[i] = g.apply(c[i]);
      std::sort(scratch.begin(), scratch.end());
      Code image = Code::unchecked(c.dim(), scratch);
      if (auto it = assigned.find(image); it != assigned.end() && !it->second) {
        it->second = true;
        ++cls.members;
      }
      if (image < cls.representative) cls.representative = std::move(image);
      return true;
    });
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitClass& a, const OrbitClass& b) { return a.representative < b.representative; });
  return out;
}

std::vector<Code> dedup_orbits(std::span<const Code> family, const GroupEnumerator& group) {
  std::vector<Code> out;
  for (auto& cls : classify_orbits(family, group)) out.push_back(std::move(cls.representative));
  return out;
}

std::vector<Code> orbit(const Code& v, const GroupEnumerator& group) {
  if (v.dim() != group.dim()) throw std::invalid_argument("code and group differ in dimension");
  std::unordered_set<Code, CodeHash> seen;
  std::vector<Word> scratch(v.size());
  group.for_each([&](const GroupElement& g) {
    for (std::size_t i = 0; i < v.size(); ++i) scratch[i] = g.apply(v[i]);
    std::sort(scratch.begin(), scratch.end());
    seen.insert(Code::unchecked(v.dim(), scratch));
    return true;
  });
  std::vector<Code> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Code greedy_relabel(const Code& v) {
  std::vector<Word> words(v.begin(), v.end());
  for (int i = 0; i < v.dim(); ++i) {
    std::array<int, kMaxPairs> target;
    target.fill(-1);
    std::array<bool, kMaxPairs> flip{};
    int next = 0;
    for (const Word& w : v) {
      const Letter s = w[i];
      if (target[pair_of(s)] < 0) {
        target[pair_of(s)] = next++;
        flip[pair_of(s)] = is_primed(s);
      }
    }
    for (Word& w : words) {
      const Letter s = w[i];
      w = w.with(i, make_letter(target[pair_of(s)], is_primed(s) != flip[pair_of(s)]));
    }
  }
  std::sort(words.begin(), words.end());
  return Code::unchecked(v.dim(), std::move(words));
}

}  // namespace pbx
