#include <algorithm>

#include "pbx/cover.hpp"
#include "pbx/search.hpp"

namespace pbx {

std::vector<Code> extensions(const Code& c, std::size_t n, const Alphabet& alphabet,
                             std::optional<std::pair<int, Letter>> flat_constraint) {
  if (c.dim() < 1) throw std::invalid_argument("code needs a dimension");
  if (flat_constraint) {
    const auto [i, s] = *flat_constraint;
    if (i < 0 || i >= c.dim() || !alphabet.contains(s)) throw std::invalid_argument("bad flat constraint");
  }
  std::vector<Word> pool;
  for (const Word& q : all_words(c.dim(), alphabet)) {
    if (flat_constraint && q[flat_constraint->first] != flat_constraint->second) continue;
    if (c.contains(q)) continue;
    if (std::all_of(c.begin(), c.end(), [&](const Word& x) { return is_dichotomous_unchecked(x, q); })) {
      pool.push_back(q);
    }
  }
  std::vector<Code> out;
  std::vector<Word> chosen;
  auto grow = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == n) {
      std::vector<Word> words(c.begin(), c.end());
      words.insert(words.end(), chosen.begin(), chosen.end());
      std::sort(words.begin(), words.end());
      out.push_back(Code::unchecked(c.dim(), std::move(words)));
      return;
    }
    if (pool.size() - start < n - chosen.size()) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      const Word& q = pool[i];
      if (!std::all_of(chosen.begin(), chosen.end(), [&](const Word& x) { return is_dichotomous_unchecked(x, q); })) {
        continue;
      }
      chosen.push_back(q);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pbx
