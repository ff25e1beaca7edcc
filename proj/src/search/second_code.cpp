#include <algorithm>
#include <map>

#include "pbx/cover.hpp"
#include "pbx/search.hpp"

namespace pbx {

std::vector<Code> find_second_code(const Code& w, const Code& r, const Alphabet& alphabet, std::size_t min_density) {
  if (w.empty() || r.empty()) throw std::invalid_argument("codes must be non-empty");
  if (w.dim() != r.dim()) throw std::invalid_argument("codes differ in dimension");
  if (r.size() >= w.size()) throw std::invalid_argument("partial code must be smaller than the target");
  if (!code_covered(r, w)) throw std::invalid_argument("partial code is not covered by the target");
  if (density(w, r) < min_density) throw std::invalid_argument("partial code is not dense enough in the target");

  const auto wanted = beta_set(w);
  const auto have = beta_set(r);
  if (!std::includes(wanted.begin(), wanted.end(), have.begin(), have.end())) return {};

  // one slot per missing binary code, ascending
  std::map<std::uint32_t, std::vector<Word>> slots;
  for (std::uint32_t b : wanted) {
    if (!have.count(b)) slots[b];
  }
  for (const Word& q : all_words(w.dim(), alphabet)) {
    const auto slot = slots.find(beta(q));
    if (slot == slots.end()) continue;
    if (!std::all_of(r.begin(), r.end(), [&](const Word& x) { return is_dichotomous_unchecked(x, q); })) continue;
    if (!is_covered(q, w) || meeting_count(w, q) < min_density) continue;
    slot->second.push_back(q);
  }
  std::vector<const std::vector<Word>*> buckets;
  for (const auto& [b, words] : slots) {
    if (words.empty()) return {};
    buckets.push_back(&words);
  }

  std::vector<Code> out;
  std::vector<Word> chosen(r.begin(), r.end());
  auto pick = [&](auto&& self, std::size_t slot) -> void {
    if (slot == buckets.size()) {
      std::vector<Word> words = chosen;
      std::sort(words.begin(), words.end());
      Code v = Code::unchecked(w.dim(), std::move(words));
      if (density(v, w) >= min_density) out.push_back(std::move(v));
      return;
    }
    for (const Word& q : *buckets[slot]) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](const Word& x) { return is_dichotomous_unchecked(x, q); })) {
        continue;
      }
      chosen.push_back(q);
      self(self, slot + 1);
      chosen.pop_back();
    }
  };
  pick(pick, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pbx
