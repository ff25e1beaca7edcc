#include <algorithm>
#include <functional>
#include <unordered_map>

#include "pbx/cover.hpp"
#include "pbx/search.hpp"

namespace pbx {

namespace {

void sort_unique(std::vector<Code>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_families(const Code& u, std::span<const std::vector<Code>> families) {
  if (u.empty()) throw std::invalid_argument("cannot cover an empty code");
  if (families.size() != u.size()) throw std::invalid_argument("need one cover family per word");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (families[i].empty()) throw std::invalid_argument("empty cover family for " + to_string(u[i]));
    for (const Code& c : families[i]) {
      if (c.dim() != u.dim()) throw std::invalid_argument("cover family of the wrong dimension");
      if (!is_covered(u[i], c)) throw std::invalid_argument("family member does not cover " + to_string(u[i]));
      for (const Word& w : c) {
        if (g_weight_unchecked(w, u[i]) == 0) {
          throw std::invalid_argument("family member for " + to_string(u[i]) + " is not a minimal cover");
        }
      }
    }
  }
}

// C u (D \ C) when that is a code of at most max_size words.
std::optional<Code> join(const Code& c, const Code& d, std::size_t max_size) {
  std::vector<Word> words(c.begin(), c.end());
  for (const Word& w : d) {
    if (c.contains(w)) continue;
    for (const Word& x : c) {
      if (!is_dichotomous_unchecked(x, w)) return std::nullopt;
    }
    words.push_back(w);
    if (words.size() > max_size) return std::nullopt;
  }
  std::sort(words.begin(), words.end());
  return Code::unchecked(c.dim(), std::move(words));
}

std::vector<Code> first_family(std::span<const std::vector<Code>> families, std::size_t max_size) {
  std::vector<Code> out;
  for (const Code& c : families[0]) {
    if (c.size() <= max_size) out.push_back(c);
  }
  sort_unique(out);
  return out;
}

Code meeting(const Code& c, std::span<const Word> targets) {
  std::vector<Word> words;
  for (const Word& w : c) {
    if (std::any_of(targets.begin(), targets.end(), [&](const Word& t) { return g_weight_unchecked(w, t) > 0; })) {
      words.push_back(w);
    }
  }
  return Code::unchecked(c.dim(), std::move(words));
}

}  // namespace

std::vector<Code> cover_code_naive(const Code& u, std::size_t max_size, std::span<const std::vector<Code>> families) {
  check_families(u, families);
  std::vector<Code> current = first_family(families, max_size);
  for (std::size_t j = 1; j < u.size(); ++j) {
    std::vector<Code> next;
    for (const Code& c : current) {
      for (const Code& d : families[j]) {
        if (auto joined = join(c, d, max_size)) next.push_back(std::move(*joined));
      }
    }
    sort_unique(next);
    current = std::move(next);
  }
  return current;
}

// Every word of a joined cover meets one of u_0..u_{j-1}, and a code that
// covers u_j cannot hold a word meeting u_j outside the cover of u_j. So a
// join of C and D survives only if C restricted to the words meeting u_j
// equals D restricted to the words meeting u_0..u_{j-1}; both sides index
// by that key.
std::vector<Code> cover_code(const Code& u, std::size_t max_size, std::span<const std::vector<Code>> families) {
  check_families(u, families);
  std::vector<Code> current = first_family(families, max_size);
  for (std::size_t j = 1; j < u.size(); ++j) {
    const std::span<const Word> earlier = u.words().subspan(0, j);
    const std::span<const Word> target = u.words().subspan(j, 1);
    std::unordered_map<Code, std::vector<const Code*>, CodeHash> index;
    for (const Code& d : families[j]) index[meeting(d, earlier)].push_back(&d);
    std::vector<Code> next;
    for (const Code& c : current) {
      const auto it = index.find(meeting(c, target));
      if (it == index.end()) continue;
      for (const Code* d : it->second) {
        if (auto joined = join(c, *d, max_size)) next.push_back(std::move(*joined));
      }
    }
    sort_unique(next);
    current = std::move(next);
  }
  return current;
}

int cover_bound(const Code& x, const Code& y, std::span<const Word> z, std::size_t n) {
  const std::uint64_t full = std::uint64_t{1} << y.dim();
  std::uint64_t missing = 0;
  for (const Word& v : y) {
    const std::uint64_t have = cover_weight(v, x);
    missing += full - std::min(full, have);
  }
  std::vector<std::uint64_t> weights;
  for (const Word& q : z) {
    if (q.dim() != y.dim()) throw std::invalid_argument("candidate of the wrong dimension");
    if (x.contains(q)) continue;
    if (!std::all_of(x.begin(), x.end(), [&](const Word& w) { return is_dichotomous_unchecked(w, q); })) continue;
    std::uint64_t weight = 0;
    for (const Word& v : y) weight += g_weight_unchecked(q, v);
    if (weight > 0) weights.push_back(weight);
  }
  const std::size_t top = std::min(n, weights.size());
  std::partial_sort(weights.begin(), weights.begin() + static_cast<std::ptrdiff_t>(top), weights.end(),
                    std::greater<>());
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < top; ++i) best += weights[i];
  return best >= missing ? 1 : 0;
}

namespace {

struct Partial {
  Code code;
  std::size_t last;  // index in the pool of the last word added
};

}  // namespace

NaturalCoverResult cover_code_natural(const Code& v, const Code& w, std::size_t n, const Alphabet& alphabet,
                                      const NaturalCoverOptions& options) {
  if (v.empty()) throw std::invalid_argument("cannot cover an empty code");
  if (w.dim() != v.dim()) throw std::invalid_argument("codes differ in dimension");
  if (n < 1) throw std::invalid_argument("need at least one word to add");
  for (const Word& x : w) {
    if (std::none_of(v.begin(), v.end(), [&](const Word& y) { return g_weight_unchecked(x, y) > 0; })) {
      throw std::invalid_argument("word " + to_string(x) + " meets no word of the covered code");
    }
  }
  NaturalCoverResult out;
  if (code_covered(v, w)) {
    out.covers.push_back(w);
    return out;
  }

  std::vector<Word> pool;
  for (const Word& q : all_words(v.dim(), alphabet)) {
    if (w.contains(q)) continue;
    if (!std::all_of(w.begin(), w.end(), [&](const Word& x) { return is_dichotomous_unchecked(x, q); })) continue;
    if (std::any_of(v.begin(), v.end(), [&](const Word& y) { return g_weight_unchecked(q, y) > 0; })) {
      pool.push_back(q);
    }
  }
  if (cover_bound(w, v, pool, n) == 0) return out;

  auto dot_covered = [&](const Code& c) {
    bool undecided = false;
    for (const Word& y : v) {
      const Verdict verdict = dot_covers(y, c, alphabet, options.dot_threshold, options.dot_budget).verdict;
      if (verdict == Verdict::no) return false;
      if (verdict == Verdict::budget_exceeded) undecided = true;
    }
    if (undecided) ++out.undecided;
    return !undecided;
  };

  std::vector<Partial> stage{{w, pool.size()}};
  for (std::size_t k = 1; k <= n && !stage.empty(); ++k) {
    std::vector<Partial> next;
    for (const Partial& x : stage) {
      const std::size_t start = x.last == pool.size() ? 0 : x.last + 1;
      for (std::size_t i = start; i < pool.size(); ++i) {
        const Word& q = pool[i];
        if (!std::all_of(x.code.begin(), x.code.end(), [&](const Word& y) { return is_dichotomous_unchecked(y, q); })) {
          continue;
        }
        std::vector<Word> words(x.code.begin(), x.code.end());
        words.insert(std::upper_bound(words.begin(), words.end(), q), q);
        Code grown = Code::unchecked(v.dim(), std::move(words));
        if (code_covered(v, grown)) {
          if (k < n ? dot_covered(grown) : density(grown, v) >= options.final_density) {
            out.covers.push_back(std::move(grown));
          }
        } else if (k < n && cover_bound(grown, v, pool, n - k) == 1) {
          next.push_back({std::move(grown), i});
        }
      }
    }
    stage = std::move(next);
  }
  sort_unique(out.covers);
  return out;
}

}  // namespace pbx
