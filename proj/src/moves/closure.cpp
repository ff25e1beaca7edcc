#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_set>

#include "pbx/moves.hpp"

namespace pbx {
namespace {

// Breadth-first search over the flip graph. States are fixed-size sorted
// word lists stored back to back in one arena; the visited set holds arena
// indices.
class FlipSearch {
 public:
  using Goal = std::function<bool(std::span<const std::uint64_t>)>;

  FlipSearch(const Code& seed, const Alphabet& alphabet, std::size_t budget)
      : dim_(seed.dim()),
        width_(seed.size()),
        pairs_(alphabet.pair_count()),
        budget_(budget),
        visited_(64, Hash{this}, Eq{this}) {
    if (budget == 0) throw std::invalid_argument("state budget must be positive");
    for (const Word& w : seed) arena_.push_back(w.bits());
    parents_.push_back(kNoParent);
    moves_.emplace_back();
    visited_.insert(0);
  }

  // Runs until the goal holds for some state (returns its index), the state
  // space is exhausted, or the budget is hit.
  std::optional<std::size_t> run(const Goal& goal) {
    if (goal && goal(state(0))) return 0;
    std::vector<std::uint64_t> scratch(width_);
    for (std::size_t head = 0; head < count(); ++head) {
      expanded_ = head;
      // Copied: add() may reallocate the arena.
      const auto span = state(head);
      const std::vector<std::uint64_t> current(span.begin(), span.end());
      for (std::size_t a = 0; a < width_; ++a) {
        const Word v = Word::from_bits(dim_, current[a]);
        for (int i = 0; i < dim_; ++i) {
          const Word w = v.with(i, complement(v[i]));
          if (w.bits() < v.bits()) continue;
          if (!std::binary_search(current.begin(), current.end(), w.bits())) continue;
          for (int p = 0; p < pairs_; ++p) {
            if (p == pair_of(v[i])) continue;
            const FlipMove m{v, w, i, p};
            std::copy(current.begin(), current.end(), scratch.begin());
            replace_pair(scratch, m);
            const auto added = add(scratch, head, m);
            if (!added) {
              if (truncated_) return std::nullopt;
              continue;
            }
            if (goal && goal(state(*added))) return added;
          }
        }
      }
    }
    expanded_ = count();
    exhausted_ = true;
    return std::nullopt;
  }

  std::size_t count() const noexcept { return parents_.size(); }
  bool exhausted() const noexcept { return exhausted_; }
  std::size_t frontier() const noexcept { return exhausted_ ? 0 : count() - expanded_; }

  std::span<const std::uint64_t> state(std::size_t idx) const {
    return {arena_.data() + idx * width_, width_};
  }

  Code code(std::size_t idx) const {
    std::vector<Word> words;
    words.reserve(width_);
    for (std::uint64_t b : state(idx)) words.push_back(Word::from_bits(dim_, b));
    return Code::unchecked(dim_, std::move(words));
  }

  std::vector<FlipMove> path_to(std::size_t idx) const {
    std::vector<FlipMove> out;
    while (parents_[idx] != kNoParent) {
      out.push_back(moves_[idx]);
      idx = parents_[idx];
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  struct Hash {
    const FlipSearch* self;
    std::size_t operator()(std::size_t idx) const noexcept {
      std::uint64_t h = 0x9E3779B97F4A7C15ULL;
      for (std::uint64_t b : self->lookup(idx)) {
        h ^= b + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };
  struct Eq {
    const FlipSearch* self;
    bool operator()(std::size_t a, std::size_t b) const noexcept {
      const auto x = self->lookup(a);
      const auto y = self->lookup(b);
      return std::equal(x.begin(), x.end(), y.begin());
    }
  };

  // Index kProbe refers to the candidate under test.
  static constexpr std::size_t kProbe = static_cast<std::size_t>(-2);
  std::span<const std::uint64_t> lookup(std::size_t idx) const {
    return idx == kProbe ? std::span<const std::uint64_t>(probe_) : state(idx);
  }

  static void replace_pair(std::vector<std::uint64_t>& words, const FlipMove& m) {
    for (auto& b : words) {
      if (b == m.v.bits()) b = m.r().bits();
      else if (b == m.w.bits()) b = m.q().bits();
    }
    std::sort(words.begin(), words.end());
  }

  std::optional<std::size_t> add(const std::vector<std::uint64_t>& words, std::size_t parent, const FlipMove& m) {
    probe_ = words;
    if (visited_.count(kProbe) != 0) return std::nullopt;
    if (count() >= budget_) {
      truncated_ = true;
      return std::nullopt;
    }
    const std::size_t idx = count();
    arena_.insert(arena_.end(), words.begin(), words.end());
    parents_.push_back(parent);
    moves_.push_back(m);
    visited_.insert(idx);
    return idx;
  }

  int dim_;
  std::size_t width_;
  int pairs_;
  std::size_t budget_;
  std::vector<std::uint64_t> arena_;
  std::vector<std::size_t> parents_;
  std::vector<FlipMove> moves_;
  std::vector<std::uint64_t> probe_;
  std::unordered_set<std::size_t, Hash, Eq> visited_;
  std::size_t expanded_ = 0;
  bool exhausted_ = false;
  bool truncated_ = false;
};

void require_alphabet(const Code& c, const Alphabet& alphabet) {
  for (const Word& w : c) {
    if (!w.over(alphabet)) throw std::invalid_argument("word " + to_string(w) + " lies outside the alphabet");
  }
}

}  // namespace

ClosureResult closure(const Code& seed, const Alphabet& alphabet, std::size_t budget) {
  require_alphabet(seed, alphabet);
  FlipSearch search(seed, alphabet, budget);
  search.run(nullptr);
  ClosureResult out;
  out.states.reserve(search.count());
  for (std::size_t i = 0; i < search.count(); ++i) out.states.push_back(search.code(i));
  std::sort(out.states.begin(), out.states.end());
  out.exhausted = search.exhausted();
  out.frontier_count = search.frontier();
  out.state_budget = budget;
  return out;
}

SearchResult is_strongly_equivalent(const Code& v, const Code& w, const Alphabet& alphabet, std::size_t budget) {
  if (!are_equivalent(v, w)) throw std::invalid_argument("codes are not equivalent");
  require_alphabet(v, alphabet);
  require_alphabet(w, alphabet);
  FlipSearch search(v, alphabet, budget);
  const std::vector<std::uint64_t> target = [&] {
    std::vector<std::uint64_t> bits;
    for (const Word& u : w) bits.push_back(u.bits());
    return bits;
  }();
  const auto found = search.run([&](std::span<const std::uint64_t> s) {
    return std::equal(s.begin(), s.end(), target.begin(), target.end());
  });
  SearchResult out;
  out.states_explored = search.count();
  out.exhausted = search.exhausted();
  if (found) {
    out.verdict = Verdict::yes;
    out.trace = search.path_to(*found);
  } else {
    out.verdict = search.exhausted() ? Verdict::no : Verdict::budget_exceeded;
  }
  return out;
}

SearchResult dot_covers(const Word& p, const Code& v, const Alphabet& alphabet, std::size_t threshold,
                        std::size_t budget) {
  if (!is_covered(p, v)) throw std::invalid_argument("word " + to_string(p) + " is not covered by the code");
  require_alphabet(v, alphabet);
  FlipSearch search(v, alphabet, budget);
  const auto found = search.run([&](std::span<const std::uint64_t> s) {
    std::size_t meeting = 0;
    for (std::uint64_t b : s) meeting += is_dichotomous_unchecked(Word::from_bits(p.dim(), b), p) ? 0 : 1;
    return meeting < threshold;
  });
  SearchResult out;
  out.states_explored = search.count();
  out.exhausted = search.exhausted();
  if (found) {
    out.verdict = Verdict::no;
    out.trace = search.path_to(*found);
  } else {
    out.verdict = search.exhausted() ? Verdict::yes : Verdict::budget_exceeded;
  }
  return out;
}

std::vector<FlipMove> extract_word(const Code& v, const Word& w, const Alphabet& alphabet, std::size_t budget) {
  const Code cover = minimal_cover_within(w, v);
  if (cover.size() > 4) {
    throw std::invalid_argument("extraction needs at most four words meeting " + to_string(w) + ", found " +
                                std::to_string(cover.size()));
  }
  const Alphabet letters(std::max({alphabet.pair_count(), alphabet_of(cover).pair_count(),
                                   alphabet_of(Code::unchecked(w.dim(), {w})).pair_count()}));
  FlipSearch search(cover, letters, budget);
  const auto found = search.run([&](std::span<const std::uint64_t> s) {
    return std::binary_search(s.begin(), s.end(), w.bits());
  });
  if (!found) {
    throw std::logic_error(search.exhausted() ? "no flip sequence brings " + to_string(w) + " into the cover"
                                              : "state budget exhausted while extracting " + to_string(w));
  }
  return search.path_to(*found);
}

}  // namespace pbx
