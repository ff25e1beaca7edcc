#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "pbx/cover.hpp"
#include "pbx/search.hpp"

namespace pbx {

namespace {

constexpr Letter kB = make_letter(1);

int b_count(const Word& w) {
  int n = 0;
  for (int i = 0; i < w.dim(); ++i) n += w[i] == kB ? 1 : 0;
  return n;
}

bool compatible(const Word& v, const Word& w) {
  return is_dichotomous_unchecked(v, w) && !twin_direction_unchecked(v, w);
}

// Words meeting b...b: no b' anywhere. Bucketed by their number of b's.
std::vector<std::vector<Word>> levels_of(int dim, const Alphabet& alphabet) {
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(dim + 1));
  for (const Word& w : all_words(dim, alphabet)) {
    bool ok = true;
    for (int i = 0; i < dim && ok; ++i) ok = w[i] != complement(kB);
    if (ok) out[static_cast<std::size_t>(b_count(w))].push_back(w);
  }
  return out;
}

void check_target(const Word& u, const Alphabet& alphabet) {
  if (alphabet.pair_count() < 2) throw std::invalid_argument("covers of b...b need at least two letter pairs");
  if (u != Word::constant(u.dim(), kB)) throw std::invalid_argument("target word must be b...b");
}

struct Task {
  const std::vector<int>* x;
  const Code* seed;
  int seed_level;
};

// Fills the remaining slots of a composition, heaviest level first. Each
// level keeps the candidates still compatible with everything chosen, and a
// branch dies as soon as some level has fewer candidates than open slots.
class LevelGrower {
 public:
  LevelGrower(const std::vector<std::vector<Word>>& levels, const Task& task) {
    chosen_.assign(task.seed->begin(), task.seed->end());
    need_ = *task.x;
    need_[static_cast<std::size_t>(task.seed_level)] -= 2;
    for (std::size_t i = need_.size(); i-- > 0;) {
      for (int n = 0; n < need_[i]; ++n) slots_.push_back(static_cast<int>(i));
    }
    Pools pools(levels.size());
    for (std::size_t i = 0; i < need_.size(); ++i) {
      if (need_[i] == 0) continue;
      for (const Word& w : levels[i]) {
        if (std::all_of(chosen_.begin(), chosen_.end(), [&](const Word& s) { return compatible(s, w); })) {
          pools[i].push_back(w);
        }
      }
    }
    viable_ = feasible(pools, 0);
    pools_ = std::move(pools);
  }

  void run(std::vector<Code>& out) {
    if (viable_) grow(0, pools_, out);
  }

 private:
  using Pools = std::vector<std::vector<Word>>;

  // Open slots per level from `slot` on must not exceed the candidates left.
  bool feasible(const Pools& pools, std::size_t slot) const {
    std::vector<int> open(need_.size(), 0);
    for (std::size_t s = slot; s < slots_.size(); ++s) ++open[static_cast<std::size_t>(slots_[s])];
    for (std::size_t i = 0; i < open.size(); ++i) {
      if (pools[i].size() < static_cast<std::size_t>(open[i])) return false;
    }
    return true;
  }

  void grow(std::size_t slot, const Pools& pools, std::vector<Code>& out) {
    if (slot == slots_.size()) {
      std::vector<Word> words = chosen_;
      std::sort(words.begin(), words.end());
      const int dim = words.front().dim();
      out.push_back(Code::unchecked(dim, std::move(words)));
      return;
    }
    const auto level = static_cast<std::size_t>(slots_[slot]);
    const auto& pool = pools[level];
    Pools next(pools.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const Word& w = pool[i];
      for (std::size_t l = 0; l < pools.size(); ++l) {
        next[l].clear();
        // later picks at this level come after w, which keeps sets unordered
        const std::size_t from = l == level ? i + 1 : 0;
        for (std::size_t j = from; j < pools[l].size(); ++j) {
          if (compatible(w, pools[l][j])) next[l].push_back(pools[l][j]);
        }
      }
      if (!feasible(next, slot + 1)) continue;
      chosen_.push_back(w);
      grow(slot + 1, next, out);
      chosen_.pop_back();
    }
  }

  std::vector<Word> chosen_;
  std::vector<int> need_;
  std::vector<int> slots_;
  Pools pools_;
  bool viable_ = false;
};

void sort_unique(std::vector<Code>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Code> cover_word(const Word& u, int k, const Alphabet& alphabet, const CoverWordOptions& options) {
  check_target(u, alphabet);
  if (k < 2) throw std::invalid_argument("cover size must be at least 2");
  const int dim = u.dim();
  const std::vector<Code> seeds = options.seeds.empty() ? default_cover_seeds(dim) : options.seeds;
  std::vector<int> seed_levels;
  for (const Code& s : seeds) {
    if (s.dim() != dim || s.size() != 2) throw std::invalid_argument("seeds must be 2-word codes of the target dimension");
    const int level = b_count(s[0]);
    if (b_count(s[1]) != level || level >= dim) throw std::invalid_argument("seed words must share their number of b's");
    for (const Word& w : s) {
      if (!w.over(alphabet) || g_weight_unchecked(w, u) == 0) throw std::invalid_argument("seed words must meet the target");
    }
    if (twin_direction_unchecked(s[0], s[1])) throw std::invalid_argument("seed must not be a twin pair");
    seed_levels.push_back(level);
  }

  const auto compositions = weight_compositions(dim, k);
  std::vector<Task> tasks;
  for (const auto& x : compositions) {
    const auto lowest = static_cast<int>(std::find_if(x.begin(), x.end(), [](int n) { return n > 0; }) - x.begin());
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const int level = seed_levels[s];
      if (x[static_cast<std::size_t>(level)] < 2) continue;
      if (options.seed_at_lowest_level && level != lowest) continue;
      tasks.push_back({&x, &seeds[s], level});
    }
  }

  const auto levels = levels_of(dim, alphabet);
  std::vector<Code> out;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<Code> local;
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      LevelGrower(levels, tasks[t]).run(local);
    }
    std::lock_guard lock(mu);
    out.insert(out.end(), local.begin(), local.end());
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  sort_unique(out);
  return out;
}

// Exact cover of the cells of u in the explicit realization, always filling
// the lowest uncovered cell first. Each partition is met exactly once and no
// weights are consulted. Boxes of words meeting u are disjoint inside u
// exactly when the words are dichotomous.
std::vector<Code> minimal_covers(const Word& u, int k, const Alphabet& alphabet, bool twin_free) {
  check_target(u, alphabet);
  if (k < 1) throw std::invalid_argument("cover size must be positive");
  const int dim = u.dim();
  // transversals (bit j = primed letter of pair j) containing b
  std::vector<std::uint32_t> axis;
  for (std::uint32_t t = 0; t < (1U << alphabet.pair_count()); ++t) {
    if (((t >> pair_of(kB)) & 1U) == 0) axis.push_back(t);
  }
  std::size_t cells = 1;
  for (int i = 0; i < dim; ++i) {
    cells *= axis.size();
    if (cells > (std::size_t{1} << 14)) throw std::invalid_argument("realization too large for brute force");
  }
  const std::size_t blocks = (cells + 63) / 64;
  using Mask = std::vector<std::uint64_t>;

  std::vector<Word> words;
  std::vector<Mask> masks;
  std::vector<std::vector<std::size_t>> by_cell(cells);
  for (const Word& w : all_words(dim, alphabet)) {
    std::vector<std::size_t> box{0};
    for (int i = 0; i < dim; ++i) {
      std::vector<std::size_t> next;
      for (std::size_t a = 0; a < axis.size(); ++a) {
        if (((axis[a] >> pair_of(w[i])) & 1U) != (is_primed(w[i]) ? 1U : 0U)) continue;
        for (std::size_t prefix : box) next.push_back(prefix * axis.size() + a);
      }
      box = std::move(next);
    }
    if (box.empty()) continue;
    Mask m(blocks, 0);
    for (std::size_t c : box) m[c / 64] |= std::uint64_t{1} << (c % 64);
    for (std::size_t c : box) by_cell[c].push_back(words.size());
    words.push_back(w);
    masks.push_back(std::move(m));
  }

  std::vector<Code> out;
  std::vector<Word> chosen;
  Mask covered(blocks, 0);
  auto grow = [&](auto&& self) -> void {
    std::size_t cell = cells;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::uint64_t free = ~covered[b];
      if (free != 0) {
        cell = b * 64 + static_cast<std::size_t>(__builtin_ctzll(free));
        break;
      }
    }
    if (cell >= cells) {
      if (chosen.size() == static_cast<std::size_t>(k)) {
        std::vector<Word> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(Code::unchecked(dim, std::move(sorted)));
      }
      return;
    }
    if (chosen.size() == static_cast<std::size_t>(k)) return;
    for (std::size_t idx : by_cell[cell]) {
      const Mask& m = masks[idx];
      bool clash = false;
      for (std::size_t b = 0; b < blocks && !clash; ++b) clash = (m[b] & covered[b]) != 0;
      if (clash) continue;
      const Word& w = words[idx];
      if (twin_free && std::any_of(chosen.begin(), chosen.end(),
                                   [&](const Word& s) { return twin_direction_unchecked(s, w).has_value(); })) {
        continue;
      }
      for (std::size_t b = 0; b < blocks; ++b) covered[b] |= m[b];
      chosen.push_back(w);
      self(self);
      chosen.pop_back();
      for (std::size_t b = 0; b < blocks; ++b) covered[b] &= ~m[b];
    }
  };
  grow(grow);
  sort_unique(out);
  return out;
}

std::vector<Code> twin_free_covers_brute_force(const Word& u, int k, const Alphabet& alphabet) {
  if (k < 2) throw std::invalid_argument("cover size must be at least 2");
  return minimal_covers(u, k, alphabet, true);
}

}  // namespace pbx
