#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "naive.hpp"
#include "pbx/app.hpp"
#include "pbx/iso.hpp"
#include "pbx/search.hpp"

using namespace pbx;
using naive::code;
using naive::w;

namespace {

const Letter kB = make_letter(1);

std::uint64_t naive_weight(const Word& u, const std::vector<Word>& c) {
  std::uint64_t s = 0;
  for (const Word& x : c) s += naive::g(x, u);
  return s;
}

bool naive_covers(const Word& u, const std::vector<Word>& c) { return naive_weight(u, c) == (std::uint64_t{1} << u.dim()); }

// Calls f on every set of at most `max` words from `pool` that are pairwise
// dichotomous and dichotomous with `base`.
void subsets(const std::vector<Word>& pool, const std::vector<Word>& base, std::size_t max,
             const std::function<void(const std::vector<Word>&)>& f) {
  std::vector<Word> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    f(chosen);
    if (chosen.size() == max) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      auto fits = [&](const Word& y) { return naive::dichotomous(y, pool[i]); };
      if (!std::all_of(chosen.begin(), chosen.end(), fits) || !std::all_of(base.begin(), base.end(), fits)) continue;
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

Code join_words(const Code& base, const std::vector<Word>& extra) {
  std::vector<Word> all(base.begin(), base.end());
  all.insert(all.end(), extra.begin(), extra.end());
  return Code::from_words(base.dim(), std::move(all));
}

std::size_t class_count(const std::vector<Code>& family, const Word& u, const Alphabet& alphabet) {
  return dedup_orbits(family, GroupEnumerator::stabilizer_of_word(u, alphabet)).size();
}

}  // namespace

TEST_CASE("all words") {
  CHECK(all_words(2, Alphabet(3)) == naive::words(2, 3));
  CHECK(all_words(4, Alphabet(2)).size() == 256);
  CHECK_THROWS_AS(all_words(8, Alphabet(8), 1000), std::invalid_argument);
}

TEST_CASE("weight compositions against nested loops") {
  for (int d = 1; d <= 5; ++d) {
    for (int k = 1; k <= 12; ++k) {
      std::set<std::vector<int>> expected;
      std::vector<int> x(static_cast<std::size_t>(d), 0);
      const int full = 1 << d;
      std::function<void(int, int, int)> rec = [&](int i, int weight, int count) {
        if (i == d) {
          if (weight == full && count == k) expected.insert(x);
          return;
        }
        for (int n = 0; n <= k - count && weight + n * (1 << i) <= full; ++n) {
          x[static_cast<std::size_t>(i)] = n;
          rec(i + 1, weight + n * (1 << i), count + n);
        }
        x[static_cast<std::size_t>(i)] = 0;
      };
      rec(0, 0, 0);
      const auto got = weight_compositions(d, k);
      CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == expected);
      CHECK(got.size() == expected.size());
    }
  }
  CHECK(weight_compositions(5, 1).empty());
}

TEST_CASE("default seeds") {
  const auto seeds = default_cover_seeds(5);
  const std::set<Code> expected{code({"aaaaa", "a'a'a'aa"}), code({"aaaab", "a'a'a'ab"}), code({"aaabb", "a'a'a'bb"}),
                                code({"aaaaa", "a'a'a'a'a'"})};
  CHECK(std::set<Code>(seeds.begin(), seeds.end()) == expected);
  for (const Code& s : seeds) CHECK_FALSE(has_twin_pair(s));
  CHECK(default_cover_seeds(2).empty());
}

TEST_CASE("cover_word against the exact cover brute force") {
  const Alphabet two(2);
  const Word u = w("bbbbb");
  const auto seeds = default_cover_seeds(5);
  // class counts of twin-pair-free covers of bbbbb by 5 to 9 words
  const std::vector<std::size_t> expected{1, 1, 3, 4, 19};
  for (int k = 5; k <= 9; ++k) {
    const auto lowest = cover_word(u, k, two);
    CoverWordOptions any;
    any.seed_at_lowest_level = false;
    const auto anywhere = cover_word(u, k, two, any);
    for (const Code& c : lowest) {
      const std::vector<Word> ws(c.begin(), c.end());
      CHECK(naive::is_code(ws));
      CHECK(naive_covers(u, ws));
      CHECK_FALSE(has_twin_pair(c));
      CHECK(c.size() == static_cast<std::size_t>(k));
      for (const Word& x : c) CHECK(naive::g(x, u) > 0);
      CHECK(std::any_of(seeds.begin(), seeds.end(), [&](const Code& s) {
        return std::includes(c.begin(), c.end(), s.begin(), s.end());
      }));
    }
    const auto brute = minimal_covers(u, k, two, true);
    const std::size_t classes = class_count(brute, u, two);
    CHECK(class_count(lowest, u, two) == classes);
    CHECK(class_count(anywhere, u, two) == classes);
    CHECK(classes == expected[static_cast<std::size_t>(k - 5)]);
  }
  CHECK(class_count(cover_word(u, 10, two), u, two) == 51);
  CHECK(class_count(cover_word(u, 11, two), u, two) == 153);
  CHECK_THROWS_AS(cover_word(u, 1, two), std::invalid_argument);
  CHECK_THROWS_AS(cover_word(w("abbbb"), 5, two), std::invalid_argument);
}

TEST_CASE("minimal covers against subset enumeration") {
  const Alphabet three(3);
  const Word u = w("bbb");
  std::vector<Word> pool;
  for (const Word& x : naive::words(3, 3)) {
    if (naive::g(x, u) > 0) pool.push_back(x);
  }
  std::map<std::size_t, std::set<std::vector<Word>>> by_size;
  subsets(pool, {}, 5, [&](const std::vector<Word>& s) {
    if (naive_covers(u, s)) {
      auto t = s;
      std::sort(t.begin(), t.end());
      by_size[t.size()].insert(t);
    }
  });
  for (int k = 1; k <= 5; ++k) {
    const auto got = minimal_covers(u, k, three, false);
    CHECK(got.size() == by_size[static_cast<std::size_t>(k)].size());
    for (const Code& c : got) CHECK(by_size[static_cast<std::size_t>(k)].count({c.begin(), c.end()}) == 1);
    std::size_t twin_free = 0;
    for (const auto& c : by_size[static_cast<std::size_t>(k)]) twin_free += has_twin_pair(Code::from_words(c)) ? 0 : 1;
    CHECK(minimal_covers(u, k, three, true).size() == twin_free);
  }
}

TEST_CASE("cover_code joins") {
  const Alphabet two(2);
  const Code u = code({"bbb", "b'b'b"});
  // the second family is the first moved by a map sending bbb to b'b'b
  GroupElement g = GroupElement::identity(3);
  const std::array<int, 2> same{0, 1};
  g.maps[0] = g.maps[1] = LetterMap::from_pairs(same, 0b10);
  std::vector<Code> first;
  for (int k = 1; k <= 8; ++k) {
    const auto f = minimal_covers(u[0], k, two, false);
    first.insert(first.end(), f.begin(), f.end());
  }
  std::vector<Code> second;
  for (const Code& c : first) second.push_back(apply_code(g, c));
  const std::vector<std::vector<Code>> families{first, second};

  for (std::size_t cap : {4, 6, 8}) {
    const auto fast = cover_code(u, cap, families);
    CHECK(fast == cover_code_naive(u, cap, families));
    // brute force: codes of at most `cap` words meeting U and covering it
    std::vector<Word> pool;
    for (const Word& x : naive::words(3, 2)) {
      if (naive::g(x, u[0]) > 0 || naive::g(x, u[1]) > 0) pool.push_back(x);
    }
    std::set<std::vector<Word>> brute;
    subsets(pool, {}, cap, [&](const std::vector<Word>& s) {
      if (naive_covers(u[0], s) && naive_covers(u[1], s)) brute.insert(s);
    });
    CHECK(fast.size() == brute.size());
    for (const Code& c : fast) CHECK(brute.count({c.begin(), c.end()}) == 1);
  }
  const std::vector<std::vector<Code>> one{first};
  std::vector<Code> small;
  for (const Code& c : first) {
    if (c.size() <= 3) small.push_back(c);
  }
  std::sort(small.begin(), small.end());
  CHECK(cover_code(code({"bbb"}), 3, one) == small);
  CHECK_THROWS_AS(cover_code(u, 4, one), std::invalid_argument);
}

TEST_CASE("cover bound") {
  const auto s2 = naive::words(2, 2);
  CHECK(cover_bound(code({"ab"}), code({"bb"}), s2, 1) == 1);
  CHECK(cover_bound(code({"ab"}), code({"bb"}), s2, 0) == 0);
  CHECK(cover_bound(code({"bb"}), code({"bb"}), s2, 0) == 1);
  CHECK(cover_bound(Code(2), code({"bb"}), s2, 1) == 1);
  CHECK(cover_bound(code({"ab"}), code({"bb", "b'b'"}), s2, 1) == 0);
  const std::vector<Word> bad{w("aaa")};
  CHECK_THROWS_AS(cover_bound(code({"ab"}), code({"bb"}), bad, 1), std::invalid_argument);
}

TEST_CASE("cover bound never prunes a completable partial code") {
  std::mt19937_64 rng(21);
  int completable = 0;
  for (int n = 0; n < 300; ++n) {
    const int dim = 2 + n % 2;
    const int pairs = 2;
    const auto all = naive::words(dim, pairs);
    const Code y = naive::random_code(dim, pairs, 2, rng);
    if (y.empty()) continue;
    std::vector<Word> x;
    for (const Word& q : all) {
      if (x.size() == static_cast<std::size_t>(n % 3)) break;
      if (rng() % 4 == 0 && std::all_of(x.begin(), x.end(), [&](const Word& t) { return naive::dichotomous(t, q); }) &&
          std::any_of(y.begin(), y.end(), [&](const Word& v) { return naive::g(q, v) > 0; })) {
        x.push_back(q);
      }
    }
    std::vector<Word> pool;
    for (const Word& q : all) {
      if (std::find(x.begin(), x.end(), q) == x.end()) pool.push_back(q);
    }
    const Code xc = Code::from_words(dim, x);
    for (std::size_t k = 0; k <= 3; ++k) {
      bool exists = false;
      subsets(pool, x, k, [&](const std::vector<Word>& s) {
        if (s.size() != k || exists) return;
        auto c = x;
        c.insert(c.end(), s.begin(), s.end());
        exists = std::all_of(y.begin(), y.end(), [&](const Word& v) { return naive_covers(v, c); });
      });
      if (exists) {
        ++completable;
        CHECK(cover_bound(xc, y, pool, k) == 1);
      }
    }
  }
  CHECK(completable > 50);
}

TEST_CASE("natural covers against brute force") {
  struct Case {
    Code v;
    Code w;
    int pairs;
    std::size_t n;
  };
  const std::vector<Case> cases{
      {code({"bb"}), code({"ab"}), 2, 3},     {code({"bb"}), code({"ab"}), 3, 3},
      {code({"bb", "b'b'"}), code({"ab"}), 2, 4}, {code({"bbb"}), code({"aab"}), 2, 3},
      {code({"bbb"}), code({"aab", "a'ab"}), 2, 4},
  };
  NaturalCoverOptions opts;
  opts.dot_threshold = 3;
  opts.final_density = 2;
  for (const auto& c : cases) {
    const Alphabet alphabet(c.pairs);
    std::vector<Word> pool;
    for (const Word& q : naive::words(c.v.dim(), c.pairs)) {
      if (c.w.contains(q)) continue;
      if (std::any_of(c.v.begin(), c.v.end(), [&](const Word& y) { return naive::g(q, y) > 0; })) pool.push_back(q);
    }
    const std::vector<Word> base(c.w.begin(), c.w.end());
    std::set<Code> brute;
    subsets(pool, base, c.n, [&](const std::vector<Word>& s) {
      if (s.empty()) return;
      auto all = base;
      all.insert(all.end(), s.begin(), s.end());
      if (!std::all_of(c.v.begin(), c.v.end(), [&](const Word& y) { return naive_covers(y, all); })) return;
      const Code grown = join_words(c.w, s);
      bool keep = true;
      if (s.size() < c.n) {
        for (const Word& y : c.v) keep = keep && dot_covers(y, grown, alphabet, opts.dot_threshold).verdict == Verdict::yes;
      } else {
        keep = density(grown, c.v) >= opts.final_density;
      }
      if (keep) brute.insert(grown);
    });
    const auto got = cover_code_natural(c.v, c.w, c.n, alphabet, opts);
    CHECK(got.undecided == 0);
    CHECK(std::set<Code>(got.covers.begin(), got.covers.end()) == brute);
    CHECK(got.covers.size() == brute.size());
  }
  const auto alone = cover_code_natural(code({"bb"}), code({"ab", "a'b"}), 2, Alphabet(2));
  CHECK(alone.covers == std::vector<Code>{code({"ab", "a'b"})});
  CHECK_THROWS_AS(cover_code_natural(code({"bb"}), code({"ab'"}), 2, Alphabet(2)), std::invalid_argument);
  CHECK_THROWS_AS(cover_code_natural(code({"bb"}), code({"ab"}), 0, Alphabet(2)), std::invalid_argument);
}

TEST_CASE("second codes") {
  const Code wc = special_pair_w();
  const Code vc = special_pair_v();
  const Alphabet two(2);
  const Code r = vc.without(vc[4]);
  const auto found = find_second_code(wc, r, two);
  CHECK(std::find(found.begin(), found.end(), vc) != found.end());
  for (const Code& v : found) {
    CHECK(are_equivalent(v, wc));
    CHECK(beta_set(v) == beta_set(wc));
    CHECK(std::includes(v.begin(), v.end(), r.begin(), r.end()));
    CHECK(common_density(v, wc) >= 5);
  }
  // with the density bound lifted, dropping a word of W gets it back
  const Code drop = wc.without(wc[0]);
  const auto back = find_second_code(wc, drop, two, 1);
  CHECK(std::find(back.begin(), back.end(), wc) != back.end());
  CHECK_THROWS_AS(find_second_code(wc, wc, two), std::invalid_argument);
  // aa meets only four words of the tiling
  CHECK_THROWS_AS(find_second_code(flip_example_w(), code({"aa"}), Alphabet(3), 5), std::invalid_argument);
  const auto words4 = naive::words(4, 2);
  const auto outside = std::find_if(words4.begin(), words4.end(), [&](const Word& x) { return !is_covered(x, wc); });
  REQUIRE(outside != words4.end());
  CHECK_THROWS_AS(find_second_code(wc, Code::from_words({*outside}), two, 1), std::invalid_argument);
}

TEST_CASE("extensions against brute force") {
  CHECK(extensions(code({"a"}), 1, Alphabet(2)) == std::vector<Code>{code({"a", "a'"})});
  CHECK(extensions(code({"aa"}), 0, Alphabet(2)) == std::vector<Code>{code({"aa"})});
  const Alphabet two(2);
  const auto all = naive::words(2, 2);
  for (const char* seed : {"aa", "ab'"}) {
    const Code c = code({seed});
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const std::optional<std::pair<int, Letter>>& flat :
           {std::optional<std::pair<int, Letter>>{}, std::optional{std::pair{1, make_letter(1, true)}}}) {
        std::vector<Word> pool;
        for (const Word& q : all) {
          if (!c.contains(q) && (!flat || q[flat->first] == flat->second)) pool.push_back(q);
        }
        std::set<Code> brute;
        subsets(pool, {c.begin(), c.end()}, n, [&](const std::vector<Word>& s) {
          if (s.size() == n) brute.insert(join_words(c, s));
        });
        const auto got = extensions(c, n, two, flat);
        CHECK(std::set<Code>(got.begin(), got.end()) == brute);
        CHECK(got.size() == brute.size());
      }
    }
  }
}
