#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <random>
#include <set>

#include "naive.hpp"
#include "pbx/app.hpp"
#include "pbx/io.hpp"
#include "pbx/moves.hpp"
#include "pbx/oracle.hpp"

using namespace pbx;
using naive::code;
using naive::w;

namespace {

// Flip neighbors straight from the definition: every twin pair, every other
// letter pair at the direction.
std::set<std::vector<Word>> naive_neighbors(const std::vector<Word>& c, int pairs) {
  std::set<std::vector<Word>> out;
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      const auto dir = naive::twin_direction(c[a], c[b]);
      if (!dir) continue;
      for (int t = 0; t < pairs; ++t) {
        if (t == pair_of(c[a][*dir])) continue;
        std::vector<Word> next;
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (k != a && k != b) next.push_back(c[k]);
        }
        next.push_back(c[a].with(*dir, make_letter(t)));
        next.push_back(c[a].with(*dir, make_letter(t, true)));
        std::sort(next.begin(), next.end());
        out.insert(next);
      }
    }
  }
  return out;
}

std::set<std::vector<Word>> naive_closure(const Code& seed, int pairs) {
  std::set<std::vector<Word>> seen{{seed.begin(), seed.end()}};
  std::deque<std::vector<Word>> queue{{seed.begin(), seed.end()}};
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (const auto& n : naive_neighbors(c, pairs)) {
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  return seen;
}

std::vector<Word> words_of(const Code& c) { return {c.begin(), c.end()}; }

}  // namespace

TEST_CASE("glue and cut") {
  CHECK(glue(w("aa"), w("aa'")) == w("a*"));
  CHECK(glue(w("ab"), w("a'b")) == w("*b"));
  CHECK_THROWS_AS(glue(w("aa"), w("a'a'")), std::invalid_argument);
  const auto [r, q] = cut(w("a*"), 1, make_letter(2));
  CHECK(r == w("ac"));
  CHECK(q == w("ac'"));
  CHECK_THROWS_AS(cut(w("aa"), 1, make_letter(2)), std::invalid_argument);
  CHECK_THROWS_AS(cut(w("a*"), 1, kStar), std::invalid_argument);
}

TEST_CASE("flip moves") {
  const FlipMove m = FlipMove::make(w("aa'"), w("aa"), 2);
  CHECK(m.v == w("aa"));
  CHECK(m.direction == 1);
  CHECK(m.r() == w("ac"));
  CHECK(m.q() == w("ac'"));
  CHECK(m.inverse().inverse() == m);
  CHECK(FlipMove::between(w("aa"), w("aa'"), w("ac'"), w("ac")) == m);
  CHECK_THROWS_AS(FlipMove::make(w("aa"), w("aa'"), 0), std::invalid_argument);
  CHECK_THROWS_AS(FlipMove::make(w("aa"), w("a'a'"), 2), std::invalid_argument);
  CHECK_THROWS_AS(FlipMove::between(w("aa"), w("aa'"), w("bc"), w("bc'")), std::invalid_argument);
  CHECK(apply_flip(flip_example_v(), m) == code({"ac", "ac'", "a'b", "a'b'"}));
  CHECK_THROWS_AS(apply_flip(flip_example_v(), FlipMove::make(w("bb"), w("bb'"), 0)), std::invalid_argument);
}

TEST_CASE("example trace reaches the partner code") {
  const auto trace = flip_example_trace();
  CHECK(trace.size() == 4);
  Code state = flip_example_v();
  for (const FlipMove& m : trace) {
    state = apply_flip(state, m);
    CHECK(naive::is_code(words_of(state)));
  }
  CHECK(state == flip_example_w());
  CHECK(replay(flip_example_v(), trace) == flip_example_w());
  std::vector<FlipMove> bad = trace;
  std::swap(bad[0], bad[3]);
  try {
    replay(flip_example_v(), bad);
    FAIL("replay accepted an illegal trace");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).rfind("step 1", 0) == 0);
  }
}

TEST_CASE("neighbors agree with the definition") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 60; ++n) {
    const Alphabet alphabet(2 + n % 2);
    const Code c = random_tiling(2 + n % 2, alphabet, rng);
    const auto fast = neighbors(c, alphabet);
    const auto slow = naive_neighbors(words_of(c), alphabet.pair_count());
    REQUIRE(fast.size() == slow.size());
    for (const Code& x : fast) CHECK(slow.count(words_of(x)) == 1);
    CHECK(std::find(fast.begin(), fast.end(), c) == fast.end());
    CHECK(flip_moves(c, alphabet).size() >= fast.size());
  }
}

TEST_CASE("closure agrees with breadth first search") {
  const Alphabet three(3);
  const auto simple = code({"aa", "aa'", "a'a", "a'a'"});
  const auto r = closure(simple, three);
  CHECK(r.exhausted);
  CHECK(r.frontier_count == 0);
  const auto slow = naive_closure(simple, 3);
  REQUIRE(r.states.size() == slow.size());
  for (const Code& x : r.states) CHECK(slow.count(words_of(x)) == 1);

  // every 4-word tiling in d = 2 over three pairs lies in that closure
  const auto all = naive::words(2, 3);
  std::size_t tilings = 0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      for (std::size_t c = b + 1; c < all.size(); ++c)
        for (std::size_t d = c + 1; d < all.size(); ++d) {
          const std::vector<Word> t{all[a], all[b], all[c], all[d]};
          if (!naive::is_code(t)) continue;
          ++tilings;
          CHECK(slow.count(t) == 1);
        }
  CHECK(tilings == slow.size());

  const auto capped = closure(simple, three, 5);
  CHECK_FALSE(capped.exhausted);
  CHECK(capped.states.size() <= 5);
  CHECK_THROWS_AS(closure(simple, three, 0), std::invalid_argument);

  const Code twin_free = special_pair_v();
  CHECK(closure(twin_free, Alphabet(2)).states == std::vector<Code>{twin_free});
}

TEST_CASE("strong equivalence") {
  const Alphabet three(3);
  const auto yes = is_strongly_equivalent(flip_example_v(), flip_example_w(), three);
  CHECK(yes.verdict == Verdict::yes);
  CHECK(replay(flip_example_v(), yes.trace) == flip_example_w());
  CHECK(yes.trace.size() <= 4);

  const auto no = is_strongly_equivalent(special_pair_v(), special_pair_w(), Alphabet(2));
  CHECK(no.verdict == Verdict::no);
  CHECK(no.exhausted);

  const auto same = is_strongly_equivalent(special_pair_v(), special_pair_v(), Alphabet(2));
  CHECK(same.verdict == Verdict::yes);
  CHECK(same.trace.empty());

  CHECK_THROWS_AS(is_strongly_equivalent(flip_example_v(), code({"aa", "aa'"}), three), std::invalid_argument);
  CHECK(is_strongly_equivalent(flip_example_v(), flip_example_w(), three, 1).verdict == Verdict::budget_exceeded);
}

TEST_CASE("dot covers") {
  const Alphabet two(2);
  const Code simple = code({"bb", "bb'", "b'b", "b'b'"});
  // the simple code itself has four words meeting bb; a flip leaves three
  const auto r = dot_covers(w("bb"), simple, two, 4);
  CHECK(r.verdict == Verdict::no);
  CHECK(meeting_count(replay(simple, r.trace), w("bb")) < 4);
  CHECK(dot_covers(w("bb"), simple, two, 5).verdict == Verdict::no);
  const auto y = dot_covers(w("bb"), simple, two, 1);
  CHECK(y.verdict == Verdict::yes);
  CHECK(y.exhausted);
  CHECK_THROWS_AS(dot_covers(w("bb"), code({"ab"}), two, 1), std::invalid_argument);
}

TEST_CASE("extracting a word from small covers") {
  const Alphabet three(3);
  for (const Code& cover : small_covers_of_b(5)) {
    const auto trace = extract_word(cover, w("bbbbb"), three);
    const Code out = replay(cover, trace);
    CHECK(out.contains(w("bbbbb")));
    CHECK(are_equivalent(out, cover));
  }
  const Code cover2 = small_covers_of_b(5)[1];
  CHECK(replay(cover2, small_cover2_flips(5)) == code({"bbbbb", "bb'bbb", "b'bbbb", "b'b'bbb"}));
  CHECK(small_cover2_flips(5).size() == 4);
  const Code v = special_pair_v();
  std::optional<Word> busy;
  for (const Word& x : naive::words(4, 2)) {
    if (meeting_count(v, x) > 4) {
      busy = x;
      break;
    }
  }
  REQUIRE(busy);
  CHECK_THROWS_AS(extract_word(v, *busy, Alphabet(2)), std::invalid_argument);
}

TEST_CASE("twin pair normalization") {
  std::mt19937_64 rng(9);
  const Code p = code({"bbb", "bbb'", "bb'b", "bb'b'", "b'bb", "b'bb'", "b'b'b", "b'b'b'"});
  const Alphabet three(3);
  for (int n = 0; n < 80; ++n) {
    const Code c = random_tiling(3, three, rng, 24);
    const auto r = normalize_twin_free_covers(c, p);
    CHECK(replay(c, r.trace) == r.code);
    CHECK(are_equivalent(r.code, c));
    for (const Word& x : p) CHECK_FALSE(has_twin_pair(minimal_cover_within(x, r.code)));
  }
  CHECK_THROWS_AS(normalize_twin_free_covers(flip_example_v(), flip_example_w()), std::invalid_argument);
}

TEST_CASE("layers and simplification") {
  const Code c = flip_example_w();
  CHECK(layer(c, 1, make_letter(2)) == code({"c", "c'"}));
  CHECK(layer(c, 1, make_letter(2, true)) == code({"b", "b'"}));
  CHECK(layer(c, 0, make_letter(2)) == code({"c"}));
  const Code twins = code({"aa", "aa'", "a'a", "a'a'"});
  const auto merged = merge_layers(twins, 1, make_letter(0), make_letter(1));
  CHECK(merged.code == code({"ab", "ab'", "a'b", "a'b'"}));
  CHECK(replay(twins, merged.trace) == merged.code);
  CHECK_THROWS_AS(merge_layers(c, 1, make_letter(2), make_letter(0)), std::invalid_argument);

  std::mt19937_64 rng(13);
  for (int n = 0; n < 60; ++n) {
    const Alphabet alphabet(2 + n % 2);
    const Code t = random_tiling(2 + n % 2, alphabet, rng, 20);
    const auto s = simplify_tiling(t, alphabet);
    REQUIRE(s.verdict == Verdict::yes);
    CHECK(is_simple(s.code));
    CHECK(replay(t, s.trace) == s.code);
  }
  CHECK_THROWS_AS(simplify_tiling(code({"aa"}), Alphabet(1)), std::invalid_argument);
}

TEST_CASE("trace text") {
  const auto trace = flip_example_trace();
  const std::string text = format_trace(trace);
  CHECK(parse_trace(text) == trace);
  CHECK(text.rfind("2: aa aa' -> ac ac'", 0) == 0);
  CHECK_THROWS_AS(parse_trace("2: aa aa'\n"), ParseError);
  CHECK_THROWS(parse_trace("1: aa aa' -> ac ac'\n"));
}

TEST_CASE("flip invariants") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int n = 0; n < 400; ++n) {
    const int dim = 2 + n % 3;
    const Alphabet alphabet(2 + n % 3);
    const Code c = random_tiling(dim, alphabet, rng, 8);
    const auto moves = flip_moves(c, alphabet);
    if (moves.empty()) continue;
    const FlipMove& m = moves[static_cast<std::size_t>(n) % moves.size()];
    const Code next = apply_flip(c, m);
    ++checked;
    CHECK(naive::is_code(words_of(next)));
    CHECK(next.size() == c.size());
    CHECK(are_equivalent(c, next));
    CHECK(beta_set(next) == beta_set(c));
    CHECK(apply_flip(next, m.inverse()) == c);
    const Word x = naive::random_word(dim, alphabet.pair_count(), rng);
    CHECK(oracle_is_covered(x, next, alphabet) == oracle_is_covered(x, c, alphabet));
  }
  CHECK(checked > 300);
}
