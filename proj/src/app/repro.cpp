#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include "pbx/app.hpp"
#include "pbx/cover.hpp"
#include "pbx/iso.hpp"
#include "pbx/oracle.hpp"
#include "pbx/search.hpp"

namespace pbx {

bool JobReport::passed() const {
  return !skipped && std::all_of(checks.begin(), checks.end(), [](const JobCheck& c) { return c.ok; });
}

namespace {

const Letter kB = make_letter(1);

template <class T>
std::string str(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

void expect(JobReport& r, std::string label, const std::string& expected, const std::string& computed) {
  r.checks.push_back({std::move(label), expected, computed, expected == computed});
}

void expect_true(JobReport& r, std::string label, bool value) {
  expect(r, std::move(label), "true", value ? "true" : "false");
}

std::string code_text(const Code& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + to_string(c[i]);
  return out + "}";
}

// Every twin-pair-free minimal cover of b...b with the given number of
// words: the level procedure yields orbit representatives, whose orbits
// under the stabilizer of b...b are then listed in full.
std::vector<Code> all_twin_free_covers(int dim, int size, const Alphabet& alphabet, int threads) {
  const Word v = Word::constant(dim, kB);
  CoverWordOptions options;
  options.threads = threads;
  const auto stab = GroupEnumerator::stabilizer_of_word(v, alphabet);
  std::vector<Code> out;
  for (const Code& rep : dedup_orbits(cover_word(v, size, alphabet, options), stab)) {
    auto images = orbit(rep, stab);
    out.insert(out.end(), images.begin(), images.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// g with g(b...b) = b'b'b'bb: swap b and b' in the first three positions.
GroupElement to_second_word(int dim) {
  GroupElement g = GroupElement::identity(dim);
  const std::vector<int> pairs{0, 1};
  const LetterMap swap_b = LetterMap::from_pairs(pairs, 1U << 1);
  for (int j = 0; j < 3; ++j) g.maps[j] = swap_b;
  return g;
}

JobReport job_sl11(const ReproOptions& o) {
  JobReport r{"sl11", {}, false};
  const std::map<int, std::size_t> expected{{5, 1}, {6, 1}, {7, 3}, {8, 4}, {9, 19},
                                            {10, 51}, {11, 153}, {12, 287}, {13, 683}, {14, 1275}};
  const Alphabet alphabet(2);
  const Word v = Word::constant(5, kB);
  const auto stab = GroupEnumerator::stabilizer_of_word(v, alphabet);
  CoverWordOptions options;
  options.threads = o.threads;
  for (const auto& [size, count] : expected) {
    if (size > 9 && !o.long_run) break;
    const auto family = cover_word(v, size, alphabet, options);
    const auto classes = dedup_orbits(family, stab);
    expect(r, "classes of twin-pair-free covers with " + str(size) + " words", str(count), str(classes.size()));
  }
  return r;
}

std::vector<Code> small_cover_classes(int dim, const Alphabet& alphabet) {
  const Word v = Word::constant(dim, kB);
  std::vector<Code> family;
  for (int size = 2; size <= 4; ++size) {
    auto covers = minimal_covers(v, size, alphabet, false);
    family.insert(family.end(), covers.begin(), covers.end());
  }
  return dedup_orbits(family, GroupEnumerator::stabilizer_of_word(v, alphabet));
}

// The listed four covers are all the classes in d = 2 only; from d = 3 on
// two more classes exist, for instance {aaabb, aaa'bb, aa'bbb, a'bbbb}.
// The extraction claim is checked on every class.
JobReport job_lemma4(const ReproOptions&) {
  JobReport r{"lemma4", {}, false};
  const Alphabet alphabet(3);
  for (int dim : {2, 5}) {
    const Word v = Word::constant(dim, kB);
    const auto stab = GroupEnumerator::stabilizer_of_word(v, alphabet);
    const auto classes = small_cover_classes(dim, alphabet);
    expect(r, "classes of minimal covers of " + to_string(v) + " with 2 to 4 words", "4", str(classes.size()));
    const auto listed = small_covers_of_b(dim);
    for (std::size_t i = 0; i < listed.size(); ++i) {
      expect_true(r, "listed cover " + str(i + 1) + " is one of the classes in d = " + str(dim),
                  std::binary_search(classes.begin(), classes.end(), canonical_form(listed[i], stab)));
    }
    for (const Code& c : classes) {
      const auto trace = extract_word(c, v, alphabet);
      expect_true(r, "class " + code_text(c) + " flips to a code containing " + to_string(v),
                  replay(c, trace).contains(v));
    }
  }
  const Code end = replay(small_covers_of_b(5)[1], small_cover2_flips(5));
  expect(r, "cover 2 after the displayed sequence", "{bbbbb, bb'bbb, b'bbbb, b'b'bbb}", code_text(end));
  return r;
}

JobReport job_special_pair(const ReproOptions&) {
  JobReport r{"special-pair", {}, false};
  const Code v = special_pair_v();
  const Code w = special_pair_w();
  const Alphabet alphabet(2);
  expect(r, "|V|", "12", str(v.size()));
  expect(r, "|W|", "12", str(w.size()));
  expect_true(r, "V twin-pair free", !has_twin_pair(v));
  expect_true(r, "W twin-pair free", !has_twin_pair(w));
  expect_true(r, "disjoint", are_disjoint(v, w));
  expect_true(r, "mutually covering", are_equivalent(v, w));
  expect_true(r, "equal binary codes", beta_set(v) == beta_set(w));
  const std::size_t common = common_density(v, w);
  expect_true(r, "common density " + str(common) + " >= 5", common >= 5);
  const std::vector<Distribution> want{
      {0, {{3, 3}, {3, 3}}}, {1, {{3, 3}, {3, 3}}}, {2, {{1, 1}, {5, 5}}}, {3, {{1, 1}, {5, 5}}}};
  for (const auto& d : want) {
    expect_true(r, "distribution of V at position " + str(d.position + 1), distribution(v, d.position, alphabet) == d);
  }
  const auto cl = closure(v, alphabet);
  expect_true(r, "closure of V is {V}", cl.exhausted && cl.states.size() == 1 && cl.states[0] == v);
  expect(r, "strongly equivalent", "no", std::string(to_string(is_strongly_equivalent(v, w, alphabet).verdict)));
  bool dot = true;
  for (const Word& x : v) dot = dot && dot_covers(x, w, alphabet).verdict == Verdict::yes;
  for (const Word& x : w) dot = dot && dot_covers(x, v, alphabet).verdict == Verdict::yes;
  expect_true(r, "every word dot-covered by the other code", dot);
  return r;
}

JobReport job_example1(const ReproOptions&) {
  JobReport r{"example1", {}, false};
  const Code v = flip_example_v();
  const Code w = flip_example_w();
  const auto trace = flip_example_trace();
  Code cur = v;
  bool legal = true;
  bool equivalent = true;
  for (const FlipMove& m : trace) {
    try {
      cur = apply_flip(cur, m);
    } catch (const std::invalid_argument&) {
      legal = false;
      break;
    }
    equivalent = equivalent && are_equivalent(v, cur);
  }
  expect(r, "flips in the trace", "4", str(trace.size()));
  expect_true(r, "every step is a legal flip", legal);
  expect_true(r, "equivalent to V at every step", equivalent);
  expect(r, "end state", code_text(w), code_text(cur));
  expect_true(r, "W is not simple", !is_simple(w));
  expect(r, "strongly equivalent by search", "yes",
         std::string(to_string(is_strongly_equivalent(v, w, Alphabet(3)).verdict)));
  return r;
}

JobReport job_d2(const ReproOptions&) {
  JobReport r{"d2-connectivity", {}, false};
  for (int pairs : {2, 3}) {
    const Alphabet alphabet(pairs);
    const auto tilings = extensions(Code(2), 4, alphabet);
    const std::size_t expected_count = pairs == 2 ? 12 : 45;
    expect(r, "cube tiling codes in d = 2 over " + str(pairs) + " pairs", str(expected_count), str(tilings.size()));
    const Code simple = Code::from_words({parse_word("aa"), parse_word("aa'"), parse_word("a'a"), parse_word("a'a'")});
    const auto cl = closure(simple, alphabet);
    const bool all_in = std::all_of(tilings.begin(), tilings.end(), [&](const Code& t) {
      return std::binary_search(cl.states.begin(), cl.states.end(), t);
    });
    expect_true(r, "all lie in the closure of {aa, aa', a'a, a'a'} (" + str(pairs) + " pairs)",
                cl.exhausted && all_in && cl.states.size() == tilings.size());
    bool simplified = true;
    for (const Code& t : tilings) {
      const auto s = simplify_tiling(t, alphabet);
      simplified = simplified && s.verdict == Verdict::yes && is_simple(s.code) && replay(t, s.trace) == s.code;
    }
    expect_true(r, "every one reduces to a simple code (" + str(pairs) + " pairs)", simplified);
  }
  return r;
}

JobReport job_oracle_fuzz(const ReproOptions& o) {
  JobReport r{"oracle-fuzz", {}, false};
  std::mt19937_64 rng(o.seed);
  const int instances = 1200;
  int agree = 0;
  int covered = 0;
  for (int n = 0; n < instances; ++n) {
    const int dim = 2 + n % 3;
    const Alphabet alphabet(2 + (n / 3) % 2);
    Code c = random_tiling(dim, alphabet, rng);
    std::uniform_int_distribution<int> drops(0, 3);
    for (int k = drops(rng); k > 0 && c.size() > 1; --k) {
      std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
      c = c.without(c[pick(rng)]);
    }
    const Word w = random_word(dim, alphabet, rng);
    const bool fast = is_covered(w, c);
    const Realization real(c, alphabet);
    agree += fast == real.covered(w) && meeting_count(c, w) == real.meeting_count(w) ? 1 : 0;
    covered += fast ? 1 : 0;
  }
  expect(r, "agreement with the explicit realization (" + str(covered) + " covered)", str(instances), str(agree));
  return r;
}

JobReport job_flip_invariants(const ReproOptions& o) {
  JobReport r{"flip-invariants", {}, false};
  std::mt19937_64 rng(o.seed + 1);
  const int flips = 1200;
  int ok = 0;
  for (int n = 0; n < flips; ++n) {
    const int dim = 2 + n % 3;
    const Alphabet alphabet(2 + (n / 3) % 2);
    Code c = random_tiling(dim, alphabet, rng, 8);
    std::uniform_int_distribution<int> drops(0, 2);
    for (int k = drops(rng); k > 0 && c.size() > 2; --k) {
      std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
      c = c.without(c[pick(rng)]);
    }
    const auto moves = flip_moves(c, alphabet);
    if (moves.empty()) {
      --n;
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const FlipMove m = moves[pick(rng)];
    const Code next = apply_flip(c, m);
    bool good = next.size() == c.size() && beta_set(next) == beta_set(c) && are_equivalent(c, next);
    try {
      good = good && Code::from_words(c.dim(), {next.begin(), next.end()}) == next;
    } catch (const std::invalid_argument&) {
      good = false;
    }
    good = good && apply_flip(next, m.inverse()) == c;
    ok += good ? 1 : 0;
  }
  expect(r, "flips preserving code-hood, size, binary codes, covering and reversibility", str(flips), str(ok));
  return r;
}

// Some Q of at most n words meeting Y with X u Q a code covering Y.
bool completion_exists(std::vector<Word>& words, const Code& y, std::span<const Word> pool, std::size_t start,
                       std::size_t n) {
  std::vector<Word> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  if (code_covered(y, Code::unchecked(y.dim(), sorted))) return true;
  if (n == 0) return false;
  for (std::size_t i = start; i < pool.size(); ++i) {
    const Word& q = pool[i];
    if (std::find(words.begin(), words.end(), q) != words.end()) continue;
    if (!std::all_of(words.begin(), words.end(), [&](const Word& x) { return is_dichotomous(x, q); })) continue;
    words.push_back(q);
    const bool found = completion_exists(words, y, pool, i + 1, n - 1);
    words.pop_back();
    if (found) return true;
  }
  return false;
}

JobReport job_cover_bound(const ReproOptions&) {
  JobReport r{"cover-bound-soundness", {}, false};
  const Alphabet alphabet(2);
  std::size_t cases = 0;
  std::size_t sound = 0;
  std::size_t completable = 0;
  auto check = [&](const Code& y, const std::vector<Word>& z) {
    std::vector<Word> meeting;
    for (const Word& q : z) {
      if (std::any_of(y.begin(), y.end(), [&](const Word& t) { return g_weight(q, t) > 0; })) meeting.push_back(q);
    }
    std::vector<Code> xs{Code(y.dim())};
    for (const Code& x1 : extensions(Code(y.dim()), 1, alphabet)) {
      if (!std::binary_search(meeting.begin(), meeting.end(), x1[0])) continue;
      xs.push_back(x1);
      for (const Code& x2 : extensions(x1, 1, alphabet)) {
        if (x2[1] == x1[0] || x2[0] != x1[0]) continue;  // each pair once
        if (std::binary_search(meeting.begin(), meeting.end(), x2[1])) xs.push_back(x2);
      }
    }
    for (const Code& x : xs) {
      for (std::size_t n = 0; n <= 3; ++n) {
        std::vector<Word> words(x.begin(), x.end());
        const bool exists = completion_exists(words, y, meeting, 0, n);
        ++cases;
        completable += exists ? 1 : 0;
        sound += !exists || cover_bound(x, y, z, n) == 1 ? 1 : 0;
      }
    }
  };
  for (int dim = 1; dim <= 2; ++dim) {
    const auto z = all_words(dim, alphabet);
    for (int size = 1; size <= 2; ++size) {
      for (const Code& y : extensions(Code(dim), static_cast<std::size_t>(size), alphabet)) check(y, z);
    }
  }
  // in d = 3 every one-word target is isomorphic to bbb, and every two-word
  // target to a pair with one, two or three complementary positions
  const auto z3 = all_words(3, alphabet);
  for (const char* text : {"bbb", "bbb b'bb", "bbb b'b'b", "bbb b'b'b'", "bbb b'ab"}) {
    std::vector<Word> words;
    std::istringstream in(text);
    for (std::string s; in >> s;) words.push_back(parse_word(s));
    check(Code::from_words(std::move(words)), z3);
  }
  expect(r, "sound cases (" + str(completable) + " completable)", str(cases), str(sound));
  return r;
}

JobReport job_find_second(const ReproOptions&) {
  JobReport r{"find-second", {}, false};
  const Code v = special_pair_v();
  const Code w = special_pair_w();
  const Alphabet alphabet(2);
  bool found_all = true;
  bool members_ok = true;
  std::size_t total = 0;
  for (const Word& drop : v) {
    const Code partial = v.without(drop);
    const auto family = find_second_code(w, partial, alphabet);
    total += family.size();
    found_all = found_all && std::binary_search(family.begin(), family.end(), v);
    for (const Code& c : family) {
      members_ok = members_ok && are_equivalent(c, w) && density(c, w) >= 5 && beta_set(c) == beta_set(w) &&
                   std::includes(c.begin(), c.end(), partial.begin(), partial.end());
    }
  }
  expect_true(r, "V recovered from each 11-word part", found_all);
  expect_true(r, "every member (" + str(total) + " in all) is equivalent to W with density >= 5", members_ok);
  return r;
}

void join_counts(JobReport& r, int pairs, int max_cover, std::size_t max_size,
                 const std::map<std::size_t, std::size_t>& expected, int threads) {
  const Alphabet alphabet(pairs);
  const int dim = 5;
  std::vector<Code> first;
  for (int size = 5; size <= max_cover; ++size) {
    auto covers = all_twin_free_covers(dim, size, alphabet, threads);
    first.insert(first.end(), covers.begin(), covers.end());
  }
  std::sort(first.begin(), first.end());
  const GroupElement g = to_second_word(dim);
  std::vector<Code> second;
  for (const Code& c : first) second.push_back(apply_code(g, c));
  std::sort(second.begin(), second.end());
  const Word v = Word::constant(dim, kB);
  const Code p = Code::from_words({v, g.apply(v)});
  // bbbbb sorts before b'b'b'bb
  const std::vector<std::vector<Code>> families{first, second};
  const auto covers = cover_code(p, max_size, families);
  std::map<std::size_t, std::size_t> by_size;
  for (const Code& c : covers) ++by_size[c.size()];
  for (const auto& [size, count] : expected) {
    expect(r, "covers of {bbbbb, b'b'b'bb} with " + str(size) + " words over " + str(pairs) + " pairs", str(count),
           str(by_size[size]));
  }
}

JobReport job_sabc_partial(const ReproOptions& o) {
  JobReport r{"sabc-partial", {}, false};
  join_counts(r, 2, 10, 10, {{8, 8}, {9, 96}, {10, 4256}}, o.threads);
  return r;
}

JobReport job_sabc(const ReproOptions& o) {
  JobReport r{"sabc", {}, false};
  join_counts(r, 3, 8, 10, {{8, 64}, {9, 1536}, {10, 212480}}, o.threads);
  return r;
}

using JobFn = JobReport (*)(const ReproOptions&);

struct JobEntry {
  JobInfo info;
  JobFn run;
};

const std::vector<JobEntry>& entries() {
  static const std::vector<JobEntry> table{
      {{"sl11", "classes of twin-pair-free covers of bbbbb over {a,a',b,b'}; sizes 10-14 with --long", false},
       job_sl11},
      {{"lemma4", "minimal covers with 2 to 4 words and extraction of the covered word", false}, job_lemma4},
      {{"special-pair", "checks on the bundled twin-pair-free equivalent pair", false}, job_special_pair},
      {{"example1", "replay of the four-flip trace between the d = 2 tiling codes", false}, job_example1},
      {{"d2-connectivity", "every d = 2 cube tiling code is reachable from a simple one", false}, job_d2},
      {{"oracle-fuzz", "weight-based covering against the explicit realization", false}, job_oracle_fuzz},
      {{"flip-invariants", "random flips preserve code-hood, size, binary codes, covering", false},
       job_flip_invariants},
      {{"cover-bound-soundness", "the cover bound never rejects a completable partial code (d <= 3)", false},
       job_cover_bound},
      {{"find-second", "reconstruction of the special pair from 11 of its words", false}, job_find_second},
      {{"sabc-partial", "joined covers of {bbbbb, b'b'b'bb} over two letter pairs, sizes 8-10", false},
       job_sabc_partial},
      {{"sabc", "joined covers of {bbbbb, b'b'b'bb} over three letter pairs, sizes 8-10", true}, job_sabc},
  };
  return table;
}

}  // namespace

const std::vector<JobInfo>& repro_jobs() {
  static const std::vector<JobInfo> infos = [] {
    std::vector<JobInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

JobReport run_repro(std::string_view job, const ReproOptions& options) {
  for (const auto& e : entries()) {
    if (e.info.name != job) continue;
    if (e.info.long_only && !options.long_run) {
      JobReport r{std::string(job), {}, true};
      return r;
    }
    return e.run(options);
  }
  throw std::invalid_argument("unknown job: " + std::string(job));
}

void print_report(const JobReport& report, std::ostream& out) {
  if (report.skipped) {
    out << report.job << ": skipped (needs --long)\n";
    return;
  }
  for (const auto& c : report.checks) {
    out << "  [" << (c.ok ? "ok" : "MISMATCH") << "] " << c.label << ": expected " << c.expected << ", computed "
        << c.computed << "\n";
  }
  out << report.job << ": " << (report.passed() ? "pass" : "FAIL") << "\n";
}

}  // namespace pbx
