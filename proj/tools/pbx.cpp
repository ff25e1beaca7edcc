// pbx: command-line front end. Exit codes: 0 yes/success, 1 no, 2 error,
// 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pbx/app.hpp"
#include "pbx/cover.hpp"
#include "pbx/io.hpp"
#include "pbx/iso.hpp"
#include "pbx/moves.hpp"
#include "pbx/search.hpp"

using namespace pbx;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kBudget = 3;

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return kYes;
    case Verdict::no:
      return kNo;
    case Verdict::budget_exceeded:
      return kBudget;
  }
  return kNo;
}

int env_threads() {
  if (const char* s = std::getenv("PBX_THREADS")) {
    const int n = std::atoi(s);
    if (n > 0) return n;
  }
  return 1;
}

Alphabet pick_alphabet(int pairs, std::initializer_list<Code> codes, std::initializer_list<Word> words = {}) {
  int k = 1;
  for (const Code& c : codes) k = std::max(k, alphabet_of(c).pair_count());
  for (const Word& w : words) {
    for (Letter s : w.letters()) k = std::max(k, pair_of(s) + 1);
  }
  if (pairs > 0) {
    if (pairs < k) throw std::invalid_argument("--pairs is smaller than the alphabet in use");
    k = pairs;
  }
  return Alphabet(k);
}

// Per-position letter maps taking u to b...b.
GroupElement to_constant_b(const Word& u) {
  GroupElement g = GroupElement::identity(u.dim());
  const int b = 1;
  for (int i = 0; i < u.dim(); ++i) {
    std::vector<int> pairs(kMaxPairs);
    for (int j = 0; j < kMaxPairs; ++j) pairs[static_cast<std::size_t>(j)] = j;
    std::swap(pairs[static_cast<std::size_t>(pair_of(u[i]))], pairs[static_cast<std::size_t>(b)]);
    const std::uint32_t flips = is_primed(u[i]) ? 1U << pair_of(u[i]) : 0U;
    g.maps[i] = LetterMap::from_pairs(pairs, flips);
  }
  return g;
}

void print_trace(const std::vector<FlipMove>& trace) { std::cout << format_trace(trace); }

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polybox and cube tiling codes: covers, flips, isomorphism and enumeration"};
  app.require_subcommand(1);
  int result = kYes;
  int pairs = 0;
  std::size_t budget = kDefaultStateBudget;

  auto* check = app.add_subcommand("check", "validate a code file and describe it");
  std::string file_a;
  std::string file_b;
  check->add_option("file", file_a, "code file")->required();
  check->callback([&] {
    const Code c = read_code_file(file_a);
    const Alphabet alphabet = alphabet_of(c);
    std::cout << "valid polybox code\n"
              << "dimension: " << c.dim() << "\n"
              << "words: " << c.size() << "\n"
              << "letter pairs used: " << alphabet.pair_count() << "\n"
              << "cube tiling code: " << (c.is_cube_tiling() ? "yes" : "no") << "\n"
              << "simple: " << (is_simple(c) ? "yes" : "no") << "\n";
    if (auto flat = is_flat(c)) {
      std::cout << "flat: yes (position " << flat->first + 1 << ", letter " << letter_to_string(flat->second) << ")\n";
    } else {
      std::cout << "flat: no\n";
    }
    const auto twins = twin_pairs(c);
    std::cout << "twin pairs: " << twins.size() << "\n";
    for (const auto& t : twins) {
      std::cout << "  " << to_string(t.v) << " " << to_string(t.w) << " (position " << t.direction + 1 << ")\n";
    }
    for (int i = 0; i < c.dim(); ++i) {
      std::cout << "distribution at position " << i + 1 << ":";
      for (const auto& [u, p] : distribution(c, i, alphabet).counts) std::cout << " (" << u << "," << p << ")";
      std::cout << "\n";
    }
  });

  auto* equiv = app.add_subcommand("equiv", "are two codes mutually covering");
  equiv->add_option("a", file_a, "first code file")->required();
  equiv->add_option("b", file_b, "second code file")->required();
  equiv->callback([&] {
    const Code a = read_code_file(file_a);
    const Code b = read_code_file(file_b);
    const bool eq = are_equivalent(a, b);
    std::cout << "equivalent: " << (eq ? "yes" : "no") << "\n"
              << "disjoint: " << (are_disjoint(a, b) ? "yes" : "no") << "\n";
    if (eq) std::cout << "common density: " << common_density(a, b) << "\n";
    result = eq ? kYes : kNo;
  });

  auto* strong = app.add_subcommand("strong-equiv", "search for a flip sequence between two equivalent codes");
  strong->add_option("a", file_a, "first code file")->required();
  strong->add_option("b", file_b, "second code file")->required();
  strong->add_option("--budget", budget, "state budget");
  strong->add_option("--pairs", pairs, "letter pairs available to flips (default: those in use)");
  strong->callback([&] {
    const Code a = read_code_file(file_a);
    const Code b = read_code_file(file_b);
    const auto r = is_strongly_equivalent(a, b, pick_alphabet(pairs, {a, b}), budget);
    std::cout << "strongly equivalent: " << to_string(r.verdict) << " (" << r.states_explored << " states)\n";
    if (r.verdict == Verdict::yes) print_trace(r.trace);
    result = exit_for(r.verdict);
  });

  auto* dot = app.add_subcommand("dot-cover", "is a word dot-covered by a code");
  std::string word_text;
  std::size_t threshold = 5;
  dot->add_option("--word", word_text, "covered word")->required();
  dot->add_option("file", file_a, "covering code")->required();
  dot->add_option("--threshold", threshold, "density bound");
  dot->add_option("--budget", budget, "state budget");
  dot->add_option("--pairs", pairs, "letter pairs available to flips");
  dot->callback([&] {
    const Word w = parse_word(word_text);
    const Code c = read_code_file(file_a);
    const auto r = dot_covers(w, c, pick_alphabet(pairs, {c}, {w}), threshold, budget);
    std::cout << "dot-covered: " << to_string(r.verdict) << " (" << r.states_explored << " states)\n";
    if (r.verdict == Verdict::no && !r.trace.empty()) {
      std::cout << "flips reaching a code where the word meets fewer than " << threshold << " words:\n";
      print_trace(r.trace);
    }
    result = exit_for(r.verdict);
  });

  auto* clos = app.add_subcommand("closure", "all codes reachable by flips");
  bool list_states = false;
  clos->add_option("file", file_a, "seed code")->required();
  clos->add_option("--budget", budget, "state budget");
  clos->add_option("--pairs", pairs, "letter pairs available to flips");
  clos->add_flag("--list", list_states, "print every state");
  clos->callback([&] {
    const Code c = read_code_file(file_a);
    const auto r = closure(c, pick_alphabet(pairs, {c}), budget);
    std::cout << "states: " << r.states.size() << "\n"
              << "exhausted: " << (r.exhausted ? "yes" : "no") << "\n";
    if (list_states) std::cout << format_family(r.states);
    result = r.exhausted ? kYes : kBudget;
  });

  auto* canon = app.add_subcommand("canon", "canonical form under the full group or a word stabilizer");
  std::string stabilize;
  canon->add_option("file", file_a, "code file")->required();
  canon->add_option("--stabilize", stabilize, "only use elements fixing this word");
  canon->add_option("--pairs", pairs, "alphabet size");
  canon->callback([&] {
    const Code c = read_code_file(file_a);
    const Alphabet alphabet = pick_alphabet(pairs, {c});
    const GroupEnumerator g = stabilize.empty() ? GroupEnumerator::full(c.dim(), alphabet)
                                                : GroupEnumerator::stabilizer_of_word(parse_word(stabilize), alphabet);
    if (g.bound() > 200'000'000ULL) throw std::invalid_argument("group too large; use --stabilize");
    std::cout << format_code(canonical_form(c, g));
  });

  auto* covers = app.add_subcommand("covers", "twin-pair-free minimal covers of a word, up to isomorphism");
  int size = 0;
  bool plain = false;
  std::string out_path;
  covers->add_option("--word", word_text, "covered word")->required();
  covers->add_option("--size", size, "number of words")->required();
  covers->add_option("--pairs", pairs, "alphabet size")->required();
  covers->add_flag("--all", plain, "list every cover rather than one per class");
  covers->add_option("--out", out_path, "write the family to this file");
  covers->callback([&] {
    const Word u = parse_word(word_text);
    const Alphabet alphabet = pick_alphabet(pairs, {}, {u});
    const GroupElement g = to_constant_b(u);
    const GroupElement back = g.inverse();
    const Word b = g.apply(u);
    CoverWordOptions options;
    options.threads = env_threads();
    auto family = cover_word(b, size, alphabet, options);
    const auto stab = GroupEnumerator::stabilizer_of_word(b, alphabet);
    const auto classes = dedup_orbits(family, stab);
    std::vector<Code> listed;
    if (plain) {
      for (const Code& rep : classes) {
        for (const Code& c : orbit(rep, stab)) listed.push_back(apply_code(back, c));
      }
    } else {
      for (const Code& rep : classes) listed.push_back(apply_code(back, rep));
    }
    std::sort(listed.begin(), listed.end());
    std::cout << "classes: " << classes.size() << "\n";
    if (plain) std::cout << "covers: " << listed.size() << "\n";
    write_or_print(out_path, format_family(listed));
  });

  auto* second = app.add_subcommand("find-second", "codes equivalent to W that contain a partial code");
  std::size_t min_density = 5;
  second->add_option("w", file_a, "target code W")->required();
  second->add_option("--partial", file_b, "partial code R")->required();
  second->add_option("--min-density", min_density, "density bound");
  second->add_option("--pairs", pairs, "alphabet size");
  second->callback([&] {
    const Code w = read_code_file(file_a);
    const Code r = read_code_file(file_b);
    const auto family = find_second_code(w, r, pick_alphabet(pairs, {w, r}), min_density);
    std::cout << "codes: " << family.size() << "\n" << format_family(family);
    result = family.empty() ? kNo : kYes;
  });

  auto* simplify = app.add_subcommand("simplify", "flip a cube tiling code to a simple code");
  simplify->add_option("file", file_a, "cube tiling code")->required();
  simplify->add_option("--budget", budget, "state budget per layer search");
  simplify->add_option("--pairs", pairs, "letter pairs available to flips");
  simplify->callback([&] {
    const Code c = read_code_file(file_a);
    const auto r = simplify_tiling(c, pick_alphabet(pairs, {c}), budget);
    std::cout << "result: " << to_string(r.verdict) << "\n" << format_code(r.code);
    std::cout << "trace (" << r.trace.size() << " flips):\n";
    print_trace(r.trace);
    result = exit_for(r.verdict);
  });

  auto* rep = app.add_subcommand("replay", "apply a flip trace to a code");
  rep->add_option("file", file_a, "seed code")->required();
  rep->add_option("trace", file_b, "trace file")->required();
  rep->callback([&] {
    const Code c = read_code_file(file_a);
    const auto trace = parse_trace(read_text_file(file_b));
    std::cout << format_code(replay(c, trace));
  });

  auto* repro = app.add_subcommand("repro", "run reproduction jobs");
  std::vector<std::string> jobs;
  bool long_run = false;
  bool list_jobs = false;
  std::uint64_t seed = ReproOptions{}.seed;
  repro->add_option("jobs", jobs, "job names, or 'all'");
  repro->add_flag("--long", long_run, "allow long-running jobs and sizes");
  repro->add_flag("--list", list_jobs, "list jobs");
  repro->add_option("--seed", seed, "seed for randomized jobs");
  repro->callback([&] {
    if (list_jobs || jobs.empty()) {
      for (const auto& j : repro_jobs()) {
        std::cout << j.name << (j.long_only ? " (--long)" : "") << ": " << j.summary << "\n";
      }
      return;
    }
    if (jobs.size() == 1 && jobs[0] == "all") {
      jobs.clear();
      for (const auto& j : repro_jobs()) jobs.emplace_back(j.name);
    }
    ReproOptions options;
    options.long_run = long_run;
    options.threads = env_threads();
    options.seed = seed;
    for (const auto& j : jobs) {
      const JobReport r = run_repro(j, options);
      print_report(r, std::cout);
      if (!r.skipped && !r.passed()) result = kNo;
    }
  });

  auto* cat = app.add_subcommand("catalog", "bundled reference codes");
  std::string entry_name;
  cat->add_option("name", entry_name, "entry to print (omit to list)");
  cat->callback([&] {
    if (entry_name.empty()) {
      for (const auto& e : catalog()) std::cout << e.name << ": " << e.description << "\n";
      return;
    }
    const auto e = find_catalog_entry(entry_name);
    if (!e) throw std::invalid_argument("no catalog entry named " + entry_name);
    std::cout << format_code(e->code, {e->description});
    if (!e->trace.empty()) {
      std::cout << "# trace\n";
      print_trace(e->trace);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return result;
}
