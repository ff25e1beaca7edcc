#pragma once

// Bundled reference codes and the reproduction jobs behind `pbx repro`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pbx/code.hpp"
#include "pbx/moves.hpp"

namespace pbx {

// ---- catalog ---------------------------------------------------------------

/// The twin-pair-free pair of disjoint equivalent 12-word codes in d = 4.
Code special_pair_v();
Code special_pair_w();
/// Appends the same suffix word to every word, embedding a d = 4 code in
/// dimension 4 + |suffix|.
Code embed_with_suffix(const Code& c, const Word& suffix);

/// The four minimal covers of b...b with two to four words, in the order
/// {aab.., aa'b.., a'ab.., a'a'b..}, {aab.., aa'b.., a'cb.., a'c'b..},
/// {aab.., aa'b.., a'bb..}, {abb.., a'bb..}. dim >= 2.
std::vector<Code> small_covers_of_b(int dim);
/// Four flips taking the second cover to {bbb.., b'bb.., bb'b.., b'b'b..}.
std::vector<FlipMove> small_cover2_flips(int dim);

/// {aa, aa', a'b, a'b'} and {cc, c'c, bc', b'c'} with the four flips between
/// them.
Code flip_example_v();
Code flip_example_w();
std::vector<FlipMove> flip_example_trace();

struct CatalogEntry {
  std::string name;
  std::string description;
  Code code;
  std::vector<FlipMove> trace;  // from `code`, when the entry carries one
};
std::vector<CatalogEntry> catalog();
std::optional<CatalogEntry> find_catalog_entry(std::string_view name);

// ---- random instances ------------------------------------------------------

/// A random cube tiling code: a simple code with random pairs per position
/// followed by `flips` random flips.
Code random_tiling(int dim, const Alphabet& alphabet, std::mt19937_64& rng, int flips = 16);
Word random_word(int dim, const Alphabet& alphabet, std::mt19937_64& rng);

// ---- reproduction jobs -----------------------------------------------------

struct ReproOptions {
  bool long_run = false;
  int threads = 1;
  std::uint64_t seed = 20240601;
};

struct JobCheck {
  std::string label;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct JobReport {
  std::string job;
  std::vector<JobCheck> checks;
  bool skipped = false;  // long job run without long_run
  bool passed() const;
};

struct JobInfo {
  std::string_view name;
  std::string_view summary;
  bool long_only;
};
const std::vector<JobInfo>& repro_jobs();

/// Runs one job. Throws std::invalid_argument for an unknown name.
JobReport run_repro(std::string_view job, const ReproOptions& options);
void print_report(const JobReport& report, std::ostream& out);

}  // namespace pbx
