#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "curvature/isoperimetry.hpp"
#include "curvature/words.hpp"

namespace curv {

enum class Solver { dehn, zz_normal_form };

std::string_view to_string(Solver s);

/// Where input words come from. `null_homotopic` enumerates every freely
/// reduced null-homotopic word of length exactly n reachable by relator
/// insertions; `random` draws `trials` freely reduced words of length n;
/// `worst` is b^m a^m B^m A^m cut to length n for the ℤ⊕ℤ normal form and
/// the null-homotopic enumeration for Dehn's algorithm.
struct WordSource {
  enum class Kind { null_homotopic, random, worst };
  Kind kind = Kind::worst;
  std::uint64_t seed = 0;
  std::size_t trials = 1;

  static WordSource null_homotopic() { return {Kind::null_homotopic, 0, 0}; }
  static WordSource random(std::uint64_t seed, std::size_t trials = 32) { return {Kind::random, seed, trials}; }
  static WordSource worst() { return {}; }
};

std::string_view to_string(WordSource::Kind k);

/// steps is the worst primitive-operation count over the trials at length n:
/// relator moves plus free cancellations for Dehn's algorithm, swaps for the
/// normal form. relator_moves is the worst count of relator moves alone.
struct BenchRow {
  std::size_t n = 0;
  std::size_t steps = 0;
  std::size_t relator_moves = 0;
  std::uint64_t wall_nanos = 0;
  std::size_t trials = 0;
};

struct BenchTable {
  Solver solver = Solver::dehn;
  std::string presentation;
  WordSource source;
  std::vector<BenchRow> rows;

  static constexpr std::string_view step_definition =
      "dehn: relator moves + free cancellations; zz-nf: letter swaps";
};

/// Throws std::invalid_argument when the solver does not apply to the
/// presentation (the normal form needs ℤ⊕ℤ) or a size is zero.
BenchTable run_bench(const Presentation& p, Solver solver, std::vector<std::size_t> sizes, WordSource source);

/// b^m a^m B^m A^m with m = ceil(n / 4), cut to its first n letters.
Word zz_worst_word(std::size_t n);

/// Null-homotopic words of length exactly n produced by relator insertions.
std::vector<Word> null_homotopic_of_length(const Presentation& p, std::size_t n);

/// Growth of the worst step count; rows with no trials are skipped.
GrowthClass fit_growth(const BenchTable& table);

}  // namespace curv
