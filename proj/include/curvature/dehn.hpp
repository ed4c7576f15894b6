#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "curvature/words.hpp"

namespace curv {

/// One majority-subword replacement: the subword at `position` equals the
/// first `matched_length` letters of `relator` (2 * matched_length > |relator|)
/// and is replaced by the inverse of the remaining letters.
struct DehnStep {
  std::size_t position = 0;
  std::size_t relator_index = 0;  // into SymmetrizedRelatorSet::relators
  Word relator;
  std::size_t matched_length = 0;
  Word replacement;
};

struct ReductionTrace {
  std::vector<DehnStep> steps;
  std::size_t free_cancellations = 0;

  std::size_t step_count() const { return steps.size(); }
  /// Relator moves plus cancelled pairs: the machine-independent cost.
  std::size_t primitive_operations() const { return steps.size() + free_cancellations; }
};

struct DehnResult {
  Word word;
  ReductionTrace trace;
};

/// Leftmost position holding a strict-majority prefix of some symmetrized
/// relator, searching from `start`. At one position the longest match wins,
/// then the earlier relator in enumeration order.
std::optional<DehnStep> find_majority_subword(const Word& w, const SymmetrizedRelatorSet& s,
                                              std::size_t start = 0);

/// Dehn's algorithm. The result has no majority subword and represents the
/// same element as `w`.
DehnResult dehn_reduce(const Presentation& p, const Word& w);
DehnResult dehn_reduce(const SymmetrizedRelatorSet& s, const Word& w);

struct ZZNormalForm {
  std::int64_t a_exponent = 0;
  std::int64_t b_exponent = 0;
  std::uint64_t swaps = 0;

  bool operator==(const ZZNormalForm&) const = default;
};

/// Normal form a^i b^j of a word over {a, b}. The word is absorbed letter by
/// letter into a running a^i b^j; every a-letter commutes past the |j|
/// b-letters currently on its right, one swap each, and inverse pairs cancel
/// as soon as they meet. Throws std::invalid_argument on other generators.
ZZNormalForm zz_normal_form(const Word& w);

Word zz_spelling(std::int64_t a_exponent, std::int64_t b_exponent);

struct DehnVerdict {
  bool holds = true;
  std::optional<Word> counterexample;
  std::size_t words_checked = 0;
  std::size_t max_insertions = 0;
  std::size_t max_length = 0;
};

/// Runs Dehn's algorithm on every nonempty word of
/// generate_null_homotopic(p, max_insertions, max_length). A counterexample
/// is the shortlex-least null-homotopic word that does not reduce to ε.
DehnVerdict verify_dehn_presentation(const Presentation& p, std::size_t max_insertions, std::size_t max_length);

}  // namespace curv
