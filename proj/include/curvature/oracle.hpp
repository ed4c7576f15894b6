#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "curvature/words.hpp"

namespace curv {

enum class Tristate { equal, not_equal, unknown };

std::string_view to_string(Tristate t);

/// Limits for the generic strategy. `max_search_length` caps intermediate
/// word length during the certifying search; 0 selects
/// 2 * |input| + longest relator.
struct OracleBudget {
  std::size_t max_area = 16;
  std::size_t max_search_length = 0;
};

/// Signalled when a query cannot be answered within its budget.
class InsufficientBudget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Image of a word in the abelianization, reduced modulo the lattice spanned
/// by the relators' exponent vectors. Two words with different residues are
/// different group elements.
class AbelianInvariant {
 public:
  explicit AbelianInvariant(const Presentation& p);

  std::vector<std::int64_t> residue(const Word& w) const;
  std::vector<std::int64_t> residue(std::vector<std::int64_t> exponents) const;

 private:
  std::size_t generator_count_;
  // Echelon basis with positive pivots.
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Word problem with a third answer. The free, zz and surface families are
/// decided exactly; generic presentations answer NotEqual from the
/// abelianization, Equal when a bounded relator search reaches ε, and
/// Unknown otherwise. A definite answer is never wrong.
Tristate words_equal(const Presentation& p, const Word& u, const Word& v, const OracleBudget& budget = {});

/// Shortlex-least word of length <= max_radius representing the same element
/// as `w`. Free and zz are exact without a radius. Throws InsufficientBudget
/// when nothing is found or an Unknown blocks the search.
Word canonical_form(const Presentation& p, const Word& w, std::size_t max_radius = 8,
                    const OracleBudget& budget = {});

/// Null-homotopic words reachable from ε by at most `max_insertions`
/// insertions of a symmetrized relator at any position, each followed by free
/// reduction, with every intermediate word of length <= max_length. Each
/// output is a product of at most `max_insertions` relator conjugates.
/// Deduplicated and shortlex-sorted; always contains ε.
std::vector<Word> generate_null_homotopic(const Presentation& p, std::size_t max_insertions,
                                          std::size_t max_length);

/// Calls `fn` for every freely reduced word of exactly `length` letters over
/// `generator_count` generators, in shortlex order. `fn` returns false to stop.
/// Returns false if stopped early.
bool for_each_reduced_word(std::size_t generator_count, std::size_t length,
                           const std::function<bool(const Word&)>& fn);

}  // namespace curv
