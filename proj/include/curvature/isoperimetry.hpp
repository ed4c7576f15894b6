#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "curvature/words.hpp"

namespace curv {

/// `max_intermediate_length` of 0 selects 2 * |input| + longest relator.
struct AreaCaps {
  std::size_t max_area = 20;
  std::size_t max_intermediate_length = 0;
};

/// Replace `removed` at `position` by `inserted`, then freely reduce into
/// `result`. removed · inserted^-1 is a symmetrized relator.
struct AreaMove {
  std::size_t position = 0;
  Word removed;
  Word inserted;
  Word result;
};

struct AreaResult {
  std::optional<std::size_t> value;  // empty: Unknown within caps
  AreaCaps caps;                     // effective caps
  std::vector<AreaMove> moves;
  std::size_t states_expanded = 0;
};

/// Minimal number of relator moves taking `w` to ε through freely reduced
/// words no longer than the cap. Uniform-cost search guided by an admissible
/// lower bound, so the value is exact whenever it is reported.
AreaResult area(const Presentation& p, const Word& w, AreaCaps caps = {});

/// Some relator-move path from `w` to ε costing at most `max_area`, found by
/// shortest-word-first search; returns its cost. An upper bound on the area,
/// used to certify equality in presentations without an exact solver.
std::optional<std::size_t> find_filling(const SymmetrizedRelatorSet& s, const Word& w, std::size_t max_area,
                                        std::size_t max_length, std::size_t max_states = 200000);

/// Lower bound for the zz presentation: total absolute winding number of the
/// closed lattice path traced by `w` over all unit cells. Each relator move
/// changes one cell's winding by one. Returns 0 for open paths.
std::size_t zz_winding_area(const Word& w);

struct DehnRow {
  std::size_t n = 0;
  std::size_t max_area = 0;
  Word argmax;
  std::size_t words_examined = 0;
};

struct DehnTable {
  std::vector<DehnRow> rows;  // even n = 2, 4, ..., n_max
  AreaCaps caps;
};

/// Max area over null-homotopic freely reduced words of length <= n, for each
/// even n. Null-homotopy is decided by words_equal; throws
/// InsufficientBudget if the oracle or the area search is inconclusive.
DehnTable dehn_function(const Presentation& p, std::size_t n_max, AreaCaps caps = {});

enum class Growth { linear, quadratic, other };

std::string_view to_string(Growth g);

struct GrowthClass {
  Growth growth = Growth::other;
  double fitted_exponent = 0.0;
  double residual = 0.0;
  bool all_zero = false;
};

/// Least-squares slope of log(value) against log(n) over rows with positive
/// values. [0.8, 1.2] is linear, [1.8, 2.2] quadratic. An all-zero table is
/// linear with exponent 0 and `all_zero` set. Throws std::invalid_argument
/// with fewer than three positive rows.
GrowthClass fit_growth(std::span<const std::pair<double, double>> points);
GrowthClass fit_growth(const DehnTable& table);

}  // namespace curv
