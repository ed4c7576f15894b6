#pragma once

#include <cstddef>
#include <vector>

#include "curvature/cayley.hpp"

namespace curv {

/// Word-length pair of one group element under two generating sets.
struct MetricPair {
  std::size_t d_a = 0;
  std::size_t d_b = 0;
};

/// Constants (lambda, c) with d_a / lambda - c <= d_b <= lambda * d_a + c for
/// every compared element. lambda lives on a grid of step 1/4.
struct QIReport {
  double lambda = 1.0;
  std::size_t lambda_quarters = 4;
  std::size_t c = 0;
  std::size_t radius = 0;
  std::size_t violations = 0;
  std::size_t element_count = 0;
  std::vector<MetricPair> pairs;
};

/// Number of pairs violating either inequality for lambda = quarters / 4.
std::size_t qi_violations(const std::vector<MetricPair>& pairs, std::size_t lambda_quarters, std::size_t c);

/// Fit on given pairs: smallest c, then smallest lambda for that c.
QIReport fit_qi_constants(std::vector<MetricPair> pairs);

/// Builds radius-r balls for both generating sets (words over the
/// presentation's letters), matches their elements with words_equal and fits
/// the constants on the elements present in both balls. Distances from the
/// identity are exact in a BFS ball, so no clipping applies.
QIReport compare_metrics(const Presentation& p, const GeneratingSet& gens_a, const GeneratingSet& gens_b,
                         std::size_t r, const OracleBudget& budget = {});

}  // namespace curv
