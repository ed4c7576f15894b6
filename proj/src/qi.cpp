#include "curvature/qi.hpp"

#include <algorithm>
#include <stdexcept>

namespace curv {

namespace {

bool satisfies(const MetricPair& m, std::size_t q, std::size_t c) {
  // With lambda = q / 4: 4 * d_b <= q * d_a + 4c and 4 * d_a <= q * (d_b + c).
  return 4 * m.d_b <= q * m.d_a + 4 * c && 4 * m.d_a <= q * (m.d_b + c);
}

}  // namespace

std::size_t qi_violations(const std::vector<MetricPair>& pairs, std::size_t lambda_quarters, std::size_t c) {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [&](const MetricPair& m) { return !satisfies(m, lambda_quarters, c); }));
}

QIReport fit_qi_constants(std::vector<MetricPair> pairs) {
  QIReport rep;
  std::size_t max_d = 1;
  for (const auto& m : pairs) max_d = std::max({max_d, m.d_a, m.d_b});
  // lambda = 4 * max_d already satisfies every pair at c = 0 unless some
  // element has a zero length on one side only; c = max_d covers that.
  for (std::size_t c = 0; c <= max_d; ++c) {
    for (std::size_t q = 4; q <= 4 * max_d + 4; ++q) {
      if (qi_violations(pairs, q, c) == 0) {
        rep.lambda_quarters = q;
        rep.lambda = static_cast<double>(q) / 4.0;
        rep.c = c;
        rep.element_count = pairs.size();
        rep.pairs = std::move(pairs);
        return rep;
      }
    }
  }
  throw std::logic_error("fit_qi_constants: no constants on the grid");
}

QIReport compare_metrics(const Presentation& p, const GeneratingSet& gens_a, const GeneratingSet& gens_b,
                         std::size_t r, const OracleBudget& budget) {
  if (gens_a.words.empty() || gens_b.words.empty()) throw std::invalid_argument("compare_metrics: empty generating set");
  const CayleyBall a = build_ball(p, r, budget, gens_a);
  const CayleyBall b = build_ball(p, r, budget, gens_b);
  std::vector<MetricPair> pairs;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (const auto u = b.find(a.vertex(v))) pairs.push_back({a.dist(v), b.dist(*u)});
  QIReport rep = fit_qi_constants(std::move(pairs));
  rep.radius = r;
  rep.violations = qi_violations(rep.pairs, rep.lambda_quarters, rep.c);
  return rep;
}

}  // namespace curv
