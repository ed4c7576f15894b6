#include "curvature/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "curvature/dehn.hpp"
#include "curvature/oracle.hpp"
#include "curvature/rng.hpp"

namespace curv {

std::string_view to_string(Solver s) { return s == Solver::dehn ? "dehn" : "zz-nf"; }

std::string_view to_string(WordSource::Kind k) {
  switch (k) {
    case WordSource::Kind::null_homotopic: return "trivial";
    case WordSource::Kind::random: return "random";
    case WordSource::Kind::worst: break;
  }
  return "worst";
}

Word zz_worst_word(std::size_t n) {
  const std::size_t m = (n + 3) / 4;
  Word w;
  for (auto [gen, inverse] : {std::pair{1U, false}, {0U, false}, {1U, true}, {0U, true}})
    for (std::size_t i = 0; i < m && w.size() < n; ++i) w.push_back(Letter{gen, inverse});
  return w;
}

std::vector<Word> null_homotopic_of_length(const Presentation& p, std::size_t n) {
  if (p.relators().empty()) return {};
  std::size_t shortest = p.relators().front().size();
  for (const Word& r : p.relators()) shortest = std::min(shortest, r.size());
  const std::size_t insertions = (n + shortest - 1) / shortest;
  std::vector<Word> out;
  for (Word& w : generate_null_homotopic(p, insertions, n))
    if (w.size() == n) out.push_back(std::move(w));
  return out;
}

namespace {

Word random_reduced_word(std::mt19937_64& rng, std::size_t ngens, std::size_t n) {
  Word w;
  while (w.size() < n) {
    const Letter l = Letter::from_key(static_cast<std::uint32_t>(uniform_below(rng, 2 * ngens)));
    if (!w.empty() && mutually_inverse(w.back(), l)) continue;
    w.push_back(l);
  }
  return w;
}

}  // namespace

BenchTable run_bench(const Presentation& p, Solver solver, std::vector<std::size_t> sizes, WordSource source) {
  if (solver == Solver::zz_normal_form && p.family() != Family::zz)
    throw std::invalid_argument("the zz-nf solver needs the ℤ⊕ℤ presentation");
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (!sizes.empty() && sizes.front() == 0) throw std::invalid_argument("bench sizes must be positive");

  BenchTable table;
  table.solver = solver;
  table.presentation = p.family() == Family::generic ? std::string(family_name(p.family()))
                       : p.family() == Family::zz     ? std::string("zz")
                                                      : std::string(family_name(p.family())) + ":" +
                                                            std::to_string(p.param());
  table.source = source;
  const SymmetrizedRelatorSet s = symmetrize(p);
  std::mt19937_64 rng(source.seed);

  for (std::size_t n : sizes) {
    std::vector<Word> words;
    switch (source.kind) {
      case WordSource::Kind::random:
        for (std::size_t t = 0; t < source.trials; ++t) words.push_back(random_reduced_word(rng, p.generator_count(), n));
        break;
      case WordSource::Kind::worst:
        if (solver == Solver::zz_normal_form) {
          words.push_back(zz_worst_word(n));
          break;
        }
        [[fallthrough]];
      case WordSource::Kind::null_homotopic:
        words = null_homotopic_of_length(p, n);
        break;
    }

    BenchRow row;
    row.n = n;
    row.trials = words.size();
    const auto start = std::chrono::steady_clock::now();
    for (const Word& w : words) {
      if (solver == Solver::dehn) {
        const DehnResult r = dehn_reduce(s, w);
        row.steps = std::max(row.steps, r.trace.primitive_operations());
        row.relator_moves = std::max(row.relator_moves, r.trace.step_count());
      } else {
        row.steps = std::max(row.steps, static_cast<std::size_t>(zz_normal_form(w).swaps));
      }
    }
    row.wall_nanos = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count());
    table.rows.push_back(row);
  }
  return table;
}

GrowthClass fit_growth(const BenchTable& table) {
  std::vector<std::pair<double, double>> pts;
  for (const BenchRow& r : table.rows)
    if (r.trials > 0) pts.emplace_back(static_cast<double>(r.n), static_cast<double>(r.steps));
  return fit_growth(pts);
}

}  // namespace curv
