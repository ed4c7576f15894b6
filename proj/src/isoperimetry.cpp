#include "curvature/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "curvature/oracle.hpp"

namespace curv {

namespace {

// Every word one relator move away from `w`: for each position and each split
// r = s·t' of a symmetrized relator with s a prefix of w at that position,
// replace s by t'^-1. s may be empty (insertion) or all of r (deletion).
template <class Fn>
void for_each_move(const Word& w, const SymmetrizedRelatorSet& s, std::size_t max_length, Fn&& fn) {
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    for (const Word& r : s.relators) {
      for (std::size_t m = 0; m <= r.size(); ++m) {
        if (m > 0 && (pos + m > w.size() || w[pos + m - 1] != r[m - 1])) break;
        Word inserted = invert(r.subword(m, r.size() - m));
        Word next = w.subword(0, pos);
        next.append(inserted);
        next.append(w.subword(pos + m, w.size() - pos - m));
        next = free_reduce(next);
        if (next.size() > max_length) continue;
        fn(AreaMove{pos, r.subword(0, m), std::move(inserted), std::move(next)});
      }
    }
  }
}

class LowerBound {
 public:
  LowerBound(const Presentation& p, const SymmetrizedRelatorSet& s)
      : zz_(p.family() == Family::zz), members_(s.relators.begin(), s.relators.end()) {}

  std::size_t operator()(const Word& w) const {
    if (w.empty()) return 0;
    // One move reaches ε exactly from conjugates of a symmetrized relator.
    std::size_t h = members_.count(cyclic_reduce(w)) ? 1 : 2;
    if (zz_) h = std::max(h, zz_winding_area(w));
    return h;
  }

 private:
  bool zz_;
  std::unordered_set<Word, WordHash> members_;
};

struct SearchNode {
  Word word;
  std::size_t cost;
  std::ptrdiff_t parent;
  AreaMove move;
};

std::vector<AreaMove> unwind(std::vector<SearchNode>& nodes, std::ptrdiff_t i) {
  std::vector<AreaMove> moves;
  for (; nodes[static_cast<std::size_t>(i)].parent >= 0; i = nodes[static_cast<std::size_t>(i)].parent)
    moves.push_back(std::move(nodes[static_cast<std::size_t>(i)].move));
  std::reverse(moves.begin(), moves.end());
  return moves;
}

}  // namespace

std::size_t zz_winding_area(const Word& w) {
  // Horizontal edges as (column, height, sign). A cell's winding number is
  // the signed count of horizontal edges above it in its column.
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> edges;
  std::int64_t x = 0, y = 0;
  for (Letter l : w) {
    if (l.gen > 1) return 0;
    if (l.gen == 0) {
      edges.emplace_back(l.inverse ? x - 1 : x, y, l.inverse ? 1 : -1);
      x += l.inverse ? -1 : 1;
    } else {
      y += l.inverse ? -1 : 1;
    }
  }
  if (x != 0 || y != 0) return 0;
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b) : std::get<1>(a) > std::get<1>(b);
  });
  std::size_t total = 0;
  std::int64_t winding = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [col, h, sign] = edges[i];
    winding += sign;
    if (i + 1 < edges.size() && std::get<0>(edges[i + 1]) == col) {
      const std::int64_t rows = h - std::get<1>(edges[i + 1]);
      total += static_cast<std::size_t>((winding < 0 ? -winding : winding) * rows);
    } else {
      winding = 0;  // a closed path's column sums vanish
    }
  }
  return total;
}

AreaResult area(const Presentation& p, const Word& w, AreaCaps caps) {
  p.check_alphabet(w);
  const Word start = free_reduce(w);
  const SymmetrizedRelatorSet s = symmetrize(p);
  if (caps.max_intermediate_length == 0) caps.max_intermediate_length = 2 * start.size() + s.max_relator_length;
  AreaResult result;
  result.caps = caps;
  if (start.empty()) {
    result.value = 0;
    return result;
  }
  if (p.family() != Family::generic && words_equal(p, start, Word{}) == Tristate::not_equal) return result;
  if (start.size() > caps.max_intermediate_length) return result;

  const LowerBound lower(p, s);
  std::vector<SearchNode> nodes;
  std::unordered_map<Word, std::size_t, WordHash> best;
  // (f, -g, length, insertion order): deepest, then shortest, among equal estimates.
  using Entry = std::tuple<std::size_t, std::ptrdiff_t, std::size_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

  auto push = [&](Word word, std::size_t cost, std::ptrdiff_t parent, AreaMove move) {
    const std::size_t f = cost + lower(word);
    if (f > caps.max_area) return;
    auto [it, fresh] = best.try_emplace(word, cost);
    if (!fresh) {
      if (it->second <= cost) return;
      it->second = cost;
    }
    nodes.push_back(SearchNode{std::move(word), cost, parent, std::move(move)});
    open.emplace(f, -static_cast<std::ptrdiff_t>(cost), nodes.back().word.size(), nodes.size() - 1);
  };

  push(start, 0, -1, {});
  while (!open.empty()) {
    const std::size_t i = std::get<3>(open.top());
    open.pop();
    if (best.at(nodes[i].word) < nodes[i].cost) continue;
    if (nodes[i].word.empty()) {
      result.value = nodes[i].cost;
      result.moves = unwind(nodes, static_cast<std::ptrdiff_t>(i));
      return result;
    }
    ++result.states_expanded;
    const Word here = nodes[i].word;
    const std::size_t cost = nodes[i].cost + 1;
    for_each_move(here, s, caps.max_intermediate_length, [&](AreaMove&& m) {
      Word next = m.result;
      push(std::move(next), cost, static_cast<std::ptrdiff_t>(i), std::move(m));
    });
  }
  return result;
}

std::optional<std::size_t> find_filling(const SymmetrizedRelatorSet& s, const Word& w, std::size_t max_area,
                                        std::size_t max_length, std::size_t max_states) {
  const Word start = free_reduce(w);
  if (start.empty()) return 0;
  if (start.size() > max_length) return std::nullopt;
  std::unordered_map<Word, std::size_t, WordHash> best{{start, 0}};
  using Entry = std::tuple<std::size_t, std::size_t, std::size_t>;  // (length, cost, id)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::vector<Word> words{start};
  open.emplace(start.size(), 0, 0);
  std::size_t expanded = 0;
  while (!open.empty() && expanded < max_states) {
    const auto [len, cost, id] = open.top();
    open.pop();
    if (best.at(words[id]) < cost) continue;
    ++expanded;
    if (cost == max_area) continue;
    const Word here = words[id];
    std::optional<std::size_t> done;
    for_each_move(here, s, max_length, [&](AreaMove&& m) {
      if (done) return;
      if (m.result.empty()) {
        done = cost + 1;
        return;
      }
      auto [it, fresh] = best.try_emplace(m.result, cost + 1);
      if (!fresh) {
        if (it->second <= cost + 1) return;
        it->second = cost + 1;
      }
      words.push_back(std::move(m.result));
      open.emplace(words.back().size(), cost + 1, words.size() - 1);
    });
    if (done) return done;
  }
  return std::nullopt;
}

DehnTable dehn_function(const Presentation& p, std::size_t n_max, AreaCaps caps) {
  DehnTable table;
  table.caps = caps;
  const OracleBudget budget{caps.max_area, caps.max_intermediate_length};
  DehnRow running;
  for (std::size_t len = 1; len <= n_max; ++len) {
    for_each_reduced_word(p.generator_count(), len, [&](const Word& w) {
      const Tristate t = words_equal(p, w, Word{}, budget);
      if (t == Tristate::unknown)
        throw InsufficientBudget("dehn_function: null-homotopy of " + to_string(w) + " undecided");
      if (t == Tristate::not_equal) return true;
      const AreaResult a = area(p, w, caps);
      if (!a.value) throw InsufficientBudget("dehn_function: area of " + to_string(w) + " exceeds caps");
      ++running.words_examined;
      if (*a.value > running.max_area) {
        running.max_area = *a.value;
        running.argmax = w;
      }
      return true;
    });
    if (len % 2 == 0) {
      running.n = len;
      table.rows.push_back(running);
    }
  }
  return table;
}

std::string_view to_string(Growth g) {
  switch (g) {
    case Growth::linear: return "linear";
    case Growth::quadratic: return "quadratic";
    case Growth::other: break;
  }
  return "other";
}

GrowthClass fit_growth(std::span<const std::pair<double, double>> points) {
  std::vector<std::pair<double, double>> logs;
  bool any_nonzero = false;
  for (const auto& [n, v] : points) {
    if (v != 0.0) any_nonzero = true;
    if (n > 0.0 && v > 0.0) logs.emplace_back(std::log(n), std::log(v));
  }
  GrowthClass g;
  if (!any_nonzero) {
    g.growth = Growth::linear;
    g.all_zero = true;
    return g;
  }
  if (logs.size() < 3) throw std::invalid_argument("fit_growth needs at least three positive rows");
  double mx = 0, my = 0;
  for (const auto& [x, y] : logs) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(logs.size());
  my /= static_cast<double>(logs.size());
  double sxy = 0, sxx = 0;
  for (const auto& [x, y] : logs) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_growth needs at least two distinct lengths");
  const double slope = sxy / sxx;
  double ss = 0;
  for (const auto& [x, y] : logs) {
    const double e = y - (my + slope * (x - mx));
    ss += e * e;
  }
  g.fitted_exponent = slope;
  g.residual = std::sqrt(ss / static_cast<double>(logs.size()));
  if (slope >= 0.8 && slope <= 1.2)
    g.growth = Growth::linear;
  else if (slope >= 1.8 && slope <= 2.2)
    g.growth = Growth::quadratic;
  else
    g.growth = Growth::other;
  return g;
}

GrowthClass fit_growth(const DehnTable& table) {
  std::vector<std::pair<double, double>> pts;
  for (const DehnRow& r : table.rows) pts.emplace_back(static_cast<double>(r.n), static_cast<double>(r.max_area));
  return fit_growth(pts);
}

}  // namespace curv
