#include "curvature/cayley.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace curv {

GeneratingSet GeneratingSet::letters(const Presentation& p) {
  GeneratingSet g;
  for (std::uint32_t i = 0; i < p.generator_count(); ++i) g.words.push_back(Word{{i, false}});
  return g;
}

std::optional<std::size_t> CayleyBall::lookup(const Word& reduced, const std::vector<std::int64_t>& key) const {
  const auto it = buckets_.find(key);
  if (it == buckets_.end()) return std::nullopt;
  for (std::size_t v : it->second) {
    switch (words_equal(presentation_, reduced, vertices_[v], budget_)) {
      case Tristate::equal: return v;
      case Tristate::not_equal: break;
      case Tristate::unknown:
        throw InsufficientBudget("cayley ball: cannot compare " + to_string(reduced) + " with " +
                                 to_string(vertices_[v]));
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> CayleyBall::find(const Word& w) const {
  presentation_.check_alphabet(w);
  const Word reduced = free_reduce(w);
  return lookup(reduced, abelian_.residue(reduced));
}

std::vector<CayleyBall::Edge> CayleyBall::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < size(); ++v)
    for (std::size_t d = 0; d < directions_.size(); ++d)
      if (const auto u = neighbor(v, d); u != kOutside) out.push_back({v, d, static_cast<std::size_t>(u)});
  return out;
}

CayleyBall build_ball(const Presentation& p, std::size_t r, const OracleBudget& budget) {
  return build_ball(p, r, budget, GeneratingSet::letters(p));
}

CayleyBall build_ball(const Presentation& p, std::size_t r, const OracleBudget& budget, const GeneratingSet& gens) {
  CayleyBall ball(p, r);
  ball.budget_ = budget;
  for (const Word& g : gens.words) {
    p.check_alphabet(g);
    for (const Word& d : {g, invert(g)}) {
      ball.directions_.push_back(d);
      ball.labels_.push_back(to_string(d));
    }
  }
  const std::size_t k = ball.directions_.size();

  ball.vertices_.push_back(Word{});
  ball.dist_.push_back(0);
  ball.adj_.assign(k, CayleyBall::kOutside);
  ball.buckets_[ball.abelian_.residue(Word{})].push_back(0);

  for (std::size_t v = 0; v < ball.vertices_.size(); ++v) {
    for (std::size_t d = 0; d < k; ++d) {
      if (ball.adj_[v * k + d] != CayleyBall::kOutside) continue;
      const Word w = free_reduce(concat(ball.vertices_[v], ball.directions_[d]));
      const auto key = ball.abelian_.residue(w);
      std::optional<std::size_t> u = ball.lookup(w, key);
      if (!u) {
        if (ball.dist_[v] >= r) continue;
        u = ball.vertices_.size();
        ball.vertices_.push_back(w);
        ball.dist_.push_back(ball.dist_[v] + 1);
        ball.adj_.resize(ball.adj_.size() + k, CayleyBall::kOutside);
        ball.buckets_[key].push_back(*u);
      }
      ball.adj_[v * k + d] = static_cast<std::int64_t>(*u);
      ball.adj_[*u * k + CayleyBall::opposite(d)] = static_cast<std::int64_t>(v);
    }
  }
  return ball;
}

BallMetric::BallMetric(const CayleyBall& ball) : ball_(&ball), n_(ball.size()) {
  constexpr auto kInf = std::numeric_limits<std::uint16_t>::max();
  d_.assign(n_ * n_, kInf);
  const std::size_t k = ball.directions().size();
  std::vector<std::size_t> queue;
  queue.reserve(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    std::uint16_t* row = &d_[s * n_];
    row[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t d = 0; d < k; ++d) {
        const auto u = ball.neighbor(v, d);
        if (u == CayleyBall::kOutside || row[u] != kInf) continue;
        row[u] = static_cast<std::uint16_t>(row[v] + 1);
        queue.push_back(static_cast<std::size_t>(u));
      }
    }
  }
}

bool BallMetric::certified(std::size_t x, std::size_t y) const {
  return ball_->dist(x) + ball_->dist(y) + (*this)(x, y) <= 2 * ball_->radius();
}

BallDistance ball_distance(const CayleyBall& ball, const BallMetric& metric, const Word& u, const Word& v) {
  const auto x = ball.find(u), y = ball.find(v);
  if (!x || !y) throw std::out_of_range("ball_distance: element outside the ball");
  return BallDistance{metric(*x, *y), !metric.certified(*x, *y)};
}

GeodesicSet all_geodesics(const CayleyBall& ball, const BallMetric& metric, std::size_t x, std::size_t y,
                          std::size_t cap) {
  GeodesicSet out;
  const std::size_t k = ball.directions().size();
  GeodesicPath path;
  path.vertices.push_back(x);
  // Depth-first over the shortest-path DAG towards y.
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (out.truncated) return;
    if (v == y) {
      if (out.paths.size() >= cap) {
        out.truncated = true;
        return;
      }
      out.paths.push_back(path);
      return;
    }
    for (std::size_t d = 0; d < k; ++d) {
      const auto u = ball.neighbor(v, d);
      if (u == CayleyBall::kOutside) continue;
      const auto w = static_cast<std::size_t>(u);
      if (metric(w, y) + 1 != metric(v, y)) continue;
      path.vertices.push_back(w);
      path.directions.push_back(d);
      self(self, w);
      path.vertices.pop_back();
      path.directions.pop_back();
    }
  };
  walk(walk, x);
  return out;
}

}  // namespace curv
