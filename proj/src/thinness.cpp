#include "curvature/thinness.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "curvature/rng.hpp"

namespace curv {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Side {
  std::size_t from;
  std::size_t to;
};

class Evaluator {
 public:
  Evaluator(const CayleyBall& ball, const BallMetric& metric)
      : ball_(ball), metric_(metric), k_(ball.directions().size()), mark_(ball.size(), 0), best_(ball.size(), 0) {}

  // Vertices on some geodesic from s.from to s.to, ordered by distance from s.from.
  std::vector<std::size_t> interval(Side s) {
    ++epoch_;
    std::vector<std::size_t> out{s.from};
    mark_[s.from] = epoch_;
    for (std::size_t head = 0; head < out.size(); ++head) {
      const std::size_t v = out[head];
      for (std::size_t d = 0; d < k_; ++d) {
        const auto n = ball_.neighbor(v, d);
        if (n == CayleyBall::kOutside) continue;
        const auto w = static_cast<std::size_t>(n);
        if (mark_[w] == epoch_ || metric_(w, s.to) + 1 != metric_(v, s.to)) continue;
        mark_[w] = epoch_;
        out.push_back(w);
      }
    }
    return out;
  }

  // Max over geodesics of side s of the distance from p to the nearest vertex
  // of that geodesic: a bottleneck path over the geodesic DAG.
  std::size_t farthest_geodesic(std::size_t p, Side s, const std::vector<std::size_t>& iv,
                                std::vector<std::size_t>* parent = nullptr) {
    ++epoch_;
    for (std::size_t w : iv) mark_[w] = epoch_;
    if (parent) parent->assign(ball_.size(), kNone);
    for (std::size_t w : iv) {
      const std::size_t here = metric_(p, w);
      if (w == s.from) {
        best_[w] = here;
        continue;
      }
      std::size_t via = 0;
      std::size_t via_vertex = kNone;
      for (std::size_t d = 0; d < k_; ++d) {
        const auto n = ball_.neighbor(w, d);
        if (n == CayleyBall::kOutside) continue;
        const auto u = static_cast<std::size_t>(n);
        if (mark_[u] != epoch_ || metric_(s.from, u) + 1 != metric_(s.from, w)) continue;
        if (via_vertex == kNone || best_[u] > via) {
          via = best_[u];
          via_vertex = u;
        }
      }
      best_[w] = std::min(here, via);
      if (parent) (*parent)[w] = via_vertex;
    }
    return best_[s.to];
  }

  GeodesicPath first_geodesic(Side s) const {
    GeodesicPath path;
    path.vertices.push_back(s.from);
    std::size_t v = s.from;
    while (v != s.to) {
      for (std::size_t d = 0; d < k_; ++d) {
        const auto n = ball_.neighbor(v, d);
        if (n == CayleyBall::kOutside) continue;
        const auto w = static_cast<std::size_t>(n);
        if (metric_(w, s.to) + 1 != metric_(v, s.to)) continue;
        path.vertices.push_back(w);
        path.directions.push_back(d);
        v = w;
        break;
      }
    }
    return path;
  }

  GeodesicPath path_from_parents(Side s, const std::vector<std::size_t>& parent) const {
    std::vector<std::size_t> rev{s.to};
    while (rev.back() != s.from) rev.push_back(parent[rev.back()]);
    GeodesicPath path;
    path.vertices.assign(rev.rbegin(), rev.rend());
    for (std::size_t i = 1; i < path.vertices.size(); ++i) path.directions.push_back(direction(path.vertices[i - 1], path.vertices[i]));
    return path;
  }

  GeodesicPath join(GeodesicPath a, const GeodesicPath& b) const {
    a.vertices.insert(a.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
    a.directions.insert(a.directions.end(), b.directions.begin(), b.directions.end());
    return a;
  }

  std::size_t direction(std::size_t from, std::size_t to) const {
    for (std::size_t d = 0; d < k_; ++d)
      if (ball_.neighbor(from, d) == static_cast<std::int64_t>(to)) return d;
    throw std::logic_error("vertices are not adjacent");
  }

  std::pair<std::size_t, std::size_t> nearest(std::size_t p, const GeodesicPath& a, const GeodesicPath& b) const {
    std::size_t best = kNone, q = kNone;
    for (const GeodesicPath* g : {&a, &b})
      for (std::size_t v : g->vertices)
        if (metric_(p, v) < best) {
          best = metric_(p, v);
          q = v;
        }
    return {best, q};
  }

 private:
  const CayleyBall& ball_;
  const BallMetric& metric_;
  std::size_t k_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<std::size_t> best_;
};

TriangleThinness evaluate(Evaluator& ev, std::size_t x, std::size_t y, std::size_t z, GeodesicChoice choice) {
  const std::array<Side, 3> sides{Side{x, y}, Side{y, z}, Side{z, x}};
  TriangleThinness out;
  out.witness.triangle = {x, y, z};

  if (choice == GeodesicChoice::canonical) {
    std::array<GeodesicPath, 3> g;
    for (std::size_t i = 0; i < 3; ++i) g[i] = ev.first_geodesic(sides[i]);
    bool any = false;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t p : g[i].vertices) {
        const auto [d, q] = ev.nearest(p, g[(i + 1) % 3], g[(i + 2) % 3]);
        if (!any || d > out.delta) {
          any = true;
          out.delta = d;
          out.witness.side = i;
          out.witness.p = p;
          out.witness.q = q;
        }
      }
    }
    out.witness.geodesics = g;
    out.witness.distance = out.delta;
    return out;
  }

  std::array<std::vector<std::size_t>, 3> iv;
  for (std::size_t i = 0; i < 3; ++i) iv[i] = ev.interval(sides[i]);
  bool any = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    for (std::size_t p : iv[i]) {
      const std::size_t fj = ev.farthest_geodesic(p, sides[j], iv[j]);
      if (any && fj <= out.delta) continue;
      const std::size_t d = std::min(fj, ev.farthest_geodesic(p, sides[k], iv[k]));
      if (!any || d > out.delta) {
        any = true;
        out.delta = d;
        out.witness.side = i;
        out.witness.p = p;
      }
    }
  }

  // Rebuild the maximizing configuration.
  const std::size_t i = out.witness.side, j = (i + 1) % 3, k = (i + 2) % 3, p = out.witness.p;
  std::vector<std::size_t> parent;
  ev.farthest_geodesic(p, sides[j], iv[j], &parent);
  out.witness.geodesics[j] = ev.path_from_parents(sides[j], parent);
  ev.farthest_geodesic(p, sides[k], iv[k], &parent);
  out.witness.geodesics[k] = ev.path_from_parents(sides[k], parent);
  out.witness.geodesics[i] =
      ev.join(ev.first_geodesic({sides[i].from, p}), ev.first_geodesic({p, sides[i].to}));
  const auto [d, q] = ev.nearest(p, out.witness.geodesics[j], out.witness.geodesics[k]);
  out.witness.q = q;
  out.witness.distance = d;
  return out;
}

}  // namespace

TriangleThinness triangle_thinness(const CayleyBall& ball, const BallMetric& metric, std::size_t x, std::size_t y,
                                   std::size_t z, GeodesicChoice choice) {
  if (x >= ball.size() || y >= ball.size() || z >= ball.size())
    throw std::out_of_range("triangle_thinness: vertex outside the ball");
  if (!metric.certified(x, y) || !metric.certified(y, z) || !metric.certified(z, x))
    throw std::invalid_argument("triangle_thinness: geodesics may leave the ball");
  Evaluator ev(ball, metric);
  return evaluate(ev, x, y, z, choice);
}

ThinnessReport delta_estimate(const CayleyBall& ball, const BallMetric& metric, SamplingPolicy policy,
                              GeodesicChoice choice) {
  if (ball.radius() < 2) throw std::invalid_argument("delta_estimate needs radius >= 2");
  ThinnessReport report;
  report.policy = policy;
  report.choice = choice;
  report.radius = ball.radius();
  Evaluator ev(ball, metric);
  auto consider = [&](std::size_t x, std::size_t y, std::size_t z) {
    ++report.triangles_examined;
    TriangleThinness t = evaluate(ev, x, y, z, choice);
    if (!report.witness || t.delta > report.delta) {
      report.delta = t.delta;
      report.witness = std::move(t.witness);
    }
  };

  const std::size_t n = ball.size();
  if (policy.kind == SamplingPolicy::Kind::exhaustive) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        if (!metric.certified(x, y)) continue;
        for (std::size_t z = y + 1; z < n; ++z)
          if (metric.certified(y, z) && metric.certified(x, z)) consider(x, y, z);
      }
    return report;
  }

  std::mt19937_64 rng(policy.seed);
  const std::size_t attempts = 100 * policy.count + 1000;
  for (std::size_t a = 0; a < attempts && report.triangles_examined < policy.count; ++a) {
    std::array<std::size_t, 3> t{};
    for (auto& v : t) v = static_cast<std::size_t>(uniform_below(rng, n));
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
    std::sort(t.begin(), t.end());
    if (metric.certified(t[0], t[1]) && metric.certified(t[1], t[2]) && metric.certified(t[0], t[2]))
      consider(t[0], t[1], t[2]);
  }
  return report;
}

}  // namespace curv
