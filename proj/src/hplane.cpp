#include "curvature/hplane.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "curvature/rng.hpp"

namespace curv {

namespace {

using Complex = std::complex<double>;

constexpr double kInvPhi = 0.61803398874989484820;

// Golden-section search for the minimum of a unimodal f on [lo, hi].
template <class F>
double golden_min(F&& f, double lo, double hi, int iterations = 56) {
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return std::min({f(lo), f(hi), fc, fd});
}

// Argument of the maximum of f on [lo, hi].
template <class F>
double golden_argmax(F&& f, double lo, double hi, int iterations = 40) {
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double h_dist(HPoint p, HPoint q) {
  if (p.y <= 0.0 || q.y <= 0.0) throw std::invalid_argument("h_dist: points must have y > 0");
  // 2 asinh(|p - q| / (2 sqrt(y_p y_q))) equals arccosh(1 + |p - q|^2 / (2 y_p y_q))
  // and keeps precision for nearby points.
  const double gap = std::hypot(p.x - q.x, p.y - q.y);
  return 2.0 * std::asinh(gap / (2.0 * std::sqrt(p.y * q.y)));
}

namespace {

// Arclength parametrization of the geodesic segment from p to q.
class Segment {
 public:
  Segment(HPoint p, HPoint q) : p_(p), q_(q) {
    const double scale = std::max({std::abs(p.x), std::abs(q.x), p.y, q.y});
    vertical_ = std::abs(p.x - q.x) <= 1e-14 * scale;
    if (vertical_) {
      log_from_ = std::log(p.y);
      log_span_ = std::log(q.y) - log_from_;
      return;
    }
    // Send the semicircle's feet e1, e2 to 0 and infinity; the geodesic
    // becomes the positive imaginary axis where arclength is log-height.
    const double centre = ((q.x * q.x + q.y * q.y) - (p.x * p.x + p.y * p.y)) / (2.0 * (q.x - p.x));
    const double radius = std::hypot(p.x - centre, p.y);
    e1_ = centre - radius;
    e2_ = centre + radius;
    log_from_ = std::log(height(p));
    log_span_ = std::log(height(q)) - log_from_;
  }

  HPoint at(double t) const {
    if (t <= 0.0) return p_;
    if (t >= 1.0) return q_;
    const double h = std::exp(log_from_ + t * log_span_);
    if (vertical_) return HPoint{p_.x + t * (q_.x - p_.x), h};
    const Complex w(0.0, h);
    const Complex z = (w * e2_ + e1_) / (1.0 + w);
    return HPoint{z.real(), z.imag()};
  }

  double distance_from(HPoint x) const {
    return golden_min([&](double t) { return h_dist(x, at(t)); }, 0.0, 1.0);
  }

 private:
  double height(HPoint z) const { return std::abs((Complex(z.x, z.y) - e1_) / (e2_ - Complex(z.x, z.y))); }

  HPoint p_, q_;
  bool vertical_ = false;
  double e1_ = 0.0, e2_ = 0.0;
  double log_from_ = 0.0, log_span_ = 0.0;
};

}  // namespace

HPoint h_geodesic_point(HPoint p, HPoint q, double t) { return Segment(p, q).at(t); }

double h_dist_to_segment(HPoint p, HPoint a, HPoint b) { return Segment(a, b).distance_from(p); }

HTriangleReport h_triangle_thinness(HPoint a, HPoint b, HPoint c, std::size_t samples_per_side) {
  if (samples_per_side < 2) throw std::invalid_argument("h_triangle_thinness needs at least 2 samples per side");
  const std::array<HPoint, 3> v{a, b, c};
  HTriangleReport rep;
  rep.vertices = v;
  rep.samples_per_side = samples_per_side;
  rep.maximizing_point = a;
  const double step = 1.0 / static_cast<double>(samples_per_side - 1);
  for (std::size_t side = 0; side < 3; ++side) {
    const Segment here(v[side], v[(side + 1) % 3]);
    const Segment next(v[(side + 1) % 3], v[(side + 2) % 3]);
    const Segment prev(v[(side + 2) % 3], v[side]);
    auto gap = [&](double t) {
      const HPoint p = here.at(t);
      return std::min(next.distance_from(p), prev.distance_from(p));
    };
    double best_t = 0.0, best = -1.0;
    for (std::size_t i = 0; i < samples_per_side; ++i) {
      const double t = static_cast<double>(i) * step;
      const double g = gap(t);
      if (g > best) {
        best = g;
        best_t = t;
      }
    }
    const double refined_t = golden_argmax(gap, std::max(0.0, best_t - step), std::min(1.0, best_t + step));
    const double refined = gap(refined_t);
    if (refined > best) {
      best = refined;
      best_t = refined_t;
    }
    if (best > rep.thinness) {
      rep.thinness = best;
      rep.maximizing_point = here.at(best_t);
    }
  }
  return rep;
}

double euclid_fat_witness(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("euclid_fat_witness needs r > 0");
  return 2.0 * std::sqrt(3.0) * r;
}

HPoint h_polar(double rho, double theta) {
  // Poincaré disc point at hyperbolic radius rho, mapped by z = i (1 + w) / (1 - w).
  const Complex w = std::polar(std::tanh(rho / 2.0), theta);
  const Complex z = Complex(0.0, 1.0) * (1.0 + w) / (1.0 - w);
  return HPoint{z.real(), z.imag()};
}

std::array<HPoint, 3> random_triangle(std::mt19937_64& rng, double diameter) {
  std::array<HPoint, 3> t{};
  for (auto& p : t) p = h_polar(diameter / 2.0, 2.0 * std::numbers::pi * uniform01(rng));
  return t;
}

HVerifyReport verify_thin_triangles(std::size_t triangles, std::uint64_t seed, double diameter,
                                    std::size_t samples_per_side) {
  HVerifyReport rep;
  rep.triangles = triangles;
  rep.diameter = diameter;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < triangles; ++i) {
    const auto tri = random_triangle(rng, diameter);
    const double th = h_triangle_thinness(tri[0], tri[1], tri[2], samples_per_side).thinness;
    if (i == 0 || th > rep.max_thinness) {
      rep.max_thinness = th;
      rep.worst = tri;
    }
  }
  rep.pass = rep.max_thinness < kThinTriangleBound + 1e-6;
  return rep;
}

}  // namespace curv
