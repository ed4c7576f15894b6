#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace curv {

/// Point of the upper half-plane model, y > 0.
struct HPoint {
  double x = 0.0;
  double y = 1.0;
};

inline const double kThinTriangleBound = 0.88137358701954302;  // log(1 + sqrt(2))

double h_dist(HPoint p, HPoint q);

/// Point at fraction t of the way from p to q along their geodesic (a
/// vertical ray or a semicircle centred on the real axis).
HPoint h_geodesic_point(HPoint p, HPoint q, double t);

/// Distance from p to the geodesic segment [a, b].
double h_dist_to_segment(HPoint p, HPoint a, HPoint b);

struct HTriangleReport {
  std::array<HPoint, 3> vertices;
  double thinness = 0.0;
  std::size_t samples_per_side = 0;
  HPoint maximizing_point;
};

/// Largest distance from a point on one side to the union of the other two.
/// Points p are sampled per side and the best sample is refined by
/// golden-section search; distances to sides use golden-section search over
/// the side, which is exact up to rounding since distance to a geodesic
/// is convex along it.
HTriangleReport h_triangle_thinness(HPoint a, HPoint b, HPoint c, std::size_t samples_per_side = 64);

/// Side of the equilateral euclidean triangle with inradius r.
double euclid_fat_witness(double r);

/// Point at hyperbolic distance rho from (0, 1) in direction theta.
HPoint h_polar(double rho, double theta);

/// Triangle with vertices at distance diameter / 2 from (0, 1) in uniformly
/// random directions, so every side is at most `diameter` long.
std::array<HPoint, 3> random_triangle(std::mt19937_64& rng, double diameter);

struct HVerifyReport {
  std::size_t triangles = 0;
  double diameter = 0.0;
  double max_thinness = 0.0;
  std::array<HPoint, 3> worst{};
  bool pass = true;  // max_thinness < bound + 1e-6
};

HVerifyReport verify_thin_triangles(std::size_t triangles, std::uint64_t seed, double diameter,
                                    std::size_t samples_per_side = 64);

}  // namespace curv
