#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "curvature/cayley.hpp"

namespace curv {

/// `worst` maximizes over every choice of geodesic for each side, as in the
/// definition of a δ-thin triangle. `canonical` fixes one geodesic per side
/// (the lexicographically first direction sequence).
enum class GeodesicChoice { worst, canonical };

struct SamplingPolicy {
  enum class Kind { exhaustive, random };
  Kind kind = Kind::exhaustive;
  std::uint64_t seed = 0;
  std::size_t count = 0;

  static SamplingPolicy exhaustive() { return {}; }
  static SamplingPolicy random(std::uint64_t seed, std::size_t count) { return {Kind::random, seed, count}; }
};

/// Sides are numbered 0 = (x, y), 1 = (y, z), 2 = (z, x). `p` lies on side
/// `side`; `q` is its nearest vertex on the other two chosen geodesics.
struct ThinnessWitness {
  std::array<std::size_t, 3> triangle{};
  std::array<GeodesicPath, 3> geodesics;
  std::size_t side = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t distance = 0;
};

struct TriangleThinness {
  std::size_t delta = 0;
  ThinnessWitness witness;
};

/// Thinness of the geodesic triangle on x, y, z. Distances are measured
/// between vertices. The three pairs must be certified by the metric
/// (throws std::invalid_argument otherwise).
TriangleThinness triangle_thinness(const CayleyBall& ball, const BallMetric& metric, std::size_t x, std::size_t y,
                                   std::size_t z, GeodesicChoice choice = GeodesicChoice::worst);

struct ThinnessReport {
  std::size_t delta = 0;
  std::optional<ThinnessWitness> witness;
  std::size_t triangles_examined = 0;
  SamplingPolicy policy;
  GeodesicChoice choice = GeodesicChoice::worst;
  std::size_t radius = 0;
};

/// Maximum triangle thinness over triangles of distinct vertices whose three
/// pairs are certified. The first maximizer in (x, y, z) order is the witness.
ThinnessReport delta_estimate(const CayleyBall& ball, const BallMetric& metric,
                              SamplingPolicy policy = SamplingPolicy::exhaustive(),
                              GeodesicChoice choice = GeodesicChoice::worst);

}  // namespace curv
