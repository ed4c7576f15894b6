#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvature/oracle.hpp"
#include "curvature/words.hpp"

namespace curv {

/// Generating words for a word metric. Each word contributes two directions,
/// itself and its inverse. `letters(p)` gives the presentation's generators.
struct GeneratingSet {
  std::vector<Word> words;

  static GeneratingSet letters(const Presentation& p);
};

/// Radius-r ball of the Cayley graph around the identity. Vertex 0 is ε;
/// vertices are numbered by BFS layer, then shortlex order of their
/// representative, which is the shortlex-least spelling over the generating
/// directions (for letter generators, the shortlex-least geodesic word).
class CayleyBall {
 public:
  static constexpr std::int64_t kOutside = -1;

  const Presentation& presentation() const { return presentation_; }
  std::size_t radius() const { return radius_; }
  std::size_t size() const { return vertices_.size(); }

  /// Directions in order g0, g0^-1, g1, g1^-1, ...; labels spell them.
  const std::vector<Word>& directions() const { return directions_; }
  const std::vector<std::string>& direction_labels() const { return labels_; }
  /// Inverse direction index of direction d.
  static std::size_t opposite(std::size_t d) { return d ^ 1U; }

  /// Representative word over the presentation's letters.
  const Word& vertex(std::size_t v) const { return vertices_[v]; }
  const std::vector<Word>& vertices() const { return vertices_; }
  std::size_t dist(std::size_t v) const { return dist_[v]; }
  const std::vector<std::size_t>& dists() const { return dist_; }
  /// Neighbour along direction d, or kOutside when it lies beyond the radius.
  std::int64_t neighbor(std::size_t v, std::size_t d) const { return adj_[v * directions_.size() + d]; }

  struct Edge {
    std::size_t from;
    std::size_t direction;
    std::size_t to;
  };
  std::vector<Edge> edges() const;

  /// Vertex representing the same element as `w`, if it lies in the ball.
  std::optional<std::size_t> find(const Word& w) const;

  friend CayleyBall build_ball(const Presentation& p, std::size_t r, const OracleBudget& budget,
                               const GeneratingSet& gens);

 private:
  CayleyBall(Presentation p, std::size_t r) : presentation_(std::move(p)), radius_(r), abelian_(presentation_) {}

  Presentation presentation_;
  std::size_t radius_;
  AbelianInvariant abelian_;
  OracleBudget budget_;
  std::vector<Word> directions_;
  std::vector<std::string> labels_;
  std::vector<Word> vertices_;
  std::vector<std::size_t> dist_;
  std::vector<std::int64_t> adj_;
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> buckets_;

  std::optional<std::size_t> lookup(const Word& reduced, const std::vector<std::int64_t>& key) const;
};

/// Breadth-first construction by right multiplication. New words are matched
/// against existing vertices in the same abelianization bucket with
/// words_equal; throws InsufficientBudget if any comparison is Unknown.
CayleyBall build_ball(const Presentation& p, std::size_t r, const OracleBudget& budget = {});
CayleyBall build_ball(const Presentation& p, std::size_t r, const OracleBudget& budget, const GeneratingSet& gens);

/// All-pairs graph distances inside a ball.
class BallMetric {
 public:
  explicit BallMetric(const CayleyBall& ball);

  std::size_t size() const { return n_; }
  std::size_t operator()(std::size_t x, std::size_t y) const { return d_[x * n_ + y]; }
  /// |x| + |y| + d(x, y) <= 2r: every geodesic of the full group between x and
  /// y stays inside the ball, so ball distances and geodesics are exact.
  bool certified(std::size_t x, std::size_t y) const;

 private:
  const CayleyBall* ball_;
  std::size_t n_;
  std::vector<std::uint16_t> d_;
};

struct BallDistance {
  std::size_t distance = 0;
  bool possibly_clipped = false;
};

/// Shortest path length inside the ball. Throws std::out_of_range when either
/// element lies outside the ball.
BallDistance ball_distance(const CayleyBall& ball, const BallMetric& metric, const Word& u, const Word& v);

struct GeodesicPath {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> directions;

  std::size_t length() const { return directions.size(); }
};

struct GeodesicSet {
  std::vector<GeodesicPath> paths;
  bool truncated = false;
};

/// Every shortest path from x to y inside the ball, in lexicographic order of
/// direction sequences, stopping after `cap` paths.
GeodesicSet all_geodesics(const CayleyBall& ball, const BallMetric& metric, std::size_t x, std::size_t y,
                          std::size_t cap = 10000);

}  // namespace curv
