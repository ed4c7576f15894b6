#include <doctest.h>

#include <random>
#include <set>

#include "curvature/cayley.hpp"
#include "curvature/oracle.hpp"
#include "oracles.hpp"

using namespace curv;

namespace {

Word w(std::string_view s, std::size_t gens = 2) { return parse_word(s, gens); }

std::size_t free_count(std::size_t r) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < r; ++i) p *= 3;
  return 1 + 2 * (p - 1);
}

}  // namespace

TEST_CASE("ball sizes") {
  CHECK(build_ball(standard_presentation(Family::free, 2), 2).size() == 17);
  CHECK(build_ball(standard_presentation(Family::zz), 2).size() == 13);
  CHECK(build_ball(standard_presentation(Family::surface, 2), 1).size() == 9);
  for (std::size_t r = 0; r <= 6; ++r)
    CHECK(build_ball(standard_presentation(Family::zz), r).size() == 2 * r * r + 2 * r + 1);
  for (std::size_t r = 0; r <= 8; ++r) CHECK(build_ball(standard_presentation(Family::free, 2), r).size() == free_count(r));
}

TEST_CASE("ball vertices match independent models") {
  const CayleyBall f = build_ball(standard_presentation(Family::free, 2), 4);
  std::set<std::string> expected;
  for (const auto& s : ref::reduced_words(2, 4)) expected.insert(s);
  std::set<std::string> got;
  for (std::size_t v = 0; v < f.size(); ++v) {
    got.insert(spell(f.vertex(v)));
    CHECK(f.dist(v) == f.vertex(v).size());
  }
  CHECK(got == expected);

  const CayleyBall z = build_ball(standard_presentation(Family::zz), 5);
  std::set<std::pair<long, long>> points;
  for (std::size_t v = 0; v < z.size(); ++v) {
    const auto pt = ref::lattice(spell(z.vertex(v)));
    CHECK(points.insert(pt).second);
    CHECK(static_cast<long>(z.dist(v)) == std::abs(pt.first) + std::abs(pt.second));
  }
  CHECK(points.size() == 61);
}

TEST_CASE("ball structure") {
  for (const auto& p : {standard_presentation(Family::zz), standard_presentation(Family::surface, 2),
                        standard_presentation(Family::free, 2)}) {
    const CayleyBall b = build_ball(p, 3);
    CHECK(b.vertex(0).empty());
    CHECK(b.dist(0) == 0);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> edges;
    for (const auto& e : b.edges()) edges.emplace(e.from, e.direction, e.to);
    for (const auto& [from, d, to] : edges) {
      CHECK(edges.count({to, CayleyBall::opposite(d), from}) == 1);
      CHECK(words_equal(p, concat(b.vertex(from), b.directions()[d]), b.vertex(to)) == Tristate::equal);
      CHECK((b.dist(from) > b.dist(to) ? b.dist(from) - b.dist(to) : b.dist(to) - b.dist(from)) <= 1);
    }
    for (std::size_t v = 0; v < b.size(); ++v) {
      CHECK(b.dist(v) <= b.radius());
      CHECK(b.vertex(v).size() == b.dist(v));
      if (v > 0) CHECK(b.dist(v - 1) <= b.dist(v));
      if (b.dist(v) < b.radius()) {
        std::size_t degree = 0;
        for (std::size_t d = 0; d < b.directions().size(); ++d) degree += b.neighbor(v, d) != CayleyBall::kOutside;
        CHECK(degree == 2 * p.generator_count());
      }
      for (std::size_t u = 0; u < v && b.size() < 200; ++u) CHECK(words_equal(p, b.vertex(u), b.vertex(v)) == Tristate::not_equal);
    }
  }
}

TEST_CASE("vertex numbering is by layer then shortlex") {
  const CayleyBall b = build_ball(standard_presentation(Family::zz), 2);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < b.size(); ++v) names.push_back(to_string(b.vertex(v)));
  CHECK(names == std::vector<std::string>{"1", "a", "A", "b", "B", "aa", "ab", "aB", "AA", "Ab", "AB", "bb", "BB"});
}

TEST_CASE("ball distances") {
  const CayleyBall z = build_ball(standard_presentation(Family::zz), 4);
  const BallMetric zm(z);
  CHECK(ball_distance(z, zm, Word{}, w("ab")).distance == 2);
  CHECK(ball_distance(z, zm, w("ba"), w("ab")).distance == 0);
  CHECK_FALSE(ball_distance(z, zm, Word{}, w("ab")).possibly_clipped);
  CHECK(ball_distance(z, zm, w("aaaa"), w("AAAA")).possibly_clipped);
  CHECK_THROWS_AS(ball_distance(z, zm, Word{}, w("aaaaa")), std::out_of_range);

  const CayleyBall f = build_ball(standard_presentation(Family::free, 2), 4);
  const BallMetric fm(f);
  CHECK(ball_distance(f, fm, w("a"), w("b")).distance == 2);
  CHECK(ball_distance(f, fm, w("ab"), w("ab")).distance == 0);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t x = rng() % z.size(), y = rng() % z.size(), u = rng() % z.size();
    CHECK(zm(x, y) == zm(y, x));
    CHECK(zm(x, y) <= zm(x, u) + zm(u, y));
    CHECK((zm(x, y) == 0) == (x == y));
  }
}

TEST_CASE("distances in the inner half-ball are word lengths of the quotient") {
  const auto zz = standard_presentation(Family::zz);
  const CayleyBall z = build_ball(zz, 6);
  const BallMetric zm(z);
  const auto s2 = standard_presentation(Family::surface, 2);
  const CayleyBall s = build_ball(s2, 2);
  const BallMetric sm(s);
  for (const auto& [b, m, p] : {std::tuple{&z, &zm, &zz}, std::tuple{&s, &sm, &s2}}) {
    for (std::size_t x = 0; x < b->size(); ++x)
      for (std::size_t y = 0; y < b->size(); ++y) {
        if (2 * b->dist(x) > b->radius() || 2 * b->dist(y) > b->radius()) continue;
        const Word q = concat(invert(b->vertex(x)), b->vertex(y));
        CHECK((*m)(x, y) == canonical_form(*p, q).size());
        CHECK(m->certified(x, y));
      }
  }
}

TEST_CASE("geodesic enumeration") {
  const CayleyBall f = build_ball(standard_presentation(Family::free, 2), 3);
  const BallMetric fm(f);
  CHECK(all_geodesics(f, fm, 0, *f.find(w("ab"))).paths.size() == 1);

  const CayleyBall z = build_ball(standard_presentation(Family::zz), 4);
  const BallMetric zm(z);
  const GeodesicSet six = all_geodesics(z, zm, 0, *z.find(w("aabb")));
  CHECK(six.paths.size() == 6);
  CHECK_FALSE(six.truncated);
  for (const auto& g : six.paths) {
    CHECK(g.length() == 4);
    CHECK(g.vertices.front() == 0);
    CHECK(g.vertices.back() == *z.find(w("aabb")));
    for (std::size_t i = 0; i < g.length(); ++i) CHECK(z.neighbor(g.vertices[i], g.directions[i]) == static_cast<std::int64_t>(g.vertices[i + 1]));
  }
  CHECK(all_geodesics(z, zm, 0, *z.find(w("a"))).paths.size() == 1);
  const GeodesicSet capped = all_geodesics(z, zm, 0, *z.find(w("aabb")), 4);
  CHECK(capped.paths.size() == 4);
  CHECK(capped.truncated);
}

TEST_CASE("other generating sets and budgets") {
  const auto zz = standard_presentation(Family::zz);
  const CayleyBall b = build_ball(zz, 1, {}, GeneratingSet{{w("a"), w("b"), w("ab")}});
  CHECK(b.size() == 7);
  CHECK(b.direction_labels() == std::vector<std::string>{"a", "A", "b", "B", "ab", "BA"});
  CHECK(b.find(w("ba")).has_value());
  CHECK_FALSE(b.find(w("aa")).has_value());
  CHECK_THROWS_AS(build_ball(zz.as_generic(), 2, OracleBudget{0, 0}), InsufficientBudget);
  CHECK(build_ball(zz.as_generic(), 3).size() == 25);
}
