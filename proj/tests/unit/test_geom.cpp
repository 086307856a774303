#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "minklen/polytope.hpp"
#include "minklen/zonotope.hpp"

using namespace minklen;
using namespace fixtures;

namespace {

// Sign of the cross product (b - a) x (c - a) on rational points.
int orient(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  Rational v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// Carathéodory oracle: x lies in the hull of a planar point set iff it lies in
// a triangle (possibly degenerate) spanned by three of the points.
bool in_planar_hull(const std::vector<LatticePoint>& pts, const RationalPoint& x) {
  auto in_segment = [&](const RationalPoint& a, const RationalPoint& b) {
    if (orient(a, b, x) != 0) return false;
    for (int i = 0; i < 2; ++i) {
      if (x[i] < std::min(a[i], b[i]) || x[i] > std::max(a[i], b[i])) return false;
    }
    return true;
  };
  std::vector<RationalPoint> r;
  for (const auto& p : pts) r.push_back(to_rational(p));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == x) return true;
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (in_segment(r[i], r[j])) return true;
      for (std::size_t k = j + 1; k < r.size(); ++k) {
        int s1 = orient(r[i], r[j], x), s2 = orient(r[j], r[k], x), s3 = orient(r[k], r[i], x);
        bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
        bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
        if (orient(r[i], r[j], r[k]) != 0 && !(has_neg && has_pos)) return true;
      }
    }
  }
  return false;
}

Integer brute_width(const LatticePolytope& p, LatticePoint* best_dir = nullptr) {
  Integer best = -1;
  for (Integer a = -12; a <= 12; ++a) {
    for (Integer b = -12; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      Integer w = width_in_direction(p, {a, b});
      if (best < 0 || w < best) {
        best = w;
        if (best_dir) *best_dir = {a, b};
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("primitivize splits off the gcd and fixes the sign") {
  auto a = primitivize({4, 6});
  CHECK(a.direction.coords() == LatticePoint{2, 3});
  CHECK(a.multiplier == 2);
  CHECK(primitivize({1, 0}).multiplier == 1);
  auto c = primitivize({0, -3});
  CHECK(c.direction.coords() == LatticePoint{0, 1});
  CHECK(c.multiplier == 3);
  CHECK_THROWS_AS(primitivize({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(PrimitiveVector({2, 4}), std::invalid_argument);
}

TEST_CASE("construction prunes duplicates and interior points") {
  LatticePolytope p({{0, 0}, {2, 0}, {1, 1}, {0, 2}, {2, 2}, {2, 2}, {1, 0}});
  CHECK(p.vertices() == std::vector<LatticePoint>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
  CHECK(p.span_dim() == 2);
  CHECK_THROWS_AS(LatticePolytope({}), std::invalid_argument);
  CHECK_THROWS_AS(LatticePolytope({{0, 0}, {1}}), std::invalid_argument);
  LatticePolytope seg({{0, 0, 0}, {1, 1, 1}, {3, 3, 3}});
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.span_dim() == 1);
}

TEST_CASE("minkowski sums") {
  auto e1 = poly({{0, 0}, {1, 0}});
  auto e2 = poly({{0, 0}, {0, 1}});
  CHECK(minkowski_sum(e1, e2) == unit_square());
  CHECK(minkowski_sum(minkowski_sum(poly({{0, 0}, {2, 0}}), poly({{0, 0}, {0, 3}})),
                      poly({{0, 0}, {0, 0}})) == box({2, 3}));
  auto diag = poly({{0, 0}, {1, 1}});
  CHECK(minkowski_sum(diag, diag) == poly({{0, 0}, {2, 2}}));
  CHECK_THROWS_AS(minkowski_sum(diag, poly({{0, 0, 0}})), std::invalid_argument);
}

TEST_CASE("dilation") {
  CHECK(dilate(standard_simplex(2), Integer{2}) == poly({{0, 0}, {2, 0}, {0, 2}}));
  CHECK(dilate(tilted_square(), Integer{1}) == tilted_square());
  auto third = dilate(poly({{0, 0}, {3, 0}, {0, 3}}), Rational(1, 3));
  CHECK(third.is_lattice);
  CHECK(third.to_lattice() == standard_simplex(2));
  CHECK_FALSE(dilate(unit_square(), Rational(1, 2)).is_lattice);
  CHECK_THROWS_AS(dilate(unit_square(), Integer{0}), std::invalid_argument);
  CHECK_THROWS_AS(dilate(unit_square(), Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("point and zonotope membership") {
  CHECK(contains(unit_square(), {Rational(1, 2), Rational(1, 2)}));
  CHECK(contains(unit_square(), {Rational(1), Rational(1)}));
  CHECK_FALSE(contains(unit_square(), {Rational(2), Rational(0)}));
  Zonotope z({Rational(2, 3), Rational(2, 3)},
             {{PrimitiveVector({1, 0}), Rational(5, 3)}, {PrimitiveVector({0, 1}), Rational(5, 3)}});
  // Oracle: the four corners, one convex-combination LP each.
  for (const auto& v : z.vertices()) CHECK(contains(tilted_square(), v));
  CHECK(contains(tilted_square(), z));
  CHECK_FALSE(contains(tilted_square(), z.scaled(Rational(11, 10))));
}

TEST_CASE("membership agrees with a Caratheodory oracle on random instances") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Integer> num(-2, 14), den(1, 3);
  int inside = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto p = random_polygon(rng, 4, 5);
    RationalPoint x{Rational(num(rng), 3 * den(rng)), Rational(num(rng), 3 * den(rng))};
    bool expected = in_planar_hull(p.vertices(), x);
    inside += expected;
    REQUIRE(contains(p, x) == expected);
  }
  CHECK(inside > 100);
}

TEST_CASE("lattice points") {
  CHECK(lattice_points(unit_square()).size() == 4);
  CHECK(lattice_points(poly({{0, 0}, {3, 0}})).size() == 4);
  // Oracle: bounding-box scan with the Caratheodory test.
  std::vector<LatticePoint> expected;
  auto t2 = triangle_k(2);
  for (Integer x = 0; x <= 2; ++x) {
    for (Integer y = 0; y <= 2; ++y) {
      if (in_planar_hull(t2.vertices(), to_rational({x, y}))) expected.push_back({x, y});
    }
  }
  CHECK(expected == std::vector<LatticePoint>{{0, 0}, {1, 1}, {1, 2}, {2, 1}});
  CHECK(lattice_points(t2) == expected);
  CHECK(lattice_points(box({2, 2, 2})).size() == 27);
  CHECK(lattice_points(poly({{0, 0, 0}, {2, 2, 0}, {0, 0, 4}})).size() == 9);
  CHECK(lattice_points(poly({{1, 2, 3}})) == std::vector<LatticePoint>{{1, 2, 3}});
}

TEST_CASE("lattice width") {
  auto w = lattice_width(unit_square());
  CHECK(w.width == 1);
  CHECK(w.direction.coords() == LatticePoint{1, 0});
  CHECK(lattice_width(tilted_square()).width == 3);
  CHECK(lattice_width(triangle_k(3)).width == brute_width(triangle_k(3)));
  CHECK(lattice_width(triangle_k(3)).width == 3);
  CHECK(lattice_width(poly({{0, 0}, {3, 3}})).width == 0);
  CHECK(lattice_width(box({2, 3, 4})).width == 2);
  CHECK(lattice_width(standard_simplex(3, 5)).width == 5);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    auto p = random_polygon(rng, 8);
    REQUIRE(lattice_width(p).width == brute_width(p));
  }
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume(tilted_square()) == 5);
  CHECK(normalized_volume(box({1, 1, 1})) == 1);
  CHECK(normalized_volume(poly({{0, 0}, {2, 2}})) == 2);
  CHECK(normalized_volume(poly({{4, 4}})) == 0);
  CHECK(normalized_volume(standard_simplex(3, 2)) == Rational(8, 6));
  CHECK(normalized_volume(poly({{0, 0, 0}, {1, 1, 0}, {0, 1, 1}})) == Rational(1, 2));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Integer> c(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m(3, LatticePoint(3));
    for (auto& row : m) {
      for (auto& x : row) x = c(rng);
    }
    Integer det = determinant(m);
    if (det == 0) continue;
    std::vector<LatticePoint> pts{{0, 0, 0}, m[0], m[1], m[2]};
    CHECK(normalized_volume(poly(pts)) == Rational(std::abs(det), 6));
  }
}

TEST_CASE("unimodular images") {
  auto sq = unit_square();
  CHECK(unimodular_image(sq, identity_matrix(2), {0, 0}) == sq);
  auto sheared = unimodular_image(sq, {{1, 1}, {0, 1}}, {0, 0});
  CHECK(sheared.vertices() == std::vector<LatticePoint>{{0, 0}, {1, 0}, {1, 1}, {2, 1}});
  CHECK(lattice_points(sheared).size() == 4);
  CHECK_THROWS_AS(unimodular_image(sq, {{2, 0}, {0, 1}}, {0, 0}), std::invalid_argument);
}

TEST_CASE("3d hulls produce consistent facet descriptions") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Integer> c(0, 4);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < 9; ++i) pts.push_back({c(rng), c(rng), c(rng)});
    LatticePolytope p(pts);
    for (const auto& x : pts) REQUIRE(p.contains_lattice_point(x));
    for (const auto& h : p.halfspaces()) {
      std::vector<LatticePoint> tight;
      for (const auto& v : p.vertices()) {
        if (dot(h.normal, v) == h.offset) tight.push_back(sub(v, p.vertices().front()));
      }
      REQUIRE(!tight.empty());
    }
    // Every vertex is not a convex combination of the others.
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      std::vector<LatticePoint> others;
      for (std::size_t j = 0; j < p.vertices().size(); ++j) {
        if (j != i) others.push_back(p.vertices()[j]);
      }
      if (others.empty()) continue;
      REQUIRE_FALSE(contains(LatticePolytope(others), to_rational(p.vertices()[i])));
    }
    // Hull of every input point set equals the hull of its vertices.
    REQUIRE(LatticePolytope(p.vertices()) == p);
  }
}

TEST_CASE("geometry properties on random polygons") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_polygon(rng, 5);
    auto q = random_polygon(rng, 4);
    auto sum = minkowski_sum(p, q);
    CHECK(sum.vertices().size() <= p.vertices().size() * q.vertices().size());
    CHECK(minkowski_sum(p, poly({{3, -2}})) == translate(p, {3, -2}));
    std::size_t prev = 0;
    for (Integer t = 1; t <= 3; ++t) {
      auto tp = dilate(p, t);
      std::size_t count = lattice_points(tp).size();
      CHECK(count >= prev);
      prev = count;
      CHECK(normalized_volume(tp) == normalized_volume(p) * t * t);
    }
    auto u = random_unimodular(rng, 2);
    auto image = unimodular_image(p, u, {1, 2});
    CHECK(normalized_volume(image) == normalized_volume(p));
    CHECK(lattice_width(image).width == lattice_width(p).width);
    CHECK(lattice_points(image).size() == lattice_points(p).size());
  }
}

TEST_CASE("span reduction round trips") {
  LatticePolytope tri({{1, 0, 2}, {3, 2, 2}, {1, 4, 6}});
  CHECK(tri.span_dim() == 2);
  auto red = reduce_to_span(tri);
  CHECK(red.reduced.ambient_dim() == 2);
  for (const auto& v : tri.vertices()) CHECK(red.from_reduced(red.to_reduced(v)) == v);
  CHECK(lattice_points(tri).size() == lattice_points(red.reduced).size());
  CHECK(normalized_volume(tri) == normalized_volume(red.reduced));
}
