#pragma once

#include <random>
#include <vector>

#include "minklen/polytope.hpp"

namespace fixtures {

using minklen::Integer;
using minklen::LatticePoint;
using minklen::LatticePolytope;

inline LatticePolytope poly(std::vector<LatticePoint> pts) {
  return LatticePolytope(std::move(pts));
}

inline LatticePolytope unit_square() { return poly({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

// Vol 5, width 3, lambda 10/3.
inline LatticePolytope tilted_square() { return poly({{2, 0}, {3, 2}, {1, 3}, {0, 1}}); }

// 2Q for Q = conv{(1,0),(5,1),(4,5),(0,4)}: lambda 68/5, L = 12.
inline LatticePolytope doubled_square() { return poly({{2, 0}, {10, 2}, {8, 10}, {0, 8}}); }

inline LatticePolytope triangle_k(Integer k) { return poly({{0, 0}, {k, 1}, {1, k}}); }

inline LatticePolytope standard_simplex(std::size_t d, Integer t = 1) {
  std::vector<LatticePoint> pts{LatticePoint(d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    LatticePoint e(d, 0);
    e[i] = t;
    pts.push_back(e);
  }
  return poly(pts);
}

inline LatticePolytope box(const std::vector<Integer>& sides) {
  std::vector<LatticePoint> pts{LatticePoint(sides.size(), 0)};
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const std::size_t n = pts.size();
    for (std::size_t j = 0; j < n; ++j) {
      LatticePoint q = pts[j];
      q[i] = sides[i];
      pts.push_back(q);
    }
  }
  return poly(pts);
}

// Hull of up to `count` random points in [0, size]^2; retries until 2-dimensional.
inline LatticePolytope random_polygon(std::mt19937_64& rng, Integer size, int count = 6) {
  std::uniform_int_distribution<Integer> coord(0, size);
  while (true) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < count; ++i) pts.push_back({coord(rng), coord(rng)});
    LatticePolytope p(pts);
    if (p.span_dim() == 2) return p;
  }
}

inline LatticePolytope random_triangle(std::mt19937_64& rng, Integer size) {
  std::uniform_int_distribution<Integer> coord(0, size);
  while (true) {
    LatticePolytope p({{coord(rng), coord(rng)}, {coord(rng), coord(rng)},
                       {coord(rng), coord(rng)}});
    if (p.span_dim() == 2) return p;
  }
}

inline minklen::IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t d) {
  minklen::IntMatrix m = minklen::identity_matrix(d);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  std::uniform_int_distribution<Integer> mult(-2, 2);
  for (int step = 0; step < 4; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Integer c = mult(rng);
    for (std::size_t k = 0; k < d; ++k) m[i][k] += c * m[j][k];
  }
  if (rng() % 2) std::swap(m[0], m[d - 1]);
  return m;
}

}  // namespace fixtures
