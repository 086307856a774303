#include "minklen/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "minklen/lp.hpp"

namespace minklen {

// ---------------------------------------------------------------------------
// Primitive vectors

LatticePoint canonical_sign(LatticePoint v) {
  for (Integer x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
  return v;
}

bool is_primitive(const LatticePoint& v) {
  Integer g = 0;
  for (Integer x : v) g = std::gcd(g, x);
  return g == 1;
}

PrimitiveVector::PrimitiveVector(LatticePoint coords) {
  if (!is_primitive(coords)) throw std::invalid_argument("vector is not primitive");
  coords_ = canonical_sign(std::move(coords));
}

Primitivized primitivize(const LatticePoint& v) {
  Integer g = 0;
  for (Integer x : v) g = std::gcd(g, x);
  if (g == 0) throw std::invalid_argument("no primitive direction");
  LatticePoint w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return {PrimitiveVector(std::move(w)), g};
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Integer x : p) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Exact hulls in dimension <= 3

namespace {

LatticePoint cross(const LatticePoint& a, const LatticePoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Integer cross2(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

LatticePoint primitive_part(LatticePoint v) {
  Integer g = 0;
  for (Integer x : v) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

struct FullHull {
  std::vector<std::size_t> vertices;  // indices into the input, irredundant
  std::vector<Halfspace> facets;
};

// Points are distinct and span Z^k, k = points[i].size().
FullHull hull_1d(const std::vector<LatticePoint>& pts) {
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i][0] < pts[lo][0]) lo = i;
    if (pts[i][0] > pts[hi][0]) hi = i;
  }
  return {{lo, hi}, {{{1}, pts[hi][0]}, {{-1}, -pts[lo][0]}}};
}

FullHull hull_2d(const std::vector<LatticePoint>& pts) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    std::size_t i = idx[t];
    while (k >= lower && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);  // counter-clockwise, last point repeats the first
  FullHull out;
  out.vertices = hull;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = pts[hull[i]];
    const auto& q = pts[hull[(i + 1) % hull.size()]];
    LatticePoint n = primitive_part({q[1] - p[1], p[0] - q[0]});
    out.facets.push_back({n, dot(n, p)});
  }
  return out;
}

FullHull hull_3d(const std::vector<LatticePoint>& pts) {
  auto orient = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t p) {
    LatticePoint n = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
    return dot(n, sub(pts[p], pts[a]));
  };
  // Initial tetrahedron.
  std::size_t i0 = 0, i1 = 1, i2 = pts.size(), i3 = pts.size();
  for (std::size_t i = 2; i < pts.size() && i2 == pts.size(); ++i) {
    LatticePoint n = cross(sub(pts[i1], pts[i0]), sub(pts[i], pts[i0]));
    if (n != LatticePoint{0, 0, 0}) i2 = i;
  }
  for (std::size_t i = 2; i < pts.size() && i3 == pts.size(); ++i) {
    if (i2 < pts.size() && orient(i0, i1, i2, i) != 0) i3 = i;
  }
  if (i3 == pts.size()) throw std::logic_error("3d hull of a degenerate point set");

  struct Face {
    std::size_t a, b, c;
    bool alive = true;
  };
  std::vector<Face> faces;
  auto add_face = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t inside) {
    if (orient(a, b, c, inside) > 0) std::swap(b, c);
    faces.push_back({a, b, c});
  };
  add_face(i0, i1, i2, i3);
  add_face(i0, i1, i3, i2);
  add_face(i0, i2, i3, i1);
  add_face(i1, i2, i3, i0);

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::set<std::pair<std::size_t, std::size_t>> visible_edges;
    bool any = false;
    for (auto& f : faces) {
      if (!f.alive || orient(f.a, f.b, f.c, p) <= 0) continue;
      any = true;
      f.alive = false;
      visible_edges.insert({f.a, f.b});
      visible_edges.insert({f.b, f.c});
      visible_edges.insert({f.c, f.a});
    }
    if (!any) continue;
    for (const auto& [u, v] : visible_edges) {
      if (!visible_edges.count({v, u})) faces.push_back({u, v, p});
    }
  }

  FullHull out;
  std::set<std::pair<LatticePoint, Integer>> seen;
  std::set<std::size_t> corners;
  for (const auto& f : faces) {
    if (!f.alive) continue;
    LatticePoint n =
        primitive_part(cross(sub(pts[f.b], pts[f.a]), sub(pts[f.c], pts[f.a])));
    Integer h = dot(n, pts[f.a]);
    if (seen.insert({n, h}).second) out.facets.push_back({n, h});
    corners.insert(f.a);
    corners.insert(f.b);
    corners.insert(f.c);
  }
  for (std::size_t i : corners) {
    std::vector<LatticePoint> tight;
    for (const auto& f : out.facets) {
      if (dot(f.normal, pts[i]) == f.offset) tight.push_back(f.normal);
    }
    if (rank(tight) == 3) out.vertices.push_back(i);
  }
  return out;
}

FullHull full_hull(const std::vector<LatticePoint>& pts) {
  const std::size_t k = pts.front().size();
  if (pts.size() == 1) return {{0}, {}};
  switch (k) {
    case 1:
      return hull_1d(pts);
    case 2:
      return hull_2d(pts);
    case 3:
      return hull_3d(pts);
    default:
      throw std::logic_error("exact hull only available in dimension <= 3");
  }
}

struct SpanCoordinates {
  SpanBasis basis;
  LatticePoint origin;
  std::vector<LatticePoint> reduced;
};

SpanCoordinates span_coordinates(const std::vector<LatticePoint>& pts, std::size_t dim) {
  SpanCoordinates sc;
  sc.origin = pts.front();
  std::vector<LatticePoint> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], sc.origin));
  sc.basis = adapted_basis(diffs, dim);
  for (const auto& p : pts) {
    LatticePoint y = transform(sc.basis.forward, sub(p, sc.origin));
    y.resize(sc.basis.rank);
    sc.reduced.push_back(std::move(y));
  }
  return sc;
}

bool in_convex_hull_of(const std::vector<LatticePoint>& points, const RationalPoint& x) {
  const std::size_t n = points.size();
  const std::size_t d = x.size();
  lp::LinearProgram prog(n);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = points[j][i];
    prog.add_constraint(std::move(row), lp::Relation::Equal, x[i]);
  }
  prog.add_constraint(std::vector<Rational>(n, Rational(1)), lp::Relation::Equal, 1);
  return lp::feasible(prog).feasible;
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticePolytope

LatticePolytope::LatticePolytope(std::vector<LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("polytope needs at least one point");
  dim_ = points.front().size();
  if (dim_ == 0) throw std::invalid_argument("polytope dimension must be positive");
  for (const auto& p : points) {
    if (p.size() != dim_) throw std::invalid_argument("dimension mismatch among points");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  if (dim_ <= 3) {
    SpanCoordinates sc = span_coordinates(points, dim_);
    if (sc.basis.rank == 0) {
      vertices_ = {points.front()};
    } else {
      FullHull h = full_hull(sc.reduced);
      for (std::size_t i : h.vertices) vertices_.push_back(points[i]);
    }
  } else {
    // Drop points that are convex combinations of the remaining ones.
    std::vector<LatticePoint> keep = points;
    for (std::size_t i = 0; i < keep.size();) {
      std::vector<LatticePoint> others;
      for (std::size_t j = 0; j < keep.size(); ++j) {
        if (j != i) others.push_back(keep[j]);
      }
      if (!others.empty() && in_convex_hull_of(others, to_rational(keep[i]))) {
        keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        ++i;
      }
    }
    vertices_ = std::move(keep);
  }
  std::sort(vertices_.begin(), vertices_.end());
  build_facets();
}

LatticePolytope::LatticePolytope(Trusted, std::vector<LatticePoint> vertices)
    : dim_(vertices.front().size()), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  build_facets();
}

void LatticePolytope::build_facets() {
  std::vector<LatticePoint> diffs;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    diffs.push_back(sub(vertices_[i], vertices_[0]));
  }
  if (dim_ > 3) {
    span_dim_ = rank(diffs);
    return;
  }
  SpanCoordinates sc = span_coordinates(vertices_, dim_);
  const std::size_t k = sc.basis.rank;
  span_dim_ = k;
  halfspaces_.clear();
  // Equations of the affine span.
  for (std::size_t row = k; row < dim_; ++row) {
    const LatticePoint& n = sc.basis.forward[row];
    Integer h = dot(n, sc.origin);
    halfspaces_.push_back({n, h});
    halfspaces_.push_back({scale(n, -1), -h});
  }
  if (k == 0) return;
  FullHull hull = full_hull(sc.reduced);
  for (const auto& f : hull.facets) {
    // g . y <= h with y = (U (x - o))_{0..k-1}  ==>  (U^T g) . x <= h + (U^T g) . o
    LatticePoint n(dim_, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) n[j] += f.normal[i] * sc.basis.forward[i][j];
    }
    halfspaces_.push_back({n, f.offset + dot(n, sc.origin)});
  }
}

const std::vector<Halfspace>& LatticePolytope::halfspaces() const {
  if (dim_ > 3) throw std::logic_error("facet description requires dimension <= 3");
  return halfspaces_;
}

bool LatticePolytope::contains_lattice_point(const LatticePoint& x) const {
  if (x.size() != dim_) throw std::invalid_argument("dimension mismatch");
  if (dim_ > 3) return contains(*this, to_rational(x));
  for (const auto& h : halfspaces_) {
    if (dot(h.normal, x) > h.offset) return false;
  }
  return true;
}

LatticePolytope RationalPolytope::to_lattice() const {
  std::vector<LatticePoint> pts;
  for (const auto& v : vertices) pts.push_back(minklen::to_lattice(v));
  return LatticePolytope(std::move(pts));
}

// ---------------------------------------------------------------------------
// Operations

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  }
  std::vector<LatticePoint> sums;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  }
  return LatticePolytope(std::move(sums));
}

LatticePolytope dilate(const LatticePolytope& p, Integer t) {
  if (t <= 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<LatticePoint> v;
  for (const auto& x : p.vertices()) v.push_back(scale(x, t));
  return LatticePolytope(LatticePolytope::Trusted{}, std::move(v));
}

RationalPolytope dilate(const LatticePolytope& p, const Rational& t) {
  if (t <= 0) throw std::invalid_argument("dilation factor must be positive");
  RationalPolytope out;
  out.is_lattice = true;
  for (const auto& x : p.vertices()) {
    RationalPoint y;
    for (Integer c : x) y.push_back(t * c);
    out.is_lattice = out.is_lattice && is_integral(y);
    out.vertices.push_back(std::move(y));
  }
  return out;
}

LatticePolytope translate(const LatticePolytope& p, const LatticePoint& shift) {
  return unimodular_image(p, identity_matrix(p.ambient_dim()), shift);
}

bool contains(const LatticePolytope& p, const RationalPoint& x) {
  if (x.size() != p.ambient_dim()) throw std::invalid_argument("contains: dimension mismatch");
  return in_convex_hull_of(p.vertices(), x);
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<LatticePoint> out;
  auto scan_box = [&](const LatticePolytope& q, auto&& emit) {
    const std::size_t k = q.ambient_dim();
    LatticePoint lo = q.vertices().front(), hi = lo;
    for (const auto& v : q.vertices()) {
      for (std::size_t i = 0; i < k; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
    }
    LatticePoint x = lo;
    while (true) {
      if (q.contains_lattice_point(x)) emit(x);
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (x[i] < hi[i]) {
          ++x[i];
          break;
        }
        x[i] = lo[i];
        if (i == 0) return;
      }
    }
  };
  if (p.span_dim() == d || d > 3) {
    scan_box(p, [&](const LatticePoint& x) { out.push_back(x); });
  } else if (p.span_dim() == 0) {
    out.push_back(p.vertices().front());
  } else {
    SpanReduction red = reduce_to_span(p);
    scan_box(red.reduced, [&](const LatticePoint& y) { out.push_back(red.from_reduced(y)); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer width_in_direction(const LatticePolytope& p, const LatticePoint& u) {
  Integer lo = dot(u, p.vertices().front()), hi = lo;
  for (const auto& v : p.vertices()) {
    Integer s = dot(u, v);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo;
}

namespace {

bool colex_less(const LatticePoint& a, const LatticePoint& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

LatticeWidth lattice_width(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  if (p.span_dim() == 0) {
    LatticePoint e(d);
    e[d - 1] = 1;
    return {0, PrimitiveVector(e)};
  }
  if (p.span_dim() < d) {
    SpanReduction red = reduce_to_span(p);
    LatticePoint normal = primitive_part(red.basis.forward[p.span_dim()]);
    return {0, PrimitiveVector(normal)};
  }
  if (d > 3) throw std::logic_error("lattice_width requires dimension <= 3");

  // Any u with width_u(P) <= w satisfies |<e_i,u>| <= w for the edge vectors
  // e_i of a full-dimensional simplex on the vertices, so u = E^{-T} z with z
  // in the box [-w, w]^d.
  std::vector<LatticePoint> edges;
  const auto& verts = p.vertices();
  for (std::size_t i = 1; i < verts.size() && edges.size() < d; ++i) {
    auto trial = edges;
    trial.push_back(sub(verts[i], verts[0]));
    if (rank(trial) == trial.size()) edges = std::move(trial);
  }
  IntMatrix et = edges;  // rows e_i: E^T u = z
  const Integer det = determinant(et);
  IntMatrix adj(d, LatticePoint(d, 0));
  if (d == 1) {
    adj[0][0] = 1;
  } else {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        IntMatrix minor;
        for (std::size_t r = 0; r < d; ++r) {
          if (r == j) continue;
          LatticePoint row;
          for (std::size_t c = 0; c < d; ++c) {
            if (c != i) row.push_back(et[r][c]);
          }
          minor.push_back(row);
        }
        adj[i][j] = (((i + j) % 2) ? -1 : 1) * determinant(minor);
      }
    }
  }

  LatticeWidth best;
  best.width = -1;
  auto consider = [&](const LatticePoint& u) {
    LatticePoint cu = canonical_sign(u);
    Integer w = width_in_direction(p, cu);
    if (best.width < 0 || w < best.width ||
        (w == best.width && colex_less(cu, best.direction.coords()))) {
      best.width = w;
      best.direction = PrimitiveVector(cu);
    }
  };
  for (std::size_t i = 0; i < d; ++i) {
    LatticePoint e(d, 0);
    e[i] = 1;
    consider(e);
  }
  const Integer bound = best.width;
  LatticePoint z(d, -bound);
  while (true) {
    LatticePoint num = transform(adj, z);
    bool integral = true;
    for (auto& x : num) {
      if (x % det != 0) {
        integral = false;
        break;
      }
      x /= det;
    }
    if (integral && is_primitive(num)) consider(num);
    std::size_t i = d;
    bool done = false;
    while (i > 0) {
      --i;
      if (z[i] < bound) {
        ++z[i];
        break;
      }
      z[i] = -bound;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return best;
}

Rational normalized_volume(const LatticePolytope& p) {
  const std::size_t k = p.span_dim();
  if (k == 0) return 0;
  if (k < p.ambient_dim()) return normalized_volume(reduce_to_span(p).reduced);
  const auto& verts = p.vertices();
  if (k == 1) return verts.back()[0] - verts.front()[0];
  if (k == 2) {
    std::vector<LatticePoint> ccw = verts;
    FullHull h = hull_2d(ccw);
    Integer twice = 0;
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
      const auto& a = verts[h.vertices[i]];
      const auto& b = verts[h.vertices[(i + 1) % h.vertices.size()]];
      twice += a[0] * b[1] - a[1] * b[0];
    }
    return Rational(twice, 2);
  }
  if (k == 3) {
    // Pyramids from a vertex over every facet: height (lattice distance) times
    // normalized facet area, over 3.
    const LatticePoint& apex = verts.front();
    Rational total = 0;
    for (const auto& f : p.halfspaces()) {
      Integer height = f.offset - dot(f.normal, apex);
      if (height == 0) continue;
      std::vector<LatticePoint> on_facet;
      for (const auto& v : verts) {
        if (dot(f.normal, v) == f.offset) on_facet.push_back(v);
      }
      total += Rational(height) * normalized_volume(LatticePolytope(on_facet)) / 3;
    }
    return total;
  }
  throw std::logic_error("normalized_volume requires span dimension <= 3");
}

LatticePolytope unimodular_image(const LatticePolytope& p, const IntMatrix& u,
                                 const LatticePoint& shift) {
  const std::size_t d = p.ambient_dim();
  if (u.size() != d || shift.size() != d) {
    throw std::invalid_argument("unimodular_image: dimension mismatch");
  }
  if (std::abs(determinant(u)) != 1) {
    throw std::invalid_argument("transformation is not unimodular");
  }
  std::vector<LatticePoint> v;
  for (const auto& x : p.vertices()) v.push_back(add(transform(u, x), shift));
  return LatticePolytope(LatticePolytope::Trusted{}, std::move(v));
}

Integer squared_diameter(const LatticePolytope& p) {
  Integer best = 0;
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      LatticePoint diff = sub(v[i], v[j]);
      best = std::max(best, dot(diff, diff));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Span reduction

LatticePoint SpanReduction::to_reduced(const LatticePoint& x) const {
  LatticePoint y = transform(basis.forward, sub(x, origin));
  y.resize(basis.rank);
  return y;
}

LatticePoint SpanReduction::from_reduced(const LatticePoint& y) const {
  LatticePoint full(origin.size(), 0);
  std::copy(y.begin(), y.end(), full.begin());
  return add(origin, transform(basis.inverse, full));
}

RationalPoint SpanReduction::from_reduced(const RationalPoint& y) const {
  const std::size_t d = origin.size();
  RationalPoint out(d);
  for (std::size_t i = 0; i < d; ++i) {
    out[i] = origin[i];
    for (std::size_t j = 0; j < y.size(); ++j) out[i] += basis.inverse[i][j] * y[j];
  }
  return out;
}

PrimitiveVector SpanReduction::lift_direction(const PrimitiveVector& v) const {
  LatticePoint full(origin.size(), 0);
  std::copy(v.coords().begin(), v.coords().end(), full.begin());
  return PrimitiveVector(transform(basis.inverse, full));
}

PrimitiveVector SpanReduction::reduce_direction(const PrimitiveVector& v) const {
  LatticePoint y = transform(basis.forward, v.coords());
  for (std::size_t i = basis.rank; i < y.size(); ++i) {
    if (y[i] != 0) throw std::invalid_argument("direction is not parallel to the span");
  }
  y.resize(basis.rank);
  return PrimitiveVector(y);
}

SpanReduction reduce_to_span(const LatticePolytope& p) {
  SpanCoordinates sc = span_coordinates(p.vertices(), p.ambient_dim());
  if (sc.basis.rank == 0) {
    throw std::invalid_argument("reduce_to_span: polytope is a point");
  }
  return {LatticePolytope(sc.reduced), sc.basis, sc.origin};
}

}  // namespace minklen
