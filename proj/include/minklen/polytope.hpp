#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "minklen/lattice.hpp"
#include "minklen/types.hpp"

namespace minklen {

/// Integer vector with coprime coordinates, stored with its first nonzero
/// coordinate positive. Directions are only ever meaningful up to sign.
class PrimitiveVector {
 public:
  PrimitiveVector() = default;
  /// Accepts any primitive vector and canonicalizes its sign.
  explicit PrimitiveVector(LatticePoint coords);

  const LatticePoint& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  Integer operator[](std::size_t i) const { return coords_[i]; }

  friend auto operator<=>(const PrimitiveVector&, const PrimitiveVector&) = default;

 private:
  LatticePoint coords_;
};

struct Primitivized {
  PrimitiveVector direction;
  Integer multiplier = 0;
};

/// Splits v into multiplier * direction, up to sign. Throws on v = 0.
Primitivized primitivize(const LatticePoint& v);
bool is_primitive(const LatticePoint& v);
/// Sign-flips v so that its first nonzero coordinate is positive.
LatticePoint canonical_sign(LatticePoint v);

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

/// normal . x <= offset
struct Halfspace {
  LatticePoint normal;
  Integer offset = 0;
};

/// Convex hull of finitely many integer points. The stored vertex list is
/// irredundant and sorted lexicographically. For ambient dimension <= 3 an
/// exact facet description (with equations doubled into opposite
/// inequalities for lower-dimensional polytopes) is kept alongside.
class LatticePolytope {
 public:
  /// Duplicates and non-vertices are pruned. Throws on an empty or ragged list.
  explicit LatticePolytope(std::vector<LatticePoint> points);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t span_dim() const { return span_dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  bool has_halfspaces() const { return dim_ <= 3; }
  /// Throws std::logic_error when ambient_dim() > 3.
  const std::vector<Halfspace>& halfspaces() const;

  /// Exact integer membership using the facet description when available.
  bool contains_lattice_point(const LatticePoint& x) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  struct Trusted {};
  LatticePolytope(Trusted, std::vector<LatticePoint> vertices);
  void build_facets();

  friend LatticePolytope dilate(const LatticePolytope&, Integer);
  friend LatticePolytope unimodular_image(const LatticePolytope&, const IntMatrix&,
                                          const LatticePoint&);

  std::size_t dim_ = 0;
  std::size_t span_dim_ = 0;
  std::vector<LatticePoint> vertices_;
  std::vector<Halfspace> halfspaces_;
};

/// A polytope with rational vertices, as produced by rational dilation.
struct RationalPolytope {
  std::vector<RationalPoint> vertices;
  bool is_lattice = false;
  /// Throws when some vertex is not integral.
  LatticePolytope to_lattice() const;
};

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope dilate(const LatticePolytope& p, Integer t);
RationalPolytope dilate(const LatticePolytope& p, const Rational& t);
LatticePolytope translate(const LatticePolytope& p, const LatticePoint& shift);

/// Exact membership of a rational point, decided by LP feasibility of a
/// convex combination of the vertices.
bool contains(const LatticePolytope& p, const RationalPoint& x);

/// Integer points of P in lexicographic order.
std::vector<LatticePoint> lattice_points(const LatticePolytope& p);

struct LatticeWidth {
  Integer width = 0;
  PrimitiveVector direction;
};

/// Minimum over primitive u of the range of <x,u> on P. Ties go to the
/// candidate that is smallest when coordinates are compared last-to-first.
LatticeWidth lattice_width(const LatticePolytope& p);

/// Integer range of <x,u> over P.
Integer width_in_direction(const LatticePolytope& p, const LatticePoint& u);

/// Volume in the affine span, normalized so that a fundamental parallelepiped
/// of the induced lattice has volume 1.
Rational normalized_volume(const LatticePolytope& p);

/// x -> U x + shift. Throws std::invalid_argument unless det U = +-1.
LatticePolytope unimodular_image(const LatticePolytope& p, const IntMatrix& u,
                                 const LatticePoint& shift);

/// Largest Euclidean distance squared between two vertices.
Integer squared_diameter(const LatticePolytope& p);

/// Lattice-preserving coordinates on the affine span of P:
/// reduced = first span_dim coordinates of forward * (x - origin).
struct SpanReduction {
  LatticePolytope reduced;
  SpanBasis basis;
  LatticePoint origin;

  LatticePoint to_reduced(const LatticePoint& x) const;
  LatticePoint from_reduced(const LatticePoint& y) const;
  RationalPoint from_reduced(const RationalPoint& y) const;
  /// Maps a direction of the reduced space back to a direction of the span.
  PrimitiveVector lift_direction(const PrimitiveVector& v) const;
  PrimitiveVector reduce_direction(const PrimitiveVector& v) const;
};

SpanReduction reduce_to_span(const LatticePolytope& p);

}  // namespace minklen
