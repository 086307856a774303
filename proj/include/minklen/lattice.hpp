#pragma once

#include <optional>
#include <vector>

#include "minklen/types.hpp"

namespace minklen {

using IntMatrix = std::vector<LatticePoint>;  // row-major

IntMatrix identity_matrix(std::size_t d);
LatticePoint transform(const IntMatrix& m, const LatticePoint& x);
Integer determinant(const IntMatrix& m);

/// Rank of a family of integer vectors (all of the same length).
std::size_t rank(const std::vector<LatticePoint>& vectors);

/// A unimodular change of coordinates adapted to a lattice subspace.
///
/// `forward` maps the saturated lattice spanned by the input vectors onto
/// Z^k x {0}; `inverse` maps back. Coordinates k..d-1 of `forward * v` vanish
/// for every v in the span.
struct SpanBasis {
  IntMatrix forward;
  IntMatrix inverse;
  std::size_t rank = 0;
};

SpanBasis adapted_basis(const std::vector<LatticePoint>& vectors,
                        std::size_t dim);

/// gcd of the maximal minors of a full-rank family, i.e. the volume of the
/// parallelepiped it spans, normalized to the lattice of its own span.
Integer normalized_parallelepiped_volume(const std::vector<LatticePoint>& vectors);

/// Exact coordinates of `v` in the basis `basis` (which must be independent),
/// or nothing when v lies outside the span.
std::optional<RationalPoint> coordinates_in(const std::vector<LatticePoint>& basis,
                                            const LatticePoint& v);

}  // namespace minklen
