#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minklen/polytope.hpp"
#include "minklen/zonotope.hpp"

namespace minklen {

enum class LengthMethod { Fastpath, Search, Oracle };
std::string to_string(LengthMethod m);

struct CatalogEntry {
  PrimitiveVector direction;
  /// Largest c such that some lattice translate of [0, c v] lies in P.
  Integer max_len = 0;
};

/// Directions of lattice segments in P, sorted by max_len (descending) and
/// then by direction.
using SegmentCatalog = std::vector<CatalogEntry>;

SegmentCatalog fitting_segments(const LatticePolytope& p);

/// One less than the largest number of collinear lattice points.
Integer lattice_diameter(const LatticePolytope& p);

struct LengthResult {
  Integer length = 0;
  Zonotope witness;  // lattice zonotope inside P with |Z| = length
  LengthMethod method = LengthMethod::Search;
  std::string reason;
};

struct LengthOptions {
  /// Known valid upper bound; the search stops as soon as it is reached.
  std::optional<Integer> upper_bound;
  /// A lattice zonotope already known to fit (e.g. from superadditivity).
  std::optional<Zonotope> seed;
  bool use_fastpath = true;
  std::size_t cap_lattice_points = 20000;
};

/// L_n(P) with a witness. Certified branch and bound for span dimension <= 3.
LengthResult minkowski_length(const LatticePolytope& p, std::size_t n,
                              const LengthOptions& options = {});

/// Exhaustive multiset enumeration used as an independent oracle. Throws
/// ResourceCapExceeded when P has more than `cap` lattice points.
Integer brute_force_length(const LatticePolytope& p, std::size_t n, std::size_t cap = 60);

struct FastpathResult {
  Integer length = 0;
  std::string reason;
  Zonotope witness;
};

/// Closed forms for points, segments, dilated unimodular simplices,
/// unimodular parallelepipeds, Lawrence prisms and pyramids over 2 Delta_2 in
/// normal form, and lattice triangles. Values are L(P) = L_d(P).
std::optional<FastpathResult> length_fastpath(const LatticePolytope& p);

/// Shrinks a maximal decomposition by replacing r summands whose
/// parallelepiped holds two lattice points congruent mod r with the length-r
/// segment joining them, until no replacement applies.
Zonotope minimize_decomposition(const Zonotope& z);

/// Throws std::invalid_argument when L(P) = 0.
Zonotope smallest_maximal_decomposition(const LatticePolytope& p);

struct LengthProfile {
  std::vector<Integer> values;  // L_1 .. L_d
  std::vector<Zonotope> witnesses;
  std::vector<LengthMethod> methods;
};

LengthProfile length_profile(const LatticePolytope& p, const LengthOptions& options = {});

/// Upper bound on L(P) from enclosing dilated simplices (and 2 Vol / w for
/// polygons).
Integer length_upper_bound(const LatticePolytope& p);

}  // namespace minklen
