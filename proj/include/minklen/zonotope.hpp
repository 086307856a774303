#pragma once

#include <vector>

#include "minklen/polytope.hpp"
#include "minklen/types.hpp"

namespace minklen {

struct ZonotopeTerm {
  PrimitiveVector direction;
  Rational weight;

  friend bool operator==(const ZonotopeTerm&, const ZonotopeTerm&) = default;
};

/// anchor + sum_i weight_i [0, direction_i] in normal form: distinct
/// directions, positive weights, terms sorted by direction.
class Zonotope {
 public:
  Zonotope() = default;
  explicit Zonotope(RationalPoint anchor);
  /// Parallel terms are merged and zero weights dropped. Throws on negative
  /// weights or mismatched dimensions.
  Zonotope(RationalPoint anchor, std::vector<ZonotopeTerm> terms);

  std::size_t dim() const { return anchor_.size(); }
  const RationalPoint& anchor() const { return anchor_; }
  const std::vector<ZonotopeTerm>& terms() const { return terms_; }

  /// |Z|, the sum of the weights.
  Rational length() const;
  bool is_lattice() const;
  std::size_t span_dim() const;
  std::vector<PrimitiveVector> directions() const;

  /// The 2^m corner points (duplicates removed), sorted.
  std::vector<RationalPoint> vertices() const;

  Zonotope translated(const RationalPoint& shift) const;
  Zonotope scaled(const Rational& factor) const;

  friend bool operator==(const Zonotope&, const Zonotope&) = default;

 private:
  RationalPoint anchor_;
  std::vector<ZonotopeTerm> terms_;
};

Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b);

/// Z is inside P iff every corner of Z is. With a facet description at hand
/// this is evaluated through the support function of Z on each facet normal.
bool contains(const LatticePolytope& p, const Zonotope& z);

/// Maps a zonotope given in span coordinates back to the ambient space,
/// re-canonicalizing direction signs by moving the anchor.
Zonotope lift(const SpanReduction& reduction, const Zonotope& reduced);

/// Lattice zonotope from integral weights; throws if the input is not one.
Zonotope lattice_zonotope(const LatticePoint& anchor,
                          const std::vector<std::pair<PrimitiveVector, Integer>>& terms);

std::string to_string(const Zonotope& z);

}  // namespace minklen
