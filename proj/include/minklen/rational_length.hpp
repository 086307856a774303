#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minklen/polytope.hpp"
#include "minklen/zonotope.hpp"

namespace minklen {

/// s_v(P): the largest s such that a rational translate of [0, s v] lies in P.
Rational directional_length(const LatticePolytope& p, const PrimitiveVector& v);
/// Same, validating that `v` is primitive first.
Rational directional_length(const LatticePolytope& p, const LatticePoint& v);

/// Every primitive v with s_v(P) >= eps (and nothing else).
std::vector<PrimitiveVector> bounded_direction_set(const LatticePolytope& p, const Rational& eps);

struct RationalDiameter {
  Rational value;
  PrimitiveVector direction;
};

/// s(P) = max_v s_v(P); ties go to the lexicographically smallest direction.
RationalDiameter rational_diameter(const LatticePolytope& p);

/// Primitive lattice vectors v of span(B) such that replacing any single
/// member of B by v spans a parallelepiped of normalized volume <= bound.
/// Throws std::invalid_argument for a dependent B.
std::vector<PrimitiveVector> direction_completions(const std::vector<PrimitiveVector>& basis,
                                                   const Rational& bound);

struct DirectionBudget {
  Rational epsilon;
  std::vector<PrimitiveVector> directions;
  std::map<std::vector<PrimitiveVector>, std::vector<PrimitiveVector>> completions;
};

/// U_eps together with V(B), bound n^k, over every independent n-subset B of
/// U_eps (k the span dimension). Throws ResourceCapExceeded when more than
/// `cap` directions would be produced.
DirectionBudget direction_budget(const LatticePolytope& p, const Rational& eps, std::size_t n,
                                 std::size_t cap = 5000);

/// 2 Vol(P) / w(P) for a full-dimensional polygon.
Rational polygon_upper_bound(const LatticePolytope& p);

struct ZonotopeFit {
  Rational value;
  Zonotope zonotope;
  std::vector<Rational> dual;  // one multiplier per facet of P
};

/// max |Z| over rational zonotopes a + sum alpha_v [0, v] in P, v ranging over
/// `dirs` (alpha_v >= 0, all directions at once).
ZonotopeFit zonotope_lp(const LatticePolytope& p, const std::vector<PrimitiveVector>& dirs);

enum class Certification { Certified, LowerBoundOnly };
std::string to_string(Certification c);

struct RationalOptions {
  /// L_n(tP)/t is folded into the lower bound for t = 2..dilate_checks while
  /// tP has at most `point_guard` lattice points.
  Integer dilate_checks = 2;
  std::size_t point_guard = 150;
  std::size_t budget_cap = 3000;
  std::size_t max_rounds = 60;
};

struct RationalLengthResult {
  std::vector<Rational> lambdas;  // lambda_1 .. lambda_n
  /// Best known upper bound per n (equal to the value when certified).
  std::vector<std::optional<Rational>> upper_bounds;
  std::vector<Zonotope> witnesses;
  std::vector<Certification> status;
  Zonotope witness;  // attains the last lambda
  std::size_t threshold_index = 1;
  std::optional<Integer> period;
  Certification certification = Certification::Certified;
};

/// lambda_1 .. lambda_n of P. Lower-dimensional inputs are handled in the
/// coordinates of their span.
RationalLengthResult rational_minkowski_length(const LatticePolytope& p, std::size_t n,
                                               const RationalOptions& options = {});

/// The full profile lambda_1 .. lambda_d.
RationalLengthResult rational_length_profile(const LatticePolytope& p,
                                             const RationalOptions& options = {});

struct PeriodResult {
  std::optional<Integer> period;
  /// Lattice zonotope in (period) P with |Z| = period * lambda, when found.
  std::optional<Zonotope> witness;
  std::string note;
};

/// Smallest k with L_n(kP) = k lambda_n, searching k = q, 2q, ... (q the
/// denominator of lambda) up to cap_multiples * q. n = 0 means n = d.
PeriodResult period(const LatticePolytope& p, const Rational& lambda, const Zonotope& witness,
                    Integer cap_multiples = 64, std::size_t n = 0);
PeriodResult period(const LatticePolytope& p, Integer cap_multiples = 64, std::size_t n = 0);

}  // namespace minklen
