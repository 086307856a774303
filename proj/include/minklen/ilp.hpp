#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "minklen/lp.hpp"

namespace minklen::ilp {

struct Solution {
  Rational value;
  std::vector<Rational> point;
};

/// Maximizes the objective of `relaxation` with every listed variable
/// restricted to integers, by depth-first LP branch and bound. The objective
/// must take integer values on integer points (integral coefficients on the
/// integer variables, zero elsewhere). When `must_exceed` is given only
/// solutions strictly above it are reported. Nodes beyond `node_limit` raise
/// ResourceCapExceeded.
std::optional<Solution> maximize(const lp::LinearProgram& relaxation,
                                 const std::vector<std::size_t>& integer_vars,
                                 std::optional<Integer> must_exceed = std::nullopt,
                                 std::size_t node_limit = 200000);

}  // namespace minklen::ilp
