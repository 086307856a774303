#include "minklen/ilp.hpp"

#include <functional>

namespace minklen::ilp {

std::optional<Solution> maximize(const lp::LinearProgram& relaxation,
                                 const std::vector<std::size_t>& integer_vars,
                                 std::optional<Integer> must_exceed,
                                 std::size_t node_limit) {
  if (relaxation.sense() != lp::Sense::Maximize) {
    throw std::invalid_argument("branch and bound expects a maximization program");
  }
  std::optional<Solution> best;
  std::optional<Integer> floor_value = must_exceed;
  std::size_t nodes = 0;

  std::function<void(const lp::LinearProgram&)> visit = [&](const lp::LinearProgram& node) {
    if (++nodes > node_limit) throw ResourceCapExceeded("branch and bound node limit reached");
    lp::LpOutcome out = lp::solve(node);
    if (out.status == lp::Status::Infeasible) return;
    if (out.status == lp::Status::Unbounded) {
      throw std::invalid_argument("integer program relaxation is unbounded");
    }
    const Integer bound = floor_to_integer(out.optimum);
    if (floor_value && bound <= *floor_value) return;

    for (std::size_t j : integer_vars) {
      const Rational& x = out.witness[j];
      if (denominator(x) == 1) continue;
      const Integer down = floor_to_integer(x);
      lp::LinearProgram lower = node, upper = node;
      std::vector<Rational> row(node.num_vars());
      row[j] = 1;
      lower.add_constraint(row, lp::Relation::LessEqual, down);
      upper.add_constraint(row, lp::Relation::GreaterEqual, down + 1);
      // Round towards the objective first.
      if (node.objective()[j] > 0) {
        visit(upper);
        visit(lower);
      } else {
        visit(lower);
        visit(upper);
      }
      return;
    }
    // Integral on every integer variable; the objective is then integral too.
    best = Solution{out.optimum, out.witness};
    floor_value = bound;
  };
  visit(relaxation);
  return best;
}

}  // namespace minklen::ilp
