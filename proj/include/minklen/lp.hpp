#pragma once

#include <cstddef>
#include <vector>

#include "minklen/types.hpp"

namespace minklen::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };
enum class Status { Optimal, Infeasible, Unbounded };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

/// A dense linear program over exact rationals. Variables are nonnegative
/// unless released with set_free().
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Constraint>& constraints() const { return rows_; }
  const std::vector<Rational>& objective() const { return objective_; }
  Sense sense() const { return sense_; }
  bool is_free(std::size_t var) const { return free_[var]; }

  void add_constraint(std::vector<Rational> coefficients, Relation relation,
                      Rational rhs);
  void set_objective(std::vector<Rational> coefficients, Sense sense);
  void set_free(std::size_t var, bool value = true);

 private:
  std::size_t num_vars_;
  std::vector<Constraint> rows_;
  std::vector<Rational> objective_;
  Sense sense_ = Sense::Maximize;
  std::vector<bool> free_;
};

/// For an optimal outcome, `dual` holds one multiplier per constraint row for
/// the maximization form of the program (objective negated when minimizing),
/// and has been checked exactly against the primal optimum.
struct LpOutcome {
  Status status = Status::Infeasible;
  Rational optimum;
  std::vector<Rational> witness;
  std::vector<Rational> dual;
};

/// Two-phase dense tableau simplex with Bland's rule. Deterministic.
LpOutcome solve(const LinearProgram& program);

struct Feasibility {
  bool feasible = false;
  std::vector<Rational> witness;
};

Feasibility feasible(const LinearProgram& program);

/// True iff `x` satisfies every constraint and sign condition exactly.
bool satisfies(const LinearProgram& program, const std::vector<Rational>& x);

/// Checks dual feasibility of `outcome.dual` and that its objective equals
/// `outcome.optimum`.
bool verify_dual_certificate(const LinearProgram& program,
                             const LpOutcome& outcome);

}  // namespace minklen::lp
