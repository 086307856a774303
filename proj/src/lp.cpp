#include "minklen/lp.hpp"

#include <optional>
#include <stdexcept>

namespace minklen::lp {

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), objective_(num_vars), free_(num_vars, false) {}

void LinearProgram::add_constraint(std::vector<Rational> coefficients,
                                   Relation relation, Rational rhs) {
  if (coefficients.size() != num_vars_) {
    throw std::invalid_argument("constraint width does not match variable count");
  }
  rows_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::set_objective(std::vector<Rational> coefficients,
                                  Sense sense) {
  if (coefficients.size() != num_vars_) {
    throw std::invalid_argument("objective width does not match variable count");
  }
  objective_ = std::move(coefficients);
  sense_ = sense;
}

void LinearProgram::set_free(std::size_t var, bool value) {
  free_.at(var) = value;
}

namespace {

// Standard form: rows = sign * (A x (+/- slack)) = |b|, every column >= 0,
// one artificial column per row that forms the initial basis.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.constraints().size();
    pos_col_.resize(n);
    neg_col_.assign(n, npos);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      pos_col_[j] = col++;
      if (lp.is_free(j)) neg_col_[j] = col++;
    }
    slack_col_.assign(m, npos);
    for (std::size_t i = 0; i < m; ++i) {
      if (lp.constraints()[i].relation != Relation::Equal) slack_col_[i] = col++;
    }
    art_begin_ = col;
    width_ = col + m;
    rhs_ = width_;

    rows_.assign(m, std::vector<Rational>(width_ + 1));
    sign_.assign(m, 1);
    basis_.resize(m);
    row_origin_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Constraint& c = lp.constraints()[i];
      auto& row = rows_[i];
      for (std::size_t j = 0; j < n; ++j) {
        row[pos_col_[j]] = c.coefficients[j];
        if (neg_col_[j] != npos) row[neg_col_[j]] = -c.coefficients[j];
      }
      if (c.relation == Relation::LessEqual) row[slack_col_[i]] = 1;
      if (c.relation == Relation::GreaterEqual) row[slack_col_[i]] = -1;
      row[rhs_] = c.rhs;
      if (c.rhs < 0) {
        sign_[i] = -1;
        for (auto& x : row) x = -x;
      }
      row[art_begin_ + i] = 1;
      basis_[i] = art_begin_ + i;
      row_origin_[i] = i;
    }
  }

  // Phase one; returns false when the program is infeasible.
  bool find_feasible_basis() {
    reduced_.assign(width_ + 1, Rational(0));
    for (const auto& row : rows_) {
      for (std::size_t j = 0; j < art_begin_; ++j) reduced_[j] -= row[j];
      reduced_[rhs_] -= row[rhs_];
    }
    run(/*allow_artificial=*/true);
    if (reduced_[rhs_] != 0) return false;

    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < art_begin_) {
        ++i;
        continue;
      }
      std::size_t enter = npos;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (rows_[i][j] != 0) {
          enter = j;
          break;
        }
      }
      if (enter == npos) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        row_origin_.erase(row_origin_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, enter);
      ++i;
    }
    return true;
  }

  // Phase two for the maximization form; returns false when unbounded.
  bool optimize(const std::vector<Rational>& max_objective) {
    std::vector<Rational> cost(width_);
    for (std::size_t j = 0; j < lp_.num_vars(); ++j) {
      cost[pos_col_[j]] = max_objective[j];
      if (neg_col_[j] != npos) cost[neg_col_[j]] = -max_objective[j];
    }
    reduced_.assign(width_ + 1, Rational(0));
    for (std::size_t j = 0; j < width_; ++j) reduced_[j] = -cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (rows_[i][j] != 0) reduced_[j] += cb * rows_[i][j];
      }
    }
    return run(/*allow_artificial=*/false);
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> std_x(width_);
    for (std::size_t i = 0; i < rows_.size(); ++i) std_x[basis_[i]] = rows_[i][rhs_];
    std::vector<Rational> x(lp_.num_vars());
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = std_x[pos_col_[j]];
      if (neg_col_[j] != npos) x[j] -= std_x[neg_col_[j]];
    }
    return x;
  }

  std::vector<Rational> dual() const {
    std::vector<Rational> y(sign_.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = reduced_[art_begin_ + i];
      if (sign_[i] < 0) y[i] = -y[i];
    }
    return y;
  }

  const Rational& value() const { return reduced_[rhs_]; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool run(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? width_ : art_begin_;
    while (true) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == npos) return true;

      std::size_t leave = npos;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][rhs_] / a;
        if (leave == npos || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational f = row[c];
      for (std::size_t j : nz) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(reduced_);
    basis_[r] = c;
  }

  const LinearProgram& lp_;
  std::vector<std::size_t> pos_col_, neg_col_, slack_col_;
  std::size_t art_begin_ = 0, width_ = 0, rhs_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> reduced_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_, row_origin_;
};

std::vector<Rational> max_form_objective(const LinearProgram& lp) {
  std::vector<Rational> c = lp.objective();
  if (lp.sense() == Sense::Minimize) {
    for (auto& x : c) x = -x;
  }
  return c;
}

}  // namespace

LpOutcome solve(const LinearProgram& program) {
  LpOutcome out;
  Tableau tableau(program);
  if (!tableau.find_feasible_basis()) {
    out.status = Status::Infeasible;
    return out;
  }
  if (!tableau.optimize(max_form_objective(program))) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.witness = tableau.primal();
  out.dual = tableau.dual();
  out.optimum = program.sense() == Sense::Maximize ? tableau.value() : -tableau.value();
  if (!satisfies(program, out.witness) || !verify_dual_certificate(program, out)) {
    throw std::logic_error("simplex produced an uncertified optimum");
  }
  return out;
}

Feasibility feasible(const LinearProgram& program) {
  Tableau tableau(program);
  Feasibility out;
  out.feasible = tableau.find_feasible_basis();
  if (out.feasible) {
    out.witness = tableau.primal();
    if (!satisfies(program, out.witness)) {
      throw std::logic_error("phase one produced an infeasible witness");
    }
  }
  return out;
}

bool satisfies(const LinearProgram& program, const std::vector<Rational>& x) {
  if (x.size() != program.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!program.is_free(j) && x[j] < 0) return false;
  }
  for (const auto& row : program.constraints()) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (row.coefficients[j] != 0) lhs += row.coefficients[j] * x[j];
    }
    switch (row.relation) {
      case Relation::LessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != row.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

bool verify_dual_certificate(const LinearProgram& program,
                             const LpOutcome& outcome) {
  const auto& rows = program.constraints();
  if (outcome.status != Status::Optimal || outcome.dual.size() != rows.size()) {
    return false;
  }
  const std::vector<Rational> c = max_form_objective(program);
  std::vector<Rational> aty(program.num_vars());
  Rational dual_value = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational& y = outcome.dual[i];
    if (rows[i].relation == Relation::LessEqual && y < 0) return false;
    if (rows[i].relation == Relation::GreaterEqual && y > 0) return false;
    if (y == 0) continue;
    for (std::size_t j = 0; j < aty.size(); ++j) {
      if (rows[i].coefficients[j] != 0) aty[j] += y * rows[i].coefficients[j];
    }
    dual_value += y * rows[i].rhs;
  }
  for (std::size_t j = 0; j < aty.size(); ++j) {
    if (program.is_free(j) ? aty[j] != c[j] : aty[j] < c[j]) return false;
  }
  const Rational primal_value =
      program.sense() == Sense::Maximize ? outcome.optimum : -outcome.optimum;
  return dual_value == primal_value;
}

}  // namespace minklen::lp
