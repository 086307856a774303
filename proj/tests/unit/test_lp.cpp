#include <algorithm>
#include <optional>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "minklen/lp.hpp"

using namespace minklen;
using lp::LinearProgram;
using lp::Relation;
using lp::Sense;
using lp::Status;

namespace {

struct Row2 {
  Rational a, b, c;  // a x + b y <= c
};

// Optimum of max cx*x + cy*y over {x,y >= 0, rows} by intersecting every pair
// of boundary lines and keeping the feasible candidates. Returns nullopt when
// infeasible; unboundedness is excluded by the generator (a box row).
std::optional<Rational> brute_optimum(std::vector<Row2> rows, const Rational& cx,
                                      const Rational& cy) {
  rows.push_back({-1, 0, 0});
  rows.push_back({0, -1, 0});
  std::optional<Rational> best;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      Rational det = rows[i].a * rows[j].b - rows[i].b * rows[j].a;
      if (det == 0) continue;
      Rational x = (rows[i].c * rows[j].b - rows[i].b * rows[j].c) / det;
      Rational y = (rows[i].a * rows[j].c - rows[i].c * rows[j].a) / det;
      bool ok = std::all_of(rows.begin(), rows.end(),
                            [&](const Row2& r) { return r.a * x + r.b * y <= r.c; });
      if (!ok) continue;
      Rational v = cx * x + cy * y;
      if (!best || v > *best) best = v;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("maximize over the unit square") {
  LinearProgram prog(2);
  prog.add_constraint({1, 0}, Relation::LessEqual, 1);
  prog.add_constraint({0, 1}, Relation::LessEqual, 1);
  prog.set_objective({1, 1}, Sense::Maximize);
  auto out = lp::solve(prog);
  REQUIRE(out.status == Status::Optimal);
  CHECK(out.optimum == 2);
  CHECK(out.witness == std::vector<Rational>{1, 1});
  CHECK(lp::verify_dual_certificate(prog, out));
}

TEST_CASE("longest vertical chord of T_3 by convex combinations") {
  // Variables: a (2, free), s, lambda_1..3, mu_1..3 (all >= 0).
  const std::vector<LatticePoint> verts{{0, 0}, {3, 1}, {1, 3}};
  LinearProgram prog(9);
  prog.set_free(0);
  prog.set_free(1);
  for (int coord = 0; coord < 2; ++coord) {
    std::vector<Rational> lo(9), hi(9);
    lo[coord] = -1;
    hi[coord] = -1;
    hi[2] = coord == 1 ? -1 : 0;
    for (int j = 0; j < 3; ++j) {
      lo[3 + j] = verts[j][coord];
      hi[6 + j] = verts[j][coord];
    }
    prog.add_constraint(lo, Relation::Equal, 0);
    prog.add_constraint(hi, Relation::Equal, 0);
  }
  std::vector<Rational> sum_lo(9), sum_hi(9);
  for (int j = 0; j < 3; ++j) {
    sum_lo[3 + j] = 1;
    sum_hi[6 + j] = 1;
  }
  prog.add_constraint(sum_lo, Relation::Equal, 1);
  prog.add_constraint(sum_hi, Relation::Equal, 1);
  std::vector<Rational> obj(9);
  obj[2] = 1;
  prog.set_objective(obj, Sense::Maximize);
  auto out = lp::solve(prog);
  REQUIRE(out.status == Status::Optimal);
  CHECK(out.optimum == Rational(8, 3));
}

TEST_CASE("infeasible and unbounded programs are statuses") {
  LinearProgram bad(1);
  bad.add_constraint({1}, Relation::LessEqual, 0);
  bad.add_constraint({1}, Relation::GreaterEqual, 1);
  CHECK(lp::solve(bad).status == Status::Infeasible);
  CHECK_FALSE(lp::feasible(bad).feasible);

  LinearProgram open(2);
  open.add_constraint({1, -1}, Relation::LessEqual, 1);
  open.set_objective({1, 1}, Sense::Maximize);
  CHECK(lp::solve(open).status == Status::Unbounded);
}

TEST_CASE("feasibility with convex-combination witness") {
  // (1/2, 1/3) in the unit square.
  const std::vector<LatticePoint> verts{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  auto build = [&](Rational x, Rational y) {
    LinearProgram prog(4);
    std::vector<Rational> rx, ry, one(4, Rational(1));
    for (const auto& v : verts) {
      rx.push_back(v[0]);
      ry.push_back(v[1]);
    }
    prog.add_constraint(rx, Relation::Equal, x);
    prog.add_constraint(ry, Relation::Equal, y);
    prog.add_constraint(one, Relation::Equal, 1);
    return prog;
  };
  auto inside = lp::feasible(build(Rational(1, 2), Rational(1, 3)));
  REQUIRE(inside.feasible);
  Rational total = 0;
  for (const auto& w : inside.witness) total += w;
  CHECK(total == 1);
  CHECK_FALSE(lp::feasible(build(2, 0)).feasible);
}

TEST_CASE("free variables and minimization") {
  LinearProgram prog(2);
  prog.set_free(0);
  prog.add_constraint({1, 1}, Relation::GreaterEqual, -3);
  prog.add_constraint({1, -1}, Relation::GreaterEqual, -5);
  prog.add_constraint({0, 1}, Relation::LessEqual, 4);
  prog.set_objective({1, 0}, Sense::Minimize);
  auto out = lp::solve(prog);
  REQUIRE(out.status == Status::Optimal);
  CHECK(out.optimum == -4);
  CHECK(lp::verify_dual_certificate(prog, out));
}

TEST_CASE("random planar programs agree with vertex enumeration") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-6, 6), rhs(-4, 12), rows_n(1, 5);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Row2> rows{{1, 1, Rational(rhs(rng) + 13)}};
    int extra = rows_n(rng);
    for (int i = 0; i < extra; ++i) rows.push_back({coef(rng), coef(rng), Rational(rhs(rng))});
    Rational cx = coef(rng), cy = coef(rng);
    LinearProgram prog(2);
    for (const auto& r : rows) prog.add_constraint({r.a, r.b}, Relation::LessEqual, r.c);
    prog.set_objective({cx, cy}, Sense::Maximize);
    auto out = lp::solve(prog);
    auto expected = brute_optimum(rows, cx, cy);
    if (!expected) {
      REQUIRE(out.status == Status::Infeasible);
      ++infeasible;
      continue;
    }
    REQUIRE(out.status == Status::Optimal);
    REQUIRE(out.optimum == *expected);
    ++optimal;

    // Row permutations leave the optimum unchanged.
    std::vector<Row2> shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    LinearProgram perm(2);
    for (const auto& r : shuffled) perm.add_constraint({r.a, r.b}, Relation::LessEqual, r.c);
    perm.set_objective({cx, cy}, Sense::Maximize);
    REQUIRE(lp::solve(perm).optimum == out.optimum);
  }
  CHECK(optimal > 100);
  CHECK(infeasible > 10);
}
