#include <doctest.h>

#include "dpro/bnb.hpp"
#include "dpro/rng.hpp"

using namespace dpro;

namespace {

// max p'z s.t. c'z <= budget, z binary
ConicProgram knapsack(const Vector& profit, const Vector& cost, double budget) {
  ConicProgram p;
  p.maximize = true;
  add_block(p, "z", static_cast<int>(profit.size()), ConeKind::NonNegative, true, 0.0, 1.0);
  p.objective = profit;
  p.in_lhs = cost.transpose();
  p.in_rhs = Vector::Constant(1, budget);
  p.eq_lhs = Matrix::Zero(0, p.var_count());
  p.eq_rhs = Vector::Zero(0);
  return p;
}

double knapsack_brute_force(const Vector& profit, const Vector& cost, double budget) {
  const int n = static_cast<int>(profit.size());
  double best = 0.0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    double c = 0.0;
    double v = 0.0;
    for (int j = 0; j < n; ++j) {
      if (mask & (1 << j)) {
        c += cost[j];
        v += profit[j];
      }
    }
    if (c <= budget) best = std::max(best, v);
  }
  return best;
}

}  // namespace

TEST_CASE("knapsack instances match exhaustive enumeration") {
  Rng rng(12345);
  for (int rep = 0; rep < 12; ++rep) {
    const int n = 10;
    Vector profit(n);
    Vector cost(n);
    for (int j = 0; j < n; ++j) {
      profit[j] = 1.0 + 9.0 * rng.uniform();
      cost[j] = 10.0 + 50.0 * rng.uniform();
    }
    const double budget = 200.0;
    ConicProgram p = knapsack(profit, cost, budget);
    Solution s = solve_mixed(p);
    REQUIRE(s.status == SolveStatus::Optimal);
    CHECK(s.objective == doctest::Approx(knapsack_brute_force(profit, cost, budget)).epsilon(1e-7));
    // the incumbent is binary and within budget
    const Vector z = s.variables;
    for (int j = 0; j < n; ++j) CHECK(std::abs(z[j] - std::round(z[j])) <= 1e-6);
    CHECK(cost.dot(z) <= budget + 1e-6);
  }
}

TEST_CASE("already integral relaxation needs no branching") {
  // assignment-like: max z1 + z2 s.t. z1 <= 1, z2 <= 1 -> LP optimum integral
  ConicProgram p;
  p.maximize = true;
  add_block(p, "z", 2, ConeKind::NonNegative, true, 0.0, 1.0);
  p.objective << 1.0, 1.0;
  p.in_lhs = Matrix::Zero(0, 2);
  p.in_rhs = Vector::Zero(0);
  p.eq_lhs = Matrix::Zero(0, 2);
  p.eq_rhs = Vector::Zero(0);
  Solution s = solve_mixed(p);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.objective == doctest::Approx(2.0));
  CHECK(s.nodes == 0);
}

TEST_CASE("one-hot group branching finds the best segment") {
  // max v'z s.t. e'z = 1, z binary: picks the largest coefficient
  Rng rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 6;
    ConicProgram p;
    p.maximize = true;
    add_block(p, "z", n, ConeKind::NonNegative, true, 0.0, 1.0);
    for (int j = 0; j < n; ++j) p.objective[j] = rng.uniform();
    p.eq_lhs = Matrix::Ones(1, n);
    p.eq_rhs = Vector::Ones(1);
    p.in_lhs = Matrix::Zero(0, n);
    p.in_rhs = Vector::Zero(0);
    p.one_hot_groups = {{0, 1, 2, 3, 4, 5}};
    Solution s = solve_mixed(p);
    REQUIRE(s.status == SolveStatus::Optimal);
    CHECK(s.objective == doctest::Approx(p.objective.maxCoeff()).epsilon(1e-7));
  }
}

TEST_CASE("infeasible integer program reports infeasibility") {
  // z1 + z2 = 1 with both fixed to zero through bounds
  ConicProgram p;
  add_block(p, "z", 2, ConeKind::NonNegative, true, 0.0, 0.0);
  p.objective << 1.0, 1.0;
  p.eq_lhs = Matrix::Ones(1, 2);
  p.eq_rhs = Vector::Ones(1);
  p.in_lhs = Matrix::Zero(0, 2);
  p.in_rhs = Vector::Zero(0);
  Solution s = solve_mixed(p);
  CHECK(s.status == SolveStatus::Infeasible);
}

TEST_CASE("mixed integer with continuous tail") {
  // max 3 z + x  s.t.  z in {0..4}, x <= 2.5 - z/2, x >= 0
  ConicProgram p;
  p.maximize = true;
  add_block(p, "z", 1, ConeKind::NonNegative, true, 0.0, 4.0);
  add_block(p, "x", 1, ConeKind::NonNegative);
  p.objective << 3.0, 1.0;
  p.in_lhs = Matrix::Zero(1, 2);
  p.in_lhs << 0.5, 1.0;
  p.in_rhs = Vector::Constant(1, 2.5);
  p.eq_lhs = Matrix::Zero(0, 2);
  p.eq_rhs = Vector::Zero(0);
  Solution s = solve_mixed(p);
  REQUIRE(s.status == SolveStatus::Optimal);
  // z = 4 gives 12 + max(0, 0.5) = 12.5; z = 5 not allowed
  CHECK(s.objective == doctest::Approx(12.5).epsilon(1e-7));
}

TEST_CASE("determinism: identical options give identical solutions") {
  Rng rng(99);
  const int n = 10;
  Vector profit(n);
  Vector cost(n);
  for (int j = 0; j < n; ++j) {
    profit[j] = 1.0 + 9.0 * rng.uniform();
    cost[j] = 10.0 + 50.0 * rng.uniform();
  }
  ConicProgram p = knapsack(profit, cost, 150.0);
  Solution a = solve_mixed(p);
  Solution b = solve_mixed(p);
  REQUIRE(a.status == SolveStatus::Optimal);
  CHECK(a.objective == b.objective);
  CHECK((a.variables - b.variables).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(a.nodes == b.nodes);
}
