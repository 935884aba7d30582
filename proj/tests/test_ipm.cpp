#include <doctest.h>

#include "dpro/ipm.hpp"
#include "dpro/rng.hpp"

using namespace dpro;

namespace {

ConicProgram toy_lp() {
  // max x1 + x2  s.t.  x1 + x2 <= 1, x >= 0
  ConicProgram p;
  p.maximize = true;
  add_block(p, "x", 2, ConeKind::NonNegative);
  p.objective << 1.0, 1.0;
  p.in_lhs = Matrix::Ones(1, 2);
  p.in_rhs = Vector::Ones(1);
  p.eq_lhs = Matrix::Zero(0, 2);
  p.eq_rhs = Vector::Zero(0);
  return p;
}

}  // namespace

TEST_CASE("two variable lp") {
  Solution s = solve_continuous(toy_lp());
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.objective == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(s.variables.sum() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("equality constrained lp with free variables") {
  // min x + 2y  s.t. x + y = 1 (x, y free)  ->  unbounded? no: min over line:
  // x + 2y with y = 1 - x: x + 2 - 2x = 2 - x, unbounded below. Check detect.
  ConicProgram p;
  add_block(p, "x", 2, ConeKind::Free);
  p.objective << 1.0, 2.0;
  p.eq_lhs = Matrix::Ones(1, 2);
  p.eq_rhs = Vector::Ones(1);
  p.in_lhs = Matrix::Zero(0, 2);
  p.in_rhs = Vector::Zero(0);
  Solution s = solve_continuous(p);
  CHECK(s.status == SolveStatus::Unbounded);
}

TEST_CASE("bounded free-variable lp") {
  // min x + 2y s.t. x + y = 1, -3 <= x <= 3
  ConicProgram p;
  add_block(p, "x", 2, ConeKind::Free);
  p.objective << 1.0, 2.0;
  p.eq_lhs = Matrix::Ones(1, 2);
  p.eq_rhs = Vector::Ones(1);
  p.in_lhs = Matrix::Zero(0, 2);
  p.in_rhs = Vector::Zero(0);
  p.lower[0] = -3.0;
  p.upper[0] = 3.0;
  Solution s = solve_continuous(p);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.objective == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(s.variables[0] == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("soc toy program") {
  // max tau  s.t.  ||eta|| <= pi, pi <= 1, tau <= pi
  ConicProgram p;
  p.maximize = true;
  add_block(p, "cone", 3, ConeKind::SecondOrder);  // (pi, eta1, eta2)
  add_block(p, "tau", 1, ConeKind::Free);
  p.objective << 0.0, 0.0, 0.0, 1.0;
  p.in_lhs = Matrix::Zero(2, 4);
  p.in_rhs = Vector::Zero(2);
  p.in_lhs(0, 0) = 1.0;  // pi <= 1
  p.in_rhs[0] = 1.0;
  p.in_lhs(1, 3) = 1.0;  // tau - pi <= 0
  p.in_lhs(1, 0) = -1.0;
  p.eq_lhs = Matrix::Zero(0, 4);
  p.eq_rhs = Vector::Zero(0);
  Solution s = solve_continuous(p);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.objective == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("projection onto a ball via soc") {
  // min t s.t. ||x - c|| <= t, x in simplex: distance from point to simplex
  Rng rng(71);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3;
    Vector c(n);
    for (int i = 0; i < n; ++i) c[i] = 2.0 * rng.normal();
    ConicProgram p;
    add_block(p, "tx", 1 + n, ConeKind::SecondOrder);  // (t, d)
    add_block(p, "x", n, ConeKind::NonNegative);
    p.objective.setZero();
    p.objective[0] = 1.0;
    // d = x - c  (n equality rows), e'x = 1
    p.eq_lhs = Matrix::Zero(n + 1, p.var_count());
    p.eq_rhs = Vector::Zero(n + 1);
    for (int i = 0; i < n; ++i) {
      p.eq_lhs(i, 1 + i) = 1.0;
      p.eq_lhs(i, 1 + n + i) = -1.0;
      p.eq_rhs[i] = -c[i];
    }
    p.eq_lhs.row(n).tail(n).setOnes();
    p.eq_rhs[n] = 1.0;
    p.in_lhs = Matrix::Zero(0, p.var_count());
    p.in_rhs = Vector::Zero(0);
    Solution s = solve_continuous(p);
    REQUIRE(s.status == SolveStatus::Optimal);
    // cross-check against the closed-form simplex projection
    Vector proj(n);
    {
      extern Vector dummy;  // avoid unused warnings trick not needed
    }
    Vector p_simplex = [&] {
      Vector sorted = c;
      std::sort(sorted.data(), sorted.data() + n, std::greater<double>());
      double cum = 0.0;
      double theta = 0.0;
      for (int k = 0; k < n; ++k) {
        cum += sorted[k];
        const double cand = (cum - 1.0) / (k + 1);
        if (sorted[k] - cand > 0) theta = cand;
      }
      return Vector((c.array() - theta).cwiseMax(0.0));
    }();
    CHECK(s.objective == doctest::Approx((p_simplex - c).norm()).epsilon(1e-6));
  }
}

TEST_CASE("infeasible program is certified") {
  // x >= 0, x <= -1
  ConicProgram p;
  add_block(p, "x", 1, ConeKind::NonNegative);
  p.objective << 1.0;
  p.in_lhs = Matrix::Ones(1, 1);
  p.in_rhs = Vector::Constant(1, -1.0);
  p.eq_lhs = Matrix::Zero(0, 1);
  p.eq_rhs = Vector::Zero(0);
  Solution s = solve_continuous(p);
  CHECK(s.status == SolveStatus::Infeasible);
}

TEST_CASE("random dense lps agree with brute force over vertices") {
  // min c'x s.t. x in simplex scaled: e'x = 1, x >= 0: optimum = min c_i
  Rng rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + rng.uniform_int(10);
    ConicProgram p;
    add_block(p, "x", n, ConeKind::NonNegative);
    for (int i = 0; i < n; ++i) p.objective[i] = rng.normal();
    p.eq_lhs = Matrix::Ones(1, n);
    p.eq_rhs = Vector::Ones(1);
    p.in_lhs = Matrix::Zero(0, n);
    p.in_rhs = Vector::Zero(0);
    Solution s = solve_continuous(p);
    REQUIRE(s.status == SolveStatus::Optimal);
    CHECK(s.objective == doctest::Approx(p.objective.minCoeff()).epsilon(1e-7));
  }
}

TEST_CASE("duals satisfy stationarity on a small lp") {
  // min c'x s.t. Ax = b, Gx <= h, x >= 0
  ConicProgram p;
  add_block(p, "x", 3, ConeKind::NonNegative);
  p.objective << 1.0, 2.0, 3.0;
  p.eq_lhs = Matrix::Zero(1, 3);
  p.eq_lhs << 1.0, 1.0, 1.0;
  p.eq_rhs = Vector::Ones(1);
  p.in_lhs = Matrix::Zero(1, 3);
  p.in_lhs << 1.0, 0.0, 0.0;  // x1 <= 0.2 keeps the cheap coordinate capped
  p.in_rhs = Vector::Constant(1, 0.2);
  Solution s = solve_continuous(p);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.objective == doctest::Approx(0.2 * 1.0 + 0.8 * 2.0).epsilon(1e-6));
  // complementary slackness: inequality is tight, dual may be positive
  CHECK(s.in_duals[0] >= -1e-8);
}
