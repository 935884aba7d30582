#pragma once

#include <optional>
#include <utility>

#include "dpro/program.hpp"
#include "dpro/solve.hpp"

namespace dpro {

// Internal equality/inequality split with explicit cone tiling of the
// structural variables. Inequality slacks stay implicit; bound rows are
// materialized so branch-and-bound can tighten them in place.
struct StandardForm {
  Vector c;       // minimize c'u (obj_sign applied)
  Matrix a_eq;    // m_eq x n
  Vector b_eq;
  Matrix a_in;    // m_in x n, rows a'u <= b
  Vector b_in;
  struct Cone {
    ConeKind kind;
    int offset;
    int size;
  };
  std::vector<Cone> cones;

  // sparse pattern of a_in rows, used to assemble the reduced system
  std::vector<std::vector<std::pair<int, double>>> in_rows;

  double obj_sign = 1.0;          // -1 when the source program maximizes
  Vector eq_scale;                // row equilibration factors (applied)
  Vector in_scale;
  std::vector<int> lower_row;     // per variable: index into a_in or -1
  std::vector<int> upper_row;
  int source_in_rows = 0;         // leading a_in rows mirror the program's in_lhs

  int var_count() const { return static_cast<int>(c.size()); }

  void set_var_lower(int var, double lo);
  void set_var_upper(int var, double hi);
  double var_lower(int var) const;
  double var_upper(int var) const;
  void refresh_row_cache();
};

StandardForm standardize(const ConicProgram& program);

struct ContinuousResult {
  SolveStatus status = SolveStatus::Failed;
  Vector u;        // structural variables
  Vector slack;    // inequality slacks
  Vector y;        // row duals, equality rows first
  double pobj = 0.0;
  int iterations = 0;
  double primal_res = 0.0;
  double dual_res = 0.0;
  double rel_gap = 0.0;
  std::optional<Vector> certificate;
};

// Mehrotra predictor-corrector with Nesterov-Todd scaling on the cone
// blocks; dense factorization of the reduced system.
ContinuousResult ipm_solve(const StandardForm& sf, const SolveOptions& opts);

// Feasibility phase: min sum of artificial infeasibilities. Returns the
// attained infeasibility measure and a Farkas dual when it is positive.
struct FeasibilityCheck {
  bool feasible = false;
  double infeasibility = 0.0;
  Vector farkas;  // row duals certifying infeasibility (empty when feasible)
};
FeasibilityCheck check_feasible(const StandardForm& sf, const SolveOptions& opts);

// Public continuous solve on a conic program (integrality relaxed when asked).
Solution solve_continuous(const ConicProgram& program, const SolveOptions& opts = {});

}  // namespace dpro
