#pragma once

#include <limits>
#include <string>
#include <vector>

#include "dpro/grid.hpp"

namespace dpro {

enum class ConeKind { Free, NonNegative, SecondOrder };

// A named contiguous slice of the variable vector with one cone assignment.
// Second-order blocks are (head, tail...) with head >= ||tail||.
struct VarBlock {
  std::string name;
  int offset = 0;
  int size = 0;
  ConeKind cone = ConeKind::Free;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// min/max c'u  s.t.  eq_lhs u = eq_rhs, in_lhs u <= in_rhs, cone blocks,
// integrality mask. Bounds are kept per variable so branch-and-bound can
// tighten them without touching the row structure.
struct ConicProgram {
  bool maximize = false;
  Vector objective;
  Matrix eq_lhs;
  Vector eq_rhs;
  Matrix in_lhs;
  Vector in_rhs;
  std::vector<VarBlock> blocks;
  std::vector<char> is_integer;  // per variable
  Vector lower;                  // -inf allowed
  Vector upper;                  // +inf allowed
  std::vector<std::string> var_names;

  // one-hot groups over binary variables (each group carries an equality
  // sum-to-one row); branching exploits them
  std::vector<std::vector<int>> one_hot_groups;

  int var_count() const { return static_cast<int>(objective.size()); }
  bool has_integers() const;
  int block_index(const std::string& name) const;  // -1 when absent
  const VarBlock& block(const std::string& name) const;

  // dimension/cone sanity; throws ModelError
  void validate() const;

  // objective value of a candidate point (in the program's own sense)
  double objective_value(const Vector& u) const { return objective.dot(u); }

  // worst violation across rows, bounds and cones
  double feasibility_violation(const Vector& u) const;
};

// Appends a block and returns its offset.
int add_block(ConicProgram& p, const std::string& name, int size, ConeKind cone,
              bool integral = false, double lower = -kInf, double upper = kInf);

}  // namespace dpro
