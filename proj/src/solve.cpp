#include "dpro/solve.hpp"

#include "dpro/errors.hpp"

namespace dpro {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::GapLimit: return "gap-limit";
    case SolveStatus::NodeLimit: return "node-limit";
    case SolveStatus::TimeLimit: return "time-limit";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::Failed: return "failed";
  }
  return "unknown";
}

void SolveOptions::validate() const {
  if (!(tolerance > 0) || !(integer_tolerance > 0) || !(cut_gap > 0)) {
    throw ParameterError("solver tolerances must be positive");
  }
  if (max_iterations < 1 || node_limit < 1 || cut_iteration_limit < 1) {
    throw ParameterError("solver limits must be positive");
  }
}

Vector Solution::block_values(const ConicProgram& p, const std::string& name) const {
  const VarBlock& b = p.block(name);
  return variables.segment(b.offset, b.size);
}

}  // namespace dpro
