#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpro/program.hpp"

namespace dpro {

enum class SolveStatus { Optimal, GapLimit, NodeLimit, TimeLimit, Infeasible, Unbounded, Failed };

std::string to_string(SolveStatus status);

struct SolveOptions {
  double tolerance = 1e-8;        // feasibility/optimality (relative)
  double integer_tolerance = 1e-6;
  double cut_gap = 1e-6;          // cutting-surface termination gap
  int max_iterations = 100;       // interior-point iterations per solve
  long node_limit = 200000;
  double time_limit_seconds = 0.0;  // 0 = unlimited
  int cut_iteration_limit = 200;
  int verbosity = 0;

  void validate() const;
};

struct CutTrace {
  double master_bound;  // t*
  double inner_value;   // theta*
};

struct Solution {
  SolveStatus status = SolveStatus::Failed;
  double objective = 0.0;
  Vector variables;       // full variable vector of the program
  Vector eq_duals;        // one per equality row
  Vector in_duals;        // one per inequality row (sign: >= 0)
  int iterations = 0;
  long nodes = 0;
  double gap = 0.0;       // remaining optimality gap (mixed solves)
  double wall_seconds = 0.0;

  // primal or dual infeasibility certificate when status says so
  std::optional<Vector> certificate;

  // decoded model quantities, filled by the reformulation layer
  std::optional<Vector> attribute_values;     // x*, one block per replica
  std::optional<Vector> segment_values;       // y
  std::optional<Vector> segment_indicators;   // z
  std::optional<Vector> worst_increments;     // v* from the inner problem
  std::map<std::string, Vector> named;        // remaining dual/auxiliary blocks

  std::vector<CutTrace> cut_trace;  // cutting-surface bound history

  bool ok() const { return status == SolveStatus::Optimal; }
  Vector block_values(const ConicProgram& p, const std::string& name) const;
};

}  // namespace dpro
