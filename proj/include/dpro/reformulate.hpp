#pragma once

#include <variant>

#include "dpro/ambiguity.hpp"
#include "dpro/block_matrices.hpp"
#include "dpro/bnb.hpp"
#include "dpro/region.hpp"

namespace dpro {

using AmbiguitySet = std::variant<EllipsoidSet, BootstrapRegion>;

// A reformulated maximin program together with the metadata needed to decode
// solver output back into model quantities.
struct BuiltProgram {
  enum class Kind { EllipsoidGeneral, BootstrapGeneral, EllipsoidConcave, BootstrapConcave,
                    CutMaster, SampleAverage };
  Kind kind = Kind::EllipsoidGeneral;
  ConicProgram program;
  AttributeGrid grid;
  FeasibleRegion region;
  int copies = 1;

  explicit BuiltProgram(AttributeGrid g, FeasibleRegion r)
      : grid(std::move(g)), region(std::move(r)) {}

  // average feature vector over replicas at the decoded attribute values
  Vector average_feature(const Vector& x_all) const;
};

// Maximin with the ellipsoidal first-moment set over the full simplex
// support: a mixed-integer second-order cone program.
BuiltProgram build_misocp_general(const AttributeGrid& grid, const EllipsoidSet& set,
                                  const FeasibleRegion& region);

// Maximin with the bootstrap hull set over the full simplex support: a pure
// mixed-integer linear program.
BuiltProgram build_milp_bootstrap(const AttributeGrid& grid, const BootstrapRegion& set,
                                  const FeasibleRegion& region);

// Concave (risk-averse) support: continuous second-order cone program for
// polyhedral regions, mixed-integer only through discrete actions.
BuiltProgram build_socp_concave(const AttributeGrid& grid, const EllipsoidSet& set,
                                const FeasibleRegion& region);

// Concave support with the bootstrap hull: a linear program (mixed-integer
// for discrete actions).
BuiltProgram build_lp_concave_bootstrap(const AttributeGrid& grid, const BootstrapRegion& set,
                                        const FeasibleRegion& region);

// Inner worst-case problem at a fixed feature vector.
struct InnerProblem {
  Vector feature;
  MeanSetConstraints constraints;
  ConicProgram program;
  int v_offset = 0;
  int w_offset = -1;  // hull weights, -1 for the ellipsoid
};

InnerProblem build_inner(const Vector& feature, const MeanSetConstraints& constraints);
InnerProblem build_inner(const Vector& feature, const AmbiguitySet& ambiguity,
                         const AttributeGrid& grid);

struct InnerSolution {
  double value = 0.0;
  Vector worst;    // v*
  Vector weights;  // hull weights when present
};

InnerSolution solve_inner(const InnerProblem& inner, const SolveOptions& opts = {});

// Solve a built program (mixed or continuous as needed) and decode the model
// quantities: attribute values, segment selection, the dual blocks, and the
// worst-case increments recovered through the inner problem.
Solution solve_built(const BuiltProgram& built, const AmbiguitySet& ambiguity,
                     const SolveOptions& opts = {},
                     const std::optional<Vector>& incumbent_hint = std::nullopt);

// Fill the decoded fields of `s` from the raw variable vector.
void decode_solution(const BuiltProgram& built, Solution& s);

}  // namespace dpro
