#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dpro/grid.hpp"

namespace dpro {

// Feasible attribute values described directly by linear constraints on x,
// always intersected with the grid box.
struct Polyhedron {
  Matrix in_lhs;  // rows: in_lhs * x <= in_rhs (may be 0 x M)
  Vector in_rhs;
  Matrix eq_lhs;  // rows: eq_lhs * x == eq_rhs (may be 0 x M)
  Vector eq_rhs;
};

enum class ActionKind { Binary, Integer, Continuous };

struct ActionVariable {
  std::string name;
  ActionKind kind = ActionKind::Continuous;
  double lower = 0.0;
  double upper = 0.0;
};

// Attribute values reached through an affine map x = base + effect * a over
// action variables a. `copies` replicates the attribute vector (one block of
// M coordinates per replica); the objective averages utility over replicas.
struct ActionMap {
  int copies = 1;
  Vector base;    // (M * copies)
  Matrix effect;  // (M * copies) x (#actions)
  std::vector<ActionVariable> actions;
  Matrix in_lhs;  // constraint rows on actions: in_lhs * a <= in_rhs
  Vector in_rhs;
  Matrix eq_lhs;
  Vector eq_rhs;
};

class FeasibleRegion {
 public:
  static FeasibleRegion polyhedron(Polyhedron p);
  static FeasibleRegion action_mapped(ActionMap m);
  // x on the unit simplex (e'x = 1, x >= 0 via the grid box).
  static FeasibleRegion simplex(int attributes);
  // the full grid box
  static FeasibleRegion box();

  bool is_action_mapped() const { return std::holds_alternative<ActionMap>(body_); }
  const Polyhedron& as_polyhedron() const { return std::get<Polyhedron>(body_); }
  const ActionMap& as_action_map() const { return std::get<ActionMap>(body_); }

  int copies() const { return is_action_mapped() ? as_action_map().copies : 1; }

  // Checks shape consistency against the grid and, by interval arithmetic on
  // the affine map, that every attribute can reach inside the grid box.
  // Returns warnings for attributes whose reachable interval is not fully
  // contained in the box (such action values are cut off by the segment
  // encoding rather than rejected up front).
  std::vector<std::string> validate(const AttributeGrid& grid) const;

 private:
  std::variant<Polyhedron, ActionMap> body_;
};

}  // namespace dpro
