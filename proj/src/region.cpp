#include "dpro/region.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dpro {

FeasibleRegion FeasibleRegion::polyhedron(Polyhedron p) {
  FeasibleRegion r;
  r.body_ = std::move(p);
  return r;
}

FeasibleRegion FeasibleRegion::action_mapped(ActionMap m) {
  FeasibleRegion r;
  r.body_ = std::move(m);
  return r;
}

FeasibleRegion FeasibleRegion::simplex(int attributes) {
  Polyhedron p;
  p.in_lhs = Matrix::Zero(0, attributes);
  p.in_rhs = Vector::Zero(0);
  p.eq_lhs = Matrix::Ones(1, attributes);
  p.eq_rhs = Vector::Ones(1);
  return polyhedron(std::move(p));
}

FeasibleRegion FeasibleRegion::box() {
  Polyhedron p;  // box rows come from the grid when the program is built
  return polyhedron(std::move(p));
}

std::vector<std::string> FeasibleRegion::validate(const AttributeGrid& grid) const {
  std::vector<std::string> warnings;
  const int kM = grid.attribute_count();
  if (!is_action_mapped()) {
    const auto& p = as_polyhedron();
    if (p.in_lhs.rows() != p.in_rhs.size() || p.eq_lhs.rows() != p.eq_rhs.size()) {
      throw ModelError("region constraint rows and right-hand sides disagree");
    }
    if ((p.in_lhs.rows() > 0 && p.in_lhs.cols() != kM) ||
        (p.eq_lhs.rows() > 0 && p.eq_lhs.cols() != kM)) {
      throw ModelError("region constraints have wrong attribute dimension");
    }
    return warnings;
  }

  const auto& a = as_action_map();
  if (a.copies < 1) throw ModelError("action map needs at least one replica");
  const int xdim = kM * a.copies;
  if (a.base.size() != xdim) throw ModelError("action map base has wrong dimension");
  const int na = static_cast<int>(a.actions.size());
  if (a.effect.rows() != xdim || a.effect.cols() != na) {
    throw ModelError("action map effect matrix has wrong shape");
  }
  if (a.in_lhs.rows() != a.in_rhs.size() || (a.in_lhs.rows() > 0 && a.in_lhs.cols() != na) ||
      a.eq_lhs.rows() != a.eq_rhs.size() || (a.eq_lhs.rows() > 0 && a.eq_lhs.cols() != na)) {
    throw ModelError("action constraint rows have wrong shape");
  }
  for (const auto& v : a.actions) {
    if (v.kind != ActionKind::Continuous &&
        (!std::isfinite(v.lower) || !std::isfinite(v.upper))) {
      throw ModelError("discrete action variable '" + v.name + "' needs finite bounds");
    }
    if (v.lower > v.upper) throw ModelError("action variable '" + v.name + "' has empty bounds");
  }

  // Interval arithmetic on x = base + effect * a: the reachable interval of
  // every coordinate must intersect the grid box; coordinates that can leave
  // the box are only warned about (the segment encoding cuts them off).
  for (int r = 0; r < xdim; ++r) {
    double lo = a.base[r];
    double hi = a.base[r];
    for (int j = 0; j < na; ++j) {
      const double c = a.effect(r, j);
      if (c >= 0) {
        lo += c * a.actions[j].lower;
        hi += c * a.actions[j].upper;
      } else {
        lo += c * a.actions[j].upper;
        hi += c * a.actions[j].lower;
      }
    }
    const int m = r % kM;
    if (hi < grid.lower(m) || lo > grid.upper(m)) {
      std::ostringstream os;
      os << "attribute " << (m + 1) << " replica " << (r / kM + 1) << " reachable interval ["
         << lo << ", " << hi << "] misses the grid box";
      throw ModelError(os.str());
    }
    if (lo < grid.lower(m) || hi > grid.upper(m)) {
      std::ostringstream os;
      os << "attribute " << (m + 1) << " replica " << (r / kM + 1)
         << " can leave the grid box; such actions are infeasible";
      warnings.push_back(os.str());
    }
  }
  return warnings;
}

}  // namespace dpro
