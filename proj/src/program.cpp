#include "dpro/program.hpp"

#include <cmath>

#include "dpro/errors.hpp"

namespace dpro {

bool ConicProgram::has_integers() const {
  for (char c : is_integer) {
    if (c) return true;
  }
  return false;
}

int ConicProgram::block_index(const std::string& name) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

const VarBlock& ConicProgram::block(const std::string& name) const {
  const int i = block_index(name);
  if (i < 0) throw ModelError("program has no block named '" + name + "'");
  return blocks[i];
}

void ConicProgram::validate() const {
  const int n = var_count();
  if (static_cast<int>(is_integer.size()) != n || lower.size() != n || upper.size() != n ||
      static_cast<int>(var_names.size()) != n) {
    throw ModelError("program metadata sizes disagree with the variable count");
  }
  if (eq_lhs.rows() != eq_rhs.size() || (eq_lhs.rows() > 0 && eq_lhs.cols() != n) ||
      in_lhs.rows() != in_rhs.size() || (in_lhs.rows() > 0 && in_lhs.cols() != n)) {
    throw ModelError("program rows have inconsistent dimensions");
  }
  int covered = 0;
  for (const auto& b : blocks) {
    if (b.offset != covered || b.size <= 0) throw ModelError("variable blocks must tile the vector");
    if (b.cone == ConeKind::SecondOrder && b.size < 2) {
      throw ModelError("second-order block '" + b.name + "' needs arity >= 2");
    }
    covered += b.size;
  }
  if (covered != n) throw ModelError("variable blocks do not cover all variables");
  for (const auto& b : blocks) {
    if (b.cone == ConeKind::SecondOrder) {
      for (int j = b.offset; j < b.offset + b.size; ++j) {
        if (is_integer[j]) throw ModelError("integrality inside a second-order block");
      }
    }
  }
}

double ConicProgram::feasibility_violation(const Vector& u) const {
  double worst = 0.0;
  if (eq_lhs.rows() > 0) worst = std::max(worst, (eq_lhs * u - eq_rhs).cwiseAbs().maxCoeff());
  if (in_lhs.rows() > 0) worst = std::max(worst, (in_lhs * u - in_rhs).maxCoeff());
  for (int j = 0; j < var_count(); ++j) {
    if (std::isfinite(lower[j])) worst = std::max(worst, lower[j] - u[j]);
    if (std::isfinite(upper[j])) worst = std::max(worst, u[j] - upper[j]);
  }
  for (const auto& b : blocks) {
    if (b.cone == ConeKind::NonNegative) {
      worst = std::max(worst, -u.segment(b.offset, b.size).minCoeff());
    } else if (b.cone == ConeKind::SecondOrder) {
      worst = std::max(worst, u.segment(b.offset + 1, b.size - 1).norm() - u[b.offset]);
    }
  }
  return worst;
}

int add_block(ConicProgram& p, const std::string& name, int size, ConeKind cone, bool integral,
              double lower, double upper) {
  const int off = p.var_count();
  VarBlock b;
  b.name = name;
  b.offset = off;
  b.size = size;
  b.cone = cone;
  p.blocks.push_back(b);
  p.objective.conservativeResize(off + size);
  p.objective.tail(size).setZero();
  p.lower.conservativeResize(off + size);
  p.upper.conservativeResize(off + size);
  const double lo = cone == ConeKind::NonNegative ? std::max(lower, 0.0) : lower;
  p.lower.tail(size).setConstant(lo);
  p.upper.tail(size).setConstant(upper);
  for (int i = 0; i < size; ++i) {
    p.is_integer.push_back(integral ? 1 : 0);
    p.var_names.push_back(size == 1 ? name : name + "[" + std::to_string(i + 1) + "]");
  }
  return off;
}

}  // namespace dpro
