#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dpro/errors.hpp"

namespace dpro {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Support set of the increment vector: the full simplex, or the subset whose
// marginal utilities are concave (nonincreasing segment slopes).
enum class SupportKind { Monotone, Concave };

// Tolerances used when validating increment vectors that typically arrive
// from solvers or regressions with roundoff.
inline constexpr double kSimplexSumTol = 1e-9;
inline constexpr double kNonnegTol = 1e-12;

// Per-attribute breakpoint sequences defining a family of additive piecewise
// linear utility functions. For attribute m the marginal utility is linear on
// each segment (t_{m,i-1}, t_{m,i}] and the family member is determined by
// the vector of per-segment increments.
class AttributeGrid {
 public:
  // breakpoints[m] = t_{m,0} < t_{m,1} < ... < t_{m,I_m}; every attribute
  // needs at least one segment and the total segment count must be >= 2.
  explicit AttributeGrid(std::vector<std::vector<double>> breakpoints);

  int attribute_count() const { return static_cast<int>(points_.size()); }
  int segment_count(int m) const { return static_cast<int>(points_[m].size()) - 1; }
  int total_segments() const { return total_; }
  // Offset of attribute m's block inside a flattened increment vector.
  int block_offset(int m) const { return offsets_[m]; }

  double breakpoint(int m, int i) const { return points_[m][i]; }
  double lower(int m) const { return points_[m].front(); }
  double upper(int m) const { return points_[m].back(); }
  double segment_width(int m, int i) const { return points_[m][i] - points_[m][i - 1]; }
  const std::vector<double>& breakpoints(int m) const { return points_[m]; }

  // Active segment for x in [a_m, b_m] under the half-open convention
  // (t_{i-1}, t_i]; the left endpoint a_m maps to segment 1.
  int segment_index(int m, double x) const;

  bool contains(const Vector& x, double tol = 0.0) const;
  void require_in_domain(const Vector& x) const;

  // Largest segment width across all attributes.
  double max_segment_width() const;

  bool operator==(const AttributeGrid& other) const { return points_ == other.points_; }

 private:
  std::vector<std::vector<double>> points_;
  std::vector<int> offsets_;
  int total_ = 0;
};

// f(x) with u(x; v) = v'f(x): within each attribute block the entries are
// 1 for segments fully below x, the interpolation weight on the active
// segment, and 0 above it.
Vector feature_map(const AttributeGrid& grid, const Vector& x);

// Direct evaluation of the additive piecewise linear utility.
double eval_utility(const AttributeGrid& grid, const Vector& v, const Vector& x);

// Marginal utility of a single attribute at a point, given that attribute's
// increment block.
double eval_marginal(const AttributeGrid& grid, int m, const Eigen::Ref<const Vector>& v_m,
                     double x_m);

struct SegmentSelection {
  Vector y;  // x_m placed at the active coordinate of each block, 0 elsewhere
  Vector z;  // one-hot active-segment indicators
};

// Exact encoding with seg_scale * y + seg_offset * z == feature_map(x).
SegmentSelection encode_segment_selection(const AttributeGrid& grid, const Vector& x);

// Simplex membership check for an increment vector.
bool is_valid_increment_vector(const Vector& v, std::string* why = nullptr);
void require_increment_vector(const Vector& v);

// Concavity: nonincreasing segment slopes per attribute.
bool satisfies_concavity(const AttributeGrid& grid, const Vector& v, double tol = 1e-9);

}  // namespace dpro
