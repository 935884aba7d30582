#include "dpro/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dpro {

AttributeGrid::AttributeGrid(std::vector<std::vector<double>> breakpoints)
    : points_(std::move(breakpoints)) {
  if (points_.empty()) throw ModelError("grid needs at least one attribute");
  offsets_.reserve(points_.size());
  for (std::size_t m = 0; m < points_.size(); ++m) {
    const auto& t = points_[m];
    if (t.size() < 2) {
      throw ModelError("attribute " + std::to_string(m + 1) + " needs at least one segment");
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!(t[i] > t[i - 1])) {
        throw ModelError("breakpoints of attribute " + std::to_string(m + 1) +
                         " must be strictly increasing");
      }
    }
    offsets_.push_back(total_);
    total_ += static_cast<int>(t.size()) - 1;
  }
  if (total_ < 2) {
    throw ModelError("grid needs at least two segments in total");
  }
}

int AttributeGrid::segment_index(int m, double x) const {
  const auto& t = points_[m];
  if (x < t.front() || x > t.back()) {
    throw DomainError("value " + std::to_string(x) + " outside attribute range");
  }
  // first breakpoint >= x; the left endpoint falls through to segment 1
  auto it = std::lower_bound(t.begin() + 1, t.end(), x);
  int i = static_cast<int>(it - t.begin());
  return std::max(i, 1);
}

bool AttributeGrid::contains(const Vector& x, double tol) const {
  if (x.size() != attribute_count()) return false;
  for (int m = 0; m < attribute_count(); ++m) {
    if (x[m] < lower(m) - tol || x[m] > upper(m) + tol) return false;
  }
  return true;
}

void AttributeGrid::require_in_domain(const Vector& x) const {
  if (x.size() != attribute_count()) {
    throw DomainError("attribute vector has wrong dimension");
  }
  for (int m = 0; m < attribute_count(); ++m) {
    if (x[m] < lower(m) || x[m] > upper(m)) {
      std::ostringstream os;
      os << "attribute " << (m + 1) << " value " << x[m] << " outside [" << lower(m) << ", "
         << upper(m) << "]";
      throw DomainError(os.str());
    }
  }
}

double AttributeGrid::max_segment_width() const {
  double w = 0.0;
  for (int m = 0; m < attribute_count(); ++m) {
    for (int i = 1; i <= segment_count(m); ++i) w = std::max(w, segment_width(m, i));
  }
  return w;
}

Vector feature_map(const AttributeGrid& grid, const Vector& x) {
  grid.require_in_domain(x);
  Vector f = Vector::Zero(grid.total_segments());
  for (int m = 0; m < grid.attribute_count(); ++m) {
    const int off = grid.block_offset(m);
    if (x[m] == grid.lower(m)) continue;  // all indicators are off at the left endpoint
    const int i = grid.segment_index(m, x[m]);
    for (int j = 1; j < i; ++j) f[off + j - 1] = 1.0;
    // mirror the segment-encoding arithmetic (1/w)*x - t/w so the linear
    // representation through the block matrices reproduces f(x) bit-exactly
    const double w = grid.segment_width(m, i);
    f[off + i - 1] = (1.0 / w) * x[m] + (-grid.breakpoint(m, i - 1) / w);
  }
  return f;
}

double eval_marginal(const AttributeGrid& grid, int m, const Eigen::Ref<const Vector>& v_m,
                     double x_m) {
  if (x_m == grid.lower(m)) return 0.0;
  const int i = grid.segment_index(m, x_m);
  double u = 0.0;
  for (int j = 1; j < i; ++j) u += v_m[j - 1];
  u += v_m[i - 1] * (x_m - grid.breakpoint(m, i - 1)) / grid.segment_width(m, i);
  return u;
}

double eval_utility(const AttributeGrid& grid, const Vector& v, const Vector& x) {
  grid.require_in_domain(x);
  require_increment_vector(v);
  if (v.size() != grid.total_segments()) {
    throw InvariantError("increment vector has wrong dimension for this grid");
  }
  double total = 0.0;
  for (int m = 0; m < grid.attribute_count(); ++m) {
    total += eval_marginal(grid, m, v.segment(grid.block_offset(m), grid.segment_count(m)), x[m]);
  }
  return total;
}

SegmentSelection encode_segment_selection(const AttributeGrid& grid, const Vector& x) {
  grid.require_in_domain(x);
  SegmentSelection sel;
  sel.y = Vector::Zero(grid.total_segments());
  sel.z = Vector::Zero(grid.total_segments());
  for (int m = 0; m < grid.attribute_count(); ++m) {
    const int i = grid.segment_index(m, x[m]);
    const int k = grid.block_offset(m) + i - 1;
    sel.z[k] = 1.0;
    sel.y[k] = x[m];
  }
  return sel;
}

bool is_valid_increment_vector(const Vector& v, std::string* why) {
  if (v.size() == 0) {
    if (why) *why = "empty increment vector";
    return false;
  }
  if (v.minCoeff() < -kNonnegTol) {
    if (why) *why = "negative increment " + std::to_string(v.minCoeff());
    return false;
  }
  const double s = v.sum();
  if (std::abs(s - 1.0) > kSimplexSumTol) {
    if (why) *why = "increments sum to " + std::to_string(s) + ", expected 1";
    return false;
  }
  return true;
}

void require_increment_vector(const Vector& v) {
  std::string why;
  if (!is_valid_increment_vector(v, &why)) throw InvariantError("invalid increment vector: " + why);
}

bool satisfies_concavity(const AttributeGrid& grid, const Vector& v, double tol) {
  for (int m = 0; m < grid.attribute_count(); ++m) {
    const int off = grid.block_offset(m);
    for (int i = 1; i < grid.segment_count(m); ++i) {
      const double slope_lo = v[off + i - 1] / grid.segment_width(m, i);
      const double slope_hi = v[off + i] / grid.segment_width(m, i + 1);
      if (slope_lo < slope_hi - tol) return false;
    }
  }
  return true;
}

}  // namespace dpro
