#pragma once

#include "dpro/linalg.hpp"
#include "dpro/sample_set.hpp"

namespace dpro {

// First and second sample moments plus the reduced (drop-last-coordinate)
// factorizations used throughout the ambiguity constructions. The reduction
// removes the linear dependence e'V = 1.
struct Moments {
  int sample_size = 0;
  Vector mean;             // I
  Matrix covariance;       // I x I, unbiased (divisor N-1)
  Vector reduced_mean;     // first I-1 coordinates of the mean
  Matrix reduced_cov;      // effective reduced covariance (after any ridge)
  Matrix root;             // symmetric R with R'R = reduced_cov
  Matrix inv_root;         // R^{-1}
  double ridge = 0.0;      // diagonal ridge applied to the reduced covariance

  int reduced_dim() const { return static_cast<int>(reduced_mean.size()); }
};

// Throws DegeneracyError when the reduced covariance stays singular past the
// ridge budget; the fix is to drop linearly dependent coordinates.
Moments compute_moments(const SampleSet& samples);

// Moments assembled from an externally supplied mean and covariance (used by
// fixtures that pin the sample mean exactly).
Moments moments_from_mean_cov(const Vector& mean, const Matrix& cov, int sample_size);

}  // namespace dpro
