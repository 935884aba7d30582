#include "dpro/moments.hpp"

#include "dpro/errors.hpp"

namespace dpro {

Moments moments_from_mean_cov(const Vector& mean, const Matrix& cov, int sample_size) {
  const int dim = static_cast<int>(mean.size());
  if (dim < 2) throw InvariantError("moments need dimension >= 2");
  Moments m;
  m.sample_size = sample_size;
  m.mean = mean;
  m.covariance = 0.5 * (cov + cov.transpose());
  m.reduced_mean = mean.head(dim - 1);
  Matrix reduced = m.covariance.topLeftCorner(dim - 1, dim - 1);
  const double scale = std::max(reduced.trace() / (dim - 1), 1e-300);
  SymmetricRoot root = symmetric_root(reduced, 1e-10 * scale, 1e-6 * scale);
  m.reduced_cov = reduced + root.ridge * Matrix::Identity(dim - 1, dim - 1);
  m.root = root.root;
  m.inv_root = root.inverse;
  m.ridge = root.ridge;
  return m;
}

Moments compute_moments(const SampleSet& samples) {
  if (samples.size() < 2) throw InvariantError("need at least two samples for moments");
  const Vector mean = samples.mean();
  Matrix centered = samples.rows().rowwise() - mean.transpose();
  Matrix cov = centered.transpose() * centered / (samples.size() - 1);
  return moments_from_mean_cov(mean, cov, samples.size());
}

}  // namespace dpro
