#pragma once

#include <cstdint>
#include <string>

#include "dpro/moments.hpp"

namespace dpro {

// Radius-squared calibration for the ellipsoidal ambiguity set at confidence
// 1 - alpha. The spectral norm is taken from the sample covariance because
// the true covariance is unknown in data-driven use; `sample_proxy` records
// that substitution.
struct GammaCalibration {
  double gamma = 0.0;
  double spectral_norm = 0.0;  // ||reduced covariance^{-1/2}||
  bool sample_proxy = true;
};

GammaCalibration gamma_from_confidence(double alpha, int sample_size, const Moments& moments);

// First-moment ellipsoid: whitened reduced means within radius sqrt(gamma)
// of the sample reduced mean.
struct EllipsoidSet {
  Vector center;        // reduced sample mean
  Matrix whitener;      // inverse symmetric root of the reduced covariance
  double gamma = 0.0;   // squared radius
  SupportKind support = SupportKind::Monotone;
  Moments moments;
};

EllipsoidSet build_ellipsoid(const Moments& moments, double gamma,
                             SupportKind support = SupportKind::Monotone);

// Depth-trimmed convex hull of studentized resample statistics.
struct BootstrapRegion {
  Matrix retained;      // (I-1) x ceil((1-alpha)K) deepest statistics, depth-ordered
  int sample_size = 0;  // N
  int resamples = 0;    // K
  double alpha = 0.0;
  SupportKind support = SupportKind::Monotone;
  Moments moments;
  std::uint64_t seed = 0;
  int depth_directions = 0;

  int retained_count() const { return static_cast<int>(retained.cols()); }
};

// Tukey depth of `query` against the rows of `points`, self-inclusive.
// Exact in dimension 1 (tail masses) and 2 (angular sweep); in higher
// dimension a random-projection upper approximation with `directions`
// sampled unit vectors.
double tukey_depth(const Matrix& points, const Vector& query, int directions,
                   std::uint64_t seed);

// Depth of every row of `points` against the full set, sharing one direction
// pool; same convention as tukey_depth.
Vector tukey_depth_all(const Matrix& points, int directions, std::uint64_t seed);

BootstrapRegion bootstrap_region(const SampleSet& samples, int resamples, double alpha,
                                 std::uint64_t seed, int depth_directions = 1000,
                                 SupportKind support = SupportKind::Monotone);

void save_bootstrap_region(const BootstrapRegion& region, const std::string& stem);
BootstrapRegion load_bootstrap_region(const std::string& stem);

// Linear/conic description of the feasible reduced-mean set, ready for the
// program builders: v on the simplex (plus optional concavity rows), and
// either one ball constraint on the whitened reduced coordinates or hull
// weights w coupled to v by equality rows.
struct MeanSetConstraints {
  int increment_dim = 0;    // I
  int hull_weight_dim = 0;  // number of hull weights (0 for the ellipsoid)
  SupportKind support = SupportKind::Monotone;

  // ellipsoid: || ball_lin * v + ball_offset || <= ball_radius
  bool has_ball = false;
  Matrix ball_lin;
  Vector ball_offset;
  double ball_radius = 0.0;

  // hull: couple_v * v + couple_w * w == couple_rhs, w >= 0, e'w = 1
  Matrix couple_v;
  Matrix couple_w;
  Vector couple_rhs;

  // concave support rows (slope_rows * v >= 0); empty for the full simplex
  Matrix slope_rows;
};

MeanSetConstraints feasible_mean_set(const EllipsoidSet& set, const AttributeGrid& grid);
MeanSetConstraints feasible_mean_set(const BootstrapRegion& region, const AttributeGrid& grid);

}  // namespace dpro
