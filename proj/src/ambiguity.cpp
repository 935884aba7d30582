#include "dpro/ambiguity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <vector>

#include "dpro/block_matrices.hpp"
#include "dpro/errors.hpp"

namespace dpro {

GammaCalibration gamma_from_confidence(double alpha, int sample_size, const Moments& moments) {
  const double upper = std::exp(-2.0) * (2.0 - std::exp(-2.0));
  if (!(alpha > 0.0 && alpha < upper)) {
    std::ostringstream os;
    os << "confidence parameter must lie in (0, " << upper << "), got " << alpha;
    throw ParameterError(os.str());
  }
  if (sample_size < 1) throw ParameterError("sample size must be positive");
  GammaCalibration out;
  Eigen::JacobiSVD<Matrix> svd(moments.inv_root);
  out.spectral_norm = svd.singularValues()(0);
  const double log_term = std::log(1.0 / (1.0 - std::sqrt(1.0 - alpha)));
  out.gamma = 32.0 * out.spectral_norm * out.spectral_norm * std::exp(2.0) * log_term * log_term /
              sample_size;
  out.sample_proxy = true;
  return out;
}

EllipsoidSet build_ellipsoid(const Moments& moments, double gamma, SupportKind support) {
  if (!(gamma > 0.0)) {
    throw ParameterError(
        "ellipsoid radius must be positive; for gamma = 0 use the sample-average path");
  }
  EllipsoidSet set;
  set.center = moments.reduced_mean;
  set.whitener = moments.inv_root;
  set.gamma = gamma;
  set.support = support;
  set.moments = moments;
  // the sample mean itself witnesses a nonempty feasible-mean set
  Vector full = Vector::Zero(moments.mean.size());
  full.head(moments.reduced_dim()) = moments.reduced_mean;
  full[moments.mean.size() - 1] = 1.0 - moments.reduced_mean.sum();
  std::string why;
  if (!is_valid_increment_vector(moments.mean, &why)) {
    throw InvariantError("sample mean is not a valid increment vector: " + why);
  }
  return set;
}

namespace {

double depth_1d(const std::vector<double>& sorted, double q) {
  const auto lo = std::lower_bound(sorted.begin(), sorted.end(), q);
  const auto hi = std::upper_bound(sorted.begin(), sorted.end(), q);
  const double n = static_cast<double>(sorted.size());
  const double mass_le = static_cast<double>(hi - sorted.begin()) / n;
  const double mass_ge = static_cast<double>(sorted.end() - lo) / n;
  return std::min(mass_le, mass_ge);
}

// Exact planar depth: sweep closed halfplanes whose boundary passes through
// the query and one data point.
double depth_2d(const Matrix& points, const Vector& query) {
  const int n = static_cast<int>(points.rows());
  std::vector<double> angles;
  angles.reserve(n);
  int coincident = 0;
  for (int i = 0; i < n; ++i) {
    const double dx = points(i, 0) - query[0];
    const double dy = points(i, 1) - query[1];
    if (dx == 0.0 && dy == 0.0) {
      ++coincident;
    } else {
      angles.push_back(std::atan2(dy, dx));
    }
  }
  if (angles.empty()) return 1.0;
  std::sort(angles.begin(), angles.end());
  const int m = static_cast<int>(angles.size());
  // count of angles in the closed arc [a, a+pi] (mod 2pi)
  auto arc_count = [&](double a) {
    double b = a + M_PI;
    auto count_in = [&](double lo, double hi) {
      auto l = std::lower_bound(angles.begin(), angles.end(), lo);
      auto h = std::upper_bound(angles.begin(), angles.end(), hi);
      return static_cast<int>(h - l);
    };
    if (b <= M_PI) return count_in(a, b);
    return count_in(a, M_PI) + count_in(-M_PI, b - 2.0 * M_PI);
  };
  int best = m;
  for (int i = 0; i < m; ++i) {
    best = std::min(best, arc_count(angles[i]));
    double opposite = angles[i] - M_PI;
    if (opposite < -M_PI) opposite += 2.0 * M_PI;
    best = std::min(best, arc_count(opposite));
  }
  return static_cast<double>(best + coincident) / static_cast<double>(n);
}

}  // namespace

double tukey_depth(const Matrix& points, const Vector& query, int directions,
                   std::uint64_t seed) {
  if (points.rows() == 0) throw InvariantError("depth of an empty point set");
  const int dim = static_cast<int>(points.cols());
  const double n = static_cast<double>(points.rows());
  if (dim == 1) {
    std::vector<double> sorted(points.data(), points.data() + points.rows());
    std::sort(sorted.begin(), sorted.end());
    return depth_1d(sorted, query[0]);
  }
  if (dim == 2) return depth_2d(points, query);
  Rng rng = Rng::substream(seed, 0x7d5u);
  double best = 1.0;
  for (int k = 0; k < directions; ++k) {
    const Vector u = rng.unit_direction(dim);
    const double q = u.dot(query);
    int ge = 0;
    int le = 0;
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      const double p = points.row(i).dot(u);
      if (p >= q) ++ge;
      if (p <= q) ++le;
    }
    best = std::min({best, ge / n, le / n});
  }
  return best;
}

Vector tukey_depth_all(const Matrix& points, int directions, std::uint64_t seed) {
  const int n = static_cast<int>(points.rows());
  const int dim = static_cast<int>(points.cols());
  Vector depth(n);
  if (dim <= 2) {
    std::vector<double> sorted;
    if (dim == 1) {
      sorted.assign(points.data(), points.data() + n);
      std::sort(sorted.begin(), sorted.end());
    }
    for (int i = 0; i < n; ++i) {
      depth[i] = dim == 1 ? depth_1d(sorted, points(i, 0))
                          : depth_2d(points, points.row(i).transpose());
    }
    return depth;
  }
  depth.setConstant(1.0);
  Rng rng = Rng::substream(seed, 0x7d5u);
  std::vector<double> proj(n);
  std::vector<double> sorted(n);
  for (int k = 0; k < directions; ++k) {
    const Vector u = rng.unit_direction(dim);
    for (int i = 0; i < n; ++i) proj[i] = points.row(i).dot(u);
    sorted = proj;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
      const auto lo = std::lower_bound(sorted.begin(), sorted.end(), proj[i]);
      const auto hi = std::upper_bound(sorted.begin(), sorted.end(), proj[i]);
      const double le = static_cast<double>(hi - sorted.begin()) / n;
      const double ge = static_cast<double>(sorted.end() - lo) / n;
      depth[i] = std::min({depth[i], le, ge});
    }
  }
  return depth;
}

BootstrapRegion bootstrap_region(const SampleSet& samples, int resamples, double alpha,
                                 std::uint64_t seed, int depth_directions, SupportKind support) {
  if (resamples < 10) throw ParameterError("need at least 10 bootstrap resamples");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  const int n = samples.size();
  const int dim = samples.dimension();
  if (n < dim) {
    throw ParameterError("bootstrap needs sample size >= dimension for nonsingular resamples");
  }
  Moments moments = compute_moments(samples);
  const int rdim = dim - 1;
  const Matrix reduced = samples.rows().leftCols(rdim);
  const double sqrt_n = std::sqrt(static_cast<double>(n));

  Matrix stats(resamples, rdim);
  long redraw_budget = 10L * resamples;
  for (int k = 0; k < resamples; ++k) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(k) * 131071ULL + attempt);
      Matrix draw(n, rdim);
      for (int i = 0; i < n; ++i) draw.row(i) = reduced.row(rng.uniform_int(n));
      const Vector mean_k = draw.colwise().mean().transpose();
      Matrix centered = draw.rowwise() - mean_k.transpose();
      Matrix cov_k = centered.transpose() * centered / (n - 1);
      const double ridge = 1e-8 * std::max(cov_k.trace(), 1e-30) / rdim;
      try {
        SymmetricRoot root = symmetric_root(cov_k, ridge, ridge);
        stats.row(k) =
            (sqrt_n * (root.inverse * (mean_k - moments.reduced_mean))).transpose();
        break;
      } catch (const DegeneracyError&) {
        if (--redraw_budget <= 0) {
          throw DegeneracyError("bootstrap resample covariances stay singular; sample too small");
        }
      }
    }
  }

  const Vector depth = tukey_depth_all(stats, depth_directions, seed);
  std::vector<int> order(resamples);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return depth[a] > depth[b]; });
  int keep = static_cast<int>(std::ceil((1.0 - alpha) * resamples));
  keep = std::clamp(keep, 1, resamples);

  BootstrapRegion region;
  region.retained = Matrix(rdim, keep);
  for (int j = 0; j < keep; ++j) region.retained.col(j) = stats.row(order[j]).transpose();
  region.sample_size = n;
  region.resamples = resamples;
  region.alpha = alpha;
  region.support = support;
  region.moments = std::move(moments);
  region.seed = seed;
  region.depth_directions = depth_directions;
  return region;
}

void save_bootstrap_region(const BootstrapRegion& region, const std::string& stem) {
  {
    std::ofstream info(stem + ".info.csv");
    if (!info) throw DataError("cannot write " + stem + ".info.csv");
    info << std::setprecision(17);
    info << "key,value\n";
    info << "sample_size," << region.sample_size << "\n";
    info << "resamples," << region.resamples << "\n";
    info << "alpha," << region.alpha << "\n";
    info << "seed," << region.seed << "\n";
    info << "depth_directions," << region.depth_directions << "\n";
    info << "support," << (region.support == SupportKind::Concave ? "concave" : "monotone")
         << "\n";
    info << "mean";
    for (Eigen::Index i = 0; i < region.moments.mean.size(); ++i)
      info << "," << region.moments.mean[i];
    info << "\n";
    for (Eigen::Index r = 0; r < region.moments.covariance.rows(); ++r) {
      info << "cov" << r;
      for (Eigen::Index c = 0; c < region.moments.covariance.cols(); ++c)
        info << "," << region.moments.covariance(r, c);
      info << "\n";
    }
  }
  std::ofstream cols(stem + ".cols.csv");
  if (!cols) throw DataError("cannot write " + stem + ".cols.csv");
  cols << std::setprecision(17);
  for (Eigen::Index r = 0; r < region.retained.rows(); ++r) {
    for (Eigen::Index c = 0; c < region.retained.cols(); ++c)
      cols << (c ? "," : "") << region.retained(r, c);
    cols << "\n";
  }
}

BootstrapRegion load_bootstrap_region(const std::string& stem) {
  std::ifstream info(stem + ".info.csv");
  if (!info) throw DataError("cannot open " + stem + ".info.csv");
  BootstrapRegion region;
  std::string line;
  std::getline(info, line);  // header
  Vector mean;
  std::vector<std::vector<double>> cov_rows;
  while (std::getline(info, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string key;
    std::getline(ss, key, ',');
    std::vector<double> values;
    std::string cell;
    std::vector<std::string> raw;
    while (std::getline(ss, cell, ',')) raw.push_back(cell);
    if (key == "support") {
      region.support = raw.at(0) == "concave" ? SupportKind::Concave : SupportKind::Monotone;
      continue;
    }
    for (const auto& c : raw) values.push_back(std::stod(c));
    if (key == "sample_size") region.sample_size = static_cast<int>(values.at(0));
    else if (key == "resamples") region.resamples = static_cast<int>(values.at(0));
    else if (key == "alpha") region.alpha = values.at(0);
    else if (key == "seed") region.seed = static_cast<std::uint64_t>(values.at(0));
    else if (key == "depth_directions") region.depth_directions = static_cast<int>(values.at(0));
    else if (key == "mean") mean = Eigen::Map<Vector>(values.data(), values.size());
    else if (key.rfind("cov", 0) == 0) cov_rows.push_back(values);
  }
  Matrix cov(cov_rows.size(), cov_rows.empty() ? 0 : cov_rows.front().size());
  for (std::size_t r = 0; r < cov_rows.size(); ++r)
    for (std::size_t c = 0; c < cov_rows[r].size(); ++c) cov(r, c) = cov_rows[r][c];
  region.moments = moments_from_mean_cov(mean, cov, region.sample_size);

  std::ifstream cols(stem + ".cols.csv");
  if (!cols) throw DataError("cannot open " + stem + ".cols.csv");
  std::vector<std::vector<double>> rows;
  while (std::getline(cols, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  region.retained = Matrix(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) region.retained(r, c) = rows[r][c];
  return region;
}

namespace {

void fill_support_rows(MeanSetConstraints& out, const AttributeGrid& grid, SupportKind support) {
  out.support = support;
  if (support == SupportKind::Concave) {
    out.slope_rows = assemble_block_matrices(grid).slope_diff;
  } else {
    out.slope_rows = Matrix::Zero(0, grid.total_segments());
  }
}

}  // namespace

MeanSetConstraints feasible_mean_set(const EllipsoidSet& set, const AttributeGrid& grid) {
  const int dim = static_cast<int>(set.moments.mean.size());
  if (grid.total_segments() != dim) throw ModelError("grid and moments dimension mismatch");
  MeanSetConstraints out;
  out.increment_dim = dim;
  out.has_ball = true;
  // || whitener * (Cv - center) || <= sqrt(gamma)
  out.ball_lin = Matrix::Zero(dim - 1, dim);
  out.ball_lin.leftCols(dim - 1) = set.whitener;
  out.ball_offset = -set.whitener * set.center;
  out.ball_radius = std::sqrt(set.gamma);
  fill_support_rows(out, grid, set.support);
  return out;
}

MeanSetConstraints feasible_mean_set(const BootstrapRegion& region, const AttributeGrid& grid) {
  const int dim = static_cast<int>(region.moments.mean.size());
  if (grid.total_segments() != dim) throw ModelError("grid and moments dimension mismatch");
  MeanSetConstraints out;
  out.increment_dim = dim;
  out.hull_weight_dim = region.retained_count();
  // Cv + root' * retained * w / sqrt(N) == reduced mean, w on the simplex
  out.couple_v = Matrix::Zero(dim - 1, dim);
  out.couple_v.leftCols(dim - 1).setIdentity();
  out.couple_w = region.moments.root * region.retained /
                 std::sqrt(static_cast<double>(region.sample_size));
  out.couple_rhs = region.moments.reduced_mean;
  fill_support_rows(out, grid, region.support);
  return out;
}

}  // namespace dpro
