#include "dpro/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "dpro/errors.hpp"

namespace dpro {

SymmetricRoot symmetric_root(const Matrix& s, double ridge, double max_ridge) {
  const Eigen::Index n = s.rows();
  const double scale = std::max(s.trace() / std::max<double>(n, 1), 1e-300);
  double r = 0.0;
  for (;;) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(s + r * Matrix::Identity(n, n));
    if (eig.info() != Eigen::Success) throw DegeneracyError("eigendecomposition failed");
    const Vector& w = eig.eigenvalues();
    if (w.minCoeff() > 1e-12 * scale) {
      SymmetricRoot out;
      out.min_eigenvalue = w.minCoeff();
      out.ridge = r;
      Vector sq = w.array().sqrt();
      out.root = eig.eigenvectors() * sq.asDiagonal() * eig.eigenvectors().transpose();
      out.inverse =
          eig.eigenvectors() * sq.cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
      return out;
    }
    if (r >= max_ridge || ridge <= 0.0) {
      throw DegeneracyError(
          "covariance block is numerically singular; drop linearly dependent "
          "coordinates and rebuild the moments");
    }
    r = (r == 0.0) ? ridge : r * 10.0;
    if (r > max_ridge) r = max_ridge;
  }
}

Vector project_to_simplex(const Vector& v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double running = 0.0;
  double theta = 0.0;
  int support = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    running += u[k];
    const double cand = (running - 1.0) / static_cast<double>(k + 1);
    if (u[k] - cand > 0.0) {
      theta = cand;
      support = static_cast<int>(k + 1);
    }
  }
  (void)support;
  return (v.array() - theta).cwiseMax(0.0);
}

Vector nnls(const Matrix& a, const Vector& b, double tol) {
  // Lawson-Hanson active set
  const Eigen::Index n = a.cols();
  Vector x = Vector::Zero(n);
  std::vector<bool> passive(n, false);
  Vector w = a.transpose() * (b - a * x);
  const int max_outer = static_cast<int>(3 * n) + 30;
  for (int outer = 0; outer < max_outer; ++outer) {
    int best = -1;
    double best_w = tol * std::max(1.0, b.norm());
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!passive[j] && w[j] > best_w) {
        best_w = w[j];
        best = static_cast<int>(j);
      }
    }
    if (best < 0) break;
    passive[best] = true;
    for (;;) {
      std::vector<int> idx;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[j]) idx.push_back(static_cast<int>(j));
      }
      Matrix ap(a.rows(), idx.size());
      for (std::size_t k = 0; k < idx.size(); ++k) ap.col(k) = a.col(idx[k]);
      Vector zp = ap.colPivHouseholderQr().solve(b);
      bool all_pos = true;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (zp[k] <= tol) all_pos = false;
      }
      if (all_pos) {
        x.setZero();
        for (std::size_t k = 0; k < idx.size(); ++k) x[idx[k]] = zp[k];
        break;
      }
      double alpha = 1.0;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (zp[k] <= tol) {
          const double xi = x[idx[k]];
          if (xi - zp[k] > 0) alpha = std::min(alpha, xi / (xi - zp[k]));
        }
      }
      for (std::size_t k = 0; k < idx.size(); ++k) {
        x[idx[k]] += alpha * (zp[k] - x[idx[k]]);
        if (x[idx[k]] <= tol) {
          x[idx[k]] = 0.0;
          passive[idx[k]] = false;
        }
      }
    }
    w = a.transpose() * (b - a * x);
  }
  return x;
}

}  // namespace dpro
