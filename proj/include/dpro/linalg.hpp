#pragma once

#include "dpro/grid.hpp"

namespace dpro {

// Symmetric positive semidefinite square root via eigendecomposition, so the
// root and its inverse are themselves symmetric.
struct SymmetricRoot {
  Matrix root;      // R with R'R = S
  Matrix inverse;   // R^{-1}
  double min_eigenvalue = 0.0;
  double ridge = 0.0;  // amount added to the diagonal before factoring
};

// Factor S (+ ridge * I when needed). Eigenvalues below `singular_tol`
// relative to the trace mark S as singular; in that case `ridge` is applied.
// Throws DegeneracyError when even the maximum ridge cannot rescue it.
SymmetricRoot symmetric_root(const Matrix& s, double ridge, double max_ridge);

// Euclidean projection onto the probability simplex (sort-based).
Vector project_to_simplex(const Vector& v);

// Nonnegative least squares min ||a*x - b||, x >= 0 (active-set method).
Vector nnls(const Matrix& a, const Vector& b, double tol = 1e-12);

}  // namespace dpro
