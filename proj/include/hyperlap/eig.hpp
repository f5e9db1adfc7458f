#pragma once

#include <vector>

#include "hyperlap/matrix.hpp"

namespace hyperlap {

// Tolerance scheme used throughout:
//   zero_tol    = 1e-9 * (1 + ||A||_inf)  -- "is this eigenvalue zero"
//   kClusterTol = 1e-7 (absolute)         -- glue eigenvalues into clusters
//   kEntryTol   = 1e-9                    -- entrywise sign / norm tests
inline constexpr double kZeroTolBase = 1e-9;
inline constexpr double kClusterTol = 1e-7;
inline constexpr double kEntryTol = 1e-9;

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix vectors;                   // orthonormal; column k pairs with eigenvalues[k]
  double residual = 0.0;            // max_k ||A q_k - lambda_k q_k||_inf vs the input
  double input_inf_norm = 0.0;      // ||A||_inf of the input matrix
};

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations
// (row-major sweep order, at most 100 sweeps; throws NumericError with the
// remaining off-diagonal norm on non-convergence). Deterministic: fixed sweep
// order, eigenvalues sorted ascending with stable tie order, and each
// eigenvector is sign-normalized so its entry of largest magnitude (first
// index on ties) is positive.
SpectralDecomposition eigh(const Matrix& m);
SpectralDecomposition eigh(const IntMatrix& m);

double zero_tol(const SpectralDecomposition& s);

// Number of eigenvalues with |lambda| <= zero_tol(s).
int kernel_dim(const SpectralDecomposition& s);

// Maximal runs of eigenvalues where consecutive gaps are <= tol.
struct EigenCluster {
  double value;  // mean of the cluster
  int first;     // index of the first member
  int count;
};
std::vector<EigenCluster> eigenvalue_clusters(const SpectralDecomposition& s,
                                              double tol = kClusterTol);

// Orthogonal projector onto the span of a cluster's eigenvectors; exactly
// symmetric (upper triangle mirrored).
Matrix projector_for(const SpectralDecomposition& s, const EigenCluster& c);

// Projector onto the lowest cluster (the lambda_1 eigenspace up to kClusterTol).
Matrix lowest_projector(const SpectralDecomposition& s);

// Gap between the first two clusters; +infinity when there is only one.
double spectral_gap(const SpectralDecomposition& s);

}  // namespace hyperlap
