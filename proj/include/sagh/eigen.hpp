#pragma once

#include <vector>

#include "sagh/sym_matrix.hpp"

namespace sagh {

/// Eigendecomposition of a symmetric matrix, eigenvalues ascending.
///
/// `vectors` is column-major: column k (stride dim) is the unit eigenvector
/// for `values[k]`. Orthonormality and reconstruction hold to roughly
/// 1e-12 * max(1, ||a||_F); `cluster_tol` is the coarser scale at which
/// nearby eigenvalues are merged into one spectral point.
struct EigenSystem {
    int dim = 0;
    std::vector<double> values;
    std::vector<double> vectors;
    double cluster_tol = 0.0;

    double vec(int row, int col) const { return vectors[static_cast<size_t>(col) * dim + row]; }
};

/// One merged group of near-equal eigenvalues.
struct SpectralCluster {
    double value = 0.0; // representative (mean of members)
    int first = 0;      // index of first member in EigenSystem::values
    int count = 0;
};

/// Cyclic Jacobi rotations, run until the off-diagonal Frobenius norm drops
/// below 1e-12 * max(1, ||a||_F), capped at 64 sweeps. Symmetric-only; the
/// accumulated rotations keep the eigenvector basis orthonormal by
/// construction.
EigenSystem jacobi_eigen(const SymMatrix& a);

/// Merge tolerance for spectral points: 1e-8 * max(1, max |eigenvalue|).
double cluster_tolerance(const std::vector<double>& eigenvalues);

/// Greedy ascending merge: consecutive eigenvalues whose gap is at most
/// es.cluster_tol land in the same cluster.
std::vector<SpectralCluster> spectral_clusters(const EigenSystem& es);

/// Orthogonal projection onto the span of the cluster's eigenvectors.
SymMatrix eigen_projection(const EigenSystem& es, const SpectralCluster& cluster, double tol);

/// Rebuilds sum_k f(lambda_k) v_k v_k^T for per-eigenvalue values `mapped`.
SymMatrix eigen_rebuild(const EigenSystem& es, const std::vector<double>& mapped, double tol);

} // namespace sagh
