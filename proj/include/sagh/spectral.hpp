#pragma once

#include <vector>

#include "sagh/projection.hpp"
#include "sagh/sym_matrix.hpp"

namespace sagh {

/// The ascending right-continuous projection family of an element.
///
/// Stores the value ON each breakpoint: the projection at breakpoint k
/// already contains that eigenspace. Below the first breakpoint the family
/// is zero; at the last it is the identity. lower_bound / upper_bound are
/// the spectral endpoints L_a and U_a.
struct SpectralResolution {
    std::vector<double> breakpoints;
    std::vector<Projection> projections;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    int dim = 0;
    double tol = SymMatrix::kDefaultTol;

    /// Step-function evaluation: the stored projection at the largest
    /// breakpoint <= lambda, or zero below the first one.
    Projection value_at(double lambda) const;
};

/// Distinct spectral points of an element with multiplicities.
struct SpectrumSet {
    std::vector<double> points;
    std::vector<int> multiplicities;
};

/// Builds the resolution strictly through the defining formula
/// p = 1 - carrier(pos_part(a - lambda)) at every clustered eigenvalue.
SpectralResolution spectral_resolution(const SymMatrix& a);

/// Clustered eigenvalues of a.
SpectrumSet spectrum(const SymMatrix& a);

/// Recovers sum_k lambda_k (p_k - p_{k-1}) from a resolution.
SymMatrix reconstruct(const SpectralResolution& res);

/// Order-unit norm of a - reconstruct(spectral_resolution-like res).
double reconstruction_residual(const SymMatrix& a, const SpectralResolution& res);

} // namespace sagh
