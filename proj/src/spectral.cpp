#include "sagh/spectral.hpp"

#include <algorithm>
#include <string>

#include "sagh/eigen.hpp"
#include "sagh/element_ops.hpp"
#include "sagh/errors.hpp"

namespace sagh {

Projection SpectralResolution::value_at(double lambda) const {
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), lambda);
    if (it == breakpoints.begin()) {
        return Projection::zero(dim, tol);
    }
    return projections[static_cast<size_t>(it - breakpoints.begin()) - 1];
}

SpectralResolution spectral_resolution(const SymMatrix& a) {
    EigenSystem es = jacobi_eigen(a);
    std::vector<SpectralCluster> clusters = spectral_clusters(es);

    SpectralResolution res;
    res.dim = a.dim();
    res.tol = a.tol();
    res.breakpoints.reserve(clusters.size());
    res.projections.reserve(clusters.size());
    for (const SpectralCluster& c : clusters) {
        double lambda = c.value;
        SymMatrix shifted = a - SymMatrix::scaled_identity(a.dim(), lambda, a.tol());
        AbsParts parts = abs_pos_neg(shifted);
        // The carrier must treat the whole breakpoint cluster as null: its
        // members sit up to (top member - representative) above lambda, and
        // the next cluster starts at least one cluster tolerance beyond the
        // top member, so half a tolerance of margin separates the two.
        double upper_spread =
            es.values[static_cast<size_t>(c.first + c.count - 1)] - c.value;
        double zero_tol = upper_spread + 0.5 * es.cluster_tol;
        res.projections.push_back(complement(carrier(parts.pos, zero_tol)));
        res.breakpoints.push_back(lambda);
    }
    res.lower_bound = res.breakpoints.front();
    res.upper_bound = res.breakpoints.back();

    const Projection& top = res.projections.back();
    if (max_abs_diff(top.matrix(), SymMatrix::identity(res.dim, res.tol)) > 10.0 * res.tol) {
        throw DiagnosticError("spectral_resolution: projection at the top breakpoint "
                              "is not the identity");
    }
    return res;
}

SpectrumSet spectrum(const SymMatrix& a) {
    EigenSystem es = jacobi_eigen(a);
    SpectrumSet s;
    for (const SpectralCluster& c : spectral_clusters(es)) {
        s.points.push_back(c.value);
        s.multiplicities.push_back(c.count);
    }
    return s;
}

SymMatrix reconstruct(const SpectralResolution& res) {
    SymMatrix acc = SymMatrix::zero(res.dim, res.tol);
    SymMatrix prev = SymMatrix::zero(res.dim, res.tol);
    for (size_t k = 0; k < res.breakpoints.size(); ++k) {
        const SymMatrix& cur = res.projections[k].matrix();
        acc = acc + res.breakpoints[k] * (cur - prev);
        prev = cur;
    }
    return acc;
}

double reconstruction_residual(const SymMatrix& a, const SpectralResolution& res) {
    return order_unit_norm(a - reconstruct(res));
}

} // namespace sagh
