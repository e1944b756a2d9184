#include "sagh/element_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sagh/eigen.hpp"
#include "sagh/errors.hpp"
#include "sagh/spectral.hpp"

namespace sagh {

SymMatrix jordan_product(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b, "jordan_product");
    return sym_part_of_product(a, b);
}

SymMatrix quadratic_map(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b, "quadratic_map");
    const int n = a.dim();
    std::vector<double> ab = product(a, b);
    std::vector<double> aba(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            double v = ab[static_cast<size_t>(i) * n + k];
            if (v == 0.0) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                aba[static_cast<size_t>(i) * n + j] += v * a.at(k, j);
            }
        }
    }
    return symmetrized(n, aba, combine_tol(a, b));
}

SymMatrix sqrt_psd(const SymMatrix& a) {
    EigenSystem es = jacobi_eigen(a);
    std::vector<double> roots(es.values.size());
    for (size_t k = 0; k < es.values.size(); ++k) {
        double v = es.values[k];
        if (v < -a.tol()) {
            throw DomainError("sqrt_psd: eigenvalue " + std::to_string(v) +
                              " below -tol, input is not positive");
        }
        roots[k] = std::sqrt(std::max(v, 0.0));
    }
    return eigen_rebuild(es, roots, a.tol());
}

AbsParts abs_pos_neg(const SymMatrix& a) {
    EigenSystem es = jacobi_eigen(a);
    std::vector<double> magnitudes(es.values.size());
    for (size_t k = 0; k < es.values.size(); ++k) {
        magnitudes[k] = std::fabs(es.values[k]);
    }
    SymMatrix abs = eigen_rebuild(es, magnitudes, a.tol());
    SymMatrix pos = 0.5 * (abs + a);
    SymMatrix neg = 0.5 * (abs - a);
    return AbsParts{std::move(abs), std::move(pos), std::move(neg)};
}

Projection carrier(const SymMatrix& a) {
    EigenSystem es = jacobi_eigen(a);
    return carrier(a, es.cluster_tol);
}

Projection carrier(const SymMatrix& a, double zero_tol) {
    EigenSystem es = jacobi_eigen(a);
    std::vector<double> selected(es.values.size(), 0.0);
    bool all_zero = true;
    for (size_t k = 0; k < es.values.size(); ++k) {
        if (std::fabs(es.values[k]) > zero_tol) {
            selected[k] = 1.0;
            all_zero = false;
        }
    }
    if (all_zero) {
        return Projection::zero(a.dim(), a.tol());
    }
    return Projection::repair(eigen_rebuild(es, selected, a.tol()));
}

double eps_invert(const SymMatrix& a) {
    return 1e-10 * std::max(1.0, order_unit_norm(a));
}

SymMatrix invert(const SymMatrix& a) {
    EigenSystem es = jacobi_eigen(a);
    SpectrumSet spec = spectrum(a);
    double min_abs = std::fabs(spec.points.front());
    for (double p : spec.points) {
        min_abs = std::min(min_abs, std::fabs(p));
    }
    double norm = std::max(std::fabs(es.values.front()), std::fabs(es.values.back()));
    if (min_abs < 1e-10 * std::max(1.0, norm)) {
        throw NotInvertibleError("invert: min |spectrum| = " + std::to_string(min_abs) +
                                     " is within eps_invert of zero",
                                 min_abs);
    }
    std::vector<double> reciprocals(es.values.size());
    for (size_t k = 0; k < es.values.size(); ++k) {
        reciprocals[k] = 1.0 / es.values[k];
    }
    return eigen_rebuild(es, reciprocals, a.tol());
}

double order_unit_norm(const SymMatrix& a) {
    EigenSystem es = jacobi_eigen(a);
    return std::max(std::fabs(es.values.front()), std::fabs(es.values.back()));
}

bool commutes(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b, "commutes");
    return commutator_max_abs(a, b) <= combine_tol(a, b);
}

bool leq(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b, "leq");
    EigenSystem es = jacobi_eigen(b - a);
    return es.values.front() >= -combine_tol(a, b);
}

} // namespace sagh
