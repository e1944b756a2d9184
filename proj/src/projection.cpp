#include "sagh/projection.hpp"

#include <cmath>
#include <string>

#include "sagh/eigen.hpp"
#include "sagh/errors.hpp"

namespace sagh {

namespace {

int rank_by_rounding(const std::vector<double>& eigenvalues) {
    int r = 0;
    for (double v : eigenvalues) {
        if (v >= 0.5) {
            ++r;
        }
    }
    return r;
}

} // namespace

Projection Projection::checked(const SymMatrix& m) {
    std::vector<double> mm = product(m, m);
    double defect = 0.0;
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            defect = std::max(defect, std::fabs(mm[static_cast<size_t>(i) * n + j] - m.at(i, j)));
        }
    }
    if (defect > m.tol()) {
        throw InputError("Projection: idempotence defect " + std::to_string(defect) +
                         " exceeds tol " + std::to_string(m.tol()));
    }
    EigenSystem es = jacobi_eigen(m);
    return Projection(m, rank_by_rounding(es.values));
}

Projection Projection::repair(const SymMatrix& m) {
    EigenSystem es = jacobi_eigen(m);
    std::vector<double> rounded(es.values.size());
    int rank = 0;
    for (size_t k = 0; k < es.values.size(); ++k) {
        rounded[k] = es.values[k] >= 0.5 ? 1.0 : 0.0;
        rank += rounded[k] == 1.0 ? 1 : 0;
    }
    return Projection(eigen_rebuild(es, rounded, m.tol()), rank);
}

Projection Projection::zero(int dim, double tol) {
    return Projection(SymMatrix::zero(dim, tol), 0);
}

Projection Projection::identity(int dim, double tol) {
    return Projection(SymMatrix::identity(dim, tol), dim);
}

Projection complement(const Projection& p) {
    return Projection::repair(SymMatrix::identity(p.dim(), p.tol()) - p.matrix());
}

Projection meet(const Projection& p, const Projection& q) {
    require_same_dim(p.matrix(), q.matrix(), "meet");
    if (p.rank() == 0 || q.rank() == 0) {
        return Projection::zero(p.dim(), combine_tol(p.matrix(), q.matrix()));
    }
    SymMatrix s = p.matrix() + q.matrix();
    EigenSystem es = jacobi_eigen(s);
    std::vector<double> selected(es.values.size(), 0.0);
    bool any = false;
    for (size_t k = 0; k < es.values.size(); ++k) {
        if (std::fabs(es.values[k] - 2.0) <= es.cluster_tol) {
            selected[k] = 1.0;
            any = true;
        }
    }
    if (!any) {
        return Projection::zero(p.dim(), s.tol());
    }
    return Projection::repair(eigen_rebuild(es, selected, s.tol()));
}

Projection join(const Projection& p, const Projection& q) {
    require_same_dim(p.matrix(), q.matrix(), "join");
    return complement(meet(complement(p), complement(q)));
}

bool orthogonal(const Projection& p, const Projection& q) {
    require_same_dim(p.matrix(), q.matrix(), "orthogonal");
    const double tol = combine_tol(p.matrix(), q.matrix());
    bool product_zero = max_abs(product(p.matrix(), q.matrix())) <= tol;

    SymMatrix slack = SymMatrix::identity(p.dim(), tol) - (p.matrix() + q.matrix());
    EigenSystem es = jacobi_eigen(slack);
    bool below_one = es.values.front() >= -tol;

    if (product_zero != below_one) {
        throw DiagnosticError("orthogonal: criteria disagree (||pq||=" +
                              std::to_string(max_abs(product(p.matrix(), q.matrix()))) +
                              ", min eig of 1-p-q=" + std::to_string(es.values.front()) + ")");
    }
    return product_zero;
}

bool mackey_compatible(const Projection& p, const Projection& q) {
    require_same_dim(p.matrix(), q.matrix(), "mackey_compatible");
    const double tol = combine_tol(p.matrix(), q.matrix());

    Projection rhs = join(meet(p, q), meet(p, complement(q)));
    bool lattice_ok = max_abs_diff(p.matrix(), rhs.matrix()) <= 10.0 * tol;
    bool commute_ok = commutator_max_abs(p.matrix(), q.matrix()) <= tol;

    if (lattice_ok != commute_ok) {
        throw DiagnosticError("mackey_compatible: lattice and commutation criteria disagree "
                              "(lattice residual=" + std::to_string(max_abs_diff(p.matrix(), rhs.matrix())) +
                              ", commutator=" + std::to_string(commutator_max_abs(p.matrix(), q.matrix())) + ")");
    }
    return lattice_ok;
}

bool is_boolean_family(std::span<const Projection> ps) {
    if (ps.empty()) {
        throw InputError("is_boolean_family: empty family");
    }
    for (size_t i = 0; i < ps.size(); ++i) {
        require_same_dim(ps[0].matrix(), ps[i].matrix(), "is_boolean_family");
    }
    for (size_t i = 0; i < ps.size(); ++i) {
        for (size_t j = i + 1; j < ps.size(); ++j) {
            if (!mackey_compatible(ps[i], ps[j])) {
                return false;
            }
        }
    }
    return true;
}

} // namespace sagh
