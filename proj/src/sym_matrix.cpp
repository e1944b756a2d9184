#include "sagh/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sagh/errors.hpp"

namespace sagh {

SymMatrix::SymMatrix(int dim, std::vector<double> entries, double tol)
    : dim_(dim), tol_(tol), entries_(std::move(entries)) {
    if (dim_ < 1) {
        throw InputError("SymMatrix: dim must be >= 1, got " + std::to_string(dim_));
    }
    if (tol_ < 0.0) {
        throw InputError("SymMatrix: tol must be nonnegative");
    }
    if (entries_.size() != static_cast<size_t>(dim_) * dim_) {
        throw InputError("SymMatrix: expected " + std::to_string(dim_ * dim_) +
                         " entries, got " + std::to_string(entries_.size()));
    }
    for (double v : entries_) {
        if (!std::isfinite(v)) {
            throw InputError("SymMatrix: entries must be finite");
        }
    }
    double defect = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = i + 1; j < dim_; ++j) {
            defect = std::max(defect, std::fabs(at(i, j) - at(j, i)));
        }
    }
    if (defect > tol_) {
        throw InputError("SymMatrix: symmetry defect " + std::to_string(defect) +
                         " exceeds tol " + std::to_string(tol_));
    }
    for (int i = 0; i < dim_; ++i) {
        for (int j = i + 1; j < dim_; ++j) {
            double v = 0.5 * (at(i, j) + at(j, i));
            entries_[static_cast<size_t>(i) * dim_ + j] = v;
            entries_[static_cast<size_t>(j) * dim_ + i] = v;
        }
    }
}

SymMatrix::SymMatrix(Unchecked, int dim, std::vector<double> entries, double tol)
    : dim_(dim), tol_(tol), entries_(std::move(entries)) {}

SymMatrix SymMatrix::zero(int dim, double tol) {
    return SymMatrix(dim, std::vector<double>(static_cast<size_t>(dim) * dim, 0.0), tol);
}

SymMatrix SymMatrix::identity(int dim, double tol) {
    return scaled_identity(dim, 1.0, tol);
}

SymMatrix SymMatrix::scaled_identity(int dim, double value, double tol) {
    std::vector<double> e(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        e[static_cast<size_t>(i) * dim + i] = value;
    }
    return SymMatrix(dim, std::move(e), tol);
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& values, double tol) {
    int dim = static_cast<int>(values.size());
    std::vector<double> e(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        e[static_cast<size_t>(i) * dim + i] = values[static_cast<size_t>(i)];
    }
    return SymMatrix(dim, std::move(e), tol);
}

SymMatrix SymMatrix::outer(const std::vector<double>& v, double tol) {
    int dim = static_cast<int>(v.size());
    std::vector<double> e(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            e[static_cast<size_t>(i) * dim + j] = v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
        }
    }
    return SymMatrix(dim, std::move(e), tol);
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) {
        t += at(i, i);
    }
    return t;
}

double SymMatrix::max_abs() const {
    return sagh::max_abs(entries_);
}

double SymMatrix::frobenius() const {
    double s = 0.0;
    for (double v : entries_) {
        s += v * v;
    }
    return std::sqrt(s);
}

SymMatrix SymMatrix::with_tol(double tol) const {
    return SymMatrix(Unchecked{}, dim_, entries_, tol);
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b, "operator+");
    std::vector<double> e(a.entries_.size());
    for (size_t k = 0; k < e.size(); ++k) {
        e[k] = a.entries_[k] + b.entries_[k];
    }
    return SymMatrix(SymMatrix::Unchecked{}, a.dim_, std::move(e), combine_tol(a, b));
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b, "operator-");
    std::vector<double> e(a.entries_.size());
    for (size_t k = 0; k < e.size(); ++k) {
        e[k] = a.entries_[k] - b.entries_[k];
    }
    return SymMatrix(SymMatrix::Unchecked{}, a.dim_, std::move(e), combine_tol(a, b));
}

SymMatrix operator-(const SymMatrix& a) {
    return -1.0 * a;
}

SymMatrix operator*(double s, const SymMatrix& a) {
    std::vector<double> e(a.entries_.size());
    for (size_t k = 0; k < e.size(); ++k) {
        e[k] = s * a.entries_[k];
    }
    return SymMatrix(SymMatrix::Unchecked{}, a.dim_, std::move(e), a.tol_);
}

double combine_tol(const SymMatrix& a, const SymMatrix& b) {
    return std::max(a.tol(), b.tol());
}

void require_same_dim(const SymMatrix& a, const SymMatrix& b, const std::string& op) {
    if (a.dim() != b.dim()) {
        throw InputError(op + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
    }
}

std::vector<double> product(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b, "product");
    const int n = a.dim();
    std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            double aik = a.at(i, k);
            if (aik == 0.0) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                out[static_cast<size_t>(i) * n + j] += aik * b.at(k, j);
            }
        }
    }
    return out;
}

double max_abs(std::span<const double> values) {
    double m = 0.0;
    for (double v : values) {
        m = std::max(m, std::fabs(v));
    }
    return m;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    std::span<const double> ea = a.entries();
    std::span<const double> eb = b.entries();
    for (size_t k = 0; k < ea.size(); ++k) {
        m = std::max(m, std::fabs(ea[k] - eb[k]));
    }
    return m;
}

double commutator_max_abs(const SymMatrix& a, const SymMatrix& b) {
    // (ab)^T = ba for symmetric a, b, so one product suffices.
    std::vector<double> ab = product(a, b);
    const int n = a.dim();
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m = std::max(m, std::fabs(ab[static_cast<size_t>(i) * n + j] -
                                      ab[static_cast<size_t>(j) * n + i]));
        }
    }
    return m;
}

SymMatrix sym_part_of_product(const SymMatrix& a, const SymMatrix& b) {
    std::vector<double> ab = product(a, b);
    const int n = a.dim();
    std::vector<double> e(ab.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            e[static_cast<size_t>(i) * n + j] =
                0.5 * (ab[static_cast<size_t>(i) * n + j] + ab[static_cast<size_t>(j) * n + i]);
        }
    }
    return SymMatrix(SymMatrix::Unchecked{}, n, std::move(e), combine_tol(a, b));
}

SymMatrix symmetrized(int dim, const std::vector<double>& raw, double tol) {
    std::vector<double> e(raw.size());
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            e[static_cast<size_t>(i) * dim + j] =
                0.5 * (raw[static_cast<size_t>(i) * dim + j] + raw[static_cast<size_t>(j) * dim + i]);
        }
    }
    return SymMatrix(SymMatrix::Unchecked{}, dim, std::move(e), tol);
}

} // namespace sagh
