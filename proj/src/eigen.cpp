#include "sagh/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sagh {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kOffDiagTarget = 1e-12;

double off_diagonal_frobenius(const std::vector<double>& m, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double v = m[static_cast<size_t>(i) * n + j];
            s += 2.0 * v * v;
        }
    }
    return std::sqrt(s);
}

} // namespace

EigenSystem jacobi_eigen(const SymMatrix& a) {
    const int n = a.dim();
    std::vector<double> m(a.entries().begin(), a.entries().end());
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        v[static_cast<size_t>(i) * n + i] = 1.0;
    }

    const double target = kOffDiagTarget * std::max(1.0, a.frobenius());
    for (int sweep = 0; sweep < kMaxSweeps && n > 1; ++sweep) {
        if (off_diagonal_frobenius(m, n) <= target) {
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m[static_cast<size_t>(p) * n + q];
                if (apq == 0.0) {
                    continue;
                }
                double app = m[static_cast<size_t>(p) * n + p];
                double aqq = m[static_cast<size_t>(q) * n + q];
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                        : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    double akp = m[static_cast<size_t>(k) * n + p];
                    double akq = m[static_cast<size_t>(k) * n + q];
                    m[static_cast<size_t>(k) * n + p] = c * akp - s * akq;
                    m[static_cast<size_t>(p) * n + k] = c * akp - s * akq;
                    m[static_cast<size_t>(k) * n + q] = s * akp + c * akq;
                    m[static_cast<size_t>(q) * n + k] = s * akp + c * akq;
                }
                m[static_cast<size_t>(p) * n + p] = app - t * apq;
                m[static_cast<size_t>(q) * n + q] = aqq + t * apq;
                m[static_cast<size_t>(p) * n + q] = 0.0;
                m[static_cast<size_t>(q) * n + p] = 0.0;

                for (int k = 0; k < n; ++k) {
                    double vkp = v[static_cast<size_t>(p) * n + k];
                    double vkq = v[static_cast<size_t>(q) * n + k];
                    v[static_cast<size_t>(p) * n + k] = c * vkp - s * vkq;
                    v[static_cast<size_t>(q) * n + k] = s * vkp + c * vkq;
                }
            }
        }
    }

    // v above holds eigenvectors as rows; sort ascending and emit columns.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return m[static_cast<size_t>(i) * n + i] < m[static_cast<size_t>(j) * n + j];
    });

    EigenSystem es;
    es.dim = n;
    es.values.resize(static_cast<size_t>(n));
    es.vectors.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        int src = order[static_cast<size_t>(k)];
        es.values[static_cast<size_t>(k)] = m[static_cast<size_t>(src) * n + src];
        for (int r = 0; r < n; ++r) {
            es.vectors[static_cast<size_t>(k) * n + r] = v[static_cast<size_t>(src) * n + r];
        }
    }
    es.cluster_tol = cluster_tolerance(es.values);
    return es;
}

double cluster_tolerance(const std::vector<double>& eigenvalues) {
    double norm = 0.0;
    for (double v : eigenvalues) {
        norm = std::max(norm, std::fabs(v));
    }
    return 1e-8 * std::max(1.0, norm);
}

std::vector<SpectralCluster> spectral_clusters(const EigenSystem& es) {
    std::vector<SpectralCluster> clusters;
    int i = 0;
    while (i < es.dim) {
        int j = i + 1;
        while (j < es.dim &&
               es.values[static_cast<size_t>(j)] - es.values[static_cast<size_t>(j - 1)] <= es.cluster_tol) {
            ++j;
        }
        double sum = 0.0;
        for (int k = i; k < j; ++k) {
            sum += es.values[static_cast<size_t>(k)];
        }
        clusters.push_back(SpectralCluster{sum / (j - i), i, j - i});
        i = j;
    }
    return clusters;
}

SymMatrix eigen_projection(const EigenSystem& es, const SpectralCluster& cluster, double tol) {
    const int n = es.dim;
    std::vector<double> e(static_cast<size_t>(n) * n, 0.0);
    for (int k = cluster.first; k < cluster.first + cluster.count; ++k) {
        for (int i = 0; i < n; ++i) {
            double vi = es.vec(i, k);
            for (int j = 0; j < n; ++j) {
                e[static_cast<size_t>(i) * n + j] += vi * es.vec(j, k);
            }
        }
    }
    return symmetrized(n, e, tol);
}

SymMatrix eigen_rebuild(const EigenSystem& es, const std::vector<double>& mapped, double tol) {
    const int n = es.dim;
    std::vector<double> e(static_cast<size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        double w = mapped[static_cast<size_t>(k)];
        if (w == 0.0) {
            continue;
        }
        for (int i = 0; i < n; ++i) {
            double vi = es.vec(i, k);
            for (int j = 0; j < n; ++j) {
                e[static_cast<size_t>(i) * n + j] += w * vi * es.vec(j, k);
            }
        }
    }
    return symmetrized(n, e, tol);
}

} // namespace sagh
