#include "sagh/func_calc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sagh/eigen.hpp"
#include "sagh/element_ops.hpp"
#include "sagh/errors.hpp"

namespace sagh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_domain_covers(const RealFunction& f, double lo, double hi) {
    if (lo < f.domain_lo || hi > f.domain_hi) {
        throw DomainError("functional calculus: spectrum [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] escapes the declared domain of " +
                          (f.name.empty() ? "f" : f.name));
    }
}

/// Direct polynomial evaluation q(a) by Horner recursion in matrix
/// arithmetic.
SymMatrix horner_poly(const SymMatrix& a, const std::vector<double>& coeffs) {
    const int n = a.dim();
    SymMatrix acc = SymMatrix::scaled_identity(n, coeffs.back(), a.tol());
    for (size_t k = coeffs.size() - 1; k-- > 0;) {
        acc = sym_part_of_product(acc, a) +
              SymMatrix::scaled_identity(n, coeffs[k], a.tol());
    }
    return acc;
}

} // namespace

namespace fns {

RealFunction abs() {
    return RealFunction{[](double t) { return std::fabs(t); }, -kInf, kInf, 1.0, {}, "abs"};
}

RealFunction exp() {
    return RealFunction{[](double t) { return std::exp(t); }, -kInf, kInf, std::nullopt, {}, "exp"};
}

RealFunction square() {
    return RealFunction{[](double t) { return t * t; }, -kInf, kInf, std::nullopt,
                        std::vector<double>{0.0, 0.0, 1.0}, "square"};
}

RealFunction identity() {
    return RealFunction{[](double t) { return t; }, -kInf, kInf, 1.0,
                        std::vector<double>{0.0, 1.0}, "identity"};
}

RealFunction clamp(double lo, double hi) {
    if (!(lo <= hi)) {
        throw InputError("clamp: lo must not exceed hi");
    }
    return RealFunction{[lo, hi](double t) { return std::min(std::max(t, lo), hi); },
                        -kInf, kInf, 1.0, {},
                        "clamp(" + std::to_string(lo) + "," + std::to_string(hi) + ")"};
}

RealFunction poly(std::vector<double> coeffs) {
    if (coeffs.empty()) {
        coeffs.push_back(0.0);
    }
    auto eval = [coeffs](double t) {
        double acc = coeffs.back();
        for (size_t k = coeffs.size() - 1; k-- > 0;) {
            acc = acc * t + coeffs[k];
        }
        return acc;
    };
    return RealFunction{eval, -kInf, kInf, std::nullopt, coeffs, "poly"};
}

} // namespace fns

SymMatrix func_calc_eigen(const SymMatrix& a, const RealFunction& f) {
    EigenSystem es = jacobi_eigen(a);
    std::vector<SpectralCluster> clusters = spectral_clusters(es);
    require_domain_covers(f, clusters.front().value, clusters.back().value);

    std::vector<double> mapped(es.values.size());
    for (const SpectralCluster& c : clusters) {
        double fv = f(c.value);
        if (!std::isfinite(fv)) {
            throw DomainError("func_calc_eigen: f is not finite at " + std::to_string(c.value));
        }
        for (int k = c.first; k < c.first + c.count; ++k) {
            mapped[static_cast<size_t>(k)] = fv;
        }
    }
    return eigen_rebuild(es, mapped, a.tol());
}

RiemannSum riemann_sum(const SymMatrix& a, const RealFunction& f, double mesh_width) {
    if (!(mesh_width > 0.0)) {
        throw DomainError("func_calc_rs: mesh_width must be positive");
    }
    SpectralResolution res = spectral_resolution(a);
    require_domain_covers(f, res.lower_bound, res.upper_bound);

    const double t0 = res.lower_bound - mesh_width;
    const long m = std::max<long>(
        1, static_cast<long>(std::ceil((res.upper_bound - t0) / mesh_width)));

    // Walk mesh cells (t_{j-1}, t_j]; the increment is nonzero only when the
    // cell swallows new breakpoints, so accumulate cumulative projections.
    RiemannSum sum{{t0}, {}, SymMatrix::zero(a.dim(), a.tol())};
    sum.mesh.reserve(static_cast<size_t>(m) + 1);
    sum.tags.reserve(static_cast<size_t>(m));
    size_t consumed = 0; // breakpoints <= previous mesh point
    for (long j = 1; j <= m; ++j) {
        double tj = (j == m) ? res.upper_bound : t0 + static_cast<double>(j) * mesh_width;
        sum.mesh.push_back(tj);
        sum.tags.push_back(tj);
        size_t reach = consumed;
        while (reach < res.breakpoints.size() && res.breakpoints[reach] <= tj) {
            ++reach;
        }
        if (reach > consumed) {
            SymMatrix upper = res.projections[reach - 1].matrix();
            SymMatrix lower = consumed == 0 ? SymMatrix::zero(a.dim(), a.tol())
                                            : res.projections[consumed - 1].matrix();
            sum.value = sum.value + f(tj) * (upper - lower);
            consumed = reach;
        }
    }
    return sum;
}

SymMatrix func_calc_rs(const SymMatrix& a, const RealFunction& f, double mesh_width) {
    return riemann_sum(a, f, mesh_width).value;
}

SymMatrix func_calc_poly(const SymMatrix& a, const RealFunction& f, int degree) {
    if (degree < 0) {
        throw DomainError("func_calc_poly: degree must be nonnegative");
    }
    SpectrumSet spec = spectrum(a);
    const double lo = spec.points.front();
    const double hi = spec.points.back();
    require_domain_covers(f, lo, hi);

    if (!f.poly_coeffs.empty() &&
        static_cast<int>(f.poly_coeffs.size()) - 1 <= degree) {
        return horner_poly(a, f.poly_coeffs);
    }
    if (degree == 0 || hi - lo <= 1e-14 * std::max(1.0, std::fabs(hi))) {
        // Constant spectrum (or constant fit): the Bernstein polynomial
        // degenerates to f evaluated at the midpoint.
        return SymMatrix::scaled_identity(a.dim(), f(0.5 * (lo + hi)), a.tol());
    }

    const int n = degree;
    const int dim = a.dim();
    // Bernstein nodes on [lo, hi].
    std::vector<SymMatrix> layer;
    layer.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        double node = lo + (hi - lo) * static_cast<double>(k) / n;
        layer.push_back(SymMatrix::scaled_identity(dim, f(node), a.tol()));
    }
    // Nested convex recursion b_k <- (1-S) b_k + S b_{k+1} with the scaled
    // element S = (a - lo)/(hi - lo); everything commutes with a, so each
    // step is one Jordan multiply-accumulate and the result lies in CC(a).
    SymMatrix s = (1.0 / (hi - lo)) * (a - SymMatrix::scaled_identity(dim, lo, a.tol()));
    SymMatrix one_minus_s = SymMatrix::identity(dim, a.tol()) - s;
    for (int round = n; round >= 1; --round) {
        for (int k = 0; k < round; ++k) {
            layer[static_cast<size_t>(k)] =
                sym_part_of_product(one_minus_s, layer[static_cast<size_t>(k)]) +
                sym_part_of_product(s, layer[static_cast<size_t>(k) + 1]);
        }
        layer.pop_back();
    }
    return layer.front();
}

SpectrumSet spectral_mapping(const SymMatrix& a, const RealFunction& f) {
    return spectrum(func_calc_eigen(a, f));
}

SpectralPushforward pushforward_resolution(const SymMatrix& a, const SymMatrix& b) {
    require_same_dim(a, b, "pushforward_resolution");
    if (!commutes(a, b)) {
        throw InputError("pushforward_resolution: elements do not commute");
    }
    const int n = a.dim();

    // Joint eigenbasis: diagonalize a, then diagonalize the restriction of b
    // inside each eigenspace of a.
    EigenSystem ea = jacobi_eigen(a);
    std::vector<SpectralCluster> clusters = spectral_clusters(ea);

    std::vector<std::vector<double>> joint_vectors;
    std::vector<double> b_values;
    for (const SpectralCluster& c : clusters) {
        const int k = c.count;
        std::vector<double> block(static_cast<size_t>(k) * k, 0.0);
        for (int r = 0; r < k; ++r) {
            for (int s = 0; s < k; ++s) {
                double sum = 0.0;
                for (int i = 0; i < n; ++i) {
                    double bi = 0.0;
                    for (int j = 0; j < n; ++j) {
                        bi += b.at(i, j) * ea.vec(j, c.first + s);
                    }
                    sum += ea.vec(i, c.first + r) * bi;
                }
                block[static_cast<size_t>(r) * k + s] = sum;
            }
        }
        EigenSystem eb = jacobi_eigen(symmetrized(k, block, b.tol()));
        for (int t = 0; t < k; ++t) {
            std::vector<double> v(static_cast<size_t>(n), 0.0);
            for (int i = 0; i < n; ++i) {
                double sum = 0.0;
                for (int r = 0; r < k; ++r) {
                    sum += ea.vec(i, c.first + r) * eb.vec(r, t);
                }
                v[static_cast<size_t>(i)] = sum;
            }
            joint_vectors.push_back(std::move(v));
            b_values.push_back(eb.values[static_cast<size_t>(t)]);
        }
    }

    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels.push_back("x" + std::to_string(i + 1));
    }
    DiscreteSpace atoms(labels);
    FnElement g(atoms, b_values);

    // Psi(m) for m commuting with the joint basis is the diagonal of the
    // change of basis; verify the resolution of b maps to level-set
    // indicators.
    SpectralPushforward out{atoms, g, {}};
    SpectralResolution res = spectral_resolution(b);
    double slack = cluster_tolerance(b_values);
    for (size_t bk = 0; bk < res.breakpoints.size(); ++bk) {
        double lambda = res.breakpoints[bk];
        const SymMatrix& p = res.projections[bk].matrix();
        std::vector<double> indicator(static_cast<size_t>(n), 0.0);
        for (int t = 0; t < n; ++t) {
            if (b_values[static_cast<size_t>(t)] <= lambda + slack) {
                indicator[static_cast<size_t>(t)] = 1.0;
            }
            double quad = 0.0;
            for (int i = 0; i < n; ++i) {
                double pi = 0.0;
                for (int j = 0; j < n; ++j) {
                    pi += p.at(i, j) * joint_vectors[static_cast<size_t>(t)][static_cast<size_t>(j)];
                }
                quad += joint_vectors[static_cast<size_t>(t)][static_cast<size_t>(i)] * pi;
            }
            if (std::fabs(quad - indicator[static_cast<size_t>(t)]) > 1e-8) {
                throw DiagnosticError(
                    "pushforward_resolution: Psi(p_{b," + std::to_string(lambda) +
                    "}) deviates from the level-set indicator at atom " +
                    labels[static_cast<size_t>(t)] + " (value " + std::to_string(quad) + ")");
            }
        }
        out.resolution_image.emplace_back(lambda, CharElement(FnElement(atoms, indicator)));
    }
    return out;
}

} // namespace sagh
