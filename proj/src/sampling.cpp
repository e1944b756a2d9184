#include "sagh/sampling.hpp"

#include <cmath>
#include <string>

#include "sagh/errors.hpp"

namespace sagh {

uint64_t Rng::next_u64() {
    // splitmix64; a full-period mixer is plenty for property sampling.
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform01() {
    return std::ldexp(static_cast<double>(next_u64() >> 11), -53);
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

int Rng::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
}

double Rng::dyadic(int denom_pow, double range) {
    int max_k = static_cast<int>(std::ldexp(range, denom_pow));
    int k = uniform_int(-max_k, max_k);
    return std::ldexp(static_cast<double>(k), -denom_pow);
}

SymMatrix random_symmetric(Rng& rng, int dim, double scale, double tol) {
    std::vector<double> e(static_cast<size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            double v = rng.uniform(-scale, scale);
            e[static_cast<size_t>(i) * dim + j] = v;
            e[static_cast<size_t>(j) * dim + i] = v;
        }
    }
    return SymMatrix(dim, std::move(e), tol);
}

std::vector<double> random_orthonormal(Rng& rng, int dim) {
    std::vector<double> v(static_cast<size_t>(dim) * dim);
    while (true) {
        for (double& x : v) {
            x = rng.uniform(-1.0, 1.0);
        }
        bool ok = true;
        // Gram-Schmidt on columns.
        for (int c = 0; c < dim && ok; ++c) {
            for (int prev = 0; prev < c; ++prev) {
                double dot = 0.0;
                for (int r = 0; r < dim; ++r) {
                    dot += v[static_cast<size_t>(c) * dim + r] * v[static_cast<size_t>(prev) * dim + r];
                }
                for (int r = 0; r < dim; ++r) {
                    v[static_cast<size_t>(c) * dim + r] -= dot * v[static_cast<size_t>(prev) * dim + r];
                }
            }
            double norm = 0.0;
            for (int r = 0; r < dim; ++r) {
                norm += v[static_cast<size_t>(c) * dim + r] * v[static_cast<size_t>(c) * dim + r];
            }
            norm = std::sqrt(norm);
            if (norm < 1e-6) {
                ok = false; // near-degenerate draw, retry
                break;
            }
            for (int r = 0; r < dim; ++r) {
                v[static_cast<size_t>(c) * dim + r] /= norm;
            }
        }
        if (ok) {
            return v;
        }
    }
}

namespace {

SymMatrix assemble(const std::vector<double>& basis, const std::vector<double>& diag, int dim,
                   double tol) {
    std::vector<double> e(static_cast<size_t>(dim) * dim, 0.0);
    for (int k = 0; k < dim; ++k) {
        if (diag[static_cast<size_t>(k)] == 0.0) {
            continue;
        }
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                e[static_cast<size_t>(i) * dim + j] += diag[static_cast<size_t>(k)] *
                                                       basis[static_cast<size_t>(k) * dim + i] *
                                                       basis[static_cast<size_t>(k) * dim + j];
            }
        }
    }
    return symmetrized(dim, e, tol);
}

} // namespace

Projection random_projection(Rng& rng, int dim, int rank) {
    if (rank < 0 || rank > dim) {
        throw InputError("random_projection: rank out of range");
    }
    if (rank == 0) {
        return Projection::zero(dim);
    }
    if (rank == dim) {
        return Projection::identity(dim);
    }
    std::vector<double> basis = random_orthonormal(rng, dim);
    std::vector<double> diag(static_cast<size_t>(dim), 0.0);
    for (int k = 0; k < rank; ++k) {
        diag[static_cast<size_t>(k)] = 1.0;
    }
    return Projection::repair(assemble(basis, diag, dim, SymMatrix::kDefaultTol));
}

std::pair<Projection, Projection> random_commuting_projections(Rng& rng, int dim) {
    std::vector<double> basis = random_orthonormal(rng, dim);
    std::vector<double> d1(static_cast<size_t>(dim), 0.0);
    std::vector<double> d2(static_cast<size_t>(dim), 0.0);
    for (int k = 0; k < dim; ++k) {
        d1[static_cast<size_t>(k)] = rng.uniform_int(0, 1);
        d2[static_cast<size_t>(k)] = rng.uniform_int(0, 1);
    }
    return {Projection::repair(assemble(basis, d1, dim, SymMatrix::kDefaultTol)),
            Projection::repair(assemble(basis, d2, dim, SymMatrix::kDefaultTol))};
}

std::pair<Projection, Projection> random_comparable_projections(Rng& rng, int dim) {
    std::vector<double> basis = random_orthonormal(rng, dim);
    std::vector<double> dq(static_cast<size_t>(dim), 0.0);
    std::vector<double> dp(static_cast<size_t>(dim), 0.0);
    for (int k = 0; k < dim; ++k) {
        dq[static_cast<size_t>(k)] = rng.uniform_int(0, 1);
        dp[static_cast<size_t>(k)] = dq[static_cast<size_t>(k)] == 1.0 ? rng.uniform_int(0, 1) : 0.0;
    }
    return {Projection::repair(assemble(basis, dp, dim, SymMatrix::kDefaultTol)),
            Projection::repair(assemble(basis, dq, dim, SymMatrix::kDefaultTol))};
}

SymMatrix random_with_eigenvalues(Rng& rng, const std::vector<double>& eigenvalues, double tol) {
    int dim = static_cast<int>(eigenvalues.size());
    std::vector<double> basis = random_orthonormal(rng, dim);
    return assemble(basis, eigenvalues, dim, tol);
}

SymMatrix random_density(Rng& rng, int dim) {
    std::vector<double> eigs(static_cast<size_t>(dim));
    double sum = 0.0;
    for (double& v : eigs) {
        v = rng.uniform(0.05, 1.0);
        sum += v;
    }
    for (double& v : eigs) {
        v /= sum;
    }
    return random_with_eigenvalues(rng, eigs);
}

std::vector<double> random_weights(Rng& rng, int size) {
    std::vector<double> w(static_cast<size_t>(size));
    double sum = 0.0;
    for (double& v : w) {
        v = rng.uniform(0.01, 1.0);
        sum += v;
    }
    for (double& v : w) {
        v /= sum;
    }
    // Pin the exact normalization the validator expects.
    double acc = 0.0;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        acc += w[i];
    }
    w.back() = 1.0 - acc;
    return w;
}

FnElement random_dyadic_fn(Rng& rng, const DiscreteSpace& space, int denom_pow, double range) {
    std::vector<double> values(static_cast<size_t>(space.size()));
    for (double& v : values) {
        v = rng.dyadic(denom_pow, range);
    }
    return FnElement(space, std::move(values));
}

GroundSet random_ground_set(Rng& rng, int max_atoms, int max_null) {
    int atoms = rng.uniform_int(1, max_atoms);
    int nulls = rng.uniform_int(0, max_null);
    std::vector<std::string> a;
    std::vector<std::string> z;
    for (int i = 0; i < atoms; ++i) {
        a.push_back("a" + std::to_string(i + 1));
    }
    for (int i = 0; i < nulls; ++i) {
        z.push_back("z" + std::to_string(i + 1));
    }
    return GroundSet(std::move(a), std::move(z));
}

GroundFunction random_dyadic_ground_fn(Rng& rng, const GroundSet& ground, int denom_pow,
                                       double range) {
    std::vector<double> values(static_cast<size_t>(ground.size()));
    for (double& v : values) {
        v = rng.dyadic(denom_pow, range);
    }
    return GroundFunction(ground, std::move(values));
}

} // namespace sagh
