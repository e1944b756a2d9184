#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sagh/fn_element.hpp"
#include "sagh/projection.hpp"
#include "sagh/sym_matrix.hpp"
#include "sagh/tribe.hpp"

namespace sagh {

/// Deterministic random source for audits and property tests. The uniform
/// mapping is hand-rolled from raw 64-bit draws so streams are identical
/// across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform01();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi);
    /// Dyadic rational k / 2^denom_pow with |k / 2^denom_pow| <= range.
    double dyadic(int denom_pow, double range);

private:
    uint64_t state_;
};

/// Dense symmetric matrix with entries uniform in [-scale, scale].
SymMatrix random_symmetric(Rng& rng, int dim, double scale = 1.0,
                           double tol = SymMatrix::kDefaultTol);

/// Orthonormal basis as dim*dim column-major data (Gram-Schmidt on a random
/// matrix).
std::vector<double> random_orthonormal(Rng& rng, int dim);

/// Projection of the given rank from a random orthonormal basis.
Projection random_projection(Rng& rng, int dim, int rank);

/// A commuting pair of projections sharing a random eigenbasis.
std::pair<Projection, Projection> random_commuting_projections(Rng& rng, int dim);

/// A comparable pair p <= q sharing a random eigenbasis.
std::pair<Projection, Projection> random_comparable_projections(Rng& rng, int dim);

/// Symmetric matrix with prescribed eigenvalues in a random basis.
SymMatrix random_with_eigenvalues(Rng& rng, const std::vector<double>& eigenvalues,
                                  double tol = SymMatrix::kDefaultTol);

/// PSD trace-one density matrix.
SymMatrix random_density(Rng& rng, int dim);

/// Probability weights of the given size.
std::vector<double> random_weights(Rng& rng, int size);

/// Function element with dyadic rational values k/2^denom_pow in
/// [-range, range]; exact under +, -, *, min, max and |.|.
FnElement random_dyadic_fn(Rng& rng, const DiscreteSpace& space, int denom_pow, double range);

/// Ground set with the given part sizes, labels a1..ak / z1..zm.
GroundSet random_ground_set(Rng& rng, int max_atoms, int max_null);

/// Ground function with dyadic rational values.
GroundFunction random_dyadic_ground_fn(Rng& rng, const GroundSet& ground, int denom_pow,
                                       double range);

} // namespace sagh
