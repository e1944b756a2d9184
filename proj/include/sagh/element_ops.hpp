#pragma once

#include "sagh/projection.hpp"
#include "sagh/sym_matrix.hpp"

namespace sagh {

/// Jordan product (ab + ba)/2. Equals ab when the arguments commute.
SymMatrix jordan_product(const SymMatrix& a, const SymMatrix& b);

/// Quadratic map b -> aba. Order preserving: b >= 0 implies aba >= 0.
SymMatrix quadratic_map(const SymMatrix& a, const SymMatrix& b);

/// The unique positive square root of a positive element. Eigenvalues below
/// -a.tol() are a domain error; ones in [-tol, 0) are clamped to zero.
SymMatrix sqrt_psd(const SymMatrix& a);

/// a = pos - neg, abs = pos + neg, pos * neg = 0.
struct AbsParts {
    SymMatrix abs;
    SymMatrix pos;
    SymMatrix neg;
};
AbsParts abs_pos_neg(const SymMatrix& a);

/// The carrier (support projection) of a: the projection onto range(a),
/// the unique p with ab = 0 iff pb = 0. Eigenvalues within the spectral
/// cluster tolerance of zero count as zero.
Projection carrier(const SymMatrix& a);

/// Carrier with an explicit zero threshold. Callers that already fixed a
/// spectral clustering scale (the resolution builder) pass it here so the
/// formula path and the clustering agree on what counts as null.
Projection carrier(const SymMatrix& a, double zero_tol);

/// Inverse of a. Throws NotInvertibleError when the spectrum comes within
/// eps_invert(a) of zero.
SymMatrix invert(const SymMatrix& a);

/// Invertibility threshold: 1e-10 * max(1, ||a||).
double eps_invert(const SymMatrix& a);

/// Order-unit norm inf{lambda > 0 : -lambda <= a <= lambda}, i.e. the
/// spectral radius max |eigenvalue|.
double order_unit_norm(const SymMatrix& a);

/// True iff ||ab - ba||_max <= the combined tolerance.
bool commutes(const SymMatrix& a, const SymMatrix& b);

/// Positive-cone order: true iff every eigenvalue of b - a is >= -tol.
bool leq(const SymMatrix& a, const SymMatrix& b);

} // namespace sagh
