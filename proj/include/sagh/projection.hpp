#pragma once

#include <span>
#include <vector>

#include "sagh/sym_matrix.hpp"

namespace sagh {

/// Idempotent element of the algebra, kept numerically clean: construction
/// either validates the idempotence defect against the carried tolerance or
/// rounds the spectrum to {0,1} ("repair").
class Projection {
public:
    /// Accepts `m` only if ||m^2 - m||_max <= m.tol(). Rank comes from
    /// rounding eigenvalues at 1/2.
    static Projection checked(const SymMatrix& m);

    /// Spectral rounding: eigenvalues >= 1/2 become 1, the rest 0. Use for
    /// results assembled from arithmetic so lattice laws hold at test
    /// tolerance.
    static Projection repair(const SymMatrix& m);

    static Projection zero(int dim, double tol = SymMatrix::kDefaultTol);
    static Projection identity(int dim, double tol = SymMatrix::kDefaultTol);

    const SymMatrix& matrix() const { return mat_; }
    int dim() const { return mat_.dim(); }
    int rank() const { return rank_; }
    double tol() const { return mat_.tol(); }

private:
    Projection(SymMatrix m, int rank) : mat_(std::move(m)), rank_(rank) {}

    SymMatrix mat_;
    int rank_;
};

/// Orthocomplement 1 - p.
Projection complement(const Projection& p);

/// Greatest lower bound: the projection onto range(p) ∩ range(q), computed
/// from the eigenvalue-2 eigenspace of p + q. Equals pq when p and q commute.
Projection meet(const Projection& p, const Projection& q);

/// De Morgan dual of meet. Equals p + q when p ⊥ q.
Projection join(const Projection& p, const Projection& q);

/// True iff pq = 0. Also evaluates the equivalent criterion p + q <= 1 and
/// throws DiagnosticError if the two disagree.
bool orthogonal(const Projection& p, const Projection& q);

/// Mackey compatibility p = (p∧q) ∨ (p∧q⊥). The lattice criterion is the
/// returned truth; a disagreement with the commutation criterion is a
/// numerical fault (DiagnosticError).
bool mackey_compatible(const Projection& p, const Projection& q);

/// True iff every pair in the family is Mackey compatible.
bool is_boolean_family(std::span<const Projection> ps);

} // namespace sagh
