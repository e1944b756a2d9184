#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sagh {

/// Real symmetric matrix, the element type of the noncommutative model.
///
/// Values are immutable after construction. Every instance carries the
/// tolerance it was constructed with; binary operations combine tolerances
/// with max and never rescale them.
class SymMatrix {
public:
    static constexpr double kDefaultTol = 1e-10;

    /// Validates the symmetry defect against `tol` (throws InputError beyond
    /// it), then stores the symmetrized entries.
    SymMatrix(int dim, std::vector<double> entries, double tol = kDefaultTol);

    static SymMatrix zero(int dim, double tol = kDefaultTol);
    static SymMatrix identity(int dim, double tol = kDefaultTol);
    static SymMatrix scaled_identity(int dim, double value, double tol = kDefaultTol);
    static SymMatrix diagonal(const std::vector<double>& values, double tol = kDefaultTol);
    /// Rank-one outer product v v^T.
    static SymMatrix outer(const std::vector<double>& v, double tol = kDefaultTol);

    int dim() const { return dim_; }
    double tol() const { return tol_; }
    double at(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    std::span<const double> entries() const { return entries_; }

    double trace() const;
    double max_abs() const;
    double frobenius() const;

    SymMatrix with_tol(double tol) const;

    friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix operator-(const SymMatrix& a);
    friend SymMatrix operator*(double s, const SymMatrix& a);
    friend SymMatrix operator*(const SymMatrix& a, double s) { return s * a; }

private:
    struct Unchecked {};
    SymMatrix(Unchecked, int dim, std::vector<double> entries, double tol);

    int dim_;
    double tol_;
    std::vector<double> entries_; // row-major, dim*dim

    friend SymMatrix sym_part_of_product(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix symmetrized(int dim, const std::vector<double>& raw, double tol);
};

/// Shared tolerance for a binary operation.
double combine_tol(const SymMatrix& a, const SymMatrix& b);

/// Requires equal dimensions; throws InputError naming `op` otherwise.
void require_same_dim(const SymMatrix& a, const SymMatrix& b, const std::string& op);

/// Raw (generally non-symmetric) product a*b, row-major.
std::vector<double> product(const SymMatrix& a, const SymMatrix& b);

double max_abs(std::span<const double> values);
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

/// max-abs norm of ab - ba.
double commutator_max_abs(const SymMatrix& a, const SymMatrix& b);

/// Symmetric part (ab + ba)/2 of the product, i.e. the product when a and b
/// commute.
SymMatrix sym_part_of_product(const SymMatrix& a, const SymMatrix& b);

/// Builds a SymMatrix from raw entries by averaging with the transpose.
SymMatrix symmetrized(int dim, const std::vector<double>& raw, double tol);

} // namespace sagh
