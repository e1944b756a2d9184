#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sagh/fn_element.hpp"
#include "sagh/projection.hpp"
#include "sagh/spectral.hpp"
#include "sagh/sym_matrix.hpp"

namespace sagh {

/// Positive normalized linear functional on one of the two models:
/// trace form rho(a) = trace(w a) with w PSD of trace one, or weight form
/// rho(f) = sum w(x) f(x) with probability weights on a discrete space.
class State {
public:
    /// Validates w >= 0 (eigenvalues >= -tol) and trace(w) = 1 within tol.
    static State trace_form(const SymMatrix& w);
    static State weight_form(const DiscreteSpace& space, std::vector<double> weights);

    bool is_trace_form() const { return std::holds_alternative<SymMatrix>(payload_); }
    const SymMatrix& density() const;
    const DiscreteSpace& space() const;
    const std::vector<double>& weights() const;

private:
    struct WeightForm {
        DiscreteSpace space;
        std::vector<double> weights;
    };
    explicit State(SymMatrix w) : payload_(std::move(w)) {}
    explicit State(WeightForm w) : payload_(std::move(w)) {}

    std::variant<SymMatrix, WeightForm> payload_;
};

/// rho(a) = trace(w a). Linear and monotone in a.
double evaluate(const State& rho, const SymMatrix& a);
/// rho(f) = sum weights * values.
double evaluate(const State& rho, const FnElement& f);

/// The four equivalent extremality criteria for a weight-form state on the
/// commutative model, evaluated independently.
struct ExtremalityReport {
    bool point_evaluation = false;
    bool multiplicative = false;
    bool two_valued_on_projections = false;
    bool lattice_homomorphism = false;
    bool extremal = false; // the common verdict
    std::string point_witness;       // atom label when point_evaluation holds
    std::string multiplicative_witness;
    std::string two_valued_witness;
    std::string lattice_witness;
};

/// Evaluates all four criteria (point evaluation, multiplicativity,
/// two-valuedness on all projections, lattice homomorphism on positive
/// pairs). They are provably equivalent; numerical disagreement raises
/// DiagnosticError with the per-criterion witnesses.
ExtremalityReport is_extremal_commutative(const State& rho);

/// Finite union of disjoint half-open intervals (lo, hi] plus isolated
/// points; lo may be -infinity and hi +infinity. Sufficient Borel fragment
/// for point spectra.
class BorelSetExpr {
public:
    struct Interval {
        double lo; // -inf allowed
        double hi; // +inf allowed
    };

    BorelSetExpr() = default; // empty set
    BorelSetExpr(std::vector<Interval> intervals, std::vector<double> points);

    static BorelSetExpr empty() { return BorelSetExpr(); }
    /// (-inf, lambda]
    static BorelSetExpr half_line(double lambda);
    static BorelSetExpr whole_line();
    static BorelSetExpr singleton(double point);
    static BorelSetExpr interval(double lo, double hi);

    bool contains(double x) const;
    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<double>& points() const { return points_; }

private:
    std::vector<Interval> intervals_;
    std::vector<double> points_;
};

/// Projection-valued spectral measure of an element: one eigenprojection per
/// spectral point, pairwise orthogonal, summing to the identity.
struct Observable {
    SymMatrix source;
    SpectrumSet support;
    std::vector<Projection> eigenprojections;
};

/// Assembles xi_a from the clustered eigenprojections of a.
Observable observable_of(const SymMatrix& a);

/// xi(D): sum of eigenprojections whose spectral point lies in D.
Projection measure_apply(const Observable& xi, const BorelSetExpr& d);

/// Expectation of the observable: sum over spec(a) of lambda * rho(xi({lambda})).
double expectation(const State& rho, const SymMatrix& a);

/// Distribution of xi in the state: (spectral point, rho(xi({point}))).
std::vector<std::pair<double, double>> distribution(const State& rho, const Observable& xi);

} // namespace sagh
