#include "sagh/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sagh/eigen.hpp"
#include "sagh/element_ops.hpp"
#include "sagh/errors.hpp"

namespace sagh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGridEps = 1e-12;

std::string subset_name(const DiscreteSpace& space, unsigned mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < space.size(); ++i) {
        if (mask & (1u << i)) {
            if (!first) {
                out += ",";
            }
            out += space.labels[static_cast<size_t>(i)];
            first = false;
        }
    }
    return out + "}";
}

} // namespace

State State::trace_form(const SymMatrix& w) {
    EigenSystem es = jacobi_eigen(w);
    if (es.values.front() < -w.tol()) {
        throw DomainError("State: density has eigenvalue " + std::to_string(es.values.front()) +
                          " below -tol");
    }
    if (std::fabs(w.trace() - 1.0) > w.tol()) {
        throw DomainError("State: density trace is " + std::to_string(w.trace()) + ", not 1");
    }
    return State(w);
}

State State::weight_form(const DiscreteSpace& space, std::vector<double> weights) {
    if (weights.size() != static_cast<size_t>(space.size())) {
        throw DomainError("State: weight count does not match the space");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw DomainError("State: negative weight");
        }
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        throw DomainError("State: weights sum to " + std::to_string(sum) + ", not 1");
    }
    return State(WeightForm{space, std::move(weights)});
}

const SymMatrix& State::density() const {
    if (!is_trace_form()) {
        throw InputError("State: not a trace-form state");
    }
    return std::get<SymMatrix>(payload_);
}

const DiscreteSpace& State::space() const {
    if (is_trace_form()) {
        throw InputError("State: not a weight-form state");
    }
    return std::get<WeightForm>(payload_).space;
}

const std::vector<double>& State::weights() const {
    if (is_trace_form()) {
        throw InputError("State: not a weight-form state");
    }
    return std::get<WeightForm>(payload_).weights;
}

double evaluate(const State& rho, const SymMatrix& a) {
    if (!rho.is_trace_form()) {
        throw InputError("evaluate: weight-form state applied to a matrix element");
    }
    const SymMatrix& w = rho.density();
    require_same_dim(w, a, "evaluate");
    double sum = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            sum += w.at(i, j) * a.at(j, i);
        }
    }
    return sum;
}

double evaluate(const State& rho, const FnElement& f) {
    if (rho.is_trace_form()) {
        throw InputError("evaluate: trace-form state applied to a function element");
    }
    if (!(rho.space() == f.space())) {
        throw InputError("evaluate: state and element live on different spaces");
    }
    double sum = 0.0;
    for (int i = 0; i < f.size(); ++i) {
        sum += rho.weights()[static_cast<size_t>(i)] * f.at(i);
    }
    return sum;
}

ExtremalityReport is_extremal_commutative(const State& rho) {
    if (rho.is_trace_form()) {
        throw InputError("is_extremal_commutative: expects a weight-form state");
    }
    const DiscreteSpace& space = rho.space();
    const std::vector<double>& w = rho.weights();
    const int n = space.size();
    // The projection scan is 2^n and the lattice pair scan 4^n.
    if (n > 10) {
        throw InputError("is_extremal_commutative: space too large for the exhaustive "
                         "projection scan (max 10 atoms)");
    }

    ExtremalityReport report;

    // (1) Point evaluation: some atom carries the whole mass.
    report.point_evaluation = false;
    for (int i = 0; i < n; ++i) {
        if (std::fabs(w[static_cast<size_t>(i)] - 1.0) <= kGridEps) {
            report.point_evaluation = true;
            report.point_witness = space.labels[static_cast<size_t>(i)];
            break;
        }
    }

    // (2) Multiplicativity. rho(fg) and rho(f)rho(g) are both bilinear in
    // (f, g), so agreement on all indicator pairs decides the general case:
    // rho(chi_i chi_j) = delta_ij w_i must equal w_i w_j.
    report.multiplicative = true;
    for (int i = 0; i < n && report.multiplicative; ++i) {
        for (int j = 0; j < n && report.multiplicative; ++j) {
            double lhs = (i == j) ? w[static_cast<size_t>(i)] : 0.0;
            double rhs = w[static_cast<size_t>(i)] * w[static_cast<size_t>(j)];
            if (std::fabs(lhs - rhs) > kGridEps) {
                report.multiplicative = false;
                report.multiplicative_witness =
                    "rho(chi_" + space.labels[static_cast<size_t>(i)] + " * chi_" +
                    space.labels[static_cast<size_t>(j)] + ") = " + std::to_string(lhs) +
                    " but rho*rho = " + std::to_string(rhs);
            }
        }
    }

    // (3) Two-valued on every projection: subset sums all land in {0, 1}.
    report.two_valued_on_projections = true;
    const unsigned total = 1u << n;
    for (unsigned mask = 0; mask < total && report.two_valued_on_projections; ++mask) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                sum += w[static_cast<size_t>(i)];
            }
        }
        if (std::fabs(sum) > kGridEps && std::fabs(sum - 1.0) > kGridEps) {
            report.two_valued_on_projections = false;
            report.two_valued_witness =
                "rho(chi_" + subset_name(space, mask) + ") = " + std::to_string(sum);
        }
    }

    // (4) Lattice homomorphism on positive pairs: rho(f ^ g) = min(rho f, rho g),
    // scanned over all indicator pairs plus a fixed non-indicator pair.
    report.lattice_homomorphism = true;
    for (unsigned m1 = 0; m1 < total && report.lattice_homomorphism; ++m1) {
        for (unsigned m2 = 0; m2 < total && report.lattice_homomorphism; ++m2) {
            double rf = 0.0;
            double rg = 0.0;
            double rmeet = 0.0;
            for (int i = 0; i < n; ++i) {
                double wi = w[static_cast<size_t>(i)];
                if (m1 & (1u << i)) {
                    rf += wi;
                }
                if (m2 & (1u << i)) {
                    rg += wi;
                }
                if ((m1 & m2) & (1u << i)) {
                    rmeet += wi;
                }
            }
            if (std::fabs(rmeet - std::min(rf, rg)) > kGridEps) {
                report.lattice_homomorphism = false;
                report.lattice_witness = "rho(chi_" + subset_name(space, m1) + " ^ chi_" +
                                         subset_name(space, m2) + ") = " + std::to_string(rmeet) +
                                         " but min = " + std::to_string(std::min(rf, rg));
            }
        }
    }
    if (report.lattice_homomorphism) {
        // One positive non-indicator pair: f = 1 + weights-as-function, g reversed.
        std::vector<double> fv(static_cast<size_t>(n));
        std::vector<double> gv(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            fv[static_cast<size_t>(i)] = 1.0 + w[static_cast<size_t>(i)];
            gv[static_cast<size_t>(i)] = 1.0 + w[static_cast<size_t>(n - 1 - i)];
        }
        FnElement f(space, fv);
        FnElement g(space, gv);
        double rmeet = evaluate(rho, lattice_ops(f, g).inf);
        double expected = std::min(evaluate(rho, f), evaluate(rho, g));
        if (std::fabs(rmeet - expected) > kGridEps) {
            report.lattice_homomorphism = false;
            report.lattice_witness = "positive pair: rho(f^g) = " + std::to_string(rmeet) +
                                     " but min = " + std::to_string(expected);
        }
    }

    bool all = report.point_evaluation && report.multiplicative &&
               report.two_valued_on_projections && report.lattice_homomorphism;
    bool none = !report.point_evaluation && !report.multiplicative &&
                !report.two_valued_on_projections && !report.lattice_homomorphism;
    if (!all && !none) {
        throw DiagnosticError(
            "is_extremal_commutative: criteria disagree (point=" +
            std::to_string(report.point_evaluation) + ", mult=" +
            std::to_string(report.multiplicative) + ", two-valued=" +
            std::to_string(report.two_valued_on_projections) + ", lattice=" +
            std::to_string(report.lattice_homomorphism) + ")");
    }
    report.extremal = all;
    return report;
}

BorelSetExpr::BorelSetExpr(std::vector<Interval> intervals, std::vector<double> points)
    : intervals_(std::move(intervals)), points_(std::move(points)) {
    for (const Interval& iv : intervals_) {
        if (std::isnan(iv.lo) || std::isnan(iv.hi) || !(iv.lo < iv.hi)) {
            throw InputError("BorelSetExpr: interval bounds must satisfy lo < hi");
        }
    }
    std::sort(intervals_.begin(), intervals_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (size_t k = 1; k < intervals_.size(); ++k) {
        if (intervals_[k].lo < intervals_[k - 1].hi) {
            throw InputError("BorelSetExpr: intervals overlap");
        }
    }
    std::sort(points_.begin(), points_.end());
    for (size_t k = 0; k < points_.size(); ++k) {
        if (!std::isfinite(points_[k])) {
            throw InputError("BorelSetExpr: singleton must be finite");
        }
        if (k > 0 && points_[k] == points_[k - 1]) {
            throw InputError("BorelSetExpr: duplicate singleton");
        }
        for (const Interval& iv : intervals_) {
            if (points_[k] > iv.lo && points_[k] <= iv.hi) {
                throw InputError("BorelSetExpr: singleton lies inside an interval");
            }
        }
    }
}

BorelSetExpr BorelSetExpr::half_line(double lambda) {
    return BorelSetExpr({Interval{-kInf, lambda}}, {});
}

BorelSetExpr BorelSetExpr::whole_line() {
    return BorelSetExpr({Interval{-kInf, kInf}}, {});
}

BorelSetExpr BorelSetExpr::singleton(double point) {
    return BorelSetExpr({}, {point});
}

BorelSetExpr BorelSetExpr::interval(double lo, double hi) {
    return BorelSetExpr({Interval{lo, hi}}, {});
}

bool BorelSetExpr::contains(double x) const {
    for (const Interval& iv : intervals_) {
        if (x > iv.lo && x <= iv.hi) {
            return true;
        }
    }
    for (double p : points_) {
        if (x == p) {
            return true;
        }
    }
    return false;
}

Observable observable_of(const SymMatrix& a) {
    EigenSystem es = jacobi_eigen(a);
    std::vector<SpectralCluster> clusters = spectral_clusters(es);
    Observable xi{a, SpectrumSet{}, {}};
    for (const SpectralCluster& c : clusters) {
        xi.support.points.push_back(c.value);
        xi.support.multiplicities.push_back(c.count);
        xi.eigenprojections.push_back(Projection::repair(eigen_projection(es, c, a.tol())));
    }
    return xi;
}

Projection measure_apply(const Observable& xi, const BorelSetExpr& d) {
    const int n = xi.source.dim();
    SymMatrix acc = SymMatrix::zero(n, xi.source.tol());
    bool any = false;
    for (size_t k = 0; k < xi.support.points.size(); ++k) {
        if (d.contains(xi.support.points[k])) {
            acc = acc + xi.eigenprojections[k].matrix();
            any = true;
        }
    }
    if (!any) {
        return Projection::zero(n, xi.source.tol());
    }
    return Projection::repair(acc);
}

double expectation(const State& rho, const SymMatrix& a) {
    Observable xi = observable_of(a);
    double sum = 0.0;
    for (size_t k = 0; k < xi.support.points.size(); ++k) {
        sum += xi.support.points[k] * evaluate(rho, xi.eigenprojections[k].matrix());
    }
    return sum;
}

std::vector<std::pair<double, double>> distribution(const State& rho, const Observable& xi) {
    std::vector<std::pair<double, double>> out;
    out.reserve(xi.support.points.size());
    for (size_t k = 0; k < xi.support.points.size(); ++k) {
        double p = evaluate(rho, xi.eigenprojections[k].matrix());
        if (p < 0.0) {
            if (p < -1e-10) {
                throw DiagnosticError("distribution: probability " + std::to_string(p) +
                                      " is negative beyond tolerance");
            }
            p = 0.0;
        }
        out.emplace_back(xi.support.points[k], p);
    }
    return out;
}

} // namespace sagh
