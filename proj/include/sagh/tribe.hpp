#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sagh/fn_element.hpp"

namespace sagh {

/// Countable ground set at desk scale: essential atoms plus an explicitly
/// designated negligible part. The negligible labels play the role of the
/// meager ideal in the quotient construction.
struct GroundSet {
    std::vector<std::string> atoms;
    std::vector<std::string> null_part;

    GroundSet(std::vector<std::string> atoms_, std::vector<std::string> null_part_);

    std::vector<std::string> all_labels() const;
    int size() const { return static_cast<int>(atoms.size() + null_part.size()); }
    bool operator==(const GroundSet& other) const {
        return atoms == other.atoms && null_part == other.null_part;
    }
};

/// Bounded real function on a ground set; values are aligned with
/// atoms followed by null_part.
class GroundFunction {
public:
    GroundFunction(GroundSet ground, std::vector<double> values);
    static GroundFunction from_map(const GroundSet& ground,
                                   const std::map<std::string, double>& values);
    static GroundFunction zero(const GroundSet& ground);
    static GroundFunction one(const GroundSet& ground);
    static GroundFunction constant(const GroundSet& ground, double c);
    /// Indicator of a label subset.
    static GroundFunction indicator(const GroundSet& ground,
                                    const std::vector<std::string>& members);

    const GroundSet& ground() const { return ground_; }
    int size() const { return ground_.size(); }
    double at(int i) const { return values_[static_cast<size_t>(i)]; }
    std::span<const double> values() const { return values_; }

    friend GroundFunction operator+(const GroundFunction& f, const GroundFunction& g);
    friend GroundFunction operator-(const GroundFunction& f, const GroundFunction& g);
    friend GroundFunction operator*(double s, const GroundFunction& f);

private:
    GroundSet ground_;
    std::vector<double> values_;
};

void require_same_ground(const GroundFunction& f, const GroundFunction& g, const std::string& op);

GroundFunction pointwise_mul(const GroundFunction& f, const GroundFunction& g);
GroundFunction pointwise_max(const GroundFunction& f, const GroundFunction& g);
GroundFunction pointwise_min(const GroundFunction& f, const GroundFunction& g);

/// Indicator of the support N(f) = {x : f(x) != 0}.
GroundFunction support_indicator(const GroundFunction& f);

/// True iff f and g agree pointwise (bitwise; the module works with exact
/// finite inputs).
bool ground_equal(const GroundFunction& f, const GroundFunction& g);

/// The maximal gh-tribe on a ground set: all bounded real functions. Finite
/// ground sets make membership trivial; the type records the closure
/// clauses' trivial witnesses (0, 1, sums, scalar multiples, bounded sups).
struct GhTribeModel {
    GroundSet ground;

    explicit GhTribeModel(GroundSet ground_) : ground(std::move(ground_)) {}
    /// Every finite-valued function on a finite ground set is bounded.
    bool contains(const GroundFunction& f) const { return f.ground() == ground; }
};

enum class TribeMode { tribe, convex_tribe, gh_tribe };

/// Finitely generated closure with a membership oracle.
///
/// gh mode is decided exactly: the generated gh-tribe on a finite ground set
/// is the set of functions constant on each block of the partition induced
/// by the seed values. tribe and convex modes run a fixpoint iteration over
/// the clause set (complement, truncated sum, pointwise max/min, midpoints
/// in convex mode) with caps; `truncated()` reports whether a cap was hit,
/// in which case a negative membership answer is only valid for the
/// enumerated sub-closure.
class TribeClosure {
public:
    TribeClosure(GroundSet ground, std::vector<GroundFunction> seed, TribeMode mode);

    TribeMode mode() const { return mode_; }
    const GroundSet& ground() const { return ground_; }
    bool truncated() const { return truncated_; }
    /// Number of elements materialized by the fixpoint (0 for gh mode).
    int generated_count() const { return static_cast<int>(generated_.size()); }
    /// The finite generating trace: fixpoint elements for tribe/convex
    /// modes, the seed for gh mode (whose closure is an infinite span).
    std::vector<GroundFunction> generating_trace() const;

    bool contains(const GroundFunction& query) const;

    /// Witness check for the ascending-sup clause: validates the sequence is
    /// ascending and made of members, then reports membership of its
    /// pointwise supremum.
    bool contains_sup_of(std::span<const GroundFunction> ascending) const;

private:
    GroundSet ground_;
    std::vector<GroundFunction> seed_;
    TribeMode mode_;
    std::vector<std::vector<double>> generated_;
    std::vector<int> blocks_; // seed-partition block id per label (gh mode)
    bool truncated_ = false;

    bool matches_generated(std::span<const double> values) const;
};

TribeClosure tribe_generate(const GroundSet& ground, std::vector<GroundFunction> seed,
                            TribeMode mode);

/// The regular quotient from the maximal gh-tribe onto the commutative
/// model over the atoms: h(f) = restriction of f to atoms, kernel =
/// functions supported on the negligible part.
class QuotientMorphism {
public:
    explicit QuotientMorphism(GhTribeModel source);
    explicit QuotientMorphism(GroundSet ground);

    const GhTribeModel& source() const { return source_; }
    const GroundSet& ground() const { return source_.ground; }
    const DiscreteSpace& target_space() const { return target_; }

    FnElement apply(const GroundFunction& f) const;
    /// True iff N(f) lies inside the negligible part.
    bool kernel_contains(const GroundFunction& f) const;
    /// Zero-extension of a target element; a right inverse of apply().
    GroundFunction extend(const FnElement& g) const;
    /// Truth of "h(f) = 0 iff h(chi_N(f)) = 0" for this f.
    bool regular_at(const GroundFunction& f) const;

private:
    GhTribeModel source_;
    DiscreteSpace target_;
};

/// sigma-additive state on the ground set: weights on atoms, zero on every
/// negligible singleton, summing to one.
struct GroundWeights {
    GroundSet ground;
    std::vector<double> weights; // aligned with all_labels()

    GroundWeights(GroundSet ground_, std::vector<double> weights_);
};

/// Integral of f against the state's measure: sum f(x) w(x).
double state_integral(const GroundWeights& rho, const GroundFunction& f);

/// mu(D) = rho(chi_D): the induced probability measure.
double measure_of(const GroundWeights& rho, const std::vector<std::string>& subset);

/// The sigma-field B(T) of a finite ground set: all subsets.
struct SigmaField {
    GroundSet ground;

    explicit SigmaField(GroundSet ground_) : ground(std::move(ground_)) {}
    /// Valid label subsets are exactly the measurable sets here.
    bool contains(const std::vector<std::string>& subset) const;
    std::vector<std::string> complement_of(const std::vector<std::string>& subset) const;
    /// Every bounded function is measurable: each level set is a subset.
    bool is_measurable(const GroundFunction& f) const;
};

} // namespace sagh
