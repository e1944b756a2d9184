#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sagh {

/// Finite labeled Stone space: the atoms of a finite Boolean algebra.
struct DiscreteSpace {
    std::vector<std::string> labels;

    explicit DiscreteSpace(std::vector<std::string> labels_);
    int size() const { return static_cast<int>(labels.size()); }
    int index_of(const std::string& label) const; // throws InputError if absent
    bool operator==(const DiscreteSpace& other) const { return labels == other.labels; }
};

/// Element of the commutative model: a real function on a DiscreteSpace.
class FnElement {
public:
    FnElement(DiscreteSpace space, std::vector<double> values);

    static FnElement zero(const DiscreteSpace& space);
    static FnElement one(const DiscreteSpace& space);
    static FnElement constant(const DiscreteSpace& space, double c);

    const DiscreteSpace& space() const { return space_; }
    int size() const { return space_.size(); }
    double at(int i) const { return values_[static_cast<size_t>(i)]; }
    std::span<const double> values() const { return values_; }

    friend FnElement operator+(const FnElement& f, const FnElement& g);
    friend FnElement operator-(const FnElement& f, const FnElement& g);
    friend FnElement operator-(const FnElement& f);
    friend FnElement operator*(double s, const FnElement& f);
    friend FnElement operator*(const FnElement& f, double s) { return s * f; }

private:
    DiscreteSpace space_;
    std::vector<double> values_;
};

void require_same_space(const FnElement& f, const FnElement& g, const std::string& op);

/// Pointwise product (multiplication in the commutative model is pointwise).
FnElement pointwise_mul(const FnElement& f, const FnElement& g);
FnElement pointwise_abs(const FnElement& f);

/// Sup norm, which equals the order-unit norm on this model.
double sup_norm(const FnElement& f);

/// True iff f <= g pointwise.
bool fn_leq(const FnElement& f, const FnElement& g);

/// Distinct values of f ascending: the spectrum of the element.
std::vector<double> fn_spectrum(const FnElement& f);

/// Characteristic element: every value is 0 or 1.
class CharElement {
public:
    explicit CharElement(FnElement fn); // throws InputError on non-{0,1} values
    static CharElement from_set(const DiscreteSpace& space, const std::vector<std::string>& members);

    const FnElement& fn() const { return fn_; }
    /// Labels carrying value 1.
    std::vector<std::string> support() const;

private:
    FnElement fn_;
};

/// Pointwise max and min of a pair.
struct LatticePair {
    FnElement sup;
    FnElement inf;
};
LatticePair lattice_ops(const FnElement& f, const FnElement& g);

/// Meet and join through the closed form using the absolute value:
/// inf = (f + g - |f - g|)/2, sup = (f + g + |f - g|)/2.
LatticePair abs_closed_form(const FnElement& f, const FnElement& g);

/// Partial effect-algebra sum: e + f when e + f <= 1 pointwise, otherwise
/// the undefined marker (nullopt). Inputs must lie in [0, 1].
std::optional<FnElement> mv_oplus(const FnElement& e, const FnElement& f);

/// Total companion operation min(e + f, 1).
FnElement truncated_add(const FnElement& e, const FnElement& f);

/// True iff min(e(x), 1 - e(x)) = 0 everywhere, i.e. all values are 0 or 1.
bool is_characteristic(const FnElement& e);

/// Writes f as sum of c_i * chi_i with pairwise disjoint supports; one term
/// per distinct nonzero value, ordered by ascending coefficient.
std::vector<std::pair<double, CharElement>> simple_decompose(const FnElement& f);

/// Pointwise supremum of an ascending sequence bounded by `bound`.
/// Non-ascending or unbounded input is a domain error.
FnElement monotone_sup(std::span<const FnElement> seq, const FnElement& bound);

} // namespace sagh
