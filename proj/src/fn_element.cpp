#include "sagh/fn_element.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sagh/errors.hpp"

namespace sagh {

DiscreteSpace::DiscreteSpace(std::vector<std::string> labels_) : labels(std::move(labels_)) {
    if (labels.empty()) {
        throw InputError("DiscreteSpace: label list is empty");
    }
    std::set<std::string> seen;
    for (const std::string& l : labels) {
        if (!seen.insert(l).second) {
            throw InputError("DiscreteSpace: duplicate label '" + l + "'");
        }
    }
}

int DiscreteSpace::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) {
            return static_cast<int>(i);
        }
    }
    throw InputError("DiscreteSpace: unknown label '" + label + "'");
}

FnElement::FnElement(DiscreteSpace space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(space_.size())) {
        throw InputError("FnElement: " + std::to_string(values_.size()) + " values for " +
                         std::to_string(space_.size()) + " labels");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InputError("FnElement: values must be finite");
        }
    }
}

FnElement FnElement::zero(const DiscreteSpace& space) {
    return constant(space, 0.0);
}

FnElement FnElement::one(const DiscreteSpace& space) {
    return constant(space, 1.0);
}

FnElement FnElement::constant(const DiscreteSpace& space, double c) {
    return FnElement(space, std::vector<double>(static_cast<size_t>(space.size()), c));
}

void require_same_space(const FnElement& f, const FnElement& g, const std::string& op) {
    if (!(f.space() == g.space())) {
        throw InputError(op + ": space mismatch");
    }
}

FnElement operator+(const FnElement& f, const FnElement& g) {
    require_same_space(f, g, "operator+");
    std::vector<double> out(f.values().begin(), f.values().end());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] += g.at(static_cast<int>(i));
    }
    return FnElement(f.space(), std::move(out));
}

FnElement operator-(const FnElement& f, const FnElement& g) {
    require_same_space(f, g, "operator-");
    std::vector<double> out(f.values().begin(), f.values().end());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] -= g.at(static_cast<int>(i));
    }
    return FnElement(f.space(), std::move(out));
}

FnElement operator-(const FnElement& f) {
    return -1.0 * f;
}

FnElement operator*(double s, const FnElement& f) {
    std::vector<double> out(f.values().begin(), f.values().end());
    for (double& v : out) {
        v *= s;
    }
    return FnElement(f.space(), std::move(out));
}

FnElement pointwise_mul(const FnElement& f, const FnElement& g) {
    require_same_space(f, g, "pointwise_mul");
    std::vector<double> out(f.values().begin(), f.values().end());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] *= g.at(static_cast<int>(i));
    }
    return FnElement(f.space(), std::move(out));
}

FnElement pointwise_abs(const FnElement& f) {
    std::vector<double> out(f.values().begin(), f.values().end());
    for (double& v : out) {
        v = std::fabs(v);
    }
    return FnElement(f.space(), std::move(out));
}

double sup_norm(const FnElement& f) {
    double m = 0.0;
    for (double v : f.values()) {
        m = std::max(m, std::fabs(v));
    }
    return m;
}

bool fn_leq(const FnElement& f, const FnElement& g) {
    require_same_space(f, g, "fn_leq");
    for (int i = 0; i < f.size(); ++i) {
        if (f.at(i) > g.at(i)) {
            return false;
        }
    }
    return true;
}

std::vector<double> fn_spectrum(const FnElement& f) {
    std::set<double> distinct(f.values().begin(), f.values().end());
    return std::vector<double>(distinct.begin(), distinct.end());
}

CharElement::CharElement(FnElement fn) : fn_(std::move(fn)) {
    for (double v : fn_.values()) {
        if (v != 0.0 && v != 1.0) {
            throw InputError("CharElement: value " + std::to_string(v) + " is not 0 or 1");
        }
    }
}

CharElement CharElement::from_set(const DiscreteSpace& space,
                                  const std::vector<std::string>& members) {
    std::vector<double> values(static_cast<size_t>(space.size()), 0.0);
    for (const std::string& m : members) {
        values[static_cast<size_t>(space.index_of(m))] = 1.0;
    }
    return CharElement(FnElement(space, std::move(values)));
}

std::vector<std::string> CharElement::support() const {
    std::vector<std::string> out;
    for (int i = 0; i < fn_.size(); ++i) {
        if (fn_.at(i) == 1.0) {
            out.push_back(fn_.space().labels[static_cast<size_t>(i)]);
        }
    }
    return out;
}

LatticePair lattice_ops(const FnElement& f, const FnElement& g) {
    require_same_space(f, g, "lattice_ops");
    std::vector<double> sup(static_cast<size_t>(f.size()));
    std::vector<double> inf(static_cast<size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) {
        sup[static_cast<size_t>(i)] = std::max(f.at(i), g.at(i));
        inf[static_cast<size_t>(i)] = std::min(f.at(i), g.at(i));
    }
    return LatticePair{FnElement(f.space(), std::move(sup)), FnElement(f.space(), std::move(inf))};
}

LatticePair abs_closed_form(const FnElement& f, const FnElement& g) {
    require_same_space(f, g, "abs_closed_form");
    FnElement spread = pointwise_abs(f - g);
    FnElement sum = f + g;
    return LatticePair{0.5 * (sum + spread), 0.5 * (sum - spread)};
}

namespace {

void require_unit_interval(const FnElement& e, const std::string& op) {
    for (double v : e.values()) {
        if (v < 0.0 || v > 1.0) {
            throw DomainError(op + ": value " + std::to_string(v) + " outside [0,1]");
        }
    }
}

} // namespace

std::optional<FnElement> mv_oplus(const FnElement& e, const FnElement& f) {
    require_same_space(e, f, "mv_oplus");
    require_unit_interval(e, "mv_oplus");
    require_unit_interval(f, "mv_oplus");
    FnElement sum = e + f;
    for (double v : sum.values()) {
        if (v > 1.0) {
            return std::nullopt;
        }
    }
    return sum;
}

FnElement truncated_add(const FnElement& e, const FnElement& f) {
    require_same_space(e, f, "truncated_add");
    require_unit_interval(e, "truncated_add");
    require_unit_interval(f, "truncated_add");
    std::vector<double> out(static_cast<size_t>(e.size()));
    for (int i = 0; i < e.size(); ++i) {
        out[static_cast<size_t>(i)] = std::min(e.at(i) + f.at(i), 1.0);
    }
    return FnElement(e.space(), std::move(out));
}

bool is_characteristic(const FnElement& e) {
    for (double v : e.values()) {
        if (v != 0.0 && v != 1.0) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<double, CharElement>> simple_decompose(const FnElement& f) {
    std::map<double, std::vector<std::string>> groups;
    for (int i = 0; i < f.size(); ++i) {
        if (f.at(i) != 0.0) {
            groups[f.at(i)].push_back(f.space().labels[static_cast<size_t>(i)]);
        }
    }
    std::vector<std::pair<double, CharElement>> out;
    out.reserve(groups.size());
    for (const auto& [value, members] : groups) {
        out.emplace_back(value, CharElement::from_set(f.space(), members));
    }
    return out;
}

FnElement monotone_sup(std::span<const FnElement> seq, const FnElement& bound) {
    if (seq.empty()) {
        throw DomainError("monotone_sup: empty sequence");
    }
    for (const FnElement& f : seq) {
        require_same_space(f, bound, "monotone_sup");
    }
    for (size_t k = 1; k < seq.size(); ++k) {
        if (!fn_leq(seq[k - 1], seq[k])) {
            throw DomainError("monotone_sup: sequence is not ascending at step " + std::to_string(k));
        }
    }
    if (!fn_leq(seq.back(), bound)) {
        throw DomainError("monotone_sup: sequence exceeds the provided bound");
    }
    // Ascending, so the pointwise supremum of the finite prefix is its last
    // element.
    return seq.back();
}

} // namespace sagh
