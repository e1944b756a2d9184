#include "sagh/tribe.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sagh/errors.hpp"

namespace sagh {

namespace {

constexpr size_t kClosureMaxElements = 4096;
constexpr int kClosureMaxRounds = 16;
constexpr double kMatchEps = 1e-12;

bool values_match(std::span<const double> a, std::span<const double> b, double eps) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::fabs(a[i] - b[i]) > eps) {
            return false;
        }
    }
    return true;
}

} // namespace

GroundSet::GroundSet(std::vector<std::string> atoms_, std::vector<std::string> null_part_)
    : atoms(std::move(atoms_)), null_part(std::move(null_part_)) {
    if (atoms.empty()) {
        throw InputError("GroundSet: atoms must be nonempty");
    }
    std::set<std::string> seen;
    for (const std::string& l : atoms) {
        if (!seen.insert(l).second) {
            throw InputError("GroundSet: duplicate label '" + l + "'");
        }
    }
    for (const std::string& l : null_part) {
        if (!seen.insert(l).second) {
            throw InputError("GroundSet: label '" + l + "' appears in both parts");
        }
    }
}

std::vector<std::string> GroundSet::all_labels() const {
    std::vector<std::string> out = atoms;
    out.insert(out.end(), null_part.begin(), null_part.end());
    return out;
}

GroundFunction::GroundFunction(GroundSet ground, std::vector<double> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(ground_.size())) {
        throw InputError("GroundFunction: " + std::to_string(values_.size()) + " values for " +
                         std::to_string(ground_.size()) + " labels");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InputError("GroundFunction: values must be finite");
        }
    }
}

GroundFunction GroundFunction::from_map(const GroundSet& ground,
                                        const std::map<std::string, double>& values) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(ground.size()));
    for (const std::string& label : ground.all_labels()) {
        auto it = values.find(label);
        if (it == values.end()) {
            throw InputError("GroundFunction: missing value for label '" + label + "'");
        }
        out.push_back(it->second);
    }
    if (values.size() != static_cast<size_t>(ground.size())) {
        throw InputError("GroundFunction: value map mentions labels outside the ground set");
    }
    return GroundFunction(ground, std::move(out));
}

GroundFunction GroundFunction::zero(const GroundSet& ground) {
    return constant(ground, 0.0);
}

GroundFunction GroundFunction::one(const GroundSet& ground) {
    return constant(ground, 1.0);
}

GroundFunction GroundFunction::constant(const GroundSet& ground, double c) {
    return GroundFunction(ground, std::vector<double>(static_cast<size_t>(ground.size()), c));
}

GroundFunction GroundFunction::indicator(const GroundSet& ground,
                                         const std::vector<std::string>& members) {
    std::vector<std::string> labels = ground.all_labels();
    std::vector<double> out(labels.size(), 0.0);
    for (const std::string& m : members) {
        auto it = std::find(labels.begin(), labels.end(), m);
        if (it == labels.end()) {
            throw InputError("GroundFunction::indicator: unknown label '" + m + "'");
        }
        out[static_cast<size_t>(it - labels.begin())] = 1.0;
    }
    return GroundFunction(ground, std::move(out));
}

void require_same_ground(const GroundFunction& f, const GroundFunction& g, const std::string& op) {
    if (!(f.ground() == g.ground())) {
        throw InputError(op + ": ground set mismatch");
    }
}

GroundFunction operator+(const GroundFunction& f, const GroundFunction& g) {
    require_same_ground(f, g, "operator+");
    std::vector<double> out(f.values().begin(), f.values().end());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] += g.at(static_cast<int>(i));
    }
    return GroundFunction(f.ground(), std::move(out));
}

GroundFunction operator-(const GroundFunction& f, const GroundFunction& g) {
    require_same_ground(f, g, "operator-");
    std::vector<double> out(f.values().begin(), f.values().end());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] -= g.at(static_cast<int>(i));
    }
    return GroundFunction(f.ground(), std::move(out));
}

GroundFunction operator*(double s, const GroundFunction& f) {
    std::vector<double> out(f.values().begin(), f.values().end());
    for (double& v : out) {
        v *= s;
    }
    return GroundFunction(f.ground(), std::move(out));
}

GroundFunction pointwise_mul(const GroundFunction& f, const GroundFunction& g) {
    require_same_ground(f, g, "pointwise_mul");
    std::vector<double> out(f.values().begin(), f.values().end());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] *= g.at(static_cast<int>(i));
    }
    return GroundFunction(f.ground(), std::move(out));
}

GroundFunction pointwise_max(const GroundFunction& f, const GroundFunction& g) {
    require_same_ground(f, g, "pointwise_max");
    std::vector<double> out(f.values().begin(), f.values().end());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = std::max(out[i], g.at(static_cast<int>(i)));
    }
    return GroundFunction(f.ground(), std::move(out));
}

GroundFunction pointwise_min(const GroundFunction& f, const GroundFunction& g) {
    require_same_ground(f, g, "pointwise_min");
    std::vector<double> out(f.values().begin(), f.values().end());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = std::min(out[i], g.at(static_cast<int>(i)));
    }
    return GroundFunction(f.ground(), std::move(out));
}

GroundFunction support_indicator(const GroundFunction& f) {
    std::vector<double> out(static_cast<size_t>(f.size()), 0.0);
    for (int i = 0; i < f.size(); ++i) {
        out[static_cast<size_t>(i)] = f.at(i) != 0.0 ? 1.0 : 0.0;
    }
    return GroundFunction(f.ground(), std::move(out));
}

bool ground_equal(const GroundFunction& f, const GroundFunction& g) {
    require_same_ground(f, g, "ground_equal");
    for (int i = 0; i < f.size(); ++i) {
        if (f.at(i) != g.at(i)) {
            return false;
        }
    }
    return true;
}

TribeClosure::TribeClosure(GroundSet ground, std::vector<GroundFunction> seed, TribeMode mode)
    : ground_(std::move(ground)), seed_(std::move(seed)), mode_(mode) {
    const int n = ground_.size();
    for (const GroundFunction& f : seed_) {
        if (!(f.ground() == ground_)) {
            throw InputError("tribe_generate: seed function on a different ground set");
        }
        if (mode_ != TribeMode::gh_tribe) {
            for (double v : f.values()) {
                if (v < 0.0 || v > 1.0) {
                    throw DomainError("tribe_generate: tribe seeds must take values in [0,1]");
                }
            }
        }
    }

    if (mode_ == TribeMode::gh_tribe) {
        // Partition the labels by equality of all seed values; the generated
        // gh-tribe on a finite set is exactly the functions constant on each
        // block (linear span + lattice closure + constants).
        blocks_.assign(static_cast<size_t>(n), -1);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (blocks_[static_cast<size_t>(i)] >= 0) {
                continue;
            }
            blocks_[static_cast<size_t>(i)] = next;
            for (int j = i + 1; j < n; ++j) {
                if (blocks_[static_cast<size_t>(j)] >= 0) {
                    continue;
                }
                bool same = true;
                for (const GroundFunction& f : seed_) {
                    if (f.at(i) != f.at(j)) {
                        same = false;
                        break;
                    }
                }
                if (same) {
                    blocks_[static_cast<size_t>(j)] = next;
                }
            }
            ++next;
        }
        return;
    }

    // Fixpoint iteration over the value-vector lattice for tribe /
    // convex-tribe clauses.
    auto push_unique = [&](std::vector<double> v) -> bool {
        for (const auto& existing : generated_) {
            if (values_match(existing, v, kMatchEps)) {
                return false;
            }
        }
        if (generated_.size() >= kClosureMaxElements) {
            truncated_ = true;
            return false;
        }
        generated_.push_back(std::move(v));
        return true;
    };

    push_unique(std::vector<double>(static_cast<size_t>(n), 0.0));
    push_unique(std::vector<double>(static_cast<size_t>(n), 1.0));
    for (const GroundFunction& f : seed_) {
        push_unique(std::vector<double>(f.values().begin(), f.values().end()));
    }

    for (int round = 0; round < kClosureMaxRounds; ++round) {
        size_t before = generated_.size();
        size_t count = generated_.size();
        for (size_t i = 0; i < count && !truncated_; ++i) {
            std::vector<double> comp(generated_[i]);
            for (double& v : comp) {
                v = 1.0 - v;
            }
            push_unique(std::move(comp));
            for (size_t j = i; j < count && !truncated_; ++j) {
                std::vector<double> tsum(static_cast<size_t>(n));
                std::vector<double> vmax(static_cast<size_t>(n));
                std::vector<double> vmin(static_cast<size_t>(n));
                for (int k = 0; k < n; ++k) {
                    double x = generated_[i][static_cast<size_t>(k)];
                    double y = generated_[j][static_cast<size_t>(k)];
                    tsum[static_cast<size_t>(k)] = std::min(x + y, 1.0);
                    vmax[static_cast<size_t>(k)] = std::max(x, y);
                    vmin[static_cast<size_t>(k)] = std::min(x, y);
                }
                push_unique(std::move(tsum));
                push_unique(std::move(vmax));
                push_unique(std::move(vmin));
                if (mode_ == TribeMode::convex_tribe) {
                    std::vector<double> mid(static_cast<size_t>(n));
                    for (int k = 0; k < n; ++k) {
                        mid[static_cast<size_t>(k)] = 0.5 * (generated_[i][static_cast<size_t>(k)] +
                                                             generated_[j][static_cast<size_t>(k)]);
                    }
                    push_unique(std::move(mid));
                }
            }
        }
        if (generated_.size() == before || truncated_) {
            if (generated_.size() != before) {
                truncated_ = true;
            }
            break;
        }
        if (round == kClosureMaxRounds - 1) {
            truncated_ = true;
        }
    }
}

std::vector<GroundFunction> TribeClosure::generating_trace() const {
    if (mode_ == TribeMode::gh_tribe) {
        return seed_;
    }
    std::vector<GroundFunction> out;
    out.reserve(generated_.size());
    for (const auto& values : generated_) {
        out.emplace_back(ground_, values);
    }
    return out;
}

bool TribeClosure::matches_generated(std::span<const double> values) const {
    for (const auto& existing : generated_) {
        if (values_match(existing, values, kMatchEps)) {
            return true;
        }
    }
    return false;
}

bool TribeClosure::contains(const GroundFunction& query) const {
    if (!(query.ground() == ground_)) {
        throw InputError("TribeClosure::contains: query on a different ground set");
    }
    if (mode_ == TribeMode::gh_tribe) {
        for (int i = 0; i < query.size(); ++i) {
            for (int j = i + 1; j < query.size(); ++j) {
                if (blocks_[static_cast<size_t>(i)] == blocks_[static_cast<size_t>(j)] &&
                    query.at(i) != query.at(j)) {
                    return false;
                }
            }
        }
        return true;
    }
    if (matches_generated(query.values())) {
        return true;
    }
    if (mode_ == TribeMode::convex_tribe && generated_.size() <= 512) {
        // One-step convex combination against the enumerated sub-closure.
        const int n = ground_.size();
        for (size_t i = 0; i < generated_.size(); ++i) {
            for (size_t j = 0; j < generated_.size(); ++j) {
                double alpha = -1.0;
                bool feasible = true;
                for (int k = 0; k < n && feasible; ++k) {
                    double fx = generated_[i][static_cast<size_t>(k)];
                    double gx = generated_[j][static_cast<size_t>(k)];
                    double qx = query.at(k);
                    if (std::fabs(fx - gx) <= kMatchEps) {
                        feasible = std::fabs(qx - gx) <= kMatchEps;
                    } else {
                        double a = (qx - gx) / (fx - gx);
                        if (alpha < 0.0) {
                            alpha = a;
                        }
                        feasible = std::fabs(a - alpha) <= 1e-9 && a >= -kMatchEps && a <= 1.0 + kMatchEps;
                    }
                }
                if (feasible && alpha >= -kMatchEps) {
                    return true;
                }
            }
        }
    }
    return false;
}

bool TribeClosure::contains_sup_of(std::span<const GroundFunction> ascending) const {
    if (ascending.empty()) {
        throw DomainError("contains_sup_of: empty sequence");
    }
    for (size_t k = 0; k < ascending.size(); ++k) {
        if (!contains(ascending[k])) {
            return false;
        }
        if (k > 0 && !ground_equal(pointwise_max(ascending[k - 1], ascending[k]), ascending[k])) {
            throw DomainError("contains_sup_of: sequence is not ascending");
        }
    }
    GroundFunction sup = ascending[0];
    for (size_t k = 1; k < ascending.size(); ++k) {
        sup = pointwise_max(sup, ascending[k]);
    }
    return contains(sup);
}

TribeClosure tribe_generate(const GroundSet& ground, std::vector<GroundFunction> seed,
                            TribeMode mode) {
    return TribeClosure(ground, std::move(seed), mode);
}

QuotientMorphism::QuotientMorphism(GhTribeModel source)
    : source_(std::move(source)), target_(source_.ground.atoms) {}

QuotientMorphism::QuotientMorphism(GroundSet ground)
    : QuotientMorphism(GhTribeModel(std::move(ground))) {}

FnElement QuotientMorphism::apply(const GroundFunction& f) const {
    if (!source_.contains(f)) {
        throw InputError("apply_h: function outside the source tribe");
    }
    std::vector<double> values(f.values().begin(),
                               f.values().begin() + static_cast<long>(ground().atoms.size()));
    return FnElement(target_, std::move(values));
}

bool QuotientMorphism::kernel_contains(const GroundFunction& f) const {
    for (size_t i = 0; i < ground().atoms.size(); ++i) {
        if (f.at(static_cast<int>(i)) != 0.0) {
            return false;
        }
    }
    return true;
}

GroundFunction QuotientMorphism::extend(const FnElement& g) const {
    if (!(g.space() == target_)) {
        throw InputError("extend: element on a different atom space");
    }
    std::vector<double> values(g.values().begin(), g.values().end());
    values.resize(static_cast<size_t>(ground().size()), 0.0);
    return GroundFunction(ground(), std::move(values));
}

bool QuotientMorphism::regular_at(const GroundFunction& f) const {
    bool h_zero = kernel_contains(f);
    bool h_support_zero = kernel_contains(support_indicator(f));
    return h_zero == h_support_zero;
}

GroundWeights::GroundWeights(GroundSet ground_, std::vector<double> weights_)
    : ground(std::move(ground_)), weights(std::move(weights_)) {
    if (weights.size() != static_cast<size_t>(ground.size())) {
        throw DomainError("GroundWeights: " + std::to_string(weights.size()) + " weights for " +
                          std::to_string(ground.size()) + " labels");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw DomainError("GroundWeights: negative weight");
        }
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        throw DomainError("GroundWeights: weights sum to " + std::to_string(sum) + ", not 1");
    }
    for (size_t i = ground.atoms.size(); i < weights.size(); ++i) {
        if (weights[i] != 0.0) {
            throw DomainError("GroundWeights: nonzero weight on negligible label '" +
                              ground.null_part[i - ground.atoms.size()] + "'");
        }
    }
}

double state_integral(const GroundWeights& rho, const GroundFunction& f) {
    if (!(f.ground() == rho.ground)) {
        throw InputError("state_integral: function on a different ground set");
    }
    double sum = 0.0;
    for (int i = 0; i < f.size(); ++i) {
        sum += f.at(i) * rho.weights[static_cast<size_t>(i)];
    }
    return sum;
}

double measure_of(const GroundWeights& rho, const std::vector<std::string>& subset) {
    return state_integral(rho, GroundFunction::indicator(rho.ground, subset));
}

bool SigmaField::contains(const std::vector<std::string>& subset) const {
    std::vector<std::string> labels = ground.all_labels();
    for (const std::string& m : subset) {
        if (std::find(labels.begin(), labels.end(), m) == labels.end()) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> SigmaField::complement_of(const std::vector<std::string>& subset) const {
    std::vector<std::string> out;
    for (const std::string& l : ground.all_labels()) {
        if (std::find(subset.begin(), subset.end(), l) == subset.end()) {
            out.push_back(l);
        }
    }
    return out;
}

bool SigmaField::is_measurable(const GroundFunction& f) const {
    return f.ground() == ground;
}

} // namespace sagh
