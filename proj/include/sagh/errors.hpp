#pragma once

#include <stdexcept>
#include <string>

namespace sagh {

/// Malformed or mismatched input: wrong dimensions, asymmetric matrices,
/// unknown labels, unparseable files. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Input is well-formed but outside an operation's mathematical domain
/// (negative spectrum for a square root, weights that do not sum to one, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by invert() when the spectrum reaches within eps_invert of zero.
/// Carries the offending distance so callers can report it.
class NotInvertibleError : public DomainError {
public:
    NotInvertibleError(const std::string& what, double min_abs_spectrum)
        : DomainError(what), min_abs_spectrum_(min_abs_spectrum) {}

    double min_abs_spectrum() const { return min_abs_spectrum_; }

private:
    double min_abs_spectrum_;
};

/// Two criteria that are provably equivalent disagreed numerically.
/// This signals a numerical fault in this library, not a property of the
/// input; it is never raised for mathematically expected "false" answers.
class DiagnosticError : public std::runtime_error {
public:
    explicit DiagnosticError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sagh
