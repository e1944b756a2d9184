#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sagh/fn_element.hpp"
#include "sagh/spectral.hpp"
#include "sagh/sym_matrix.hpp"

namespace sagh {

/// Continuous real function supplied as an evaluator with a declared domain.
/// The library never analyzes f symbolically; the optional Lipschitz hint
/// feeds error bounds, and polynomial coefficients (when present) enable the
/// exact-fit path of func_calc_poly.
struct RealFunction {
    std::function<double(double)> eval;
    double domain_lo;
    double domain_hi;
    std::optional<double> lipschitz;   // on the declared domain
    std::vector<double> poly_coeffs;   // nonempty iff f is a known polynomial
    std::string name;

    double operator()(double t) const { return eval(t); }
};

/// Named builtin functions for the CLI surface.
namespace fns {
RealFunction abs();
RealFunction exp();
RealFunction square();
RealFunction identity();
RealFunction clamp(double lo, double hi);
RealFunction poly(std::vector<double> coeffs); // c0 + c1 t + c2 t^2 + ...
} // namespace fns

/// f(a) through the eigendecomposition: f applied to each clustered
/// eigenvalue, eigenprojections kept. Domain must cover [L_a, U_a].
SymMatrix func_calc_eigen(const SymMatrix& a, const RealFunction& f);

/// One assembled Riemann-Stieltjes sum: the mesh, the tag per cell, and the
/// accumulated value sum f(tag_j) (p(t_j) - p(t_{j-1})).
struct RiemannSum {
    std::vector<double> mesh; // t_0 = L_a - mesh_width, ..., t_m = U_a
    std::vector<double> tags; // right endpoints, one per cell
    SymMatrix value;
};

/// Full Riemann-Stieltjes data for f over the spectral resolution of a.
RiemannSum riemann_sum(const SymMatrix& a, const RealFunction& f, double mesh_width);

/// f(a) as a Riemann-Stieltjes sum over the spectral resolution with
/// right-endpoint tags. The mesh starts at L_a - mesh_width (so the first
/// increment captures the jump at L_a) and its final point is pinned to U_a.
SymMatrix func_calc_rs(const SymMatrix& a, const RealFunction& f, double mesh_width);

/// f(a) through uniform polynomial approximation: the Bernstein fit of f on
/// [L_a, U_a] evaluated at a by a nested convex recursion in the commutative
/// subalgebra generated by a. When f carries polynomial coefficients of
/// degree <= degree, the polynomial is evaluated exactly instead.
SymMatrix func_calc_poly(const SymMatrix& a, const RealFunction& f, int degree);

/// Spectrum of f(a); equals the image {f(lambda)} of spec(a) as a set.
SpectrumSet spectral_mapping(const SymMatrix& a, const RealFunction& f);

/// Joint representation of a commuting pair: the finite Stone space from the
/// joint eigenbasis, the diagonal value vector g of b, and the image of b's
/// spectral resolution, each breakpoint mapped to the indicator of
/// {x : g(x) <= lambda}.
struct SpectralPushforward {
    DiscreteSpace atoms;
    FnElement diagonal;                                   // g = values of b per atom
    std::vector<std::pair<double, CharElement>> resolution_image;
};

/// Requires commutes(a, b). Verifies that the change of basis maps each
/// spectral projection of b onto the corresponding indicator; a mismatch is
/// a numerical fault (DiagnosticError).
SpectralPushforward pushforward_resolution(const SymMatrix& a, const SymMatrix& b);

} // namespace sagh
