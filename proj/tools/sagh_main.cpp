// Command-line surface for the synaptic/GH-algebra toolkit: spectral
// computations, cross-validated functional calculus, lattice operations,
// quotient audits, and the randomized axiom suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sagh/audit.hpp"
#include "sagh/element_ops.hpp"
#include "sagh/errors.hpp"
#include "sagh/func_calc.hpp"
#include "sagh/json_io.hpp"
#include "sagh/sampling.hpp"
#include "sagh/spectral.hpp"
#include "sagh/states.hpp"
#include "sagh/tribe.hpp"

namespace {

using namespace sagh;

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitInputError = 2;

RealFunction function_from_spec(const std::string& spec) {
    if (spec == "abs") {
        return fns::abs();
    }
    if (spec == "exp") {
        return fns::exp();
    }
    if (spec == "square") {
        return fns::square();
    }
    if (spec == "identity") {
        return fns::identity();
    }
    if (spec.rfind("clamp:", 0) == 0) {
        double lo = 0.0;
        double hi = 0.0;
        if (std::sscanf(spec.c_str() + 6, "%lf,%lf", &lo, &hi) != 2) {
            throw InputError("funcalc: clamp spec must be clamp:lo,hi");
        }
        return fns::clamp(lo, hi);
    }
    if (spec.rfind("poly:", 0) == 0) {
        std::vector<double> coeffs;
        std::stringstream ss(spec.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                coeffs.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw InputError("funcalc: bad polynomial coefficient '" + item + "'");
            }
        }
        if (coeffs.empty()) {
            throw InputError("funcalc: poly spec needs at least one coefficient");
        }
        return fns::poly(std::move(coeffs));
    }
    throw InputError("funcalc: unknown function '" + spec +
                     "' (expected abs|exp|square|identity|clamp:lo,hi|poly:c0,c1,...)");
}

SymMatrix load_matrix(const std::string& path, double tol_override) {
    return load_matrix_file(path, tol_override);
}

void print_spectrum_report(const SymMatrix& a, const std::string& format) {
    SpectrumSet s = spectrum(a);
    SpectralResolution res = spectral_resolution(a);
    double resid = reconstruction_residual(a, res);

    if (format == "json") {
        std::ostringstream out;
        out << "{\"points\": [";
        for (size_t i = 0; i < s.points.size(); ++i) {
            out << (i == 0 ? "" : ", ") << format_real(s.points[i]);
        }
        out << "], \"multiplicities\": [";
        for (size_t i = 0; i < s.multiplicities.size(); ++i) {
            out << (i == 0 ? "" : ", ") << s.multiplicities[i];
        }
        out << "], \"lower_bound\": " << format_real(res.lower_bound)
            << ", \"upper_bound\": " << format_real(res.upper_bound)
            << ", \"norm\": " << format_real(order_unit_norm(a))
            << ", \"reconstruction_residual\": " << format_real(resid) << "}";
        std::cout << out.str() << "\n";
    } else if (format == "csv") {
        std::cout << "point,multiplicity\n";
        for (size_t i = 0; i < s.points.size(); ++i) {
            std::cout << format_real(s.points[i]) << "," << s.multiplicities[i] << "\n";
        }
        std::cout << "residual," << format_real(resid) << "\n";
    } else {
        std::cout << "spectrum:";
        for (size_t i = 0; i < s.points.size(); ++i) {
            std::cout << " " << format_real(s.points[i]) << "(x" << s.multiplicities[i] << ")";
        }
        std::cout << "\nL_a = " << format_real(res.lower_bound)
                  << ", U_a = " << format_real(res.upper_bound)
                  << "\nnorm = " << format_real(order_unit_norm(a))
                  << "\nreconstruction residual = " << format_real(resid) << "\n";
    }
}

void print_resolution_report(const SymMatrix& a, const std::string& format) {
    SpectralResolution res = spectral_resolution(a);
    double resid = reconstruction_residual(a, res);
    if (format == "json") {
        std::ostringstream out;
        out << "{\"breakpoints\": [";
        for (size_t i = 0; i < res.breakpoints.size(); ++i) {
            out << (i == 0 ? "" : ", ") << format_real(res.breakpoints[i]);
        }
        out << "], \"projections\": [";
        for (size_t i = 0; i < res.projections.size(); ++i) {
            out << (i == 0 ? "" : ", ") << projection_to_json(res.projections[i]);
        }
        out << "], \"reconstruction_residual\": " << format_real(resid) << "}";
        std::cout << out.str() << "\n";
    } else {
        for (size_t i = 0; i < res.breakpoints.size(); ++i) {
            std::cout << "p(" << format_real(res.breakpoints[i])
                      << ") rank " << res.projections[i].rank() << " = "
                      << projection_to_json(res.projections[i]) << "\n";
        }
        std::cout << "reconstruction residual = " << format_real(resid) << "\n";
    }
}

int run_funcalc(const SymMatrix& a, const RealFunction& f, double mesh, int degree,
                const std::string& format) {
    SymMatrix via_eigen = func_calc_eigen(a, f);
    SymMatrix via_rs = func_calc_rs(a, f, mesh);
    SymMatrix via_poly = func_calc_poly(a, f, degree);
    double eigen_rs = order_unit_norm(via_eigen - via_rs);
    double eigen_poly = order_unit_norm(via_eigen - via_poly);
    double rs_poly = order_unit_norm(via_rs - via_poly);

    if (format == "json") {
        std::cout << "{\"result\": " << matrix_to_json(via_eigen)
                  << ", \"agreement\": {\"eigen_vs_rs\": " << format_real(eigen_rs)
                  << ", \"eigen_vs_poly\": " << format_real(eigen_poly)
                  << ", \"rs_vs_poly\": " << format_real(rs_poly) << "}}\n";
    } else {
        std::cout << "f(a) = " << matrix_to_json(via_eigen) << "\n"
                  << "cross-validation: eigen vs rs = " << format_real(eigen_rs)
                  << ", eigen vs poly = " << format_real(eigen_poly)
                  << ", rs vs poly = " << format_real(rs_poly) << "\n";
    }
    return kExitOk;
}

int run_ls_audit(const GroundSet& ground, uint64_t seed, int cases, const std::string& format) {
    QuotientMorphism h(ground);
    Rng rng(seed);
    int regular_pass = 0;
    int morphism_pass = 0;
    int kernel_members = 0;
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        GroundFunction f = random_dyadic_ground_fn(rng, ground, 4, 4.0);
        GroundFunction g = random_dyadic_ground_fn(rng, ground, 4, 4.0);
        bool ok = true;
        FnElement sum = h.apply(f + g);
        FnElement parts = h.apply(f) + h.apply(g);
        for (int i = 0; i < sum.size(); ++i) {
            ok = ok && sum.at(i) == parts.at(i);
        }
        FnElement prod = h.apply(pointwise_mul(f, g));
        FnElement prod_parts = pointwise_mul(h.apply(f), h.apply(g));
        for (int i = 0; i < prod.size(); ++i) {
            ok = ok && prod.at(i) == prod_parts.at(i);
        }
        morphism_pass += ok ? 1 : 0;
        regular_pass += h.regular_at(f) ? 1 : 0;
        kernel_members += h.kernel_contains(f) ? 1 : 0;
        failures += ok && h.regular_at(f) ? 0 : 1;
    }
    // Surjectivity spot check.
    FnElement target(h.target_space(),
                     std::vector<double>(static_cast<size_t>(h.target_space().size()), 0.5));
    bool surjective = true;
    FnElement back = h.apply(h.extend(target));
    for (int i = 0; i < back.size(); ++i) {
        surjective = surjective && back.at(i) == target.at(i);
    }
    failures += surjective ? 0 : 1;

    // Constructed kernel probe: the indicator of the negligible part must
    // vanish under h and pass the regularity biconditional.
    bool kernel_ok = true;
    if (!ground.null_part.empty()) {
        GroundFunction null_bump = GroundFunction::indicator(ground, ground.null_part);
        kernel_ok = h.kernel_contains(null_bump) && sup_norm(h.apply(null_bump)) == 0.0 &&
                    h.regular_at(null_bump);
        kernel_members += kernel_ok ? 1 : 0;
    }
    failures += kernel_ok ? 0 : 1;

    if (format == "json") {
        std::cout << "{\"atoms\": " << ground.atoms.size()
                  << ", \"null\": " << ground.null_part.size() << ", \"cases\": " << cases
                  << ", \"morphism_pass\": " << morphism_pass
                  << ", \"regular_pass\": " << regular_pass
                  << ", \"kernel_members_seen\": " << kernel_members
                  << ", \"surjective\": " << (surjective ? "true" : "false") << "}\n";
    } else {
        std::cout << "quotient audit over " << ground.atoms.size() << " atoms / "
                  << ground.null_part.size() << " negligible labels\n"
                  << "  morphism laws: " << morphism_pass << "/" << cases << "\n"
                  << "  regularity:    " << regular_pass << "/" << cases << "\n"
                  << "  kernel members checked: " << kernel_members << "\n"
                  << "  surjectivity section: " << (surjective ? "ok" : "FAILED") << "\n";
    }
    return failures == 0 ? kExitOk : kExitLawFailure;
}

int run_lattice(const Projection& p, const Projection& q, const std::string& format) {
    Projection m = meet(p, q);
    Projection j = join(p, q);
    bool orth = orthogonal(p, q);
    bool compat = mackey_compatible(p, q);
    if (format == "json") {
        std::cout << "{\"meet\": " << projection_to_json(m) << ", \"join\": " << projection_to_json(j)
                  << ", \"complement_p\": " << projection_to_json(complement(p))
                  << ", \"orthogonal\": " << (orth ? "true" : "false")
                  << ", \"compatible\": " << (compat ? "true" : "false") << "}\n";
    } else {
        std::cout << "meet rank " << m.rank() << ": " << projection_to_json(m) << "\n"
                  << "join rank " << j.rank() << ": " << projection_to_json(j) << "\n"
                  << "orthogonal: " << (orth ? "yes" : "no")
                  << ", Mackey compatible: " << (compat ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"synaptic/GH-algebra toolkit"};
    app.require_subcommand(1);
    // Global flags remain valid after a subcommand name.
    app.fallthrough();

    std::string format = "pretty";
    double tol_override = 0.0;
    app.add_option("--format", format, "output format: json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--tol", tol_override, "override the tolerance of loaded matrices");

    std::string matrix_path;
    std::string state_path;
    std::string ground_path;
    std::string proj_path_p;
    std::string proj_path_q;
    std::string fn_spec = "square";
    std::string borel_spec;
    std::string witness_file = "axiom_audit_witnesses.json";
    double mesh = 1e-3;
    int degree = 64;
    uint64_t seed = 1;
    int cases = 500;
    int dim_max = 6;
    int space_max = 4;
    bool inject_corrupt = false;

    CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "spectrum, bounds and residual");
    cmd_spectrum->add_option("matrix", matrix_path, "matrix JSON file")->required();

    CLI::App* cmd_resolution = app.add_subcommand("resolution", "spectral resolution steps");
    cmd_resolution->add_option("matrix", matrix_path, "matrix JSON file")->required();

    CLI::App* cmd_funcalc = app.add_subcommand("funcalc", "f(a) with cross-validation");
    cmd_funcalc->add_option("matrix", matrix_path, "matrix JSON file")->required();
    cmd_funcalc->add_option("--fn", fn_spec, "abs|exp|square|identity|clamp:lo,hi|poly:c0,c1,...");
    cmd_funcalc->add_option("--mesh", mesh, "Riemann-Stieltjes mesh width");
    cmd_funcalc->add_option("--degree", degree, "Bernstein degree");

    CLI::App* cmd_observable = app.add_subcommand("observable", "spectral measure of an element");
    cmd_observable->add_option("matrix", matrix_path, "matrix JSON file")->required();
    cmd_observable->add_option("--borel", borel_spec, "Borel set JSON to apply");

    CLI::App* cmd_expect = app.add_subcommand("expect", "expectation of the observable in a state");
    cmd_expect->add_option("state", state_path, "state JSON file")->required();
    cmd_expect->add_option("matrix", matrix_path, "matrix JSON file")->required();

    CLI::App* cmd_ls = app.add_subcommand("ls-audit", "quotient morphism audit over a ground set");
    cmd_ls->add_option("ground", ground_path, "ground set JSON file")->required();
    cmd_ls->add_option("--seed", seed, "sampling seed");
    cmd_ls->add_option("--cases", cases, "sample count");

    CLI::App* cmd_lattice = app.add_subcommand("lattice", "meet/join/orthogonality of projections");
    cmd_lattice->add_option("p", proj_path_p, "projection JSON file")->required();
    cmd_lattice->add_option("q", proj_path_q, "projection JSON file")->required();

    CLI::App* cmd_audit = app.add_subcommand("axiom-audit", "randomized law suite");
    cmd_audit->add_option("--seed", seed, "sampling seed");
    cmd_audit->add_option("--cases", cases, "cases per law");
    cmd_audit->add_option("--dim-max", dim_max, "maximum matrix dimension");
    cmd_audit->add_option("--space-max", space_max, "maximum atoms in the extremality scan");
    cmd_audit->add_option("--witness-file", witness_file, "replay file for failing instances");
    cmd_audit->add_flag("--inject-corrupt-projection", inject_corrupt,
                        "corrupt one projection case to exercise the failure path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_spectrum->parsed()) {
            print_spectrum_report(load_matrix(matrix_path, tol_override), format);
            return kExitOk;
        }
        if (cmd_resolution->parsed()) {
            print_resolution_report(load_matrix(matrix_path, tol_override), format);
            return kExitOk;
        }
        if (cmd_funcalc->parsed()) {
            return run_funcalc(load_matrix(matrix_path, tol_override), function_from_spec(fn_spec),
                               mesh, degree, format);
        }
        if (cmd_observable->parsed()) {
            SymMatrix a = load_matrix(matrix_path, tol_override);
            Observable xi = observable_of(a);
            if (!borel_spec.empty()) {
                Projection result = measure_apply(xi, parse_borel_json(borel_spec));
                std::cout << projection_to_json(result) << "\n";
            } else {
                for (size_t k = 0; k < xi.support.points.size(); ++k) {
                    std::cout << "xi({" << format_real(xi.support.points[k])
                              << "}) = " << projection_to_json(xi.eigenprojections[k]) << "\n";
                }
            }
            return kExitOk;
        }
        if (cmd_expect->parsed()) {
            State rho = load_state_file(state_path);
            SymMatrix a = load_matrix(matrix_path, tol_override);
            double via_observable = expectation(rho, a);
            double direct = evaluate(rho, a);
            std::cout << "expectation = " << format_real(via_observable)
                      << ", direct = " << format_real(direct)
                      << ", delta = " << format_real(std::fabs(via_observable - direct)) << "\n";
            return kExitOk;
        }
        if (cmd_ls->parsed()) {
            return run_ls_audit(load_ground_set_file(ground_path), seed, cases, format);
        }
        if (cmd_lattice->parsed()) {
            Projection p = load_projection_file(proj_path_p);
            Projection q = load_projection_file(proj_path_q);
            return run_lattice(p, q, format);
        }
        if (cmd_audit->parsed()) {
            AuditConfig config;
            config.seed = seed;
            config.cases = cases;
            config.dim_max = dim_max;
            config.space_max = space_max;
            config.inject_corrupt_projection = inject_corrupt;
            AuditReport report = run_axiom_audit(config);
            std::cout << render_report(report, format);
            if (!report.all_pass()) {
                std::ofstream out(witness_file, std::ios::binary);
                out << witness_payload(report);
                std::cerr << "witnesses written to " << witness_file << "\n";
                return kExitLawFailure;
            }
            return kExitOk;
        }
    } catch (const DiagnosticError& e) {
        std::cerr << "diagnostic failure: " << e.what() << "\n";
        return kExitLawFailure;
    } catch (const NotInvertibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
