// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 10 drives the CLI binary whose path arrives as argv[1].

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "sagh/element_ops.hpp"
#include "sagh/errors.hpp"
#include "sagh/func_calc.hpp"
#include "sagh/json_io.hpp"
#include "sagh/sampling.hpp"
#include "sagh/spectral.hpp"
#include "sagh/states.hpp"
#include "sagh/tribe.hpp"

using namespace sagh;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", number, name.c_str(), detail.c_str());
    if (!pass) {
        ++g_failures;
    }
}

// 1. Spectral reconstruction through the carrier formula, 200 matrices,
//    dim <= 8, residual <= 1e-8 * max(1, ||a||), under 10 seconds.
void criterion_reconstruction() {
    Rng rng(101);
    auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    int pass = 0;
    const int total = 200;
    for (int c = 0; c < total; ++c) {
        int dim = rng.uniform_int(1, 8);
        SymMatrix a = random_symmetric(rng, dim, rng.uniform(0.25, 2.0));
        SpectralResolution res = spectral_resolution(a);
        double resid = reconstruction_residual(a, res);
        double bound = 1e-8 * std::max(1.0, order_unit_norm(a));
        worst = std::max(worst, resid / bound);
        if (resid <= bound) {
            ++pass;
        }
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = pass == total && seconds <= 10.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail), "%d/%d within 1e-8*max(1,||a||), worst ratio %.3g, %.2fs",
                  pass, total, worst, seconds);
    report(1, "spectral reconstruction via p=1-((a-l)+)dagger", ok, detail);
}

// 2. Riemann-Stieltjes route matches the eigen route within Lip(f)*mesh at
//    mesh 1e-3, and still meets the halved bound at mesh 5e-4.
void criterion_rs_integral() {
    Rng rng(102);
    const double mesh = 1e-3;
    int pass = 0;
    const int total = 50;
    double worst_ratio = 0.0;
    for (int c = 0; c < total; ++c) {
        int dim = rng.uniform_int(2, 6);
        SymMatrix a = random_symmetric(rng, dim);
        SpectrumSet s = spectrum(a);
        double lo = s.points.front();
        double hi = s.points.back();
        RealFunction choices[3] = {fns::abs(), fns::exp(), fns::square()};
        const RealFunction& f = choices[c % 3];
        double lip = f.name == "abs"   ? 1.0
                     : f.name == "exp" ? std::exp(hi)
                                       : 2.0 * std::max(std::fabs(lo), std::fabs(hi));
        SymMatrix exact = func_calc_eigen(a, f);
        double err_full = order_unit_norm(exact - func_calc_rs(a, f, mesh));
        double err_half = order_unit_norm(exact - func_calc_rs(a, f, 0.5 * mesh));
        bool ok = err_full <= lip * mesh && err_half <= lip * 0.5 * mesh;
        worst_ratio = std::max(worst_ratio, err_full / (lip * mesh));
        worst_ratio = std::max(worst_ratio, err_half / (lip * 0.5 * mesh));
        if (ok) {
            ++pass;
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "%d/%d within Lip*mesh at 1e-3 and within the halved bound at 5e-4, "
                  "worst ratio %.3g",
                  pass, total, worst_ratio);
    report(2, "riemann-stieltjes functional calculus", pass == total, detail);
}

// 3. xi_a((-inf, lambda]) equals the spectral resolution at 20 probes per
//    matrix, 100 matrices, within 1e-9.
void criterion_observable() {
    Rng rng(103);
    int pass = 0;
    const int total = 100;
    double worst = 0.0;
    for (int c = 0; c < total; ++c) {
        int dim = rng.uniform_int(1, 8);
        SymMatrix a = random_symmetric(rng, dim);
        Observable xi = observable_of(a);
        SpectralResolution res = spectral_resolution(a);
        std::vector<double> probes;
        for (size_t k = 0; k < res.breakpoints.size(); ++k) {
            probes.push_back(res.breakpoints[k]);
            if (k + 1 < res.breakpoints.size()) {
                probes.push_back(0.5 * (res.breakpoints[k] + res.breakpoints[k + 1]));
            }
        }
        probes.push_back(res.lower_bound - 1.0); // -inf proxy
        probes.push_back(res.upper_bound + 1.0); // +inf proxy
        while (probes.size() < 20) {
            probes.push_back(rng.uniform(res.lower_bound - 1.5, res.upper_bound + 1.5));
        }
        bool ok = true;
        for (double lambda : probes) {
            double gap = max_abs_diff(measure_apply(xi, BorelSetExpr::half_line(lambda)).matrix(),
                                      res.value_at(lambda).matrix());
            worst = std::max(worst, gap);
            ok = ok && gap <= 1e-9;
        }
        if (ok) {
            ++pass;
        }
    }
    char detail[120];
    std::snprintf(detail, sizeof(detail), "%d/%d matrices, 20 probes each, worst gap %.3g", pass,
                  total, worst);
    report(3, "observable equals the spectral resolution on half-lines", pass == total, detail);
}

// 4. Expectation through the observable equals direct evaluation within
//    1e-9 on 200 trace-state / matrix pairs.
void criterion_expectation() {
    Rng rng(104);
    int pass = 0;
    const int total = 200;
    double worst = 0.0;
    for (int c = 0; c < total; ++c) {
        int dim = rng.uniform_int(1, 8);
        SymMatrix a = random_symmetric(rng, dim);
        State rho = State::trace_form(random_density(rng, dim));
        double gap = std::fabs(expectation(rho, a) - evaluate(rho, a));
        worst = std::max(worst, gap);
        if (gap <= 1e-9) {
            ++pass;
        }
    }
    char detail[120];
    std::snprintf(detail, sizeof(detail), "%d/%d pairs, worst gap %.3g", pass, total, worst);
    report(4, "expectation integral equals direct evaluation", pass == total, detail);
}

// 5. The four extremality criteria agree on every rational-grid state with
//    denominator <= 8 on up to 4 atoms.
void criterion_extremal() {
    int states = 0;
    bool ok = true;
    std::string first_failure;
    for (int n = 1; n <= 4 && ok; ++n) {
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) {
            labels.push_back("x" + std::to_string(i + 1));
        }
        DiscreteSpace space(labels);
        for (int denom = 1; denom <= 8 && ok; ++denom) {
            std::vector<int> ks(static_cast<size_t>(n), 0);
            std::function<void(int, int)> scan = [&](int pos, int remaining) {
                if (!ok) {
                    return;
                }
                if (pos == n - 1) {
                    ks[static_cast<size_t>(pos)] = remaining;
                    std::vector<double> w(static_cast<size_t>(n));
                    for (int i = 0; i < n; ++i) {
                        w[static_cast<size_t>(i)] =
                            static_cast<double>(ks[static_cast<size_t>(i)]) / denom;
                    }
                    ++states;
                    try {
                        is_extremal_commutative(State::weight_form(space, w));
                    } catch (const std::exception& e) {
                        ok = false;
                        first_failure = e.what();
                    }
                    return;
                }
                for (int k = 0; k <= remaining; ++k) {
                    ks[static_cast<size_t>(pos)] = k;
                    scan(pos + 1, remaining - k);
                }
            };
            scan(0, denom);
        }
    }
    char detail[200];
    if (ok) {
        std::snprintf(detail, sizeof(detail), "%d grid states scanned, zero disagreements", states);
    } else {
        std::snprintf(detail, sizeof(detail), "disagreement: %s", first_failure.c_str());
    }
    report(5, "extremal-state four-way equivalence (exhaustive grid)", ok, detail);
}

// 6. Quotient morphism laws hold exactly on 100 ground sets x 100 function
//    pairs: linear, unital, multiplicative, carrier- and sup-preserving,
//    surjective, regular.
void criterion_ls_morphism() {
    Rng rng(106);
    int pass = 0;
    const int total = 100;
    for (int g = 0; g < total; ++g) {
        GroundSet ground = random_ground_set(rng, 8, 4);
        QuotientMorphism h(ground);
        bool ok = true;
        for (int c = 0; c < 100 && ok; ++c) {
            GroundFunction f = random_dyadic_ground_fn(rng, ground, 4, 4.0);
            GroundFunction k = random_dyadic_ground_fn(rng, ground, 4, 4.0);
            double alpha = rng.dyadic(2, 4.0);

            FnElement lin_lhs = h.apply(alpha * f + k);
            FnElement lin_rhs = alpha * h.apply(f) + h.apply(k);
            FnElement mul_lhs = h.apply(pointwise_mul(f, k));
            FnElement mul_rhs = pointwise_mul(h.apply(f), h.apply(k));
            FnElement sup_lhs = h.apply(pointwise_max(f, k));
            FnElement sup_rhs = lattice_ops(h.apply(f), h.apply(k)).sup;
            FnElement car_lhs = h.apply(support_indicator(f));
            FnElement hf = h.apply(f);
            for (int i = 0; i < lin_lhs.size(); ++i) {
                ok = ok && lin_lhs.at(i) == lin_rhs.at(i);
                ok = ok && mul_lhs.at(i) == mul_rhs.at(i);
                ok = ok && sup_lhs.at(i) == sup_rhs.at(i);
                ok = ok && car_lhs.at(i) == (hf.at(i) != 0.0 ? 1.0 : 0.0);
            }
            FnElement one = h.apply(GroundFunction::one(ground));
            for (int i = 0; i < one.size(); ++i) {
                ok = ok && one.at(i) == 1.0;
            }
            // surjectivity via the zero-extension section
            FnElement back = h.apply(h.extend(hf));
            for (int i = 0; i < back.size(); ++i) {
                ok = ok && back.at(i) == hf.at(i);
            }
            ok = ok && h.regular_at(f) && h.regular_at(k);
        }
        if (ok) {
            ++pass;
        }
    }
    char detail[120];
    std::snprintf(detail, sizeof(detail), "%d/%d ground sets, 100 exact pairs each", pass, total);
    report(6, "quotient morphism audit (exact)", pass == total, detail);
}

// 7. Commuting projection pairs satisfy the product laws within 1e-9 (500
//    pairs); comparable pairs satisfy the orthomodular law within 1e-8
//    (500 pairs).
void criterion_oml() {
    Rng rng(107);
    int commuting_pass = 0;
    const int total = 500;
    for (int c = 0; c < total; ++c) {
        int dim = rng.uniform_int(2, 6);
        auto [p, q] = random_commuting_projections(rng, dim);
        SymMatrix pq = sym_part_of_product(p.matrix(), q.matrix());
        bool idem = max_abs_diff(sym_part_of_product(pq, pq), pq) <= 1e-9;
        bool below = leq(pq.with_tol(1e-9), p.matrix()) && leq(pq.with_tol(1e-9), q.matrix());
        bool order = leq(p.matrix().with_tol(1e-9), q.matrix()) ==
                     (max_abs_diff(p.matrix(), pq) <= 1e-9);
        bool meets = max_abs_diff(meet(p, q).matrix(), pq) <= 1e-9;
        if (idem && below && order && meets) {
            ++commuting_pass;
        }
    }
    int orthomodular_pass = 0;
    for (int c = 0; c < total; ++c) {
        int dim = rng.uniform_int(2, 6);
        auto [p, q] = random_comparable_projections(rng, dim);
        Projection rhs = join(p, meet(q, complement(p)));
        if (max_abs_diff(q.matrix(), rhs.matrix()) <= 1e-8) {
            ++orthomodular_pass;
        }
    }
    char detail[140];
    std::snprintf(detail, sizeof(detail), "commuting product laws %d/%d, orthomodular %d/%d",
                  commuting_pass, total, orthomodular_pass, total);
    report(7, "orthomodular and commuting-projection laws",
           commuting_pass == total && orthomodular_pass == total, detail);
}

// 8. Norm equals the spectral radius within 1e-9; invert throws exactly
//    when min |spec| < eps_invert.
void criterion_norm_invert() {
    Rng rng(108);
    int norm_pass = 0;
    int gate_pass = 0;
    const int total = 200;
    for (int c = 0; c < total; ++c) {
        int dim = rng.uniform_int(1, 8);
        // a third of the cases force a spectral point near or below the gate
        std::vector<double> eigs(static_cast<size_t>(dim));
        for (double& v : eigs) {
            v = rng.uniform(-2.0, 2.0);
        }
        int mode = c % 3;
        if (mode == 1) {
            eigs[0] = 0.0;
        } else if (mode == 2) {
            eigs[0] = rng.uniform(-1e-12, 1e-12);
        }
        SymMatrix a = random_with_eigenvalues(rng, eigs);

        SpectrumSet s = spectrum(a);
        double maxabs = 0.0;
        double minabs = std::fabs(s.points.front());
        for (double p : s.points) {
            maxabs = std::max(maxabs, std::fabs(p));
            minabs = std::min(minabs, std::fabs(p));
        }
        if (std::fabs(order_unit_norm(a) - maxabs) <= 1e-9) {
            ++norm_pass;
        }
        bool expect_throw = minabs < eps_invert(a);
        bool threw = false;
        try {
            invert(a);
        } catch (const NotInvertibleError&) {
            threw = true;
        }
        if (threw == expect_throw) {
            ++gate_pass;
        }
    }
    char detail[140];
    std::snprintf(detail, sizeof(detail), "norm identity %d/%d, invert gate %d/%d", norm_pass,
                  total, gate_pass, total);
    report(8, "norm-spectrum identity and invertibility gate",
           norm_pass == total && gate_pass == total, detail);
}

// 9. Dedekind's law, the closed-form meet/join, and the norm-vs-order
//    equivalence hold bitwise on 1000 dyadic-rational functions.
void criterion_commutative() {
    Rng rng(109);
    int pass = 0;
    const int total = 1000;
    for (int c = 0; c < total; ++c) {
        int n = rng.uniform_int(1, 8);
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) {
            labels.push_back("x" + std::to_string(i + 1));
        }
        DiscreteSpace space(labels);
        FnElement f = random_dyadic_fn(rng, space, 3, 8.0);
        FnElement g = random_dyadic_fn(rng, space, 3, 8.0);
        LatticePair direct = lattice_ops(f, g);
        LatticePair closed = abs_closed_form(f, g);
        FnElement dedekind_lhs = direct.sup + direct.inf;
        FnElement dedekind_rhs = f + g;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            ok = ok && dedekind_lhs.at(i) == dedekind_rhs.at(i);
            ok = ok && direct.sup.at(i) == closed.sup.at(i);
            ok = ok && direct.inf.at(i) == closed.inf.at(i);
        }
        double eps = std::fabs(rng.dyadic(3, 8.0));
        ok = ok && (fn_leq(pointwise_abs(f), FnElement::constant(space, eps)) ==
                    (sup_norm(f) <= eps));
        if (ok) {
            ++pass;
        }
    }
    char detail[120];
    std::snprintf(detail, sizeof(detail), "%d/%d functions exact", pass, total);
    report(9, "commutative vector-lattice laws (exact)", pass == total, detail);
}

// 10. Byte-identical axiom-audit reports across two consecutive runs with a
//     fixed seed.
void criterion_determinism(const std::string& cli_path) {
    if (cli_path.empty()) {
        report(10, "axiom-audit determinism", false, "CLI path not supplied");
        return;
    }
    std::string args = " axiom-audit --seed 20240101 --cases 120 --dim-max 5 --space-max 4";
    std::string run1 = cli_path + args + " > audit_run1.txt 2> audit_err1.txt";
    std::string run2 = cli_path + args + " > audit_run2.txt 2> audit_err2.txt";
    int rc1 = std::system(run1.c_str());
    int rc2 = std::system(run2.c_str());
    std::string out1;
    std::string out2;
    try {
        out1 = read_text_file("audit_run1.txt");
        out2 = read_text_file("audit_run2.txt");
    } catch (const InputError&) {
        report(10, "axiom-audit determinism", false, "could not read audit output");
        return;
    }
    bool exit_ok = WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc2) == 0;
    bool identical = !out1.empty() && out1 == out2;
    char detail[140];
    std::snprintf(detail, sizeof(detail), "exit codes %d/%d, %zu bytes, byte-identical: %s",
                  WEXITSTATUS(rc1), WEXITSTATUS(rc2), out1.size(), identical ? "yes" : "no");
    report(10, "axiom-audit determinism", exit_ok && identical, detail);
}

} // namespace

int main(int argc, char** argv) {
    std::string cli_path = argc > 1 ? argv[1] : "";
    criterion_reconstruction();
    criterion_rs_integral();
    criterion_observable();
    criterion_expectation();
    criterion_extremal();
    criterion_ls_morphism();
    criterion_oml();
    criterion_norm_invert();
    criterion_commutative();
    criterion_determinism(cli_path);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria satisfied\n");
    return 0;
}
