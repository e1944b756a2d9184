#include "sagh/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "sagh/eigen.hpp"
#include "sagh/element_ops.hpp"
#include "sagh/errors.hpp"
#include "sagh/func_calc.hpp"
#include "sagh/json_io.hpp"
#include "sagh/sampling.hpp"
#include "sagh/spectral.hpp"
#include "sagh/states.hpp"
#include "sagh/tribe.hpp"

namespace sagh {

namespace {

constexpr size_t kMaxWitnesses = 3;

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h = (h ^ c) * 0x100000001b3ull;
    }
    return h;
}

class LawRunner {
public:
    LawRunner(const AuditConfig& cfg, std::vector<LawResult>& out) : cfg_(cfg), out_(out) {}

    /// `body` returns true on pass and may set `witness` on failure.
    void run(const std::string& id, int cases,
             const std::function<bool(Rng&, std::string&)>& body) {
        LawResult result;
        result.id = id;
        // Stable substream per law: independent of other laws' draws.
        uint64_t law_seed = cfg_.seed ^ fnv1a(id);
        for (int c = 0; c < cases; ++c) {
            Rng rng(law_seed + static_cast<uint64_t>(c) * 0x51ed2701u);
            std::string witness;
            bool ok = false;
            try {
                ok = body(rng, witness);
            } catch (const std::exception& e) {
                witness = std::string("exception: ") + e.what();
            }
            if (ok) {
                ++result.pass;
            } else {
                ++result.fail;
                if (result.witnesses.size() < kMaxWitnesses) {
                    result.witnesses.push_back("case " + std::to_string(c) +
                                               (witness.empty() ? "" : ": " + witness));
                }
            }
        }
        out_.push_back(std::move(result));
    }

    int dim(Rng& rng) const { return rng.uniform_int(1, cfg_.dim_max); }

private:
    const AuditConfig& cfg_;
    std::vector<LawResult>& out_;
};

double norm_bound(const SymMatrix& a) {
    return 1e-8 * std::max(1.0, order_unit_norm(a));
}

} // namespace

bool AuditReport::all_pass() const {
    for (const LawResult& l : laws) {
        if (l.fail > 0) {
            return false;
        }
    }
    return true;
}

int AuditReport::total_pass() const {
    int t = 0;
    for (const LawResult& l : laws) {
        t += l.pass;
    }
    return t;
}

int AuditReport::total_fail() const {
    int t = 0;
    for (const LawResult& l : laws) {
        t += l.fail;
    }
    return t;
}

AuditReport run_axiom_audit(const AuditConfig& cfg) {
    AuditReport report;
    report.config = cfg;
    LawRunner laws(cfg, report.laws);
    const int n_cases = cfg.cases;

    // ---- element laws on the matrix model ----

    laws.run("sa2_square_positive", n_cases, [&](Rng& rng, std::string& w) {
        SymMatrix a = random_symmetric(rng, laws.dim(rng));
        if (leq(SymMatrix::zero(a.dim()), jordan_product(a, a))) {
            return true;
        }
        w = matrix_to_json(a);
        return false;
    });

    laws.run("sa3_quadratic_positive", n_cases, [&](Rng& rng, std::string& w) {
        SymMatrix a = random_symmetric(rng, laws.dim(rng));
        SymMatrix c = random_symmetric(rng, a.dim());
        SymMatrix b = jordan_product(c, c); // b >= 0
        if (leq(SymMatrix::zero(a.dim()), quadratic_map(a, b))) {
            return true;
        }
        w = matrix_to_json(a);
        return false;
    });

    laws.run("sa4_degenerate_product", n_cases, [&](Rng& rng, std::string& w) {
        // a and b share a basis, b supported exactly on the kernel of a, so
        // aba = 0 must force ab = 0.
        int d = std::max(2, laws.dim(rng));
        std::vector<double> da(static_cast<size_t>(d), 0.0);
        std::vector<double> db(static_cast<size_t>(d), 0.0);
        int split = rng.uniform_int(1, d - 1);
        for (int k = 0; k < split; ++k) {
            da[static_cast<size_t>(k)] = rng.uniform(0.2, 2.0);
        }
        for (int k = split; k < d; ++k) {
            db[static_cast<size_t>(k)] = rng.uniform(0.2, 2.0);
        }
        uint64_t basis_seed = rng.next_u64();
        Rng r1(basis_seed);
        Rng r2(basis_seed);
        SymMatrix a = random_with_eigenvalues(r1, da);
        SymMatrix b = random_with_eigenvalues(r2, db);
        double aba = order_unit_norm(quadratic_map(a, b));
        double ab = max_abs(product(a, b));
        if (aba <= a.tol() && ab > 10.0 * a.tol()) {
            w = "aba=" + format_real(aba) + " ab=" + format_real(ab) + " " + matrix_to_json(a);
            return false;
        }
        return true;
    });

    laws.run("sqrt_identity", n_cases, [&](Rng& rng, std::string& w) {
        SymMatrix c = random_symmetric(rng, laws.dim(rng));
        SymMatrix a = jordan_product(c, c);
        SymMatrix r = sqrt_psd(a);
        bool ok = leq(SymMatrix::zero(a.dim()), r) &&
                  max_abs_diff(jordan_product(r, r), a) <= 10.0 * norm_bound(a) &&
                  commutes(r, a);
        if (!ok) {
            w = matrix_to_json(a);
        }
        return ok;
    });

    laws.run("sqrt_unique_perturb", n_cases, [&](Rng& rng, std::string& w) {
        // Sign-flipped roots square back to a but must fail positivity, and
        // no PSD perturbation of the principal root stays a root.
        int d = laws.dim(rng);
        std::vector<double> eigs(static_cast<size_t>(d));
        for (double& v : eigs) {
            v = rng.uniform(0.1, 2.0);
        }
        SymMatrix a = random_with_eigenvalues(rng, eigs);
        SymMatrix r = sqrt_psd(a);
        EigenSystem es = jacobi_eigen(r);
        std::vector<double> flipped(es.values);
        flipped[static_cast<size_t>(rng.uniform_int(0, d - 1))] *= -1.0;
        SymMatrix s = eigen_rebuild(es, flipped, a.tol());
        bool flip_squares = max_abs_diff(jordan_product(s, s), a) <= 10.0 * norm_bound(a);
        bool flip_not_psd = !leq(SymMatrix::zero(d), s);
        SymMatrix delta = random_symmetric(rng, d, 1e-3);
        SymMatrix near = r + delta;
        bool perturbed_off = max_abs_diff(jordan_product(near, near), a) > 1e-5;
        bool ok = flip_squares && flip_not_psd && perturbed_off;
        if (!ok) {
            w = matrix_to_json(a);
        }
        return ok;
    });

    laws.run("abs_decomposition", n_cases, [&](Rng& rng, std::string& w) {
        SymMatrix a = random_symmetric(rng, laws.dim(rng));
        AbsParts parts = abs_pos_neg(a);
        double bound = 10.0 * norm_bound(a);
        bool ok = max_abs_diff(parts.pos - parts.neg, a) <= bound &&
                  max_abs_diff(parts.pos + parts.neg, parts.abs) <= bound &&
                  max_abs(product(parts.pos, parts.neg)) <= bound &&
                  leq(SymMatrix::zero(a.dim()), parts.pos) &&
                  leq(SymMatrix::zero(a.dim()), parts.neg);
        if (!ok) {
            w = matrix_to_json(a);
        }
        return ok;
    });

    laws.run("carrier_law", n_cases, [&](Rng& rng, std::string& w) {
        // Half the cases align b with the kernel of a (ab = 0), half draw b
        // freely; the carrier must agree with a in both regimes.
        int d = std::max(2, laws.dim(rng));
        std::vector<double> da(static_cast<size_t>(d), 0.0);
        int rank = rng.uniform_int(1, d - 1);
        for (int k = 0; k < rank; ++k) {
            da[static_cast<size_t>(k)] = rng.uniform(-2.0, 2.0);
            if (std::fabs(da[static_cast<size_t>(k)]) < 0.2) {
                da[static_cast<size_t>(k)] = 0.5;
            }
        }
        uint64_t basis_seed = rng.next_u64();
        Rng r1(basis_seed);
        SymMatrix a = random_with_eigenvalues(r1, da);
        SymMatrix b = SymMatrix::zero(d);
        if (rng.uniform_int(0, 1) == 0) {
            std::vector<double> db(static_cast<size_t>(d), 0.0);
            for (int k = rank; k < d; ++k) {
                db[static_cast<size_t>(k)] = rng.uniform(0.2, 2.0);
            }
            Rng r2(basis_seed);
            b = random_with_eigenvalues(r2, db);
        } else {
            b = random_symmetric(rng, d);
        }
        Projection p = carrier(a);
        bool ab_zero = max_abs(product(a, b)) <= 1e-8;
        bool pb_zero = max_abs(product(p.matrix(), b)) <= 1e-7;
        bool law = ab_zero == pb_zero;
        bool fixes_a = max_abs_diff(sym_part_of_product(p.matrix(), a), a) <= 10.0 * norm_bound(a);
        SymMatrix a2 = jordan_product(a, a);
        bool powers = max_abs_diff(carrier(a2).matrix(), p.matrix()) <= 1e-8 &&
                      max_abs_diff(carrier(abs_pos_neg(a).abs).matrix(), p.matrix()) <= 1e-8;
        bool ok = law && fixes_a && powers;
        if (!ok) {
            w = matrix_to_json(a);
        }
        return ok;
    });

    laws.run("spectral_reconstruction", n_cases, [&](Rng& rng, std::string& w) {
        SymMatrix a = random_symmetric(rng, laws.dim(rng));
        SpectralResolution res = spectral_resolution(a);
        double resid = reconstruction_residual(a, res);
        if (resid <= a.dim() * 1e-8 * std::max(1.0, order_unit_norm(a))) {
            return true;
        }
        w = "residual=" + format_real(resid) + " " + matrix_to_json(a);
        return false;
    });

    laws.run("norm_spectrum_identity", n_cases, [&](Rng& rng, std::string& w) {
        SymMatrix a = random_symmetric(rng, laws.dim(rng));
        SpectrumSet s = spectrum(a);
        double maxabs = 0.0;
        for (double p : s.points) {
            maxabs = std::max(maxabs, std::fabs(p));
        }
        if (std::fabs(order_unit_norm(a) - maxabs) <= 1e-9) {
            return true;
        }
        w = matrix_to_json(a);
        return false;
    });

    laws.run("symmetry_from_projection", n_cases, [&](Rng& rng, std::string& w) {
        int d = laws.dim(rng);
        Projection p = random_projection(rng, d, rng.uniform_int(0, d));
        SymMatrix s = 2.0 * p.matrix() - SymMatrix::identity(d);
        if (max_abs_diff(abs_pos_neg(s).abs, SymMatrix::identity(d)) <= 1e-8) {
            return true;
        }
        w = projection_to_json(p);
        return false;
    });

    laws.run("invertibility_gate", n_cases, [&](Rng& rng, std::string& w) {
        int d = laws.dim(rng);
        std::vector<double> eigs(static_cast<size_t>(d));
        for (double& v : eigs) {
            v = rng.uniform(-2.0, 2.0);
        }
        // A third of the cases sit a spectral point near or below the gate.
        int mode = rng.uniform_int(0, 2);
        if (mode == 0) {
            eigs[0] = 0.0;
        } else if (mode == 1) {
            eigs[0] = rng.uniform(-1e-12, 1e-12);
        }
        SymMatrix a = random_with_eigenvalues(rng, eigs);
        SpectrumSet s = spectrum(a);
        double minabs = std::fabs(s.points.front());
        for (double p : s.points) {
            minabs = std::min(minabs, std::fabs(p));
        }
        bool should_fail = minabs < eps_invert(a);
        try {
            SymMatrix inv = invert(a);
            if (should_fail) {
                w = "expected NotInvertibleError " + matrix_to_json(a);
                return false;
            }
            SymMatrix prod = sym_part_of_product(a, inv);
            double cond = order_unit_norm(a) / minabs;
            if (max_abs_diff(prod, SymMatrix::identity(d)) > 1e-12 * std::max(1.0, cond)) {
                w = "a*inv(a) != 1 " + matrix_to_json(a);
                return false;
            }
        } catch (const NotInvertibleError&) {
            if (!should_fail) {
                w = "unexpected NotInvertibleError " + matrix_to_json(a);
                return false;
            }
        }
        return true;
    });

    laws.run("commute_iff_resolution_commutes", n_cases, [&](Rng& rng, std::string& w) {
        int d = laws.dim(rng);
        uint64_t basis_seed = rng.next_u64();
        std::vector<double> da(static_cast<size_t>(d));
        std::vector<double> db(static_cast<size_t>(d));
        for (double& v : da) {
            v = rng.uniform(-2.0, 2.0);
        }
        for (double& v : db) {
            v = rng.uniform(-2.0, 2.0);
        }
        Rng r1(basis_seed);
        Rng r2(basis_seed);
        SymMatrix a = random_with_eigenvalues(r1, da);
        SymMatrix b = random_with_eigenvalues(r2, db);
        if (!commutes(a, b.with_tol(1e-9))) {
            w = "constructed pair does not commute " + matrix_to_json(a);
            return false;
        }
        for (const Projection& p : spectral_resolution(a).projections) {
            if (commutator_max_abs(p.matrix(), b) > 1e-9) {
                w = "resolution projection does not commute " + matrix_to_json(a);
                return false;
            }
        }
        return true;
    });

    laws.run("cv_monotone_commuting_sequence", n_cases, [&](Rng& rng, std::string& w) {
        // Ascending commuting sequence in a fixed basis; its supremum stays
        // in the commutant of a same-basis witness.
        int d = laws.dim(rng);
        uint64_t basis_seed = rng.next_u64();
        std::vector<double> diag(static_cast<size_t>(d));
        for (double& v : diag) {
            v = rng.uniform(-1.0, 0.0);
        }
        std::vector<SymMatrix> seq;
        for (int step = 0; step < 4; ++step) {
            for (double& v : diag) {
                v += rng.uniform(0.0, 0.5);
            }
            Rng rb(basis_seed);
            seq.push_back(random_with_eigenvalues(rb, diag));
        }
        std::vector<double> dbw(static_cast<size_t>(d));
        for (double& v : dbw) {
            v = rng.uniform(-2.0, 2.0);
        }
        Rng rb(basis_seed);
        SymMatrix witness = random_with_eigenvalues(rb, dbw);
        for (size_t k = 1; k < seq.size(); ++k) {
            if (!leq(seq[k - 1], seq[k])) {
                w = "sequence not ascending";
                return false;
            }
            if (!commutes(seq[k - 1].with_tol(1e-9), seq[k].with_tol(1e-9))) {
                w = "sequence not commuting";
                return false;
            }
        }
        const SymMatrix& sup = seq.back();
        if (!commutes(sup.with_tol(1e-9), witness.with_tol(1e-9))) {
            w = "supremum leaves the commutant";
            return false;
        }
        return true;
    });

    // ---- orthomodular lattice laws ----

    laws.run("projection_idempotent", n_cases, [&](Rng& rng, std::string& w) {
        int d = laws.dim(rng);
        Projection p = random_projection(rng, d, rng.uniform_int(0, d));
        SymMatrix m = p.matrix();
        if (cfg.inject_corrupt_projection) {
            // Deliberate defect: exercises the failure path and the witness
            // machinery.
            std::vector<double> e(m.entries().begin(), m.entries().end());
            e[0] += 1e-3;
            m = SymMatrix(d, std::move(e), m.tol());
        }
        std::vector<double> mm = product(m, m);
        double defect = 0.0;
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                defect = std::max(defect, std::fabs(mm[static_cast<size_t>(i) * d + j] - m.at(i, j)));
            }
        }
        if (defect <= m.tol()) {
            return true;
        }
        w = "idempotence defect " + format_real(defect) + " " + matrix_to_json(m);
        return false;
    });

    laws.run("oml_orthomodular_law", n_cases, [&](Rng& rng, std::string& w) {
        int d = std::max(2, laws.dim(rng));
        auto [p, q] = random_comparable_projections(rng, d);
        Projection rhs = join(p, meet(q, complement(p)));
        if (max_abs_diff(q.matrix(), rhs.matrix()) <= 1e-8) {
            return true;
        }
        w = projection_to_json(p) + " " + projection_to_json(q);
        return false;
    });

    laws.run("oml_commuting_pair_laws", n_cases, [&](Rng& rng, std::string& w) {
        int d = std::max(2, laws.dim(rng));
        auto [p, q] = random_commuting_projections(rng, d);
        SymMatrix pq = sym_part_of_product(p.matrix(), q.matrix());
        std::vector<double> pq2 = product(pq, pq);
        double idem = 0.0;
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                idem = std::max(idem, std::fabs(pq2[static_cast<size_t>(i) * d + j] - pq.at(i, j)));
            }
        }
        bool below = leq(pq.with_tol(1e-9), p.matrix()) && leq(pq.with_tol(1e-9), q.matrix());
        bool meet_is_product = max_abs_diff(meet(p, q).matrix(), pq) <= 1e-9;
        bool order_character =
            leq(p.matrix().with_tol(1e-9), q.matrix()) == (max_abs_diff(p.matrix(), pq) <= 1e-9);
        bool ok = idem <= 1e-9 && below && meet_is_product && order_character;
        if (!ok) {
            w = projection_to_json(p) + " " + projection_to_json(q);
        }
        return ok;
    });

    laws.run("oml_de_morgan", n_cases, [&](Rng& rng, std::string& w) {
        int d = std::max(2, laws.dim(rng));
        Projection p = random_projection(rng, d, rng.uniform_int(0, d));
        Projection q = random_projection(rng, d, rng.uniform_int(0, d));
        Projection lhs = complement(join(p, q));
        Projection rhs = meet(complement(p), complement(q));
        if (max_abs_diff(lhs.matrix(), rhs.matrix()) <= 1e-8) {
            return true;
        }
        w = projection_to_json(p) + " " + projection_to_json(q);
        return false;
    });

    laws.run("oml_orthogonal_join_additive", n_cases, [&](Rng& rng, std::string& w) {
        int d = std::max(2, laws.dim(rng));
        std::vector<double> basis = random_orthonormal(rng, d);
        int r1 = rng.uniform_int(1, d - 1);
        int r2 = rng.uniform_int(0, d - r1);
        std::vector<double> d1(static_cast<size_t>(d), 0.0);
        std::vector<double> d2(static_cast<size_t>(d), 0.0);
        for (int k = 0; k < r1; ++k) {
            d1[static_cast<size_t>(k)] = 1.0;
        }
        for (int k = r1; k < r1 + r2; ++k) {
            d2[static_cast<size_t>(k)] = 1.0;
        }
        // Rebuild both from the shared basis.
        std::vector<double> e1(static_cast<size_t>(d) * d, 0.0);
        std::vector<double> e2(static_cast<size_t>(d) * d, 0.0);
        for (int k = 0; k < d; ++k) {
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    double vij = basis[static_cast<size_t>(k) * d + i] * basis[static_cast<size_t>(k) * d + j];
                    e1[static_cast<size_t>(i) * d + j] += d1[static_cast<size_t>(k)] * vij;
                    e2[static_cast<size_t>(i) * d + j] += d2[static_cast<size_t>(k)] * vij;
                }
            }
        }
        Projection p = Projection::repair(symmetrized(d, e1, SymMatrix::kDefaultTol));
        Projection q = Projection::repair(symmetrized(d, e2, SymMatrix::kDefaultTol));
        if (!orthogonal(p, q)) {
            w = "constructed pair not orthogonal";
            return false;
        }
        if (max_abs_diff(join(p, q).matrix(), p.matrix() + q.matrix()) <= 1e-8) {
            return true;
        }
        w = projection_to_json(p) + " " + projection_to_json(q);
        return false;
    });

    laws.run("oml_meet_is_glb", n_cases, [&](Rng& rng, std::string& w) {
        int d = std::max(2, laws.dim(rng));
        std::vector<double> basis = random_orthonormal(rng, d);
        std::vector<double> dp(static_cast<size_t>(d));
        std::vector<double> dq(static_cast<size_t>(d));
        std::vector<double> dr(static_cast<size_t>(d));
        for (int k = 0; k < d; ++k) {
            dp[static_cast<size_t>(k)] = rng.uniform_int(0, 1);
            dq[static_cast<size_t>(k)] = rng.uniform_int(0, 1);
            dr[static_cast<size_t>(k)] =
                (dp[static_cast<size_t>(k)] == 1.0 && dq[static_cast<size_t>(k)] == 1.0)
                    ? rng.uniform_int(0, 1)
                    : 0.0;
        }
        auto build = [&](const std::vector<double>& diag) {
            std::vector<double> e(static_cast<size_t>(d) * d, 0.0);
            for (int k = 0; k < d; ++k) {
                if (diag[static_cast<size_t>(k)] == 0.0) {
                    continue;
                }
                for (int i = 0; i < d; ++i) {
                    for (int j = 0; j < d; ++j) {
                        e[static_cast<size_t>(i) * d + j] +=
                            basis[static_cast<size_t>(k) * d + i] * basis[static_cast<size_t>(k) * d + j];
                    }
                }
            }
            return Projection::repair(symmetrized(d, e, SymMatrix::kDefaultTol));
        };
        Projection p = build(dp);
        Projection q = build(dq);
        Projection r = build(dr);
        Projection m = meet(p, q);
        bool lower = leq(m.matrix().with_tol(1e-9), p.matrix()) &&
                     leq(m.matrix().with_tol(1e-9), q.matrix());
        bool greatest = leq(r.matrix().with_tol(1e-9), m.matrix());
        if (lower && greatest) {
            return true;
        }
        w = projection_to_json(p) + " " + projection_to_json(q);
        return false;
    });

    // ---- commutative model laws (exact dyadic arithmetic) ----

    auto random_space = [](Rng& rng, int max_size) {
        int n = rng.uniform_int(1, max_size);
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) {
            labels.push_back("x" + std::to_string(i + 1));
        }
        return DiscreteSpace(labels);
    };

    laws.run("mv_dedekind_law", n_cases, [&](Rng& rng, std::string& w) {
        DiscreteSpace space = random_space(rng, 8);
        FnElement f = random_dyadic_fn(rng, space, 3, 8.0);
        FnElement g = random_dyadic_fn(rng, space, 3, 8.0);
        LatticePair lp = lattice_ops(f, g);
        FnElement lhs = lp.sup + lp.inf;
        FnElement rhs = f + g;
        for (int i = 0; i < f.size(); ++i) {
            if (lhs.at(i) != rhs.at(i)) {
                w = fn_element_to_json(f) + " " + fn_element_to_json(g);
                return false;
            }
        }
        return true;
    });

    laws.run("mv_closed_form_meet_join", n_cases, [&](Rng& rng, std::string& w) {
        DiscreteSpace space = random_space(rng, 8);
        FnElement f = random_dyadic_fn(rng, space, 3, 8.0);
        FnElement g = random_dyadic_fn(rng, space, 3, 8.0);
        LatticePair direct = lattice_ops(f, g);
        LatticePair closed = abs_closed_form(f, g);
        for (int i = 0; i < f.size(); ++i) {
            if (direct.sup.at(i) != closed.sup.at(i) || direct.inf.at(i) != closed.inf.at(i)) {
                w = fn_element_to_json(f) + " " + fn_element_to_json(g);
                return false;
            }
        }
        return true;
    });

    laws.run("mv_norm_vs_order", n_cases, [&](Rng& rng, std::string& w) {
        DiscreteSpace space = random_space(rng, 8);
        FnElement f = random_dyadic_fn(rng, space, 3, 8.0);
        double eps = std::fabs(rng.dyadic(3, 8.0));
        FnElement bound = FnElement::constant(space, eps);
        bool order_side = fn_leq(pointwise_abs(f), bound);
        bool norm_side = sup_norm(f) <= eps;
        if (order_side == norm_side) {
            return true;
        }
        w = fn_element_to_json(f) + " eps=" + format_real(eps);
        return false;
    });

    laws.run("mv_distributive", n_cases, [&](Rng& rng, std::string& w) {
        DiscreteSpace space = random_space(rng, 8);
        FnElement f = random_dyadic_fn(rng, space, 3, 8.0);
        FnElement g = random_dyadic_fn(rng, space, 3, 8.0);
        FnElement h = random_dyadic_fn(rng, space, 3, 8.0);
        FnElement lhs = lattice_ops(f, lattice_ops(g, h).sup).inf;
        FnElement rhs = lattice_ops(lattice_ops(f, g).inf, lattice_ops(f, h).inf).sup;
        for (int i = 0; i < f.size(); ++i) {
            if (lhs.at(i) != rhs.at(i)) {
                w = fn_element_to_json(f);
                return false;
            }
        }
        return true;
    });

    laws.run("mv_characteristic_pointwise", n_cases, [&](Rng& rng, std::string& w) {
        DiscreteSpace space = random_space(rng, 8);
        std::vector<double> v1(static_cast<size_t>(space.size()));
        std::vector<double> v2(static_cast<size_t>(space.size()));
        for (int i = 0; i < space.size(); ++i) {
            v1[static_cast<size_t>(i)] = rng.uniform_int(0, 1);
            v2[static_cast<size_t>(i)] = rng.uniform_int(0, 1);
        }
        FnElement k(space, v1);
        FnElement l(space, v2);
        FnElement prod = pointwise_mul(k, l);
        FnElement met = lattice_ops(k, l).inf;
        for (int i = 0; i < space.size(); ++i) {
            if (prod.at(i) != met.at(i)) {
                w = fn_element_to_json(k) + " " + fn_element_to_json(l);
                return false;
            }
        }
        // Characteristic iff pointwise idempotent.
        FnElement kk = pointwise_mul(k, k);
        bool idempotent = true;
        for (int i = 0; i < space.size(); ++i) {
            idempotent = idempotent && kk.at(i) == k.at(i);
        }
        if (is_characteristic(k) != idempotent) {
            w = fn_element_to_json(k);
            return false;
        }
        return true;
    });

    laws.run("extremal_fourway_grid", 1, [&](Rng&, std::string& w) {
        // Exhaustive scan: every rational-grid state with denominator <= 8
        // on spaces of up to space_max atoms must answer all four criteria
        // identically.
        for (int n = 1; n <= cfg.space_max; ++n) {
            std::vector<std::string> labels;
            for (int i = 0; i < n; ++i) {
                labels.push_back("x" + std::to_string(i + 1));
            }
            DiscreteSpace space(labels);
            for (int denom = 1; denom <= 8; ++denom) {
                std::vector<int> ks(static_cast<size_t>(n), 0);
                std::function<bool(int, int)> scan = [&](int pos, int remaining) -> bool {
                    if (pos == n - 1) {
                        ks[static_cast<size_t>(pos)] = remaining;
                        std::vector<double> weights(static_cast<size_t>(n));
                        for (int i = 0; i < n; ++i) {
                            weights[static_cast<size_t>(i)] =
                                static_cast<double>(ks[static_cast<size_t>(i)]) / denom;
                        }
                        try {
                            State rho = State::weight_form(space, weights);
                            is_extremal_commutative(rho);
                        } catch (const std::exception& e) {
                            w = std::string(e.what()) + " denom=" + std::to_string(denom);
                            return false;
                        }
                        return true;
                    }
                    for (int k = 0; k <= remaining; ++k) {
                        ks[static_cast<size_t>(pos)] = k;
                        if (!scan(pos + 1, remaining - k)) {
                            return false;
                        }
                    }
                    return true;
                };
                if (!scan(0, denom)) {
                    return false;
                }
            }
        }
        return true;
    });

    laws.run("ls_morphism_laws", n_cases, [&](Rng& rng, std::string& w) {
        GroundSet ground = random_ground_set(rng, 8, 4);
        QuotientMorphism h(ground);
        GroundFunction f = random_dyadic_ground_fn(rng, ground, 4, 4.0);
        GroundFunction g = random_dyadic_ground_fn(rng, ground, 4, 4.0);
        double alpha = rng.dyadic(2, 4.0);

        FnElement hf = h.apply(f);
        FnElement hg = h.apply(g);

        bool linear = true;
        FnElement lhs = h.apply(alpha * f + g);
        FnElement rhs = alpha * hf + hg;
        for (int i = 0; i < lhs.size(); ++i) {
            linear = linear && lhs.at(i) == rhs.at(i);
        }
        bool unital = true;
        FnElement hone = h.apply(GroundFunction::one(ground));
        for (int i = 0; i < hone.size(); ++i) {
            unital = unital && hone.at(i) == 1.0;
        }
        bool multiplicative = true;
        FnElement hprod = h.apply(pointwise_mul(f, g));
        FnElement prod = pointwise_mul(hf, hg);
        for (int i = 0; i < hprod.size(); ++i) {
            multiplicative = multiplicative && hprod.at(i) == prod.at(i);
        }
        // Carrier: indicator of the support maps to the support indicator of
        // the image.
        bool carrier_ok = true;
        FnElement himg = h.apply(support_indicator(f));
        for (int i = 0; i < himg.size(); ++i) {
            carrier_ok = carrier_ok && himg.at(i) == (hf.at(i) != 0.0 ? 1.0 : 0.0);
        }
        // Ascending sups pass through the restriction.
        GroundFunction s1 = pointwise_min(f, g);
        GroundFunction s2 = f;
        GroundFunction s3 = pointwise_max(f, g);
        bool sup_ok = true;
        FnElement hsup = h.apply(pointwise_max(pointwise_max(s1, s2), s3));
        FnElement sup_h = lattice_ops(lattice_ops(h.apply(s1), h.apply(s2)).sup, h.apply(s3)).sup;
        for (int i = 0; i < hsup.size(); ++i) {
            sup_ok = sup_ok && hsup.at(i) == sup_h.at(i);
        }
        // Surjectivity: zero-extension is a section.
        FnElement target(h.target_space(),
                         std::vector<double>(static_cast<size_t>(h.target_space().size()), 0.25));
        bool surjective = true;
        FnElement back = h.apply(h.extend(target));
        for (int i = 0; i < back.size(); ++i) {
            surjective = surjective && back.at(i) == target.at(i);
        }
        bool regular = h.regular_at(f) && h.regular_at(g);

        bool ok = linear && unital && multiplicative && carrier_ok && sup_ok && surjective && regular;
        if (!ok) {
            w = "ground atoms=" + std::to_string(ground.atoms.size()) +
                " null=" + std::to_string(ground.null_part.size());
        }
        return ok;
    });

    laws.run("observable_measure_laws", n_cases, [&](Rng& rng, std::string& w) {
        SymMatrix a = random_symmetric(rng, laws.dim(rng));
        Observable xi = observable_of(a);
        SpectralResolution res = spectral_resolution(a);
        bool total = max_abs_diff(measure_apply(xi, BorelSetExpr::whole_line()).matrix(),
                                  SymMatrix::identity(a.dim())) <= 1e-9;
        double split = res.breakpoints.front() +
                       0.5 * (res.breakpoints.back() - res.breakpoints.front());
        Projection left = measure_apply(xi, BorelSetExpr::half_line(split));
        Projection right = measure_apply(
            xi, BorelSetExpr({BorelSetExpr::Interval{split, std::numeric_limits<double>::infinity()}}, {}));
        bool additive =
            max_abs_diff(left.matrix() + right.matrix(), SymMatrix::identity(a.dim())) <= 1e-9;
        bool matches_resolution = true;
        for (double bp : res.breakpoints) {
            Projection via_measure = measure_apply(xi, BorelSetExpr::half_line(bp));
            Projection via_resolution = res.value_at(bp);
            matches_resolution = matches_resolution &&
                                 max_abs_diff(via_measure.matrix(), via_resolution.matrix()) <= 1e-9;
        }
        bool ok = total && additive && matches_resolution;
        if (!ok) {
            w = matrix_to_json(a);
        }
        return ok;
    });

    laws.run("expectation_matches_evaluate", n_cases, [&](Rng& rng, std::string& w) {
        int d = laws.dim(rng);
        SymMatrix a = random_symmetric(rng, d);
        State rho = State::trace_form(random_density(rng, d));
        double direct = evaluate(rho, a);
        double via_observable = expectation(rho, a);
        if (std::fabs(direct - via_observable) <= 1e-9) {
            return true;
        }
        w = "direct=" + format_real(direct) + " observable=" + format_real(via_observable) + " " +
            matrix_to_json(a);
        return false;
    });

    laws.run("funcalc_triple_agreement", std::min(n_cases, 50), [&](Rng& rng, std::string& w) {
        int d = laws.dim(rng);
        SymMatrix a = random_symmetric(rng, d);
        SpectrumSet s = spectrum(a);
        double lo = s.points.front();
        double hi = s.points.back();
        RealFunction choices[3] = {fns::abs(), fns::exp(), fns::square()};
        RealFunction f = choices[rng.uniform_int(0, 2)];
        double lip = f.name == "abs"   ? 1.0
                     : f.name == "exp" ? std::exp(hi)
                                       : 2.0 * std::max(std::fabs(lo), std::fabs(hi));
        double mesh = 1e-2;
        SymMatrix via_eigen = func_calc_eigen(a, f);
        SymMatrix via_rs = func_calc_rs(a, f, mesh);
        if (order_unit_norm(via_eigen - via_rs) > lip * mesh + 1e-9) {
            w = "rs gap " + format_real(order_unit_norm(via_eigen - via_rs)) + " " + matrix_to_json(a);
            return false;
        }
        double err32 = order_unit_norm(via_eigen - func_calc_poly(a, f, 32));
        double err128 = order_unit_norm(via_eigen - func_calc_poly(a, f, 128));
        if (err128 > err32 + 1e-9) {
            w = "bernstein not improving: " + format_real(err32) + " -> " + format_real(err128);
            return false;
        }
        return true;
    });

    std::sort(report.laws.begin(), report.laws.end(),
              [](const LawResult& a, const LawResult& b) { return a.id < b.id; });
    return report;
}

std::string render_report(const AuditReport& report, const std::string& format) {
    std::ostringstream out;
    if (format == "json") {
        out << "{\"seed\": " << report.config.seed << ", \"dim_max\": " << report.config.dim_max
            << ", \"cases\": " << report.config.cases << ", \"laws\": [";
        for (size_t i = 0; i < report.laws.size(); ++i) {
            const LawResult& l = report.laws[i];
            out << (i == 0 ? "" : ", ") << "{\"id\": \"" << l.id << "\", \"pass\": " << l.pass
                << ", \"fail\": " << l.fail << "}";
        }
        out << "], \"all_pass\": " << (report.all_pass() ? "true" : "false") << "}\n";
    } else if (format == "csv") {
        out << "law,pass,fail\n";
        for (const LawResult& l : report.laws) {
            out << l.id << "," << l.pass << "," << l.fail << "\n";
        }
        out << "total," << report.total_pass() << "," << report.total_fail() << "\n";
    } else {
        out << "axiom audit (seed " << report.config.seed << ", dim <= " << report.config.dim_max
            << ", " << report.config.cases << " cases per law)\n";
        for (const LawResult& l : report.laws) {
            out << "  " << (l.fail == 0 ? "[PASS]" : "[FAIL]") << " " << l.id << ": " << l.pass
                << " pass, " << l.fail << " fail\n";
        }
        out << (report.all_pass() ? "all laws hold\n" : "LAW FAILURES PRESENT\n");
    }
    return out.str();
}

std::string witness_payload(const AuditReport& report) {
    if (report.all_pass()) {
        return "";
    }
    std::ostringstream out;
    out << "{\"seed\": " << report.config.seed << ", \"failures\": [";
    bool first = true;
    for (const LawResult& l : report.laws) {
        if (l.fail == 0) {
            continue;
        }
        for (const std::string& w : l.witnesses) {
            out << (first ? "" : ", ") << "{\"law\": \"" << l.id << "\", \"witness\": \"";
            for (char c : w) {
                if (c == '"' || c == '\\') {
                    out << '\\';
                }
                out << c;
            }
            out << "\"}";
            first = false;
        }
    }
    out << "]}\n";
    return out.str();
}

} // namespace sagh
