#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sagh/element_ops.hpp"
#include "sagh/errors.hpp"
#include "sagh/func_calc.hpp"
#include "sagh/sampling.hpp"
#include "sagh/spectral.hpp"

using namespace sagh;

namespace {

bool near(const SymMatrix& m, const SymMatrix& n, double eps = 1e-10) {
    return max_abs_diff(m, n) <= eps;
}

SymMatrix mat2(double a, double b, double c, double d) {
    return SymMatrix(2, {a, b, c, d});
}

} // namespace

TEST_CASE("eigen route") {
    // the square function reproduces the Jordan square
    Rng rng(3);
    for (int c = 0; c < 25; ++c) {
        int d = rng.uniform_int(1, 6);
        SymMatrix a = random_symmetric(rng, d);
        CHECK(near(func_calc_eigen(a, fns::square()), jordan_product(a, a), 1e-9));
        CHECK(near(func_calc_eigen(a, fns::identity()), a, 1e-9));
    }

    CHECK(near(func_calc_eigen(SymMatrix::diagonal({0.0, std::log(2.0)}), fns::exp()),
               SymMatrix::diagonal({1, 2}), 1e-12));

    // domain enforcement
    RealFunction narrow = fns::abs();
    narrow.domain_lo = 0.0;
    narrow.domain_hi = 1.0;
    CHECK_THROWS_AS(func_calc_eigen(SymMatrix::diagonal({-1, 2}), narrow), DomainError);
}

TEST_CASE("riemann-stieltjes route") {
    // two-point spectrum: both breakpoints land on the mesh, any width
    SymMatrix a = SymMatrix::diagonal({1, 2});
    CHECK(near(func_calc_rs(a, fns::identity(), 0.5), a, 1e-12));
    CHECK(near(func_calc_rs(a, fns::identity(), 0.3), a, 1e-12));

    // constants integrate to c * 1 at any mesh
    CHECK(near(func_calc_rs(mat2(2, 1, 1, 2), fns::poly({7.0}), 0.37),
               SymMatrix::scaled_identity(2, 7.0), 1e-12));

    // |.| on diag(-1, 2) with a fine mesh matches the decomposition
    CHECK(near(func_calc_rs(SymMatrix::diagonal({-1, 2}), fns::abs(), 1e-4),
               SymMatrix::diagonal({1, 2}), 1e-3));

    CHECK_THROWS_AS(func_calc_rs(a, fns::abs(), 0.0), DomainError);

    // the assembled sum exposes its mesh and tags; the mesh covers
    // [L - h, U] and the projection increments telescope to the identity
    RiemannSum sum = riemann_sum(mat2(2, 1, 1, 2), fns::exp(), 0.25);
    CHECK(sum.mesh.front() == doctest::Approx(1.0 - 0.25)); // L_a - h
    CHECK(sum.mesh.back() == doctest::Approx(3.0));         // pinned to U_a
    CHECK(sum.tags.size() + 1 == sum.mesh.size());
    SpectralResolution sr = spectral_resolution(mat2(2, 1, 1, 2));
    CHECK(max_abs_diff(sr.value_at(sum.mesh.back()).matrix() -
                           sr.value_at(sum.mesh.front()).matrix(),
                       SymMatrix::identity(2)) <= 1e-10);

    // pinned instance: exp on spectrum {1,3} at mesh 1e-3 stays under
    // exp(3) * 1e-3
    SymMatrix pinned = mat2(2, 1, 1, 2);
    double gap = order_unit_norm(func_calc_eigen(pinned, fns::exp()) -
                                 func_calc_rs(pinned, fns::exp(), 1e-3));
    CHECK(gap <= std::exp(3.0) * 1e-3);

    // Lipschitz error bound at two mesh scales
    Rng rng(5);
    for (int c = 0; c < 20; ++c) {
        int d = rng.uniform_int(1, 6);
        SymMatrix m = random_symmetric(rng, d);
        SpectrumSet s = spectrum(m);
        double hi = s.points.back();
        RealFunction f = fns::exp();
        double lip = std::exp(hi);
        SymMatrix via_eigen = func_calc_eigen(m, f);
        for (double mesh : {1e-2, 5e-3}) {
            double err = order_unit_norm(via_eigen - func_calc_rs(m, f, mesh));
            CHECK(err <= lip * mesh + 1e-9);
        }
    }
}

TEST_CASE("polynomial route") {
    // exact fit: polynomial inputs evaluate exactly through Horner
    Rng rng(7);
    for (int c = 0; c < 20; ++c) {
        int d = rng.uniform_int(1, 5);
        SymMatrix a = random_symmetric(rng, d);
        RealFunction q = fns::poly({1.0, -2.0, 0.5, 0.25});
        SymMatrix direct = SymMatrix::identity(d) - 2.0 * a +
                           0.5 * jordan_product(a, a) +
                           0.25 * quadratic_map(a, a); // a^3 = a * a * a
        CHECK(near(func_calc_poly(a, q, 3), direct, 1e-9));
        CHECK(near(func_calc_poly(a, q, 3), func_calc_eigen(a, q), 1e-8));
    }

    // constants at every degree
    CHECK(near(func_calc_poly(mat2(2, 1, 1, 2), fns::poly({3.0}), 0),
               SymMatrix::scaled_identity(2, 3.0)));
    CHECK(near(func_calc_poly(mat2(2, 1, 1, 2), fns::poly({3.0}), 50),
               SymMatrix::scaled_identity(2, 3.0)));

    // |t| at the spectral endpoints is interpolated exactly by Bernstein
    SymMatrix sym = SymMatrix::diagonal({-1, 1});
    SymMatrix approx = func_calc_poly(sym, fns::abs(), 50);
    CHECK(order_unit_norm(approx - SymMatrix::identity(2)) <= 0.1);

    // convex f: Bernstein error decreases monotonically through 8, 32, 128
    Rng rng2(11);
    for (int c = 0; c < 10; ++c) {
        int d = rng2.uniform_int(2, 6);
        SymMatrix a = random_symmetric(rng2, d);
        SymMatrix exact = func_calc_eigen(a, fns::abs());
        double e8 = order_unit_norm(exact - func_calc_poly(a, fns::abs(), 8));
        double e32 = order_unit_norm(exact - func_calc_poly(a, fns::abs(), 32));
        double e128 = order_unit_norm(exact - func_calc_poly(a, fns::abs(), 128));
        CHECK(e32 <= e8 + 1e-12);
        CHECK(e128 <= e32 + 1e-12);
    }
}

TEST_CASE("homomorphism and composition laws") {
    Rng rng(13);
    for (int c = 0; c < 20; ++c) {
        int d = rng.uniform_int(1, 5);
        SymMatrix a = random_symmetric(rng, d);
        RealFunction f = fns::abs();
        RealFunction g = fns::exp();
        RealFunction fg{[&](double t) { return std::fabs(t) * std::exp(t); },
                        f.domain_lo, f.domain_hi, std::nullopt, {}, "abs*exp"};
        RealFunction fplusg{[&](double t) { return std::fabs(t) + std::exp(t); },
                            f.domain_lo, f.domain_hi, std::nullopt, {}, "abs+exp"};
        SymMatrix fa = func_calc_eigen(a, f);
        SymMatrix ga = func_calc_eigen(a, g);
        CHECK(near(func_calc_eigen(a, fplusg), fa + ga, 1e-9));
        CHECK(near(func_calc_eigen(a, fg), sym_part_of_product(fa, ga), 1e-8));
        CHECK(near(func_calc_eigen(a, fns::poly({1.0})), SymMatrix::identity(d), 1e-10));

        // composition with a scalar polynomial: f(q(a)) = (f . q)(a)
        RealFunction q = fns::poly({0.5, 1.0}); // t + 1/2
        RealFunction f_after_q{[&](double t) { return std::fabs(t + 0.5); },
                               -1e300, 1e300, std::nullopt, {}, "abs(t+1/2)"};
        CHECK(near(func_calc_eigen(func_calc_eigen(a, q), f), func_calc_eigen(a, f_after_q), 1e-8));

        // f(a) stays inside the commutant of everything commuting with a
        SymMatrix poly_of_a = jordan_product(a, a) - 3.0 * a;
        CHECK(commutator_max_abs(fa, poly_of_a) <= 1e-9);
    }
}

TEST_CASE("spectral mapping") {
    SpectrumSet image = spectral_mapping(SymMatrix::diagonal({1, 2, 3}), fns::square());
    REQUIRE(image.points.size() == 3);
    CHECK(image.points[0] == doctest::Approx(1.0));
    CHECK(image.points[1] == doctest::Approx(4.0));
    CHECK(image.points[2] == doctest::Approx(9.0));

    SpectrumSet constant = spectral_mapping(SymMatrix::diagonal({1, 5}), fns::poly({3.0}));
    REQUIRE(constant.points.size() == 1);
    CHECK(constant.points[0] == doctest::Approx(3.0));

    Rng rng(17);
    for (int c = 0; c < 25; ++c) {
        int d = rng.uniform_int(1, 6);
        SymMatrix a = random_symmetric(rng, d);
        RealFunction fs[4] = {fns::abs(), fns::exp(), fns::square(), fns::clamp(-0.5, 0.5)};
        const RealFunction& f = fs[rng.uniform_int(0, 3)];
        // identity route
        CHECK(near(func_calc_eigen(a, fns::identity()), a, 1e-9));
        // image of the spectrum, clustered, as a set
        SpectrumSet direct = spectrum(func_calc_eigen(a, f));
        std::vector<double> expected;
        for (double p : spectrum(a).points) {
            expected.push_back(f(p));
        }
        std::sort(expected.begin(), expected.end());
        double tol = 1e-7 * std::max(1.0, std::fabs(expected.back()));
        expected.erase(std::unique(expected.begin(), expected.end(),
                                   [&](double x, double y) { return std::fabs(x - y) <= tol; }),
                       expected.end());
        REQUIRE(direct.points.size() == expected.size());
        for (size_t k = 0; k < expected.size(); ++k) {
            CHECK(direct.points[k] == doctest::Approx(expected[k]).epsilon(1e-7));
        }
    }
}

TEST_CASE("pushforward of a spectral resolution") {
    // a = b = diag(1,3): two atoms, g = (1,3), and p_{b,2} maps to chi_{x1}
    SymMatrix d13 = SymMatrix::diagonal({1, 3});
    SpectralPushforward push = pushforward_resolution(d13, d13);
    REQUIRE(push.atoms.size() == 2);
    CHECK(push.diagonal.at(0) == doctest::Approx(1.0));
    CHECK(push.diagonal.at(1) == doctest::Approx(3.0));
    REQUIRE(push.resolution_image.size() == 2);
    CHECK(push.resolution_image[0].second.support() == std::vector<std::string>{"x1"});
    CHECK(push.resolution_image[1].second.support() == std::vector<std::string>{"x1", "x2"});

    // b = 1: the image steps from empty to full at lambda = 1
    SpectralPushforward unit = pushforward_resolution(d13, SymMatrix::identity(2));
    REQUIRE(unit.resolution_image.size() == 1);
    CHECK(unit.resolution_image[0].first == doctest::Approx(1.0));
    CHECK(unit.resolution_image[0].second.support().size() == 2);

    // joint diagonalization oracle: a = diag(1,1,3), b = diag(2,5,2)
    SpectralPushforward joint =
        pushforward_resolution(SymMatrix::diagonal({1, 1, 3}), SymMatrix::diagonal({2, 5, 2}));
    REQUIRE(joint.atoms.size() == 3);
    CHECK(joint.diagonal.at(0) == doctest::Approx(2.0));
    CHECK(joint.diagonal.at(1) == doctest::Approx(5.0));
    CHECK(joint.diagonal.at(2) == doctest::Approx(2.0));
    // p_{b,2} -> chi_{x1,x3}
    CHECK(joint.resolution_image[0].second.support() == std::vector<std::string>{"x1", "x3"});

    CHECK_THROWS_AS(
        pushforward_resolution(mat2(0, 1, 1, 0), SymMatrix::diagonal({1, 0})), InputError);

    // random commuting pairs in a shared basis
    Rng rng(19);
    for (int c = 0; c < 15; ++c) {
        int d = rng.uniform_int(2, 5);
        uint64_t basis_seed = rng.next_u64();
        std::vector<double> da(static_cast<size_t>(d)), db(static_cast<size_t>(d));
        for (double& v : da) {
            v = rng.uniform(-2.0, 2.0);
        }
        for (double& v : db) {
            v = rng.uniform(-2.0, 2.0);
        }
        Rng r1(basis_seed), r2(basis_seed);
        SymMatrix a = random_with_eigenvalues(r1, da).with_tol(1e-8);
        SymMatrix b = random_with_eigenvalues(r2, db).with_tol(1e-8);
        SpectralPushforward p = pushforward_resolution(a, b);
        // the image family ascends with lambda
        for (size_t k = 1; k < p.resolution_image.size(); ++k) {
            CHECK(fn_leq(p.resolution_image[k - 1].second.fn(), p.resolution_image[k].second.fn()));
        }
        CHECK(p.resolution_image.back().second.support().size() == static_cast<size_t>(d));
    }
}
