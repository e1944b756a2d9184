#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sagh/element_ops.hpp"
#include "sagh/errors.hpp"
#include "sagh/projection.hpp"
#include "sagh/sampling.hpp"

using namespace sagh;

namespace {

Projection span_of(std::vector<double> v) {
    double norm = 0.0;
    for (double x : v) {
        norm += x * x;
    }
    norm = std::sqrt(norm);
    for (double& x : v) {
        x /= norm;
    }
    return Projection::repair(SymMatrix::outer(v));
}

bool near(const SymMatrix& m, const SymMatrix& n, double eps = 1e-10) {
    return max_abs_diff(m, n) <= eps;
}

} // namespace

TEST_CASE("checked construction enforces idempotence") {
    CHECK_NOTHROW(Projection::checked(SymMatrix::diagonal({1, 0, 1})));
    CHECK_THROWS_AS(Projection::checked(SymMatrix::diagonal({0.5, 1})), InputError);
    CHECK(Projection::checked(SymMatrix::diagonal({1, 0, 1})).rank() == 2);

    // repair rounds a slightly dirty projection back to the lattice
    SymMatrix dirty(2, {1.0 + 1e-9, 0, 0, -1e-9}, 1e-6);
    Projection p = Projection::repair(dirty);
    CHECK(near(p.matrix(), SymMatrix::diagonal({1, 0})));
    CHECK(p.rank() == 1);
}

TEST_CASE("complement") {
    CHECK(near(complement(Projection::checked(SymMatrix::diagonal({1, 0}))).matrix(),
               SymMatrix::diagonal({0, 1})));
    CHECK(near(complement(Projection::zero(2)).matrix(), SymMatrix::identity(2)));
    Projection half = span_of({1, 1});
    CHECK(near(complement(half).matrix(), SymMatrix(2, {0.5, -0.5, -0.5, 0.5})));

    Rng rng(3);
    for (int c = 0; c < 25; ++c) {
        int d = rng.uniform_int(1, 6);
        Projection p = random_projection(rng, d, rng.uniform_int(0, d));
        CHECK(near(complement(complement(p)).matrix(), p.matrix())); // involution
        CHECK(p.rank() + complement(p).rank() == d);
        // extreme-point criterion: p ^ (1 - p) = 0
        CHECK(meet(p, complement(p)).rank() == 0);
    }
}

TEST_CASE("meet") {
    Projection ex = Projection::checked(SymMatrix::diagonal({1, 0}));
    Projection ey = Projection::checked(SymMatrix::diagonal({0, 1}));
    CHECK(meet(ex, ey).rank() == 0);
    CHECK(near(meet(ex, ex).matrix(), ex.matrix()));

    // range-intersection oracle: span{(1,0)} and span{(1,1)} meet only at 0
    CHECK(meet(span_of({1, 0}), span_of({1, 1})).rank() == 0);

    CHECK_THROWS_AS(meet(ex, Projection::identity(3)), InputError);

    Rng rng(5);
    for (int c = 0; c < 25; ++c) {
        int d = rng.uniform_int(2, 6);
        auto [p, q] = random_commuting_projections(rng, d);
        CHECK(near(meet(p, q).matrix(), sym_part_of_product(p.matrix(), q.matrix()), 1e-9));
    }
}

TEST_CASE("join") {
    Projection ex = Projection::checked(SymMatrix::diagonal({1, 0}));
    Projection ey = Projection::checked(SymMatrix::diagonal({0, 1}));
    CHECK(near(join(ex, ey).matrix(), SymMatrix::identity(2)));
    CHECK(near(join(ex, Projection::zero(2)).matrix(), ex.matrix()));
    // span-union oracle: two distinct lines join to the plane
    CHECK(near(join(span_of({1, 0}), span_of({1, 1})).matrix(), SymMatrix::identity(2), 1e-9));

    Rng rng(7);
    for (int c = 0; c < 25; ++c) {
        int d = rng.uniform_int(2, 6);
        Projection p = random_projection(rng, d, rng.uniform_int(0, d));
        Projection q = random_projection(rng, d, rng.uniform_int(0, d));
        // De Morgan by construction, complement stability is the content
        CHECK(near(complement(join(p, q)).matrix(),
                   meet(complement(p), complement(q)).matrix(), 1e-9));
        // join is an upper bound
        CHECK(leq(p.matrix().with_tol(1e-9), join(p, q).matrix()));
        CHECK(leq(q.matrix().with_tol(1e-9), join(p, q).matrix()));
    }
}

TEST_CASE("orthogonality") {
    Projection ex = Projection::checked(SymMatrix::diagonal({1, 0}));
    Projection ey = Projection::checked(SymMatrix::diagonal({0, 1}));
    CHECK(orthogonal(ex, ey));
    CHECK_FALSE(orthogonal(ex, ex));
    // inner-product oracle: (1,1) and (1,-1) are perpendicular
    CHECK(orthogonal(span_of({1, 1}), span_of({1, -1})));

    // orthogonal join is additive
    Rng rng(11);
    for (int c = 0; c < 25; ++c) {
        int d = rng.uniform_int(2, 6);
        std::vector<double> basis = random_orthonormal(rng, d);
        int r1 = rng.uniform_int(1, d - 1);
        Projection p = span_of(std::vector<double>(basis.begin(), basis.begin() + d));
        Projection q = span_of(std::vector<double>(basis.begin() + r1 * d, basis.begin() + (r1 + 1) * d));
        REQUIRE(orthogonal(p, q));
        CHECK(near(join(p, q).matrix(), p.matrix() + q.matrix(), 1e-9));
    }
}

TEST_CASE("Mackey compatibility") {
    Projection p = Projection::checked(SymMatrix::diagonal({1, 1, 0}));
    Projection q = Projection::checked(SymMatrix::diagonal({0, 1, 1}));
    CHECK(mackey_compatible(p, q));
    CHECK(mackey_compatible(p, complement(p)));
    CHECK_FALSE(mackey_compatible(span_of({1, 0}), span_of({1, 1})));

    // compatibility agrees with commutation on random commuting pairs
    Rng rng(13);
    for (int c = 0; c < 25; ++c) {
        int d = rng.uniform_int(2, 6);
        auto [a, b] = random_commuting_projections(rng, d);
        CHECK(mackey_compatible(a, b));
    }
}

TEST_CASE("Boolean families") {
    std::vector<Projection> diagonal = {
        Projection::checked(SymMatrix::diagonal({1, 0, 0})),
        Projection::checked(SymMatrix::diagonal({0, 1, 0})),
        Projection::checked(SymMatrix::diagonal({1, 1, 0})),
    };
    CHECK(is_boolean_family(diagonal));

    std::vector<Projection> skew = {span_of({1, 0}), span_of({1, 1})};
    CHECK_FALSE(is_boolean_family(skew));

    std::vector<Projection> singleton = {span_of({1, 2, 3})};
    CHECK(is_boolean_family(singleton));

    std::vector<Projection> empty;
    CHECK_THROWS_AS(is_boolean_family(empty), InputError);
}

TEST_CASE("orthomodular law") {
    Rng rng(17);
    for (int c = 0; c < 50; ++c) {
        int d = rng.uniform_int(2, 6);
        auto [p, q] = random_comparable_projections(rng, d);
        REQUIRE(leq(p.matrix().with_tol(1e-9), q.matrix()));
        Projection rhs = join(p, meet(q, complement(p)));
        CHECK(max_abs_diff(q.matrix(), rhs.matrix()) <= 1e-8);
    }
}

TEST_CASE("meet is the greatest lower bound") {
    Rng rng(19);
    for (int c = 0; c < 25; ++c) {
        int d = rng.uniform_int(2, 6);
        std::vector<double> basis = random_orthonormal(rng, d);
        std::vector<double> dp(static_cast<size_t>(d)), dq(static_cast<size_t>(d)),
            dr(static_cast<size_t>(d));
        for (int k = 0; k < d; ++k) {
            dp[k] = rng.uniform_int(0, 1);
            dq[k] = rng.uniform_int(0, 1);
            dr[k] = (dp[k] == 1.0 && dq[k] == 1.0) ? rng.uniform_int(0, 1) : 0.0;
        }
        auto build = [&](const std::vector<double>& diag) {
            SymMatrix acc = SymMatrix::zero(d);
            for (int k = 0; k < d; ++k) {
                if (diag[k] == 1.0) {
                    acc = acc + SymMatrix::outer(std::vector<double>(basis.begin() + k * d,
                                                                     basis.begin() + (k + 1) * d));
                }
            }
            return Projection::repair(acc);
        };
        Projection p = build(dp), q = build(dq), r = build(dr);
        Projection m = meet(p, q);
        CHECK(leq(m.matrix().with_tol(1e-9), p.matrix()));
        CHECK(leq(m.matrix().with_tol(1e-9), q.matrix()));
        CHECK(leq(r.matrix().with_tol(1e-9), m.matrix()));
    }
}

TEST_CASE("product laws for commuting projection pairs") {
    Rng rng(23);
    for (int c = 0; c < 50; ++c) {
        int d = rng.uniform_int(2, 6);
        auto [p, q] = random_commuting_projections(rng, d);
        SymMatrix pq = sym_part_of_product(p.matrix(), q.matrix());
        // (i) pq is a projection
        CHECK(max_abs(product(pq, pq)) <= max_abs(pq.entries()) + 1e-9);
        CHECK(max_abs_diff(sym_part_of_product(pq, pq), pq) <= 1e-9);
        // (ii) pq <= p and pq <= q
        CHECK(leq(pq.with_tol(1e-9), p.matrix()));
        CHECK(leq(pq.with_tol(1e-9), q.matrix()));
        // (iii) p <= q iff p = pq
        CHECK(leq(p.matrix().with_tol(1e-9), q.matrix()) == (max_abs_diff(p.matrix(), pq) <= 1e-9));
        // (iv) the lattice meet is the product
        CHECK(max_abs_diff(meet(p, q).matrix(), pq) <= 1e-9);
    }
}
