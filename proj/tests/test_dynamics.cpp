#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ktorus/combinatorics.hpp"
#include "ktorus/dynamics.hpp"
#include "ktorus/exterior.hpp"
#include "ktorus/rng.hpp"

using namespace ktorus;

namespace {

ThetaExponent exp_of(long num, long den, long irr_num, long irr_den = 1) {
    return ThetaExponent{mpq_class(num, den), mpq_class(irr_num, irr_den)};
}

AffineMap random_affine(Rng& rng, std::size_t n) {
    std::vector<ThetaExponent> t(n);
    for (auto& e : t) {
        e.rat = mpq_class(rng.uniform(-6, 6), 1 + rng.uniform(0, 5));
        e.rat.canonicalize();
        e.irr = rng.uniform(-3, 3);
    }
    return make_affine(std::move(t), random_sl_matrix(rng, n, 10, 3));
}

}  // namespace

TEST_CASE("construction and validation") {
    AffineMap a = make_affine({exp_of(5, 4, 1)}, ZMatrix::identity(1));
    CHECK(a.n == 1);
    // Rational parts reduce mod 1.
    CHECK(a.t[0].rat == mpq_class(1, 4));
    CHECK(a.t[0].irr == 1);

    CHECK_THROWS_AS(make_affine({exp_of(0, 1, 0)}, ZMatrix::from_rows({{2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_affine({exp_of(0, 1, 0)}, ZMatrix::identity(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_affine({}, ZMatrix(0, 0)), std::invalid_argument);
}

TEST_CASE("composition axioms") {
    Rng rng(31);
    for (int it = 0; it < 15; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        AffineMap a = random_affine(rng, n);
        AffineMap b = random_affine(rng, n);
        AffineMap c = random_affine(rng, n);

        AffineMap ab_c = compose(compose(a, b), c);
        AffineMap a_bc = compose(a, compose(b, c));
        CHECK(ab_c.a == a_bc.a);
        CHECK(ab_c.t == a_bc.t);

        CHECK(is_identity_map(compose(a, inverse_map(a))));
        CHECK(is_identity_map(compose(inverse_map(a), a)));
    }
    CHECK_THROWS_AS(compose(random_affine(rng, 2), random_affine(rng, 3)),
                    std::invalid_argument);
}

TEST_CASE("pure rotations compose by exponent addition") {
    AffineMap r1 = make_affine({exp_of(1, 3, 0), exp_of(0, 1, 1)}, ZMatrix::identity(2));
    AffineMap r2 = make_affine({exp_of(1, 2, 0), exp_of(0, 1, 2)}, ZMatrix::identity(2));
    AffineMap c = compose(r1, r2);
    CHECK(c.t[0] == exp_of(5, 6, 0));
    CHECK(c.t[1] == exp_of(0, 1, 3));
    CHECK(c.a == ZMatrix::identity(2));
}

TEST_CASE("skew-product map structure") {
    AffineMap s = anzai_map(4);
    CHECK(s.n == 4);
    CHECK(s.t[0] == exp_of(0, 1, 1));
    for (std::size_t i = 1; i < 4; ++i) CHECK(s.t[i] == exp_of(0, 1, 0));
    CHECK(s.a == anzai_matrix(4).transpose());

    // Iterating m times produces the transposed m-th power, with binomial
    // entries.
    AffineMap m3 = compose(s, compose(s, s));
    CHECK(m3.a == anzai_matrix(4).pow(3).transpose());
}

TEST_CASE("orbit of the skew product accumulates binomial exponents") {
    AffineMap s = anzai_map(3);
    auto pts = orbit_points(s, 6);
    REQUIRE(pts.size() == 7);
    for (const auto& p : pts) REQUIRE(p.size() == 3);

    // x2 = (2 theta, theta, 0).
    CHECK(pts[2][0] == exp_of(0, 1, 2));
    CHECK(pts[2][1] == exp_of(0, 1, 1));
    CHECK(pts[2][2] == exp_of(0, 1, 0));

    // Coordinate j of x_m carries extbinom(m, j + 1) thetas.
    for (std::size_t m = 0; m <= 6; ++m)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(pts[m][j].rat == 0);
            CHECK(pts[m][j].irr ==
                  mpq_class(extbinom(static_cast<long>(m), static_cast<long>(j + 1))));
        }
}

TEST_CASE("quasi-discrete spectrum certification") {
    for (std::size_t n = 1; n <= 10; ++n) {
        HahnReport r = hahn_conditions(anzai_map(n));
        CHECK(r.c1);
        CHECK(r.c2);
        CHECK(r.c3);
        CHECK(r.c4);
        CHECK(r.all());
    }
}

TEST_CASE("rational rotation fails only the independence condition") {
    AffineMap a = make_affine({exp_of(1, 2, 0), exp_of(1, 3, 0)}, ZMatrix::identity(2));
    HahnReport r = hahn_conditions(a);
    CHECK(r.c1);
    CHECK_FALSE(r.c2);
    CHECK(r.c3);
    CHECK(r.c4);
}

TEST_CASE("an order-two matrix fails kernel stability") {
    AffineMap a = make_affine({exp_of(0, 1, 1), exp_of(0, 1, 0)},
                              ZMatrix::from_rows({{0, 1}, {1, 0}}));
    HahnReport r = hahn_conditions(a);
    CHECK_FALSE(r.c1);  // ker(A^2 - I) jumps to rank 2
    CHECK_FALSE(r.c4);
}

TEST_CASE("irrational rotation on the line passes everything") {
    AffineMap a = make_affine({exp_of(0, 1, 1)}, ZMatrix::identity(1));
    CHECK(hahn_conditions(a).all());
}

TEST_CASE("a fixed-lattice functional with two kernel directions fails c2") {
    // A = I on T^2 with t = (theta, theta): Z_1 = Z^2 has rank two, so some
    // nonzero character annihilates the theta part.
    AffineMap a = make_affine({exp_of(0, 1, 1), exp_of(0, 1, 1)}, ZMatrix::identity(2));
    HahnReport r = hahn_conditions(a);
    CHECK_FALSE(r.c2);
    CHECK(r.c3);
}

TEST_CASE("totient bound") {
    CHECK(totient_bound(1) == 2);
    CHECK(totient_bound(2) == 6);
    CHECK(totient_bound(3) == 6);
    CHECK(totient_bound(4) == 12);
    CHECK(totient_bound(6) == 18);
    CHECK(totient_bound(8) == 30);
}

TEST_CASE("finite factor of a quotient spec") {
    QuotientSpec spec;
    spec.n = 6;
    spec.i = 2;
    spec.lambda = CircleElement(mpq_class(1, 2), 0);
    spec.mu = {CircleElement(0, 0), CircleElement(0, 1)};

    AffineMap f = finite_part_map(spec);
    CHECK(f.n == 2);
    CHECK(f.t[0] == ThetaExponent{mpq_class(1, 2), 0});
    CHECK(f.t[1] == ThetaExponent{0, 0});

    // First return of 0 to itself happens exactly at the orbit cardinality.
    mpz_class c = orbit_cardinality(spec);
    auto pts = orbit_points(f, 8);
    std::vector<ThetaExponent> zero(2, ThetaExponent{0, 0});
    for (mpz_class r = 1; r < c; ++r) CHECK(pts[r.get_ui()] != zero);
    CHECK(pts[c.get_ui()] == zero);

    // The r-th point matches (lambda^r, lambda^C(r,2) mu1^r) exponentwise.
    for (std::size_t r = 0; r <= 8; ++r) {
        mpq_class first = reduce_mod1(mpq_class(r) * spec.lambda.rat());
        mpq_class second = reduce_mod1(
            mpq_class(extbinom(static_cast<long>(r), 2)) * spec.lambda.rat() +
            mpq_class(r) * spec.mu[0].rat());
        CHECK(pts[r][0].rat == first);
        CHECK(pts[r][1].rat == second);
    }

    QuotientSpec faithful;
    faithful.n = 3;
    faithful.i = 0;
    faithful.lambda = CircleElement(0, 1);
    CHECK_THROWS_AS(finite_part_map(faithful), std::invalid_argument);
}

TEST_CASE("finite factor return time for a level-one spec") {
    QuotientSpec spec;
    spec.n = 4;
    spec.i = 1;
    spec.lambda = CircleElement(mpq_class(1, 3), 0);
    spec.mu = {CircleElement(0, 1)};
    AffineMap f = finite_part_map(spec);
    CHECK(f.n == 1);
    auto pts = orbit_points(f, 3);
    CHECK(pts[1][0] != ThetaExponent{0, 0});
    CHECK(pts[2][0] != ThetaExponent{0, 0});
    CHECK(pts[3][0] == ThetaExponent{0, 0});
    CHECK(orbit_cardinality(spec) == 3);
}
