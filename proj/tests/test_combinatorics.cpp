#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ktorus/combinatorics.hpp"
#include "ktorus/golden.hpp"

using namespace ktorus;

TEST_CASE("extended binomials") {
    // Ordinary values.
    CHECK(extbinom(5, 2) == 10);
    CHECK(extbinom(6, 3) == 20);
    CHECK(extbinom(4, 0) == 1);
    CHECK(extbinom(0, 0) == 1);
    CHECK(extbinom(4, 4) == 1);
    // Above the top index.
    CHECK(extbinom(3, 5) == 0);
    // Negative top index: falling-factorial continuation.
    CHECK(extbinom(-1, 1) == -1);
    CHECK(extbinom(-1, 2) == 1);
    CHECK(extbinom(-3, 2) == 6);
    CHECK(extbinom(-2, 3) == -4);
    CHECK(extbinom(-2, 0) == 1);
    // Negative lower index is always zero.
    CHECK(extbinom(5, -1) == 0);
    CHECK(extbinom(-5, -2) == 0);
    // Pascal recurrence across a window including negatives.
    for (long k = -8; k <= 8; ++k)
        for (long r = 1; r <= 6; ++r)
            CHECK(extbinom(k, r) == extbinom(k - 1, r) + extbinom(k - 1, r - 1));
    // The mpz overload agrees.
    CHECK(extbinom(mpz_class(-7), 3) == extbinom(-7L, 3));
    CHECK(extbinom(mpz_class(100), 2) == 4950);
}

TEST_CASE("partition counts with distinct parts") {
    // Conventions at r = 0 and k = 0.
    CHECK(partition_count(5, 0, 0) == 1);
    CHECK(partition_count(5, 0, 3) == 0);
    CHECK(partition_count(5, 2, 0) == 0);
    // {1,4} and {2,3}.
    CHECK(partition_count(4, 2, 5) == 2);
    // {1,2,3} only.
    CHECK(partition_count(3, 3, 6) == 1);
    CHECK(partition_count(3, 3, 7) == 0);
    // Out-of-range sums.
    CHECK(partition_count(4, 2, 100) == 0);
    CHECK(partition_count(4, 2, -1) == 0);
    // Choosing r of n parts is symmetric under complementation:
    // P(n, r, k) == P(n, n - r, n(n+1)/2 - k).
    for (std::size_t n = 1; n <= 7; ++n) {
        long total = static_cast<long>(n * (n + 1) / 2);
        for (std::size_t r = 0; r <= n; ++r)
            for (long k = 0; k <= total; ++k)
                CHECK(partition_count(n, r, k) ==
                      partition_count(n, n - r, total - k));
    }
}

TEST_CASE("block rank contributions") {
    CHECK(a_nr(3, 0) == 1);
    CHECK(a_nr(3, 1) == 1);
    CHECK(a_nr(3, 2) == 1);
    CHECK(a_nr(3, 3) == 1);
    // Reflection symmetry in r.
    for (std::size_t n = 1; n <= 9; ++n)
        for (std::size_t r = 0; r <= n; ++r) CHECK(a_nr(n, r) == a_nr(n, n - r));
}

TEST_CASE("ranks match the reference table") {
    const auto& rows = golden_table();
    for (const auto& row : rows) {
        CHECK(rank_by_partitions(row.n) == row.rank);
        CHECK(rank_by_genfun(row.n) == row.rank);
    }
    CHECK(rank_by_partitions(12) == 268);
    CHECK(rank_by_genfun(12) == 268);
}

TEST_CASE("partition and generating-function paths agree") {
    for (std::size_t n = 1; n <= 16; ++n)
        CHECK(rank_by_partitions(n) == rank_by_genfun(n));
}

TEST_CASE("Laurent polynomial arithmetic") {
    LaurentPoly p = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(3, 4);
    CHECK(p.coeff(-1) == 2);
    CHECK(p.coeff(4) == 3);
    CHECK(p.coeff(0) == 0);

    LaurentPoly q = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-2, -1);
    LaurentPoly prod = p * q;
    // (2 t^-1 + 3 t^4)(t - 2 t^-1) = 2 - 4 t^-2 + 3 t^5 - 6 t^3.
    CHECK(prod.coeff(0) == 2);
    CHECK(prod.coeff(-2) == -4);
    CHECK(prod.coeff(5) == 3);
    CHECK(prod.coeff(3) == -6);
    CHECK(prod.coeff(1) == 0);

    // Cancellation removes the stored term entirely.
    LaurentPoly z = LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-1, 2);
    CHECK(z.terms().empty());
    CHECK(LaurentPoly::one().coeff(0) == 1);
}

TEST_CASE("two-variable coefficients agree with partition counts") {
    for (std::size_t n = 1; n <= 10; ++n) {
        auto coeffs = genfun_coeffs(n);
        long total = static_cast<long>(n * (n + 1) / 2);
        for (long r = 0; r <= static_cast<long>(n); ++r)
            for (long k = 0; k <= total; ++k) {
                auto it = coeffs.find({r, k});
                mpz_class c = it == coeffs.end() ? 0 : it->second;
                CHECK(c == partition_count(n, static_cast<std::size_t>(r), k));
            }
    }
}

TEST_CASE("asymptotic ratio pinned values") {
    DecimalApprox r11 = asymptotic_ratio(11);
    CHECK(r11.scaled == 2707713);
    CHECK(r11.digits == 6);
    CHECK(r11.to_string() == "2.707713");

    CHECK(asymptotic_ratio(12).scaled == 2719861);
    CHECK(asymptotic_ratio(13).scaled == 2700642);
    CHECK(asymptotic_ratio(40).scaled == 2733436);

    // Fewer digits truncate toward zero consistently.
    DecimalApprox r3 = asymptotic_ratio(11, 3);
    CHECK(r3.scaled == 2707);
    CHECK(r3.to_string() == "2.707");
}

TEST_CASE("binomial convolution identity") {
    for (long m = -10; m <= 10; ++m)
        for (long k = -10; k <= 10; ++k)
            for (long q = 1; q <= 4; ++q) CHECK(check_binom_identity(m, k, q));
}

TEST_CASE("delta identity") {
    for (long m = 2; m <= 8; ++m)
        for (long q = 1; q <= 6; ++q)
            for (long s = 1; s <= m - 1; ++s) CHECK(check_delta_identity(m, q, s));
}
