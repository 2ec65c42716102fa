// Acceptance gate: twelve numbered end-to-end criteria, each printing one
// PASS/FAIL line with enough evidence to audit the verdict. Run with no
// arguments for the full gate or with a single criterion number.
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ktorus/abelian.hpp"
#include "ktorus/combinatorics.hpp"
#include "ktorus/dynamics.hpp"
#include "ktorus/exterior.hpp"
#include "ktorus/golden.hpp"
#include "ktorus/groups.hpp"
#include "ktorus/ktheory.hpp"
#include "ktorus/quotients.hpp"
#include "ktorus/rng.hpp"
#include "ktorus/smith.hpp"
#include "ktorus/zmatrix.hpp"

using namespace ktorus;

namespace {

constexpr std::uint64_t kSeed = 12345;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

// 1. Full reference-table reproduction for n = 1..11, K0 and K1 exactly.
Outcome criterion_table() {
    Outcome o;
    const auto& rows = golden_table();
    for (const auto& row : rows) {
        KGroups kg = kgroups_of_anzai(row.n);
        if (!kg.complete) {
            o.fail("n=" + std::to_string(row.n) + " incomplete");
            continue;
        }
        if (kg.k0 != row.k0)
            o.fail("n=" + std::to_string(row.n) + " K0 " + kg.k0.to_text() +
                   " != " + row.k0.to_text());
        if (kg.k1 != row.k1)
            o.fail("n=" + std::to_string(row.n) + " K1 " + kg.k1.to_text() +
                   " != " + row.k1.to_text());
    }
    if (o.pass) o.detail = "all 11 rows match in K0 and K1";
    return o;
}

// 2. The dimension-6 counterexample: 2-torsion in K1 arising from the
// degree-3 cokernel Z^3 + Z/2.
Outcome criterion_counterexample() {
    Outcome o;
    KGroups kg = kgroups_of_anzai(6);
    FGAbelianGroup expected_coker = from_cyclic_orders(3, {2});
    if (kg.blocks.at(3).coker != expected_coker)
        o.fail("block r=3 cokernel is " + kg.blocks.at(3).coker.to_text());
    if (kg.k1 != from_cyclic_orders(13, {2}))
        o.fail("K1 is " + kg.k1.to_text());
    if (kg.k0 != from_cyclic_orders(13, {}))
        o.fail("K0 is " + kg.k0.to_text());
    if (o.pass) o.detail = "K1 = Z^13 + Z/2 with the torsion in coker at r=3";
    return o;
}

// 3. Worked three-dimensional example: every block kernel and cokernel is Z,
// so both K-groups are Z^4.
Outcome criterion_worked_example() {
    Outcome o;
    KGroups kg = pv_kgroups(anzai_matrix(3));
    FGAbelianGroup z = from_cyclic_orders(1, {});
    for (std::size_t r = 0; r <= 3; ++r) {
        if (kg.blocks.at(r).coker != z)
            o.fail("coker r=" + std::to_string(r) + " is " + kg.blocks.at(r).coker.to_text());
        if (kg.blocks.at(r).ker != z)
            o.fail("ker r=" + std::to_string(r) + " is " + kg.blocks.at(r).ker.to_text());
    }
    if (kg.k0 != from_cyclic_orders(4, {})) o.fail("K0 is " + kg.k0.to_text());
    if (kg.k1 != from_cyclic_orders(4, {})) o.fail("K1 is " + kg.k1.to_text());
    if (o.pass) o.detail = "all eight values are Z, K0 = K1 = Z^4";
    return o;
}

// 4. Matrix-rank, partition, and generating-function ranks agree for
// n = 1..12 and match the reference column for n <= 11; the n=12 value is
// pinned independently.
Outcome criterion_rank_agreement() {
    Outcome o;
    const auto& rows = golden_table();
    for (std::size_t n = 1; n <= 12; ++n) {
        mpz_class by_matrix = rank_kgroups(anzai_matrix(n));
        mpz_class by_partition = rank_by_partitions(n);
        mpz_class by_genfun = rank_by_genfun(n);
        if (by_matrix != by_partition || by_partition != by_genfun) {
            o.fail("n=" + std::to_string(n) + " disagreement " + by_matrix.get_str() + "/" +
                   by_partition.get_str() + "/" + by_genfun.get_str());
            continue;
        }
        if (n <= rows.size() && by_matrix != rows[n - 1].rank)
            o.fail("n=" + std::to_string(n) + " != reference rank");
        if (n == 12 && by_matrix != 268) o.fail("a_12 = " + by_matrix.get_str());
    }
    if (o.pass) o.detail = "three methods agree for n=1..12, a_12=268";
    return o;
}

// 5. Maximal-degree unipotent matrices: the K-group rank depends only on
// the dimension.
Outcome criterion_unipotent_rank() {
    Outcome o;
    Rng rng(kSeed);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 6));
        ZMatrix a = random_unipotent_max_degree(rng, n, 5);
        if (rank_kgroups(a) != rank_by_partitions(n)) {
            o.fail("case " + std::to_string(it) + " (n=" + std::to_string(n) +
                   ") rank differs");
            break;
        }
        ++checked;
    }
    if (o.pass) o.detail = std::to_string(checked) + " random maximal-degree cases agree";
    return o;
}

// 6. Cokernel reflection symmetry for determinant-one matrices.
Outcome criterion_duality() {
    Outcome o;
    Rng rng(kSeed);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
        ZMatrix a = random_sl_matrix(rng, n, 12, 3);
        if (!duality_check(a)) {
            o.fail("case " + std::to_string(it) + " (n=" + std::to_string(n) + ") breaks");
            break;
        }
    }
    if (o.pass) o.detail = "100 determinant-one matrices, n <= 5";
    return o;
}

// 7. Odd dimension forces K0 isomorphic to K1.
Outcome criterion_odd_symmetry() {
    Outcome o;
    for (std::size_t n : {1, 3, 5, 7, 9, 11}) {
        KGroups kg = kgroups_of_anzai(n);
        if (!groups_isomorphic(kg.k0, kg.k1))
            o.fail("skew n=" + std::to_string(n) + ": " + kg.k0.to_text() +
                   " vs " + kg.k1.to_text());
    }
    Rng rng(kSeed);
    for (int it = 0; it < 50; ++it) {
        std::size_t n = 1 + 2 * static_cast<std::size_t>(rng.uniform(0, 3));
        KGroups kg = pv_kgroups(random_sl_matrix(rng, n, 12, 3));
        if (!groups_isomorphic(kg.k0, kg.k1)) {
            o.fail("random case " + std::to_string(it) + " (n=" + std::to_string(n) +
                   ") differs");
            break;
        }
    }
    if (o.pass) o.detail = "skew products n in {1,3,5,7,9,11} plus 50 random odd inputs";
    return o;
}

// 8. Combinatorial identity sweeps with zero failures.
Outcome criterion_identities() {
    Outcome o;
    long binom_cases = 0, delta_cases = 0;
    for (long m = -10; m <= 10; ++m)
        for (long k = -10; k <= 10; ++k)
            for (long q = 1; q <= 8; ++q) {
                if (!check_binom_identity(m, k, q)) {
                    o.fail("binomial identity fails at m=" + std::to_string(m) +
                           " k=" + std::to_string(k) + " q=" + std::to_string(q));
                }
                ++binom_cases;
            }
    for (long m = 2; m <= 10; ++m)
        for (long q = 1; q <= 10; ++q)
            for (long s = 1; s <= m - 1; ++s) {
                if (!check_delta_identity(m, q, s)) {
                    o.fail("delta identity fails at m=" + std::to_string(m) +
                           " q=" + std::to_string(q) + " s=" + std::to_string(s));
                }
                ++delta_cases;
            }
    if (o.pass)
        o.detail = std::to_string(binom_cases) + " + " + std::to_string(delta_cases) +
                   " identity instances hold";
    return o;
}

// 9. Smith-form cokernels equal the enumeration oracle on a thousand
// random small matrices.
Outcome criterion_oracle() {
    Outcome o;
    Rng rng(kSeed);
    int done = 0;
    while (done < 1000) {
        std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 1));
        ZMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rng.uniform(-10, 10);
        mpz_class d = abs(a.determinant());
        if (d == 0 || d > 200) continue;
        if (!groups_isomorphic(cokernel(a), cokernel_oracle(a))) {
            o.fail("case " + std::to_string(done) + " disagrees");
            break;
        }
        ++done;
    }
    if (o.pass) o.detail = "1000 oracle comparisons agree";
    return o;
}

// 10. Group layer: generator relations, abelianization, and the recursive
// embedding of the exponent-data groups.
Outcome criterion_groups() {
    Outcome o;
    for (std::size_t n = 1; n <= 8; ++n) {
        auto p = filiform_lattice_group(n);
        SemidirectElement x = shift_generator(p);
        SemidirectElement e = identity_element(p);
        if (!(commutator(x, lattice_generator(p, 0)) == e))
            o.fail("n=" + std::to_string(n) + ": y_0 not central");
        for (std::size_t j = 1; j <= n; ++j) {
            if (!(commutator(x, lattice_generator(p, j)) == lattice_generator(p, j - 1)))
                o.fail("n=" + std::to_string(n) + ": [x, y_" + std::to_string(j) +
                       "] != y_" + std::to_string(j - 1));
        }
        for (std::size_t a = 0; a <= n; ++a)
            for (std::size_t b = a + 1; b <= n; ++b)
                if (!(commutator(lattice_generator(p, a), lattice_generator(p, b)) == e))
                    o.fail("n=" + std::to_string(n) + ": lattice generators do not commute");
        if (abelianization(*p) != from_cyclic_orders(2, {}))
            o.fail("n=" + std::to_string(n) + ": abelianization is not Z^2");
    }

    // Pinned embedding columns for generic exponents.
    FurstenbergExponents b;
    b[{1, 2}] = 2;
    b[{1, 3}] = 3;
    b[{2, 3}] = 5;
    b[{1, 4}] = 7;
    b[{2, 4}] = 11;
    b[{3, 4}] = 13;
    ZMatrix em = embedding_exponents(b, 4);
    auto check_col = [&](std::size_t j, std::vector<long> want, const char* name) {
        for (std::size_t i = 0; i < 5; ++i)
            if (em.at(i, j) != want[i]) {
                o.fail(std::string("embedding column ") + name + " wrong");
                return;
            }
    };
    check_col(2, {0, 0, 2, 0, 0}, "2");
    check_col(3, {0, 0, 3, 10, 0}, "3");
    check_col(4, {0, 0, 7, 61, 130}, "4");

    // Homomorphism property: the embedding intertwines the two shift
    // actions, E G = M E, on random exponent data.
    Rng rng(kSeed);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 4));
        FurstenbergExponents rb;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                rb[{i, j}] = (j == i + 1) ? rng.uniform_nonzero(-4, 4) : rng.uniform(-4, 4);
        ZMatrix e2 = embedding_exponents(rb, n);
        if (!(e2 * furstenberg_lattice_group(rb, n)->g == filiform_lattice_group(n)->g * e2)) {
            o.fail("intertwining fails on random exponents, case " + std::to_string(it));
            break;
        }
    }
    if (o.pass) o.detail = "relations n<=8, abelianization Z^2, embedding columns + intertwining";
    return o;
}

// 11. Asymptotics of the rank sequence through n = 40: the scaled ratio
// a_n n^{3/2} / 2^n must stay below sqrt(24/pi), exceed its n=11 value by
// n=40, and increase strictly on 12 <= n <= 40.
Outcome criterion_asymptotics() {
    Outcome o;
    const unsigned digits = 6;
    std::vector<DecimalApprox> ratio(41);
    for (std::size_t n = 11; n <= 40; ++n) ratio[n] = asymptotic_ratio(n, digits);

    mpz_class limit_scaled(static_cast<long>(
        std::floor(std::sqrt(24.0 / 3.14159265358979323846) * 1e6)));
    for (std::size_t n = 11; n <= 40; ++n)
        if (ratio[n].scaled >= limit_scaled)
            o.fail("ratio at n=" + std::to_string(n) + " reaches the limit");

    if (ratio[40].scaled <= ratio[11].scaled)
        o.fail("r(40)=" + ratio[40].to_string() + " does not exceed r(11)=" +
               ratio[11].to_string());

    std::string drops;
    for (std::size_t n = 12; n < 40; ++n) {
        if (ratio[n + 1].scaled <= ratio[n].scaled) {
            if (!drops.empty()) drops += ", ";
            drops += std::to_string(n) + "->" + std::to_string(n + 1) + " (" +
                     ratio[n].to_string() + " -> " + ratio[n + 1].to_string() + ")";
        }
    }
    if (!drops.empty()) o.fail("ratio not strictly increasing on 12..40: " + drops);

    if (o.pass)
        o.detail = "bounded by sqrt(24/pi), strictly increasing on 12..40, r(40) > r(11)";
    return o;
}

// 12. The rank sequence is strictly increasing through n = 41.
Outcome criterion_monotonicity() {
    Outcome o;
    mpz_class prev = rank_by_genfun(1);
    for (std::size_t n = 1; n <= 40; ++n) {
        mpz_class next = rank_by_genfun(n + 1);
        if (next <= prev) o.fail("a_" + std::to_string(n + 1) + " <= a_" + std::to_string(n));
        prev = next;
    }
    if (o.pass) o.detail = "a_{n+1} > a_n for n = 1..40";
    return o;
}

struct Criterion {
    int number;
    const char* title;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "reference table n=1..11", criterion_table},
    {2, "dimension-6 torsion counterexample", criterion_counterexample},
    {3, "three-dimensional worked example", criterion_worked_example},
    {4, "three-way rank agreement", criterion_rank_agreement},
    {5, "maximal-degree unipotent ranks", criterion_unipotent_rank},
    {6, "cokernel duality", criterion_duality},
    {7, "odd-dimension K-group symmetry", criterion_odd_symmetry},
    {8, "combinatorial identity sweeps", criterion_identities},
    {9, "smith vs enumeration oracle", criterion_oracle},
    {10, "lattice-group layer", criterion_groups},
    {11, "rank ratio asymptotics", criterion_asymptotics},
    {12, "strict rank monotonicity", criterion_monotonicity},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 12) {
            std::cerr << "usage: acceptance [1..12]\n";
            return 2;
        }
    }
    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.number != only) continue;
        Outcome o = c.run();
        all_pass = all_pass && o.pass;
        std::cout << "criterion " << c.number << " (" << c.title << "): "
                  << (o.pass ? "PASS" : "FAIL") << " — " << o.detail << '\n';
    }
    return all_pass ? 0 : 1;
}
