#pragma once

#include <cstdint>
#include <random>

#include "ktorus/zmatrix.hpp"

namespace ktorus {

// Seeded generator with self-contained sampling, so that randomized suites
// reproduce byte-for-byte across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    // Uniform nonzero integer in [lo, hi] (requires lo <= -1 or hi >= 1).
    std::int64_t uniform_nonzero(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 eng_;
};

// Random element of SL(n, Z): a product of `ops` elementary row/column
// additions applied to the identity, so the determinant is exactly 1.
ZMatrix random_sl_matrix(Rng& rng, std::size_t n, std::size_t ops, long coeff_bound);

// Random upper-triangular matrix with unit diagonal, every superdiagonal
// entry nonzero in [-bound, bound] and the remaining upper entries in
// [-bound, bound]. Such matrices are unipotent of maximal degree.
ZMatrix random_unipotent_max_degree(Rng& rng, std::size_t n, long bound);

}  // namespace ktorus
