#include "ktorus/rng.hpp"

#include <stdexcept>

namespace ktorus {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty sampling range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(eng_());  // full 64-bit range
    // Rejection sampling keeps the distribution exactly uniform and the
    // output independent of any library's distribution internals.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

std::int64_t Rng::uniform_nonzero(std::int64_t lo, std::int64_t hi) {
    if (lo == 0 && hi == 0) throw std::invalid_argument("no nonzero value in range");
    std::int64_t x;
    do {
        x = uniform(lo, hi);
    } while (x == 0);
    return x;
}

ZMatrix random_sl_matrix(Rng& rng, std::size_t n, std::size_t ops, long coeff_bound) {
    ZMatrix a = ZMatrix::identity(n);
    if (n < 2) return a;
    for (std::size_t step = 0; step < ops; ++step) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
        std::size_t j;
        do {
            j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
        } while (j == i);
        mpz_class c(static_cast<long>(rng.uniform_nonzero(-coeff_bound, coeff_bound)));
        if (rng.uniform(0, 1) == 0) {
            for (std::size_t col = 0; col < n; ++col) a.at(i, col) += c * a.at(j, col);
        } else {
            for (std::size_t row = 0; row < n; ++row) a.at(row, i) += c * a.at(row, j);
        }
    }
    return a;
}

ZMatrix random_unipotent_max_degree(Rng& rng, std::size_t n, long bound) {
    if (n < 2) throw std::invalid_argument("maximal degree needs a superdiagonal, so n >= 2");
    ZMatrix a = ZMatrix::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        a.at(i, i + 1) = static_cast<long>(rng.uniform_nonzero(-bound, bound));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j)
            a.at(i, j) = static_cast<long>(rng.uniform(-bound, bound));
    return a;
}

}  // namespace ktorus
