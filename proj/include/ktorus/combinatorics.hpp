#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace ktorus {

// Extended binomial coefficient: the falling-factorial formula
// k(k-1)...(k-r+1)/r! when 0 <= r < k or (k < 0 and r > 0); 1 when
// r == (k + |k|)/2 (that is, r == k for k >= 0 and r == 0 for k < 0);
// 0 in every other case, including all r < 0.
mpz_class extbinom(long k, long r);
mpz_class extbinom(const mpz_class& k, long r);

// Number of ways to write k as a sum of r distinct integers from 1..n.
// Conventions: P(n,0,0) = 1, while P(n,r,0) = 0 for r > 0 and
// P(n,0,k) = 0 for k != 0.
mpz_class partition_count(std::size_t n, std::size_t r, long k);

// Block rank contribution: partition_count(n, r, floor(r(n+1)/2)).
// Requires 0 <= r <= n. Symmetric in r <-> n - r.
mpz_class a_nr(std::size_t n, std::size_t r);

// K-group rank of the n-dimensional skew-product algebra, as the sum of the
// block contributions a_nr over r = 0..n.
mpz_class rank_by_partitions(std::size_t n);

// Sparse Laurent polynomial in one variable with exact integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(const mpz_class& c, long exponent);
    static LaurentPoly one() { return monomial(1, 0); }

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    bool operator==(const LaurentPoly& other) const = default;

    mpz_class coeff(long exponent) const;
    const std::map<long, mpz_class>& terms() const { return terms_; }

private:
    void set(long exponent, const mpz_class& c);
    std::map<long, mpz_class> terms_;  // no zero coefficients stored
};

// Coefficients of the two-variable product over i = 1..n of (1 + u t^i):
// entry {(r, k) -> c} says c ways to pick r distinct exponents summing to k.
// Agrees with partition_count at every index.
std::map<std::pair<long, long>, mpz_class> genfun_coeffs(std::size_t n);

// Same rank as rank_by_partitions, but through the constant term of the
// centered product over i of (1 + z^{2i-(n+1)}), with an extra (1 + z)
// factor when n is even. The substitution t = z^2 keeps exponents integral.
mpz_class rank_by_genfun(std::size_t n);

// Decimal value with a fixed number of fractional digits; `scaled` holds
// floor(value * 10^digits). Exact integer arithmetic end to end.
struct DecimalApprox {
    mpz_class scaled;
    unsigned digits = 0;

    std::string to_string() const;
};

// floor-to-digits approximation of rank(n) * n^{3/2} / 2^n, the quantity
// that tends to sqrt(24/pi) as n grows.
DecimalApprox asymptotic_ratio(std::size_t n, unsigned digits = 6);

// extbinom(m - q, k) == sum over j >= 0 of (-1)^j extbinom(m-j, k-j) extbinom(q, j);
// holds for all integers m, k and all q >= 1. A false return certifies a
// defect in extbinom.
bool check_binom_identity(long m, long k, long q);

// sum over r = 1..m of (-1)^{m-r} extbinom(q+m-r-2, m-r) extbinom(q, r-s)
// equals 1 when s == m - 1 and 0 otherwise. Requires 1 <= s <= m-1, q >= 1.
bool check_delta_identity(long m, long q, long s);

}  // namespace ktorus
