#pragma once

#include <vector>

#include "ktorus/quotients.hpp"
#include "ktorus/zmatrix.hpp"

namespace ktorus {

// Affine transformation of the n-torus in exponent coordinates:
// x maps to t + A x, with the translation entries in Q + Q*theta (rational
// parts reduced mod 1) and A in GL(n, Z).
struct AffineMap {
    std::size_t n = 0;
    std::vector<ThetaExponent> t;
    ZMatrix a;
};

// Validates |det A| == 1 and t.size() == A's order, and reduces the rational
// translation parts mod 1.
AffineMap make_affine(std::vector<ThetaExponent> t, ZMatrix a);

// Skew-product transformation on the n-torus: rotate the first coordinate by
// theta and add each coordinate into the next. Its winding matrix is lower
// bidiagonal, so the k-th iterate moves coordinate j by extbinom(k, j)*theta.
AffineMap anzai_map(std::size_t n);

// (t + A t', A A'); exact, dimension-checked.
AffineMap compose(const AffineMap& a, const AffineMap& b);
// (-A^{-1} t, A^{-1}).
AffineMap inverse_map(const AffineMap& a);

bool is_identity_map(const AffineMap& a);

// Quasi-discrete-spectrum test. Z_p denotes the lattice of characters fixed
// by the p-th iterate, i.e. ker((A^T)^p - I).
//   c1: Z_1 == Z_p for every p >= 1. Strict growth at p forces a primitive
//       p-th root of unity among the eigenvalues of A, and an integer matrix
//       of order n only admits those with phi(p) <= n, so checking
//       p <= max{m : phi(m) <= n} is exhaustive; rank equality suffices
//       because both lattices are pure and nested.
//   c2: no nonzero k in Z_1 makes <t, k> rational. The theta part of <t, k>
//       is a single rational functional on Z_1, so this holds exactly when
//       Z_1 = 0, or Z_1 has rank 1 and the functional is nonzero on it.
//   c3: Z_1 != 0.
//   c4: A unipotent.
// All four together certify minimality and unique ergodicity.
struct HahnReport {
    bool c1 = false;
    bool c2 = false;
    bool c3 = false;
    bool c4 = false;

    bool all() const { return c1 && c2 && c3 && c4; }
};

HahnReport hahn_conditions(const AffineMap& a);

// Largest m with phi(m) <= n; every root of unity that is an eigenvalue of
// an n x n integer matrix has order at most this.
std::size_t totient_bound(std::size_t n);

// Orbit x_0 = 0, x_{k+1} = t + A x_k for k = 0..m-1; returns the m+1 points
// with rational parts reduced mod 1.
std::vector<std::vector<ThetaExponent>> orbit_points(const AffineMap& a, std::size_t m);

// The finite factor of the level-i quotient: the affine map on the i-torus
// translating by the exponents of lambda, mu_1, ..., mu_{i-1} with the same
// lower-bidiagonal winding. Its first return time to 0 equals the
// orbit_cardinality of the quotient. Requires level i >= 1.
AffineMap finite_part_map(const QuotientSpec& spec);

}  // namespace ktorus
