#pragma once

#include <memory>
#include <vector>

#include "ktorus/abelian.hpp"
#include "ktorus/exterior.hpp"
#include "ktorus/zmatrix.hpp"

namespace ktorus {

// Presentation of a semidirect product Z^m x| Z: the generator of the Z
// factor acts on the lattice by the unimodular matrix G.
struct GroupPresentation {
    std::size_t m = 0;
    ZMatrix g;
    ZMatrix g_inv;
};

// Validates |det G| == 1 and caches the inverse action.
std::shared_ptr<const GroupPresentation> semidirect_presentation(ZMatrix g);

// Group element (v, k): lattice part v in Z^m and shift part k. Elements
// remember their presentation; mixing presentations is an error, not a
// silent wrong answer.
struct SemidirectElement {
    std::vector<mpz_class> v;
    mpz_class k;
    std::shared_ptr<const GroupPresentation> parent;

    bool operator==(const SemidirectElement& other) const {
        return v == other.v && k == other.k;
    }
};

SemidirectElement identity_element(std::shared_ptr<const GroupPresentation> p);
// (e_i, 0) for 0-based lattice index i.
SemidirectElement lattice_generator(std::shared_ptr<const GroupPresentation> p, std::size_t i);
// (0, 1), the generator of the acting Z.
SemidirectElement shift_generator(std::shared_ptr<const GroupPresentation> p);

// (v_a + G^{k_a} v_b, k_a + k_b).
SemidirectElement multiply(const SemidirectElement& a, const SemidirectElement& b);
// (-G^{-k} v, -k).
SemidirectElement inverse(const SemidirectElement& a);
// a b a^{-1} b^{-1}; the shift part is always zero and the lattice part is
// (G^{k_a} - I) v_b - (G^{k_b} - I) v_a.
SemidirectElement commutator(const SemidirectElement& a, const SemidirectElement& b);

// Z^{m+1} modulo the commutator subgroup: coker(G - I) plus one Z from the
// shift generator.
FGAbelianGroup abelianization(const GroupPresentation& p);

// Lattice group of rank n + 1 whose action matrix is the upper bidiagonal
// unipotent matrix; powers of the action have extended-binomial entries.
std::shared_ptr<const GroupPresentation> filiform_lattice_group(std::size_t n);

// Lattice group of rank n + 1 attached to upper-triangular exponent data
// b[{i,j}] (1 <= i < j <= n, superdiagonal nonzero): the action fixes the
// basis vector e_1, adds e_1 to e_2, and adds b[{k-1, j-1}] e_k to e_j for
// 2 <= k < j.
std::shared_ptr<const GroupPresentation> furstenberg_lattice_group(
    const FurstenbergExponents& b, std::size_t n);

// Exponent matrix of the recursive embedding of the rank-(n+1) exponent-data
// group into the filiform lattice group of the same rank: column k holds the
// image of the k-th lattice generator (0-based; columns 0 and 1 are e_1 and
// e_2). Columns solve (M - I) c_k = sum_{s<k} b[{s,k}] c_s, which is
// triangular because M - I shifts basis vectors down by one index. The top
// coefficient of c_k is the product of the superdiagonal exponents below k,
// hence nonzero: the embedding is injective.
//
// Note: one published worked example of this recursion contains a subscript
// typo in its fourth column (a generator index repeated where the recursion
// forces the next one); this implementation follows the recursion itself,
// and the tests pin the recursion's value.
ZMatrix embedding_exponents(const FurstenbergExponents& b, std::size_t n);

}  // namespace ktorus
