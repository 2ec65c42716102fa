#pragma once

#include <string>
#include <vector>

#include "ktorus/smith.hpp"
#include "ktorus/zmatrix.hpp"

namespace ktorus {

// Finitely generated abelian group in canonical form: free rank plus the
// invariant-factor chain torsion[0] | torsion[1] | ... with every factor >= 2.
// Two values compare equal exactly when the groups are isomorphic.
struct FGAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool operator==(const FGAbelianGroup& other) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    // "Z^3 + Z/2 + Z/6"; the trivial group prints as "0".
    std::string to_text() const;
};

// Z^rows divided by the column span of A. Works for rectangular A as well.
FGAbelianGroup cokernel(const ZMatrix& a, const SnfOptions& opts = {});

// Kernel {x in Z^cols : A x = 0}; always free, so torsion is empty.
FGAbelianGroup kernel(const ZMatrix& a, const SnfOptions& opts = {});

// Canonical form of a direct sum: ranks add, torsion lists are merged and
// renormalized into a single divisibility chain via prime-power alignment.
FGAbelianGroup direct_sum(const std::vector<FGAbelianGroup>& parts);

bool groups_isomorphic(const FGAbelianGroup& g, const FGAbelianGroup& h);

// Build the canonical form of Z^free_rank + sum of Z/orders[i]. Orders must
// be positive; order 1 summands are dropped. This is the entry point for
// presentations given as arbitrary lists of cyclic factors.
FGAbelianGroup from_cyclic_orders(std::size_t free_rank,
                                  const std::vector<mpz_class>& orders);

// Independent brute-force structure of Z^n / A Z^n for cross-checking the
// Smith-form path. Requires A square with n <= 3 and 1 <= |det A| <= 200.
// Residue classes are enumerated by breadth-first closure under the unit
// translations, element orders are counted exhaustively, and the invariant
// factors are rebuilt from the order census, none of which touches snf().
FGAbelianGroup cokernel_oracle(const ZMatrix& a);

}  // namespace ktorus
