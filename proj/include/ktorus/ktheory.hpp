#pragma once

#include <cstdint>
#include <vector>

#include "ktorus/abelian.hpp"
#include "ktorus/zmatrix.hpp"

namespace ktorus {

// One exterior-power block: cokernel and kernel of wedge_power(A, r) - I.
// `computed` is false when the block's reduction ran out of budget; the
// group fields are then meaningless.
struct BlockResult {
    std::size_t r = 0;
    FGAbelianGroup coker;
    FGAbelianGroup ker;
    bool computed = true;
};

// K-groups of the crossed product of the n-torus algebra by the
// automorphism with linearization A. The even-r cokernels and odd-r kernels
// assemble K0; the odd-r cokernels and even-r kernels assemble K1. Both
// always share the same free rank.
struct KGroups {
    std::size_t n = 0;
    FGAbelianGroup k0;
    FGAbelianGroup k1;
    std::vector<BlockResult> blocks;  // r = 0..n
    bool complete = true;             // false when any block hit the budget
};

struct KOptions {
    // Elementary-operation budget per block reduction; 0 means unlimited.
    std::uint64_t block_budget = 0;
};

// Requires |det A| == 1 (the linearization of a torus homeomorphism).
KGroups pv_kgroups(const ZMatrix& a, const KOptions& opts = {});

// K-groups of the n-dimensional skew-product algebra: pv_kgroups of the
// upper bidiagonal unipotent matrix.
KGroups kgroups_of_anzai(std::size_t n, const KOptions& opts = {});

// K-groups of the group algebra of the rank-(n+1) lattice semidirect
// product with binomial action; equal to kgroups_of_anzai(n + 1).
KGroups kgroups_of_lattice_group(std::size_t n, const KOptions& opts = {});

// For det A == +1 (precondition), checks the reflection symmetry
// coker(wedge^r A - I) == coker(wedge^{n-r} A - I) for every r.
// A false return certifies a defect somewhere in the pipeline.
bool duality_check(const ZMatrix& a);

// Common free rank of K0 and K1, from per-block kernel ranks only; no
// torsion computation, so this is much cheaper than pv_kgroups.
mpz_class rank_kgroups(const ZMatrix& a);

}  // namespace ktorus
